#include "cluster/enumerate.hpp"

#include <future>
#include <sstream>
#include <unordered_set>

namespace cluster {

namespace {

std::string seed_key(const Seed& s) {
  std::ostringstream os;
  for (const auto& row : s.matrix.b) {
    for (int v : row) os << v << ',';
    os << ';';
  }
  for (const auto& v : s.vars) os << v.serialize() << '|';
  return os.str();
}

}  // namespace

BfsResult bfs_explore(const Seed& start, int depth, int workers) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (workers < 1) workers = 1;

  BfsResult result;
  std::unordered_set<std::string> visited{seed_key(start)};
  std::vector<Seed> frontier{start};
  result.seeds_visited = 1;
  for (const auto& v : start.vars) result.variables.insert(v);

  const int n = start.matrix.n;
  for (int layer = 0; layer < depth && !frontier.empty(); ++layer) {
    const size_t jobs = frontier.size() * static_cast<size_t>(n);
    std::vector<Seed> produced(jobs);

    auto expand = [&](size_t lo, size_t hi) {
      for (size_t idx = lo; idx < hi; ++idx)
        produced[idx] = mutate_seed(frontier[idx / n], static_cast<int>(idx % n));
    };
    if (workers == 1 || jobs < 8) {
      expand(0, jobs);
    } else {
      std::vector<std::future<void>> tasks;
      const size_t chunk = (jobs + workers - 1) / workers;
      for (size_t lo = 0; lo < jobs; lo += chunk)
        tasks.push_back(std::async(std::launch::async, expand, lo, std::min(lo + chunk, jobs)));
      for (auto& t : tasks) t.get();
    }

    // deterministic insertion order regardless of how the layer was expanded
    std::vector<Seed> next;
    for (size_t idx = 0; idx < jobs; ++idx) {
      Seed& s = produced[idx];
      if (!visited.insert(seed_key(s)).second) {
        ++result.dedupe_hits;
        continue;
      }
      ++result.seeds_visited;
      result.variables.insert(s.vars[idx % n]);
      next.push_back(std::move(s));
    }
    frontier = std::move(next);
  }
  return result;
}

PredictedVariables predicted_variables(AFamilies& fam, int depth, int window) {
  const int N = fam.q + fam.p;
  const long w = window >= 0 ? window : depth + 2;
  PredictedVariables out;
  out.window_lo = -w * N;
  out.window_hi = w * N + N - 1;
  for (long m = out.window_lo; m <= out.window_hi; ++m) out.frieze.insert(fam.seq->value(m));
  for (long j = 0; j < fam.q; ++j)
    for (int l = 1; l < fam.q; ++l)
      out.determinant.insert(continuant(fam.j, fam.p, l, j * fam.p));
  for (long j = 0; j < fam.p; ++j)
    for (int l = 1; l < fam.p; ++l)
      out.determinant.insert(continuant(fam.jtilde, fam.q, l, j * fam.q));
  return out;
}

PredictedVariables predicted_variables(DFamilies& fam, int depth, int window) {
  const long w = window >= 0 ? window : depth + 2;
  PredictedVariables out;
  out.window_lo = -w;
  out.window_hi = w;
  for (long n = out.window_lo; n <= out.window_hi; ++n)
    for (int i = 0; i <= fam.N; ++i) out.frieze.insert(fam.frieze->value(i, n));
  for (long j = 0; j <= fam.N - 3; ++j)
    for (int l = 1; l <= fam.N - 3; ++l)
      out.determinant.insert(continuant(fam.jprime, 1, l, j));
  return out;
}

nlohmann::json CrossCheckReport::to_json() const {
  return {{"passed", passed},
          {"found_total", found_total},
          {"non_frieze_found", non_frieze_found},
          {"extras", extras},
          {"near_window_edge", near_window_edge},
          {"found_not_predicted", found_not_predicted},
          {"determinant_missing", determinant_missing}};
}

namespace {

CrossCheckReport run_cross_check(const PredictedVariables& predicted, const BfsResult& found,
                                 bool extras_fail) {
  CrossCheckReport report;
  report.found_total = static_cast<long>(found.variables.size());
  for (const auto& [key, poly] : found.variables.entries()) {
    const bool in_frieze = predicted.frieze.contains_key(key);
    if (!in_frieze) ++report.non_frieze_found;
    if (!in_frieze && !predicted.determinant.contains_key(key)) {
      ++report.extras;
      report.found_not_predicted.push_back(key);
      if (extras_fail) report.passed = false;
    }
  }
  for (const auto& [key, poly] : predicted.determinant.entries()) {
    if (!found.variables.contains_key(key)) {
      report.determinant_missing.push_back(key);
      report.passed = false;
    }
  }
  return report;
}

}  // namespace

CrossCheckReport cross_check(AFamilies& fam, const BfsResult& found, int depth, int window) {
  const PredictedVariables predicted = predicted_variables(fam, depth, window);
  CrossCheckReport report = run_cross_check(predicted, found, /*extras_fail=*/true);
  // flag matches unreasonably close to the window edge
  const int N = fam.q + fam.p;
  for (long m = predicted.window_lo; m < predicted.window_lo + N; ++m)
    if (found.variables.contains(fam.seq->value(m))) report.near_window_edge = true;
  for (long m = predicted.window_hi - N + 1; m <= predicted.window_hi; ++m)
    if (found.variables.contains(fam.seq->value(m))) report.near_window_edge = true;
  return report;
}

CrossCheckReport cross_check(DFamilies& fam, const BfsResult& found, int depth, int window) {
  const PredictedVariables predicted = predicted_variables(fam, depth, window);
  return run_cross_check(predicted, found, /*extras_fail=*/false);
}

}  // namespace cluster
