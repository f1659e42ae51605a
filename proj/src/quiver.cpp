#include "cluster/quiver.hpp"

#include <cstdlib>
#include <numeric>

namespace cluster {

int gcd(int a, int b) { return std::gcd(a, b); }

bool ExchangeMatrix::is_skew_symmetric() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b[i][j] != -b[j][i]) return false;
  return true;
}

void ExchangeMatrix::add_arrow(int from, int to, int count) {
  b[from][to] += count;
  b[to][from] -= count;
}

nlohmann::json ExchangeMatrix::to_json(const std::vector<int>& labels) const {
  nlohmann::json j{{"n", n}, {"b", b}};
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, int k) {
  if (k < 0 || k >= m.n) throw std::out_of_range("mutation vertex out of range");
  ExchangeMatrix out(m.n);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      if (i == k || j == k) {
        out.b[i][j] = -m.b[i][j];
      } else {
        out.b[i][j] = m.b[i][j] + (std::abs(m.b[i][k]) * m.b[k][j] + m.b[i][k] * std::abs(m.b[k][j])) / 2;
      }
    }
  }
  return out;
}

nlohmann::json Seed::to_json(const std::vector<int>& labels) const {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : vars) vs.push_back(v.to_json());
  nlohmann::json j = matrix.to_json(labels);
  j["vars"] = vs;
  return j;
}

Seed initial_seed(const ExchangeMatrix& m) {
  Seed s{m, {}};
  s.vars.reserve(m.n);
  for (int i = 0; i < m.n; ++i) s.vars.push_back(LaurentPoly::variable(m.n, i));
  return s;
}

Seed mutate_seed(const Seed& s, int k) {
  if (k < 0 || k >= s.matrix.n) throw std::out_of_range("mutation vertex out of range");
  const int n = s.matrix.n;
  LaurentPoly in = LaurentPoly::one(s.vars[k].nvars());
  LaurentPoly out = in;
  for (int i = 0; i < n; ++i) {
    const int a = s.matrix.b[i][k];
    if (a > 0) in *= s.vars[i].pow(a);
    if (a < 0) out *= s.vars[i].pow(-a);
  }
  Seed next{mutate_matrix(s.matrix, k), s.vars};
  next.vars[k] = LaurentPoly::exact_div(in + out, s.vars[k]);
  return next;
}

ExchangeMatrix build_a_matrix(int q, int p) {
  if (q < 1 || p < 1) throw UnsupportedError("affine A parameters must be positive");
  if (gcd(q, p) != 1) throw UnsupportedError("affine A construction needs coprime q and p");
  const int n = q + p;
  ExchangeMatrix m(n);
  for (int k = 0; k < n; ++k) {
    const int a = (k * p) % n;
    const int b = ((k + 1) * p) % n;
    if (a < b)
      m.add_arrow(a, b);
    else
      m.add_arrow(b, a);
  }
  return m;
}

ExchangeMatrix build_d_matrix(int N) {
  if (N < 4) throw UnsupportedError("affine D needs N >= 4");
  // Underlying tree on labels 1..N+1; label i lives at index i-1.
  std::vector<std::pair<int, int>> edges{{1, 3}, {2, 3}, {N, N - 1}, {N + 1, N - 1}};
  for (int v = 3; v < N - 1; ++v) edges.emplace_back(v, v + 1);

  // 2-colour from vertex 3 and orient every edge source class -> sink class.
  std::vector<int> colour(N + 2, -1);
  colour[3] = 0;  // sink class
  std::vector<int> stack{3};
  std::vector<std::vector<int>> adj(N + 2);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (colour[v] == -1) {
        colour[v] = 1 - colour[u];
        stack.push_back(v);
      }
  }

  ExchangeMatrix m(N + 1);
  for (auto [u, v] : edges) {
    int src = colour[u] == 1 ? u : v;
    int snk = colour[u] == 1 ? v : u;
    m.add_arrow(src - 1, snk - 1);
  }
  return m;
}

Seed build_quiver(const QuiverParams& params) {
  switch (params.family) {
    case Family::ATilde:
      return initial_seed(build_a_matrix(params.q, params.p));
    case Family::DTilde:
      return initial_seed(build_d_matrix(params.N));
    case Family::Custom:
      if (!params.custom.is_skew_symmetric()) throw UnsupportedError("custom matrix must be skew-symmetric");
      return initial_seed(params.custom);
  }
  throw UnsupportedError("unknown family");
}

std::vector<int> vertex_labels(const QuiverParams& params) {
  std::vector<int> labels;
  int n = params.family == Family::ATilde  ? params.q + params.p
          : params.family == Family::DTilde ? params.N + 1
                                          : params.custom.n;
  for (int i = 0; i < n; ++i) labels.push_back(params.family == Family::DTilde ? i + 1 : i);
  return labels;
}

bool period1_check(const ExchangeMatrix& m) {
  if (m.n == 0) return false;
  const ExchangeMatrix mutated = mutate_matrix(m, 0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (mutated.b[(i + 1) % m.n][(j + 1) % m.n] != m.b[i][j]) return false;
  return true;
}

std::optional<BipartiteClasses> bipartite_classes(const ExchangeMatrix& m) {
  BipartiteClasses out;
  for (int i = 0; i < m.n; ++i) {
    bool has_in = false, has_out = false;
    for (int j = 0; j < m.n; ++j) {
      if (m.b[j][i] > 0) has_in = true;
      if (m.b[i][j] > 0) has_out = true;
    }
    if (has_in && has_out) return std::nullopt;
    if (has_in)
      out.sinks.insert(i);
    else
      out.sources.insert(i);  // isolated vertices count as sources
  }
  return out;
}

}  // namespace cluster
