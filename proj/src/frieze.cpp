#include "cluster/frieze.hpp"

#include <algorithm>
#include <sstream>

namespace cluster {

namespace {

std::vector<int> topological_order(const ExchangeMatrix& m) {
  std::vector<int> indeg(m.n, 0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.b[i][j] > 0) ++indeg[j];
  std::vector<int> order, ready;
  for (int i = 0; i < m.n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    int u = ready.back();
    ready.pop_back();
    order.push_back(u);
    for (int j = 0; j < m.n; ++j)
      if (m.b[u][j] > 0 && --indeg[j] == 0) ready.push_back(j);
  }
  if (static_cast<int>(order.size()) != m.n)
    throw UnsupportedError("frieze table needs an acyclic quiver");
  return order;
}

}  // namespace

FriezeTable::FriezeTable(ExchangeMatrix matrix)
    : matrix_(std::move(matrix)), topo_(topological_order(matrix_)) {
  auto& base = levels_[0];
  base.reserve(matrix_.n);
  for (int i = 0; i < matrix_.n; ++i) base.push_back(LaurentPoly::variable(matrix_.n, i));
}

const std::vector<LaurentPoly>& FriezeTable::level(long n) {
  extend_to(n);
  return levels_.at(n);
}

void FriezeTable::extend_to(long n) {
  while (levels_.rbegin()->first < n) {
    const long top = levels_.rbegin()->first;
    const auto& cur = levels_.at(top);
    std::vector<LaurentPoly> next(matrix_.n);
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
      const int i = *it;
      LaurentPoly prod = LaurentPoly::one(matrix_.n);
      for (int j = 0; j < matrix_.n; ++j) {
        if (matrix_.b[j][i] > 0) prod *= cur[j].pow(matrix_.b[j][i]);
        if (matrix_.b[i][j] > 0) prod *= next[j].pow(matrix_.b[i][j]);
      }
      next[i] = LaurentPoly::exact_div(LaurentPoly::one(matrix_.n) + prod, cur[i]);
    }
    levels_.emplace(top + 1, std::move(next));
  }
  while (levels_.begin()->first > n) {
    const long bottom = levels_.begin()->first;
    const auto& cur = levels_.at(bottom);
    std::vector<LaurentPoly> prev(matrix_.n);
    for (int i : topo_) {
      LaurentPoly prod = LaurentPoly::one(matrix_.n);
      for (int j = 0; j < matrix_.n; ++j) {
        if (matrix_.b[j][i] > 0) prod *= prev[j].pow(matrix_.b[j][i]);
        if (matrix_.b[i][j] > 0) prod *= cur[j].pow(matrix_.b[i][j]);
      }
      prev[i] = LaurentPoly::exact_div(LaurentPoly::one(matrix_.n) + prod, cur[i]);
    }
    levels_.emplace(bottom - 1, std::move(prev));
  }
}

const LaurentPoly& FriezeTable::value(int vertex, long n) {
  if (vertex < 0 || vertex >= matrix_.n) throw std::out_of_range("vertex out of range");
  return level(n)[vertex];
}

bool FriezeTable::relation_holds(int vertex, long n) {
  LaurentPoly prod = LaurentPoly::one(matrix_.n);
  for (int j = 0; j < matrix_.n; ++j) {
    if (matrix_.b[j][vertex] > 0) prod *= value(j, n).pow(matrix_.b[j][vertex]);
    if (matrix_.b[vertex][j] > 0) prod *= value(j, n + 1).pow(matrix_.b[vertex][j]);
  }
  return value(vertex, n) * value(vertex, n + 1) == LaurentPoly::one(matrix_.n) + prod;
}

Seed cluster_map_apply(const Seed& s) {
  auto classes = bipartite_classes(s.matrix);
  if (!classes) throw UnsupportedError("cluster map needs a bipartite quiver");
  Seed cur = s;
  for (int k : classes->sinks) cur = mutate_seed(cur, k);
  for (int k : classes->sources) cur = mutate_seed(cur, k);
  if (!(cur.matrix == s.matrix))
    throw UnsupportedError("sink/source mutation cycle failed to restore the quiver");
  return cur;
}

ATypeSequence::ATypeSequence(int q, int p) : q_(q), p_(p) {
  if (q < 1 || p < 1 || gcd(q, p) != 1)
    throw UnsupportedError("affine A sequence needs positive coprime q, p");
  for (int i = 0; i < q + p; ++i) memo_.emplace(i, LaurentPoly::variable(q + p, i));
}

const LaurentPoly& ATypeSequence::value(long n) {
  const int N = q_ + p_;
  while (memo_.rbegin()->first < n) {
    const long m = memo_.rbegin()->first + 1;  // x_m from the window below it
    LaurentPoly rhs = memo_.at(m - q_) * memo_.at(m - p_) + LaurentPoly::one(N);
    memo_.emplace(m, LaurentPoly::exact_div(rhs, memo_.at(m - N)));
  }
  while (memo_.begin()->first > n) {
    const long m = memo_.begin()->first - 1;
    LaurentPoly rhs = memo_.at(m + q_) * memo_.at(m + p_) + LaurentPoly::one(N);
    memo_.emplace(m, LaurentPoly::exact_div(rhs, memo_.at(m + N)));
  }
  return memo_.at(n);
}

std::string render_grid(const FriezeGrid& grid, RenderFormat format) {
  if (grid.columns.empty()) return "";
  std::ostringstream os;
  switch (format) {
    case RenderFormat::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (size_t r = 0; r < grid.cells.size(); ++r) {
        nlohmann::json row{{"name", grid.row_names[r]}, {"cells", grid.cells[r]}};
        rows.push_back(std::move(row));
      }
      nlohmann::json j{{"columns", grid.columns}, {"rows", rows}};
      os << j.dump(2) << "\n";
      break;
    }
    case RenderFormat::Csv: {
      os << "row";
      for (long c : grid.columns) os << "," << c;
      os << "\n";
      for (size_t r = 0; r < grid.cells.size(); ++r) {
        os << grid.row_names[r];
        for (const auto& cell : grid.cells[r]) os << "," << cell;
        os << "\n";
      }
      break;
    }
    case RenderFormat::Text: {
      size_t width = 1;
      for (const auto& row : grid.cells)
        for (const auto& cell : row) width = std::max(width, cell.size());
      const size_t name_w =
          grid.row_names.empty()
              ? 0
              : std::max_element(grid.row_names.begin(), grid.row_names.end(),
                                 [](const auto& a, const auto& b) { return a.size() < b.size(); })
                    ->size();
      for (size_t r = 0; r < grid.cells.size(); ++r) {
        os << grid.row_names[r] << std::string(name_w - grid.row_names[r].size(), ' ') << " |";
        const int offset = r < grid.stagger.size() ? grid.stagger[r] : 0;
        os << std::string(static_cast<size_t>(std::max(0, offset)) * (width + 1) / 2, ' ');
        for (const auto& cell : grid.cells[r]) {
          os << ' ' << std::string(width - cell.size(), ' ') << cell;
        }
        os << "\n";
      }
      break;
    }
  }
  return os.str();
}

namespace {

std::string cell_text(const LaurentPoly& v, bool units) {
  return units ? v.eval_units().str() : v.serialize();
}

}  // namespace

FriezeGrid grid_from_frieze(FriezeTable& table, const std::vector<int>& labels,
                            long n_min, long n_max, bool units) {
  FriezeGrid g;
  for (long n = n_min; n <= n_max; ++n) g.columns.push_back(n);
  for (int i = 0; i < table.matrix().n; ++i) {
    const int label = i < static_cast<int>(labels.size()) ? labels[i] : i;
    g.row_names.push_back("X^" + std::to_string(label));
    g.stagger.push_back(i % 2);
    std::vector<std::string> row;
    for (long n = n_min; n <= n_max; ++n) row.push_back(cell_text(table.value(i, n), units));
    g.cells.push_back(std::move(row));
  }
  return g;
}

FriezeGrid grid_from_a_sequence(ATypeSequence& seq, long n_min, long n_max, bool units) {
  FriezeGrid g;
  for (long n = n_min; n <= n_max; ++n) g.columns.push_back(n);
  g.row_names.push_back("x");
  g.stagger.push_back(0);
  std::vector<std::string> row;
  for (long n = n_min; n <= n_max; ++n) row.push_back(cell_text(seq.value(n), units));
  g.cells.push_back(std::move(row));
  return g;
}

}  // namespace cluster
