#include "cluster/continuant.hpp"

namespace cluster {

LaurentPoly continuant(PeriodicFamily& f, int a, int m, long n) {
  if (m < 0) throw std::invalid_argument("continuant expects m >= 0");
  LaurentPoly prev = LaurentPoly::one(f.nvars());  // D^0
  if (m == 0) return prev;
  LaurentPoly cur = f.value(n);  // D^1
  for (int k = 2; k <= m; ++k) {
    LaurentPoly next = f.value(n + static_cast<long>(k - 1) * a) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly continuant_determinant(PeriodicFamily& f, int a, int m, long n) {
  if (m < 0) throw std::invalid_argument("continuant expects m >= 0");
  if (m == 0) return LaurentPoly::one(f.nvars());
  if (m > 20) throw std::invalid_argument("direct determinant limited to small orders");
  std::vector<std::vector<LaurentPoly>> mat(m, std::vector<LaurentPoly>(m, LaurentPoly::zero(f.nvars())));
  for (int i = 0; i < m; ++i) {
    mat[i][i] = f.value(n + static_cast<long>(i) * a);
    if (i + 1 < m) {
      mat[i][i + 1] = LaurentPoly::one(f.nvars());
      mat[i + 1][i] = LaurentPoly::one(f.nvars());
    }
  }
  // Cofactor expansion along successive rows; the minor only depends on the
  // set of remaining columns, so memoise per row on that set.
  const int nvars = f.nvars();
  std::vector<std::map<unsigned, LaurentPoly>> memos(m + 1);
  auto expand = [&](auto&& self, unsigned cols, int row) -> LaurentPoly {
    if (cols == 0) return LaurentPoly::one(nvars);
    auto& memo = memos[row];
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    LaurentPoly acc = LaurentPoly::zero(nvars);
    int sign = 1;
    for (unsigned j = 0; j < mat.size(); ++j) {
      if (!(cols & (1u << j))) continue;
      const LaurentPoly& e = mat[row][j];
      if (!e.is_zero()) {
        LaurentPoly minor = self(self, cols & ~(1u << j), row + 1);
        acc += sign > 0 ? e * minor : -(e * minor);
      }
      sign = -sign;
    }
    return memo.emplace(cols, std::move(acc)).first->second;
  };
  return expand(expand, (1u << m) - 1, 0);
}

ContinuantFrieze::ContinuantFrieze(PeriodicFamily& f, int rows, long j_min, long j_max)
    : rows_(rows), step_(f.step()), j_min_(j_min), j_max_(j_max) {
  if (rows < 0) throw std::invalid_argument("continuant frieze needs rows >= 0");
  for (int l = 0; l <= rows; ++l) {
    std::vector<LaurentPoly> row;
    for (long j = j_min; j <= j_max; ++j)
      row.push_back(continuant(f, step_, l, j * step_));
    table_.push_back(std::move(row));
  }
}

ContinuantFrieze ContinuantFrieze::over_j(AFamilies& fam, long j_min, long j_max) {
  return ContinuantFrieze(fam.j, fam.q - 1, j_min, j_max);
}

ContinuantFrieze ContinuantFrieze::over_jtilde(AFamilies& fam, long j_min, long j_max) {
  return ContinuantFrieze(fam.jtilde, fam.p - 1, j_min, j_max);
}

ContinuantFrieze ContinuantFrieze::over_jprime(DFamilies& fam, long j_min, long j_max) {
  return ContinuantFrieze(fam.jprime, fam.N - 3, j_min, j_max);
}

const LaurentPoly& ContinuantFrieze::entry(int row, long j) const {
  if (row < 0 || row > rows_) throw std::out_of_range("row out of range");
  if (j < j_min_ || j > j_max_) throw std::out_of_range("column out of range");
  return table_[row][j - j_min_];
}

FriezeGrid ContinuantFrieze::to_grid(bool units) const {
  FriezeGrid g;
  for (long j = j_min_; j <= j_max_; ++j) g.columns.push_back(j);
  for (int l = 0; l <= rows_; ++l) {
    g.row_names.push_back("D^" + std::to_string(l));
    g.stagger.push_back((l + 1) % 2);
    std::vector<std::string> row;
    for (const auto& v : table_[l]) row.push_back(units ? v.eval_units().str() : v.serialize());
    g.cells.push_back(std::move(row));
  }
  return g;
}

CheckReport desnanot_check(const ContinuantFrieze& cf) {
  CheckReport report("desnanot-jacobi");
  const int nv = cf.entry(0, cf.j_min()).nvars();
  const LaurentPoly one = LaurentPoly::one(nv);
  for (int m = 2; m <= cf.rows(); ++m) {
    for (long j = cf.j_min(); j < cf.j_max(); ++j) {
      const LaurentPoly lhs = cf.entry(m, j) * cf.entry(m - 2, j + 1);
      const LaurentPoly rhs = cf.entry(m - 1, j) * cf.entry(m - 1, j + 1) - one;
      report.expect(lhs == rhs, {{"m", m}, {"j", j}});
    }
  }
  return report;
}

CheckReport positivity_check(const ContinuantFrieze& cf) {
  CheckReport report("continuant-positivity");
  for (int l = 1; l <= cf.rows(); ++l)
    for (long j = cf.j_min(); j <= cf.j_max(); ++j)
      report.expect(cf.entry(l, j).positive_coefficients(), {{"l", l}, {"j", j}});
  return report;
}

CheckReport continuant_entry_check(PeriodicFamily& f, int m_max, const std::vector<long>& starts) {
  CheckReport report("continuant-vs-matrix-entry");
  for (long n : starts)
    for (int m = 0; m <= m_max; ++m)
      report.expect(continuant(f, f.step(), m, n) == a_entry(f, m, n), {{"m", m}, {"n", n}});
  return report;
}

CheckReport glue_check(AFamilies& fam, long n_min, long n_max) {
  CheckReport report("glue");
  auto& x = *fam.seq;
  for (long n = n_min; n <= n_max; ++n) {
    report.expect(fam.j.value(n) * x.value(n + fam.p) == x.value(n + 2 * fam.p) + x.value(n),
                  {{"kind", "J"}, {"n", n}});
    report.expect(
        fam.jtilde.value(n) * x.value(n + fam.q) == x.value(n + 2 * fam.q) + x.value(n),
        {{"kind", "Jtilde"}, {"n", n}});
  }
  return report;
}

CheckReport glue_check(DFamilies& fam, long n_min, long n_max) {
  CheckReport report("glue");
  auto& fr = *fam.frieze;
  for (long n = n_min; n <= n_max; ++n) {
    report.expect(fam.jprime.value(n) * fr.value(1, n) == fr.value(0, n + 1) + fr.value(0, n - 1),
                  {{"kind", "Jprime"}, {"n", n}});
  }
  return report;
}

CheckReport jprime_spine_identity_check(DFamilies& fam, long n_min, long n_max) {
  CheckReport report("jprime-spine-identity");
  if (fam.N < 5) {
    report.fail({{"reason", "needs N >= 5"}});
    return report;
  }
  auto& fr = *fam.frieze;
  for (long n = n_min; n <= n_max; ++n) {
    // labels 3,4,5,6 sit at indices 2,3,4,5; for N == 5 vertex 4 is the
    // branch vertex, so the fork product X^5 X^6 replaces the plain X^5
    LaurentPoly rhs = fr.value(2, n + 1) + (fam.N == 5 ? fr.value(4, n) * fr.value(5, n)
                                                       : fr.value(4, n));
    report.expect(fam.jprime.value(n - 1) * fr.value(3, n) == rhs, {{"n", n}});
  }
  return report;
}

}  // namespace cluster
