#pragma once

#include "cluster/periodic.hpp"

namespace cluster {

/// Tridiagonal continuant D^m_a(F_n) with diagonal F_n, F_{n+a}, ...,
/// F_{n+(m-1)a} and unit off-diagonals, computed by the recurrence
///   D^m_a(F_n) = F_{n+(m-1)a} D^{m-1}_a(F_n) - D^{m-2}_a(F_n),
///   D^0 = 1, D^1_a(F_n) = F_n.
LaurentPoly continuant(PeriodicFamily& f, int a, int m, long n);

/// Independent route: the same determinant by direct cofactor expansion.
LaurentPoly continuant_determinant(PeriodicFamily& f, int a, int m, long n);

/// The frieze formed by the continuants of a periodic family: row 0 is all
/// ones, row 1 the family sampled with step a, row l the order-l continuants.
/// Columns are the start indices j, holding D^l_a(F_{j a}).
class ContinuantFrieze {
 public:
  /// Affine A: (a, L) = (p, q-1) over J and (q, p-1) over Jtilde;
  /// affine D: (a, L) = (1, N-3) over Jprime.
  static ContinuantFrieze over_j(AFamilies& fam, long j_min, long j_max);
  static ContinuantFrieze over_jtilde(AFamilies& fam, long j_min, long j_max);
  static ContinuantFrieze over_jprime(DFamilies& fam, long j_min, long j_max);

  const LaurentPoly& entry(int row, long j) const;
  int rows() const { return rows_; }        // deepest row index L
  int step() const { return step_; }        // a
  long j_min() const { return j_min_; }
  long j_max() const { return j_max_; }

  FriezeGrid to_grid(bool units) const;

 private:
  ContinuantFrieze(PeriodicFamily& f, int rows, long j_min, long j_max);

  int rows_;
  int step_;
  long j_min_, j_max_;
  std::vector<std::vector<LaurentPoly>> table_;  // [row][j - j_min]
};

/// Desnanot-Jacobi / diamond verification:
///   D^m(F_n) D^{m-2}(F_{n+a}) == D^{m-1}(F_n) D^{m-1}(F_{n+a}) - 1
/// at every interior cell of the table.
CheckReport desnanot_check(const ContinuantFrieze& cf);

/// All entries in rows 1..L are Laurent polynomials with positive coefficients.
CheckReport positivity_check(const ContinuantFrieze& cf);

/// D^m_s(F_n) agrees with the transfer-matrix entry A^m_n for the family's
/// own step s, for m = 0..m_max.
CheckReport continuant_entry_check(PeriodicFamily& f, int m_max, const std::vector<long>& starts);

/// The gluing identities between the frieze pattern and the continuant
/// friezes, in initial-seed coordinates:
///   J_n x_{n+p} == x_{n+2p} + x_n,   Jtilde_n x_{n+q} == x_{n+2q} + x_n.
CheckReport glue_check(AFamilies& fam, long n_min, long n_max);

/// Affine D gluing: Jprime_n X^2_n == X^1_{n+1} + X^1_{n-1}.
CheckReport glue_check(DFamilies& fam, long n_min, long n_max);

/// Cross identity for the spine expression of Jprime (needs N >= 5, where
/// vertices 3,4,5 exist as drawn): Jprime_{n-1} X^4_n == X^3_{n+1} + X^5_n.
CheckReport jprime_spine_identity_check(DFamilies& fam, long n_min, long n_max);

}  // namespace cluster
