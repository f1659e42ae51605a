#pragma once

#include <memory>
#include <vector>

#include "cluster/frieze.hpp"
#include "cluster/report.hpp"

namespace cluster {

enum class PeriodicKind { J, Jtilde, Jprime };

/// A periodic quantity of the cluster map, memoised as Laurent polynomials in
/// the initial variables:
///   J_n      = (x_{n+2p} + x_n) / x_{n+p},        period q   (affine A)
///   Jtilde_n = (x_{n+2q} + x_n) / x_{n+q},        period p   (affine A)
///   Jprime_n = (X^1_{n+1} + X^1_{n-1}) / X^2_n,   period N-2 (affine D)
/// All divisions are exact; each value is itself a cluster variable.
class PeriodicFamily {
 public:
  static PeriodicFamily make_j(std::shared_ptr<ATypeSequence> seq);
  static PeriodicFamily make_jtilde(std::shared_ptr<ATypeSequence> seq);
  static PeriodicFamily make_jprime(std::shared_ptr<FriezeTable> frieze, int N);

  const LaurentPoly& value(long n);
  PeriodicKind kind() const { return kind_; }
  long period() const { return period_; }
  /// Index step between consecutive factors of the transfer-matrix product
  /// (p for J, q for Jtilde, 1 for Jprime).
  int step() const { return step_; }
  int nvars() const { return nvars_; }

 private:
  PeriodicFamily(PeriodicKind kind, long period, int step, int nvars)
      : kind_(kind), period_(period), step_(step), nvars_(nvars) {}

  PeriodicKind kind_;
  long period_;
  int step_;
  int nvars_;
  std::shared_ptr<ATypeSequence> seq_;
  std::shared_ptr<FriezeTable> frieze_;
  std::map<long, LaurentPoly> memo_;
};

/// 2x2 matrix of Laurent polynomials.
struct TwoByTwo {
  LaurentPoly a, b, c, d;  // [[a, b], [c, d]]

  bool operator==(const TwoByTwo&) const = default;
  TwoByTwo operator*(const TwoByTwo& rhs) const;
  LaurentPoly trace() const { return a + d; }
  LaurentPoly det() const { return a * d - b * c; }
  static TwoByTwo identity(int nvars);
};

/// The generator matrix of the family's linear relation:
///   L_n = [[J_n, 1], [-1, 0]],  Ltilde_n = [[Jt_n, -1], [1, 0]],
///   Lprime_n = [[0, -1], [1, Jp_n]].
TwoByTwo generator_matrix(PeriodicFamily& f, long n);

/// Ordered product of m generator matrices starting at index n.  J and Jprime
/// products multiply on the right with ascending index; Jtilde products
/// multiply on the left (the factor with the largest index ends up leftmost).
TwoByTwo m_product(PeriodicFamily& f, int m, long n);

/// Matrix entries by the three-term recurrence
///   A^m_n = F_{n+(m-1)s} A^{m-1}_n - A^{m-2}_n,  A^1_n = F_n, A^0_n = 1
/// extended with A^{-1}_n = 0; s is the family's index step.
LaurentPoly a_entry(PeriodicFamily& f, int m, long n);

/// Verifies that m_product(f, m, n) has the closed entry structure implied by
/// the recurrence, for m = 1..m_max at each start index.
CheckReport structure_check(PeriodicFamily& f, int m_max, const std::vector<long>& starts);

/// det(M^m_n) == 1 for m = 0..m_max.
CheckReport det_one_check(PeriodicFamily& f, int m_max, long n);

/// value(n + period) == value(n) over the window.
CheckReport verify_period(PeriodicFamily& f, long n_min, long n_max);

/// Everything needed for affine A invariants: the scalar sequence plus both
/// periodic families over it.
struct AFamilies {
  AFamilies(int q, int p);
  int q, p;
  std::shared_ptr<ATypeSequence> seq;
  PeriodicFamily j, jtilde;
};

/// Affine D counterpart: the frieze of the bipartite quiver plus Jprime.
struct DFamilies {
  explicit DFamilies(int N);
  int N;
  std::shared_ptr<FriezeTable> frieze;
  PeriodicFamily jprime;
};

struct TraceInvariant {
  LaurentPoly value;      // the Cayley-Hamilton constant
  CheckReport constancy;  // start-index independence (and J == Jtilde trace match)
};

/// Trace of the full-period product: m = q factors of L (checked equal to the
/// trace of the p-factor Ltilde product) for affine A.
TraceInvariant trace_invariant(AFamilies& fam);

/// For affine D the product has N-2 factors when N is even and 2N-4 when odd.
TraceInvariant trace_invariant(DFamilies& fam);

int d_product_length(int N);

/// x_{n+2qp} - K x_{n+qp} + x_n == 0 over the window.
CheckReport linear_relation_check(AFamilies& fam, long n_min, long n_max);

/// X^1_{n+2g} - K' X^1_{n+g} + X^1_n == 0 with g the D product length.
CheckReport linear_relation_check(DFamilies& fam, long n_min, long n_max);

/// Window-transport identities for Psi_n = [[x_{n+p+q}, x_{n+q}], [x_{n+p}, x_n]]:
/// Psi_{n+p} == Psi_n L_n and Psi_{n+q} == Ltilde_n Psi_n.
CheckReport psi_transport_check(AFamilies& fam, long n_min, long n_max);

/// The linear relations with periodic coefficients:
/// x_{n+2p} - J_n x_{n+p} + x_n == 0 and x_{n+2q} - Jt_n x_{n+q} + x_n == 0.
CheckReport periodic_linear_check(AFamilies& fam, long n_min, long n_max);

}  // namespace cluster
