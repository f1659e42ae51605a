#pragma once

#include <map>
#include <string>
#include <vector>

#include "cluster/quiver.hpp"

namespace cluster {

/// Lazy table of the cluster-map variables X^i_n for an acyclic quiver with a
/// fixed initial orientation, defined by
///   X^i_n * X^i_{n+1} = 1 + prod_{j->i} (X^j_n)^{|b_ji|} * prod_{i->j} (X^j_{n+1})^{|b_ji|}
/// with X^i_0 the initial variable monomials.  Forward levels are filled in
/// reverse topological order (sinks first), backward levels in topological
/// order, so every value needed on the right-hand side already exists.
class FriezeTable {
 public:
  explicit FriezeTable(ExchangeMatrix matrix);

  const LaurentPoly& value(int vertex, long n);
  const ExchangeMatrix& matrix() const { return matrix_; }
  int nvars() const { return matrix_.n; }

  /// Symbolic check of the defining relation at (vertex, n) from stored values.
  bool relation_holds(int vertex, long n);

 private:
  const std::vector<LaurentPoly>& level(long n);
  void extend_to(long n);

  ExchangeMatrix matrix_;
  std::vector<int> topo_;  // sources first
  std::map<long, std::vector<LaurentPoly>> levels_;
};

/// Mutates at every sink, then at every source, of a bipartite seed.  The
/// matrix is restored; the variables advance one frieze level.
Seed cluster_map_apply(const Seed& s);

/// The scalar affine A sequence x_n with x_{n+q+p} x_n = x_{n+q} x_{n+p} + 1
/// and x_0..x_{N-1} the initial variables, memoised in both directions.
class ATypeSequence {
 public:
  ATypeSequence(int q, int p);

  const LaurentPoly& value(long n);
  int q() const { return q_; }
  int p() const { return p_; }
  int nvars() const { return q_ + p_; }

 private:
  int q_, p_;
  std::map<long, LaurentPoly> memo_;
};

enum class RenderFormat { Text, Csv, Json };

/// A rectangular table of rendered cells plus layout hints; the common
/// carrier for frieze and continuant-frieze output.
struct FriezeGrid {
  std::vector<std::string> row_names;
  std::vector<int> stagger;                      // per-row offset, half cells
  std::vector<long> columns;                     // column coordinates (n)
  std::vector<std::vector<std::string>> cells;   // [row][column]
};

std::string render_grid(const FriezeGrid& grid, RenderFormat format);

FriezeGrid grid_from_frieze(FriezeTable& table, const std::vector<int>& labels,
                            long n_min, long n_max, bool units);

FriezeGrid grid_from_a_sequence(ATypeSequence& seq, long n_min, long n_max, bool units);

}  // namespace cluster
