#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cluster/laurent.hpp"

namespace cluster {

struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Skew-symmetric integer exchange matrix; b[i][j] counts arrows i -> j.
struct ExchangeMatrix {
  int n = 0;
  std::vector<std::vector<int>> b;

  ExchangeMatrix() = default;
  explicit ExchangeMatrix(int n_) : n(n_), b(n_, std::vector<int>(n_, 0)) {}

  bool operator==(const ExchangeMatrix&) const = default;
  bool is_skew_symmetric() const;
  void add_arrow(int from, int to, int count = 1);

  nlohmann::json to_json(const std::vector<int>& labels = {}) const;
};

/// Quiver mutation at vertex k, acting on the matrix entries.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, int k);

/// Exchange matrix together with one cluster variable per vertex, each
/// expressed in the initial variables.
struct Seed {
  ExchangeMatrix matrix;
  std::vector<LaurentPoly> vars;

  bool operator==(const Seed&) const = default;
  nlohmann::json to_json(const std::vector<int>& labels = {}) const;
};

/// The seed whose variables are the initial variable monomials.
Seed initial_seed(const ExchangeMatrix& m);

/// Seed mutation at vertex k: the exchange relation replaces vars[k] by
/// (in-product + out-product) / vars[k]; the matrix mutates alongside.
Seed mutate_seed(const Seed& s, int k);

enum class Family { ATilde, DTilde, Custom };

struct QuiverParams {
  Family family = Family::Custom;
  int q = 0, p = 0;  // ATilde parameters, coprime
  int N = 0;         // DTilde rank, N >= 4
  ExchangeMatrix custom;
};

/// Affine A quiver on q+p vertices: the cycle visits labels 0, p, 2p, ...
/// reduced mod N, and every edge points from the lower label to the higher.
/// Requires gcd(q, p) == 1.
ExchangeMatrix build_a_matrix(int q, int p);

/// Affine D quiver on N+1 vertices labelled 1..N+1 (forks 1,2 and N,N+1,
/// spine 3..N-1), with the bipartite orientation: every edge points from the
/// source colour class to the sink class.  Internally 0-based: label i sits
/// at index i-1.
ExchangeMatrix build_d_matrix(int N);

Seed build_quiver(const QuiverParams& params);

/// Vertex labels as printed in reports: 0..N-1 for ATilde, 1..N+1 for DTilde.
std::vector<int> vertex_labels(const QuiverParams& params);

/// True when mutation at vertex 0 equals the cyclic relabelling i -> i+1
/// (mod n) of the quiver, the defining property of the period-1 construction.
bool period1_check(const ExchangeMatrix& m);

struct BipartiteClasses {
  std::set<int> sinks;    // 0-based indices
  std::set<int> sources;
};

/// Two-colouring with every arrow running source class -> sink class, or
/// nullopt when the quiver admits none.
std::optional<BipartiteClasses> bipartite_classes(const ExchangeMatrix& m);

int gcd(int a, int b);

}  // namespace cluster
