#pragma once

#include <map>

#include "cluster/continuant.hpp"

namespace cluster {

/// Set of cluster variables, deduplicated by canonical serialized form.
class VariableSet {
 public:
  bool insert(const LaurentPoly& v) { return by_key_.emplace(v.serialize(), v).second; }
  bool contains(const LaurentPoly& v) const { return by_key_.count(v.serialize()) > 0; }
  bool contains_key(const std::string& key) const { return by_key_.count(key) > 0; }
  size_t size() const { return by_key_.size(); }
  const std::map<std::string, LaurentPoly>& entries() const { return by_key_; }

 private:
  std::map<std::string, LaurentPoly> by_key_;
};

struct BfsResult {
  VariableSet variables;
  long seeds_visited = 0;
  long dedupe_hits = 0;  // mutations that landed on an already-visited seed
};

/// Breadth-first closure of a seed under mutation at every vertex, up to the
/// given depth.  Seeds are deduplicated by exact (ordered) variable list plus
/// matrix.  Mutation layers may be expanded by several workers; the visit
/// order, and hence the result, is independent of the scheduling.
BfsResult bfs_explore(const Seed& start, int depth, int workers = 1);

struct PredictedVariables {
  VariableSet frieze;       // window of frieze-pattern variables
  VariableSet determinant;  // the finite continuant families
  long window_lo = 0, window_hi = 0;
};

/// Affine A: sequence values x_m over the window m in [-w N, w N + N - 1]
/// plus both determinant families D^l_p(J_{jp}) and D^l_q(Jtilde_{jq}).
/// The window half-width w defaults to depth + 2, wide enough for any
/// depth-bounded mutation path; pass `window` to override.
PredictedVariables predicted_variables(AFamilies& fam, int depth, int window = -1);

/// Affine D: frieze values X^i_n for n in [-w, w] plus the family
/// D^l_1(Jprime_j); the three exceptional variables have no closed form here
/// and surface as reported extras.
PredictedVariables predicted_variables(DFamilies& fam, int depth, int window = -1);

struct CrossCheckReport {
  bool passed = true;
  std::vector<std::string> found_not_predicted;  // keys
  std::vector<std::string> determinant_missing;  // keys
  long found_total = 0;
  long non_frieze_found = 0;
  long extras = 0;           // affine D: candidates beyond the predicted set
  bool near_window_edge = false;

  nlohmann::json to_json() const;
};

/// Affine A: every found variable must be predicted and every determinant
/// variable must be found.
CrossCheckReport cross_check(AFamilies& fam, const BfsResult& found, int depth, int window = -1);

/// Affine D: every determinant variable must be found; variables beyond the
/// predicted set are reported as extras without failing.
CrossCheckReport cross_check(DFamilies& fam, const BfsResult& found, int depth, int window = -1);

}  // namespace cluster
