#pragma once

#include <random>

#include "cluster/laurent.hpp"

namespace cluster::testing {

// Deterministic random Laurent polynomials for property-style tests.
class PolyGen {
 public:
  explicit PolyGen(unsigned seed = 20240811) : rng_(seed) {}

  LaurentPoly operator()(int nvars, int max_terms = 4, int max_exp = 3, int max_coef = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-max_exp, max_exp);
    std::uniform_int_distribution<int> coef(-max_coef, max_coef);
    LaurentPoly p(nvars);
    const int t = nterms(rng_);
    for (int k = 0; k < t; ++k) {
      LaurentPoly::Exponents e(nvars);
      for (int i = 0; i < nvars; ++i) e[i] = exp(rng_);
      int c = coef(rng_);
      if (c == 0) c = 1;
      p += LaurentPoly::monomial(nvars, e, c);
    }
    return p;
  }

  LaurentPoly nonzero(int nvars) {
    for (;;) {
      LaurentPoly p = (*this)(nvars);
      if (!p.is_zero()) return p;
    }
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace cluster::testing
