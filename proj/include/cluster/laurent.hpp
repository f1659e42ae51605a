#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace cluster {

// Exact signed integers of arbitrary magnitude; coefficients of every
// cluster variable in the library.
using BigInt = boost::multiprecision::cpp_int;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an exact division leaves a remainder.  Every division performed
// by the library (exchange relations, frieze steps, periodic quantities) is
// exact for valid inputs, so this firing means either a bug or a non-cluster
// input; callers must not swallow it.
struct ExactnessError : std::runtime_error {
  ExactnessError(const std::string& msg, std::string remainder)
      : std::runtime_error(msg), remainder_json(std::move(remainder)) {}
  std::string remainder_json;
};

/// Multivariate Laurent polynomial over BigInt with a fixed number of
/// variables.
///
/// Exponent vectors are packed into a 128-bit key, one biased field per
/// variable with variable 0 in the most significant bits, so packed numeric
/// order coincides with lexicographic order on exponent vectors.  Terms are
/// kept sorted ascending by that key: iteration order and serialization are
/// canonical and equality is plain term-list equality.  The field width (and
/// with it the representable exponent range) depends only on nvars, so all
/// polynomials of one ring are directly comparable.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using Key = unsigned __int128;

  struct Term {
    Key key;
    BigInt coef;
    bool operator==(const Term&) const = default;
  };

  static constexpr int kMaxVars = 21;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars);

  static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
  static LaurentPoly constant(int nvars, BigInt c);
  static LaurentPoly one(int nvars) { return constant(nvars, 1); }
  static LaurentPoly variable(int nvars, int index);
  static LaurentPoly monomial(int nvars, const Exponents& exp, BigInt c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  Exponents exponents(const Term& t) const;

  bool operator==(const LaurentPoly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;  // bounds cache excluded
  }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
  LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
  LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

  /// Exponentiation with k >= 0.
  LaurentPoly pow(int k) const;

  /// Exact quotient: returns q with q * den == num.  Throws ExactnessError if
  /// no such Laurent polynomial exists, carrying the offending remainder.
  static LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

  /// Every variable set to 1, i.e. the sum of the coefficients.
  BigInt eval_units() const;

  /// True when all stored coefficients are positive (vacuously true for 0).
  bool positive_coefficients() const;

  nlohmann::json to_json() const;
  std::string serialize() const { return to_json().dump(); }
  static LaurentPoly from_json(const nlohmann::json& j);
  static LaurentPoly parse(const std::string& text);

  /// Human-readable form, e.g. "x0*x1^-1 + 2*x2".
  std::string to_string() const;

 private:
  friend class KeyCodec;

  int nvars_ = 0;
  int max_abs_exp_ = 0;       // bound used for overflow pre-checks
  std::vector<Term> terms_;   // ascending by key; coefficients nonzero
};

}  // namespace cluster
