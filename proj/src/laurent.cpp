#include "cluster/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cluster {

namespace {

// Field layout for packed exponent keys.  Width shrinks as the variable count
// grows; the remaining range is far beyond anything reachable at desk scale,
// and every arithmetic path checks before it could overflow.
int field_bits(int nvars) {
  if (nvars <= 0) return 16;
  if (nvars > LaurentPoly::kMaxVars) throw DimensionError("too many variables");
  if (nvars <= 8) return 16;
  if (nvars <= 10) return 12;
  if (nvars <= 16) return 8;
  return 6;
}

struct Layout {
  int nvars;
  int bits;
  int bias;          // 1 << (bits - 1)
  int max_exp;       // bias - 1
  LaurentPoly::Key bias_all;  // every field set to bias

  explicit Layout(int nv) : nvars(nv), bits(field_bits(nv)), bias(1 << (bits - 1)), max_exp(bias - 1) {
    bias_all = 0;
    for (int i = 0; i < nvars; ++i) bias_all = (bias_all << bits) | static_cast<unsigned>(bias);
  }

  LaurentPoly::Key encode(const LaurentPoly::Exponents& e) const {
    LaurentPoly::Key k = 0;
    for (int i = 0; i < nvars; ++i) {
      if (e[i] < -bias || e[i] > max_exp) throw std::overflow_error("exponent outside packed range");
      k = (k << bits) | static_cast<unsigned>(e[i] + bias);
    }
    return k;
  }

  LaurentPoly::Exponents decode(LaurentPoly::Key k) const {
    LaurentPoly::Exponents e(nvars);
    const LaurentPoly::Key mask = (LaurentPoly::Key(1) << bits) - 1;
    for (int i = nvars - 1; i >= 0; --i) {
      e[i] = static_cast<int>(k & mask) - bias;
      k >>= bits;
    }
    return e;
  }
};

int max_abs(const LaurentPoly::Exponents& e) {
  int m = 0;
  for (int v : e) m = std::max(m, std::abs(v));
  return m;
}

// Open-addressing accumulator for products: packed key -> coefficient.
class Accumulator {
 public:
  explicit Accumulator(size_t expect) { rehash(std::max<size_t>(16, expect * 2)); }

  void add(LaurentPoly::Key key, const BigInt& a, const BigInt& b) {
    if (size_ * 10 >= capacity_ * 7) rehash(capacity_ * 2);
    size_t i = probe(key);
    if (!slots_[i].used) {
      slots_[i].used = true;
      slots_[i].key = key;
      slots_[i].coef = a * b;
      ++size_;
    } else {
      slots_[i].coef += a * b;
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& s : slots_)
      if (s.used && s.coef != 0) f(s.key, s.coef);
  }

 private:
  struct Slot {
    LaurentPoly::Key key = 0;
    BigInt coef;
    bool used = false;
  };

  static size_t hash(LaurentPoly::Key k) {
    uint64_t h = static_cast<uint64_t>(k) * 0x9e3779b97f4a7c15ull;
    h ^= static_cast<uint64_t>(k >> 64) * 0xc2b2ae3d27d4eb4full;
    h ^= h >> 29;
    return static_cast<size_t>(h * 0xbf58476d1ce4e5b9ull >> 13);
  }

  size_t probe(LaurentPoly::Key key) const {
    size_t i = hash(key) & (capacity_ - 1);
    while (slots_[i].used && slots_[i].key != key) i = (i + 1) & (capacity_ - 1);
    return i;
  }

  void rehash(size_t cap) {
    size_t c = 16;
    while (c < cap) c <<= 1;
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(c, Slot{});
    capacity_ = c;
    for (auto& s : old)
      if (s.used) {
        size_t i = hash(s.key) & (capacity_ - 1);
        while (slots_[i].used) i = (i + 1) & (capacity_ - 1);
        slots_[i] = std::move(s);
      }
  }

  std::vector<Slot> slots_;
  size_t capacity_ = 0;
  size_t size_ = 0;
};

}  // namespace

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
  field_bits(nvars);  // validates the variable count
}

LaurentPoly LaurentPoly::constant(int nvars, BigInt c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.push_back({Layout(nvars).bias_all, std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, e, 1);
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exponents& exp, BigInt c) {
  if (static_cast<int>(exp.size()) != nvars) throw DimensionError("exponent vector length != nvars");
  LaurentPoly p(nvars);
  if (c != 0) {
    p.terms_.push_back({Layout(nvars).encode(exp), std::move(c)});
    p.max_abs_exp_ = max_abs(exp);
  }
  return p;
}

LaurentPoly::Exponents LaurentPoly::exponents(const Term& t) const {
  return Layout(nvars_).decode(t.key);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(nvars_);
  out.max_abs_exp_ = max_abs_exp_;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.key, -t.coef});
  return out;
}

namespace {

// Merge two sorted term lists; sign multiplies the right-hand coefficients.
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b, int sign) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].key < b[j].key) {
      out.push_back(a[i++]);
    } else if (b[j].key < a[i].key) {
      out.push_back({b[j].key, sign > 0 ? b[j].coef : -b[j].coef});
      ++j;
    } else {
      BigInt c = a[i].coef;
      if (sign > 0)
        c += b[j].coef;
      else
        c -= b[j].coef;
      if (c != 0) out.push_back({a[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].key, sign > 0 ? b[j].coef : -b[j].coef});
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  if (nvars_ != rhs.nvars_) throw DimensionError("operands have different nvars");
  LaurentPoly out(nvars_);
  out.terms_ = merge_terms(terms_, rhs.terms_, +1);
  out.max_abs_exp_ = std::max(max_abs_exp_, rhs.max_abs_exp_);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  if (nvars_ != rhs.nvars_) throw DimensionError("operands have different nvars");
  LaurentPoly out(nvars_);
  out.terms_ = merge_terms(terms_, rhs.terms_, -1);
  out.max_abs_exp_ = std::max(max_abs_exp_, rhs.max_abs_exp_);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  if (nvars_ != rhs.nvars_) throw DimensionError("operands have different nvars");
  LaurentPoly out(nvars_);
  if (terms_.empty() || rhs.terms_.empty()) return out;

  const Layout layout(nvars_);
  if (max_abs_exp_ + rhs.max_abs_exp_ > layout.max_exp)
    throw std::overflow_error("product exponents outside packed range");
  out.max_abs_exp_ = max_abs_exp_ + rhs.max_abs_exp_;

  // Multiplying by a monomial shifts keys uniformly and keeps the order.
  const LaurentPoly* big = this;
  const LaurentPoly* small = &rhs;
  if (big->terms_.size() < small->terms_.size()) std::swap(big, small);
  if (small->terms_.size() == 1) {
    const Key shift = small->terms_[0].key - layout.bias_all;
    const BigInt& c = small->terms_[0].coef;
    out.terms_.reserve(big->terms_.size());
    for (const auto& t : big->terms_) out.terms_.push_back({t.key + shift, t.coef * c});
    return out;
  }

  Accumulator acc(terms_.size() + rhs.terms_.size());
  for (const auto& ta : terms_) {
    const Key base = ta.key - layout.bias_all;
    for (const auto& tb : rhs.terms_) acc.add(base + tb.key, ta.coef, tb.coef);
  }
  acc.for_each([&](Key k, const BigInt& c) { out.terms_.push_back({k, c}); });
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return a.key < b.key; });
  return out;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("pow expects a nonnegative exponent");
  LaurentPoly acc = one(nvars_);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return acc;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (num.nvars_ != den.nvars_) throw DimensionError("operands have different nvars");
  if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const int nv = num.nvars_;
  if (num.is_zero()) return zero(nv);

  const Layout layout(nv);
  if (2 * (num.max_abs_exp_ + den.max_abs_exp_) > layout.max_exp)
    throw std::overflow_error("quotient exponents outside packed range");

  // Monomial divisor: shift and divide coefficients directly.
  if (den.terms_.size() == 1) {
    const Key shift = den.terms_[0].key - layout.bias_all;
    const BigInt& dc = den.terms_[0].coef;
    LaurentPoly out(nv);
    out.terms_.reserve(num.terms_.size());
    for (const auto& t : num.terms_) {
      if (t.coef % dc != 0) throw ExactnessError("non-exact division", num.serialize());
      out.terms_.push_back({t.key - shift, t.coef / dc});
    }
    out.max_abs_exp_ = num.max_abs_exp_ + den.max_abs_exp_;
    return out;
  }

  // General case: leading-term elimination under the packed (lexicographic)
  // order.  Shift both operands so all exponents are nonnegative; then the
  // order is a well-order, every intermediate leading term of an exact
  // quotient is divisible by the divisor's leading term, and any failure of
  // divisibility certifies non-exactness.
  Exponents num_lo = layout.decode(num.terms_.front().key);
  Exponents den_lo = layout.decode(den.terms_.front().key);
  for (const auto& t : num.terms_) {
    Exponents e = layout.decode(t.key);
    for (int i = 0; i < nv; ++i) num_lo[i] = std::min(num_lo[i], e[i]);
  }
  for (const auto& t : den.terms_) {
    Exponents e = layout.decode(t.key);
    for (int i = 0; i < nv; ++i) den_lo[i] = std::min(den_lo[i], e[i]);
  }

  std::map<Key, BigInt> rem;
  {
    Key shift = layout.bias_all - layout.encode(num_lo);
    for (const auto& t : num.terms_) rem.emplace(t.key + shift, t.coef);
  }
  std::vector<Term> dshift;
  {
    Key shift = layout.bias_all - layout.encode(den_lo);
    for (const auto& t : den.terms_) dshift.push_back({t.key + shift, t.coef});
  }
  const Term& dlead = dshift.back();
  const Exponents dlead_exp = layout.decode(dlead.key);

  auto report_remainder = [&]() -> std::string {
    // shift the working remainder back to the original exponent domain
    LaurentPoly r(nv);
    for (const auto& [k, c] : rem) {
      Exponents e = layout.decode(k);
      for (int i = 0; i < nv; ++i) e[i] += num_lo[i];
      r += monomial(nv, e, c);
    }
    return r.serialize();
  };

  std::vector<Term> qrev;  // quotient terms, generated in descending order
  while (!rem.empty()) {
    const auto lead = std::prev(rem.end());
    const Exponents rlead_exp = layout.decode(lead->first);
    bool divisible = lead->second % dlead.coef == 0;
    for (int i = 0; divisible && i < nv; ++i)
      if (rlead_exp[i] < dlead_exp[i]) divisible = false;
    if (!divisible) throw ExactnessError("non-exact division", report_remainder());

    const Key qkey = lead->first - dlead.key + layout.bias_all;
    const BigInt qc = lead->second / dlead.coef;
    qrev.push_back({qkey, qc});
    const Key qshift = qkey - layout.bias_all;
    for (const auto& dt : dshift) {
      const Key k = dt.key + qshift;
      auto it = rem.find(k);
      if (it == rem.end()) {
        rem.emplace(k, -qc * dt.coef);
      } else {
        it->second -= qc * dt.coef;
        if (it->second == 0) rem.erase(it);
      }
    }
  }

  LaurentPoly out(nv);
  const Key back = layout.encode(num_lo) - layout.encode(den_lo);  // bias cancels
  out.terms_.reserve(qrev.size());
  for (auto it = qrev.rbegin(); it != qrev.rend(); ++it)
    out.terms_.push_back({it->key + back, std::move(it->coef)});
  out.max_abs_exp_ = 0;
  for (const auto& t : out.terms_)
    out.max_abs_exp_ = std::max(out.max_abs_exp_, max_abs(layout.decode(t.key)));
  return out;
}

BigInt LaurentPoly::eval_units() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t.coef;
  return s;
}

bool LaurentPoly::positive_coefficients() const {
  for (const auto& t : terms_)
    if (t.coef <= 0) return false;
  return true;
}

nlohmann::json LaurentPoly::to_json() const {
  const Layout layout(nvars_);
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : terms_)
    terms.push_back({{"exp", layout.decode(t.key)}, {"coef", t.coef.str()}});
  return {{"nvars", nvars_}, {"terms", terms}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  const int nv = j.at("nvars").get<int>();
  LaurentPoly p = zero(nv);
  for (const auto& t : j.at("terms")) {
    Exponents e = t.at("exp").get<Exponents>();
    if (static_cast<int>(e.size()) != nv) throw DimensionError("term exponent length != nvars");
    BigInt c(t.at("coef").get<std::string>());
    p += monomial(nv, e, c);
  }
  return p;
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  return from_json(nlohmann::json::parse(text));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  const Layout layout(nvars_);
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigInt a = t.coef;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (a < 0) a = -a;
    first = false;
    const Exponents e = layout.decode(t.key);
    std::vector<std::string> factors;
    if (a != 1) factors.push_back(a.str());
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      std::string f = "x" + std::to_string(i);
      if (e[i] != 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) factors.push_back("1");
    for (size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace cluster
