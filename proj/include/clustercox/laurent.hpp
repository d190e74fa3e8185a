#pragma once

// Sparse multivariate Laurent polynomials over the integers, exact division,
// and rational substitution u_i -> num/den.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "clustercox/errors.hpp"

namespace clustercox {

using BigInt = boost::multiprecision::cpp_int;

/// Exponents of a monomial u_1^{e_1} ... u_n^{e_n}. The length is the ambient
/// rank and is fixed at construction.
class ExponentVector {
 public:
  using value_type = std::int32_t;
  using storage_type = boost::container::small_vector<value_type, 6>;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t rank) : e_(rank, 0) {}
  ExponentVector(std::initializer_list<value_type> il) : e_(il) {}
  template <class It>
  ExponentVector(It first, It last) : e_(first, last) {}

  static ExponentVector unit(std::size_t rank, std::size_t i, value_type power = 1) {
    ExponentVector e(rank);
    e.e_[i] = power;
    return e;
  }

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v >= 0; });
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  ExponentVector& operator-=(const ExponentVector& o) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  ExponentVector operator-() const {
    ExponentVector r(*this);
    for (auto& v : r.e_) v = -v;
    return r;
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ == b.e_;
  }
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(), b.e_.begin(),
                                                  b.e_.end());
  }

 private:
  storage_type e_;
};

inline ExponentVector componentwise_min(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

inline ExponentVector componentwise_max(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

/// Element of Z[u_1^{+-1}, ..., u_n^{+-1}]. Terms are kept in a map ordered
/// lexicographically descending, so the first entry is the leading term and
/// iteration order is print order. No stored coefficient is ever zero.
template <class Coeff>
class BasicLaurentPoly {
 public:
  using coefficient_type = Coeff;
  using term_map = std::map<ExponentVector, Coeff, std::greater<>>;

  explicit BasicLaurentPoly(std::size_t rank) : rank_(rank) {
    detail::require(rank > 0, "Laurent polynomial rank must be positive");
  }

  static BasicLaurentPoly constant(std::size_t rank, const Coeff& c) {
    return monomial(ExponentVector(rank), c);
  }
  static BasicLaurentPoly one(std::size_t rank) { return constant(rank, Coeff(1)); }
  static BasicLaurentPoly variable(std::size_t rank, std::size_t i) {
    detail::require(i < rank, "variable index out of range");
    return monomial(ExponentVector::unit(rank, i), Coeff(1));
  }
  static BasicLaurentPoly monomial(ExponentVector e, const Coeff& c = Coeff(1)) {
    BasicLaurentPoly p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t rank() const noexcept { return rank_; }
  const term_map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_one() const {
    return is_monomial() && terms_.begin()->first.is_zero() && terms_.begin()->second == 1;
  }

  Coeff coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  const std::pair<const ExponentVector, Coeff>& leading_term() const {
    detail::require(!is_zero(), "leading term of zero polynomial");
    return *terms_.begin();
  }

  /// Componentwise minimum exponent over all terms.
  ExponentVector min_exponents() const {
    detail::require(!is_zero(), "min exponents of zero polynomial");
    ExponentVector m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) m = componentwise_min(m, e);
    return m;
  }
  ExponentVector max_exponents() const {
    detail::require(!is_zero(), "max exponents of zero polynomial");
    ExponentVector m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) m = componentwise_max(m, e);
    return m;
  }

  /// Adds c*u^e, dropping the entry if the coefficient cancels.
  void add_term(const ExponentVector& e, const Coeff& c) {
    detail::require(e.size() == rank_, "exponent vector length differs from rank");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// this += scale * u^shift * g
  void add_scaled_shifted(const BasicLaurentPoly& g, const ExponentVector& shift,
                          const Coeff& scale) {
    check_rank(g);
    for (const auto& [e, c] : g.terms_) add_term(e + shift, c * scale);
  }

  /// Product with the monomial u^shift.
  BasicLaurentPoly shifted(const ExponentVector& shift) const {
    detail::require(shift.size() == rank_, "shift length differs from rank");
    BasicLaurentPoly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
    return r;
  }

  BasicLaurentPoly operator-() const {
    BasicLaurentPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  BasicLaurentPoly& operator+=(const BasicLaurentPoly& g) {
    check_rank(g);
    for (const auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
  }
  BasicLaurentPoly& operator-=(const BasicLaurentPoly& g) {
    check_rank(g);
    for (const auto& [e, c] : g.terms_) add_term(e, -c);
    return *this;
  }
  BasicLaurentPoly& operator*=(const BasicLaurentPoly& g) { return *this = *this * g; }
  BasicLaurentPoly& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend BasicLaurentPoly operator+(BasicLaurentPoly f, const BasicLaurentPoly& g) {
    return f += g;
  }
  friend BasicLaurentPoly operator-(BasicLaurentPoly f, const BasicLaurentPoly& g) {
    return f -= g;
  }
  friend BasicLaurentPoly operator*(const BasicLaurentPoly& f, const BasicLaurentPoly& g) {
    f.check_rank(g);
    const BasicLaurentPoly& big = f.size() >= g.size() ? f : g;
    const BasicLaurentPoly& small = f.size() >= g.size() ? g : f;
    BasicLaurentPoly r(f.rank_);
    for (const auto& [es, cs] : small.terms_) r.add_scaled_shifted(big, es, cs);
    return r;
  }
  friend BasicLaurentPoly operator*(BasicLaurentPoly f, const Coeff& s) { return f *= s; }

  BasicLaurentPoly pow(unsigned k) const {
    BasicLaurentPoly result = one(rank_);
    BasicLaurentPoly base = *this;
    while (k > 0) {
      if (k & 1u) result *= base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  void check_rank(const BasicLaurentPoly& g) const {
    detail::require(rank_ == g.rank_, "rank mismatch between Laurent polynomials");
  }

  std::size_t rank_;
  term_map terms_;
};

/// Returns q with q*g == f, or nullopt when g does not divide f in the
/// Laurent ring. Both operands are first stripped of their minimal monomial
/// (a unit), then plain sparse division runs under the lex order with the
/// quotient confined to the degree box max(f) - max(g).
template <class Coeff>
std::optional<BasicLaurentPoly<Coeff>> exact_div(const BasicLaurentPoly<Coeff>& f,
                                                 const BasicLaurentPoly<Coeff>& g) {
  using Poly = BasicLaurentPoly<Coeff>;
  detail::require(!g.is_zero(), "division by the zero polynomial");
  detail::require(f.rank() == g.rank(), "rank mismatch between Laurent polynomials");
  if (f.is_zero()) return Poly(f.rank());

  const ExponentVector f_shift = f.min_exponents();
  const ExponentVector g_shift = g.min_exponents();
  Poly rem = f.shifted(-f_shift);
  const Poly div = g.shifted(-g_shift);

  const ExponentVector bound = rem.max_exponents() - div.max_exponents();
  if (!bound.is_nonnegative()) return std::nullopt;

  const auto& [lead_e, lead_c] = div.leading_term();
  Poly quot(f.rank());
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    ExponentVector step = re - lead_e;
    for (std::size_t i = 0; i < step.size(); ++i) {
      if (step[i] < 0 || step[i] > bound[i]) return std::nullopt;
    }
    if (rc % lead_c != 0) return std::nullopt;
    Coeff qc = rc / lead_c;
    quot.add_term(step, qc);
    rem.add_scaled_shifted(div, step, -qc);
  }
  return quot.shifted(f_shift - g_shift);
}

/// Canonical text: terms in descending lex order joined by " + " / " - ",
/// each term coeff*u1^e1*u2^e2 with a unit coefficient and unit exponents
/// suppressed. The zero polynomial prints as "0".
template <class Coeff>
std::string canonical_string(const BasicLaurentPoly<Coeff>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Coeff mag = negative ? Coeff(-c) : c;
    bool wrote = false;
    if (mag != 1 || e.is_zero()) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << 'u' << (i + 1);
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const BasicLaurentPoly<Coeff>& f) {
  return os << canonical_string(f);
}

/// num/den in Q(u_1, ..., u_n). Kept unreduced except that construction
/// tries exact division; when den divides num the value is stored with
/// den = 1 ("resolved").
template <class Coeff>
class BasicRationalExpr {
 public:
  using Poly = BasicLaurentPoly<Coeff>;

  BasicRationalExpr(Poly num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(Poly::one(num_.rank())) {}

  BasicRationalExpr(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    detail::require(!den_.is_zero(), "rational expression with zero denominator");
    detail::require(num_.rank() == den_.rank(), "rank mismatch in rational expression");
    resolve();
  }

  std::size_t rank() const noexcept { return num_.rank(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_resolved() const { return den_.is_one(); }

  std::optional<Poly> laurent() const {
    if (is_resolved()) return num_;
    return std::nullopt;
  }

  /// The Laurent value; throws InvariantViolation if the expression did not
  /// resolve (callers use this where the Laurent phenomenon guarantees it).
  const Poly& as_laurent() const {
    detail::ensure(is_resolved(), "expected a Laurent polynomial, got a proper fraction");
    return num_;
  }

  friend bool operator==(const BasicRationalExpr& a, const BasicRationalExpr& b) {
    if (a.is_resolved() && b.is_resolved()) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  void resolve() {
    if (den_.is_one()) return;
    if (auto q = exact_div(num_, den_)) {
      num_ = std::move(*q);
      den_ = Poly::one(num_.rank());
    }
  }

  Poly num_;
  Poly den_;
};

/// f(u_1, ..., u_i -> r, ..., u_n). Writing f = sum_k c_k u_i^k with
/// kmin <= k <= kmax, the result is
///   sum_k c_k num^(k+a) den^(b-k) / (num^a den^b),
/// a = max(0, -kmin), b = max(0, kmax), so every power is non-negative.
template <class Coeff>
BasicRationalExpr<Coeff> substitute(const BasicLaurentPoly<Coeff>& f, std::size_t i,
                                    const BasicRationalExpr<Coeff>& r) {
  using Poly = BasicLaurentPoly<Coeff>;
  detail::require(f.rank() == r.rank(), "rank mismatch in substitution");
  detail::require(i < f.rank(), "substitution index out of range");
  if (f.is_zero()) return BasicRationalExpr<Coeff>(f);

  std::map<std::int32_t, Poly> slices;
  for (const auto& [e, c] : f.terms()) {
    ExponentVector rest = e;
    const auto k = rest[i];
    rest[i] = 0;
    slices.try_emplace(k, f.rank()).first->second.add_term(rest, c);
  }
  const std::int32_t kmin = slices.begin()->first;
  const std::int32_t kmax = slices.rbegin()->first;
  const std::int32_t a = std::max(0, -kmin);
  const std::int32_t b = std::max(0, kmax);

  auto powers = [&](const Poly& p, std::int32_t top) {
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(top) + 1);
    out.push_back(Poly::one(f.rank()));
    for (std::int32_t t = 1; t <= top; ++t) out.push_back(out.back() * p);
    return out;
  };
  const bool plain = r.is_resolved();
  const auto num_pow = powers(r.num(), a + std::max(kmax, 0));
  const auto den_pow = plain ? std::vector<Poly>{} : powers(r.den(), b + std::max(-kmin, 0));

  Poly numer(f.rank());
  for (const auto& [k, c] : slices) {
    Poly term = c * num_pow[static_cast<std::size_t>(k + a)];
    if (!plain) term = term * den_pow[static_cast<std::size_t>(b - k)];
    numer += term;
  }
  Poly denom = plain ? num_pow[static_cast<std::size_t>(a)]
                     : num_pow[static_cast<std::size_t>(a)] * den_pow[static_cast<std::size_t>(b)];
  return BasicRationalExpr<Coeff>(std::move(numer), std::move(denom));
}

template <class Coeff>
BasicRationalExpr<Coeff> substitute(const BasicRationalExpr<Coeff>& f, std::size_t i,
                                    const BasicRationalExpr<Coeff>& r) {
  auto top = substitute(f.num(), i, r);
  if (f.is_resolved()) return top;
  auto bottom = substitute(f.den(), i, r);
  return BasicRationalExpr<Coeff>(top.num() * bottom.den(), top.den() * bottom.num());
}

using LaurentPoly = BasicLaurentPoly<BigInt>;
using RationalExpr = BasicRationalExpr<BigInt>;

/// Parses the canonical text produced by canonical_string back into a
/// polynomial of the given rank. Accepts any term order.
inline LaurentPoly parse_laurent(std::size_t rank, const std::string& text) {
  LaurentPoly out(rank);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    detail::require(pos > start, "expected integer in Laurent text at offset " +
                                     std::to_string(start));
    return text.substr(start, pos - start);
  };
  skip_ws();
  if (text.substr(pos) == "0") return out;
  int sign = 1;
  if (pos < text.size() && text[pos] == '-') {
    sign = -1;
    ++pos;
  }
  while (true) {
    skip_ws();
    BigInt coeff = 1;
    ExponentVector e(rank);
    bool have_factor = false;
    if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      coeff = BigInt(read_int());
      have_factor = true;
    }
    while (pos < text.size() && (text[pos] == '*' || text[pos] == 'u')) {
      if (text[pos] == '*') ++pos;
      detail::require(pos < text.size() && text[pos] == 'u', "expected variable in Laurent text");
      ++pos;
      const long idx = std::stol(read_int());
      detail::require(idx >= 1 && static_cast<std::size_t>(idx) <= rank,
                      "variable index out of range in Laurent text");
      std::int32_t power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        power = static_cast<std::int32_t>(std::stol(read_int()));
      }
      e[static_cast<std::size_t>(idx - 1)] += power;
      have_factor = true;
    }
    detail::require(have_factor, "empty term in Laurent text");
    out.add_term(e, coeff * sign);
    skip_ws();
    if (pos >= text.size()) break;
    detail::require(text[pos] == '+' || text[pos] == '-', "expected + or - in Laurent text");
    sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }
  return out;
}

}  // namespace clustercox
