#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "clustercox/cartan.hpp"
#include "clustercox/errors.hpp"
#include "clustercox/laurent.hpp"

namespace clustercox {

/// A cluster (n Laurent polynomials in the initial variables) together with
/// its exchange matrix.
struct Seed {
  std::vector<LaurentPoly> cluster;
  ExchangeMatrix matrix;

  std::size_t rank() const noexcept { return cluster.size(); }
  friend bool operator==(const Seed&, const Seed&) = default;
};

/// ((u_1, ..., u_n), B)
inline Seed initial_seed(const ExchangeMatrix& b) {
  std::vector<LaurentPoly> cluster;
  cluster.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) cluster.push_back(LaurentPoly::variable(b.size(), i));
  return Seed{std::move(cluster), b};
}

/// Matrix mutation at k:
///   b'_ij = -b_ij                                      if i = k or j = k
///   b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2      otherwise.
inline ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  const std::size_t n = b.size();
  detail::require(k < n, "mutation direction out of range");
  auto abs = [](std::int64_t v) { return v < 0 ? -v : v; };
  SquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
        continue;
      }
      const std::int64_t twice = abs(b(i, k)) * b(k, j) + b(i, k) * abs(b(k, j));
      detail::ensure(twice % 2 == 0, "odd correction term in matrix mutation");
      out(i, j) = b(i, j) + twice / 2;
    }
  return ExchangeMatrix(std::move(out), b.symmetrizer());
}

/// Exchange polynomial of direction k: prod_{b_ik>0} x_i^{b_ik} + prod_{b_ik<0} x_i^{-b_ik}.
inline LaurentPoly exchange_binomial(const Seed& s, std::size_t k) {
  const std::size_t n = s.rank();
  LaurentPoly pos = LaurentPoly::one(n);
  LaurentPoly neg = LaurentPoly::one(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto bik = s.matrix(i, k);
    if (bik > 0) pos *= s.cluster[i].pow(static_cast<unsigned>(bik));
    if (bik < 0) neg *= s.cluster[i].pow(static_cast<unsigned>(-bik));
  }
  return pos + neg;
}

/// mu_k. The new variable is obtained by exact division in the Laurent ring;
/// failure would contradict the Laurent phenomenon and throws
/// InvariantViolation.
inline Seed mutate(const Seed& s, std::size_t k) {
  detail::require(k < s.rank(), "mutation direction out of range");
  auto fresh = exact_div(exchange_binomial(s, k), s.cluster[k]);
  detail::ensure(fresh.has_value(), "exchange relation is not Laurent (mutation at " +
                                        std::to_string(k + 1) + ")");
  Seed out{s.cluster, mutate_matrix(s.matrix, k)};
  out.cluster[k] = std::move(*fresh);
  return out;
}

/// d_i = -(minimal exponent of u_i over the terms of f). For u_i this is
/// -e_i; for a non-initial cluster variable P(u)/u^d it is d.
inline std::vector<std::int64_t> denominator_vector(const LaurentPoly& f) {
  const ExponentVector m = f.min_exponents();
  std::vector<std::int64_t> d(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) d[i] = -static_cast<std::int64_t>(m[i]);
  return d;
}

/// f written as numerator / u^den with den = max(0, denominator vector).
struct FractionForm {
  LaurentPoly numerator;
  ExponentVector denominator;
};

inline FractionForm fraction_form(const LaurentPoly& f) {
  if (f.is_zero()) return {f, ExponentVector(f.rank())};
  ExponentVector den = -f.min_exponents();
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = std::max(den[i], 0);
  return {f.shifted(den), den};
}

/// "(numerator)/(u1*u2^2)" in the style of hand-written cluster variables;
/// denominators of 1 are omitted.
inline std::string fraction_string(const LaurentPoly& f) {
  const FractionForm ff = fraction_form(f);
  std::string num = canonical_string(ff.numerator);
  if (ff.denominator.is_zero()) return num;
  std::string den;
  for (std::size_t i = 0; i < ff.denominator.size(); ++i) {
    if (ff.denominator[i] == 0) continue;
    if (!den.empty()) den += "*";
    den += "u" + std::to_string(i + 1);
    if (ff.denominator[i] != 1) den += "^" + std::to_string(ff.denominator[i]);
  }
  if (ff.numerator.size() > 1) num = "(" + num + ")";
  const bool single = ff.denominator.is_zero() ||
                      std::count_if(ff.denominator.begin(), ff.denominator.end(),
                                    [](auto v) { return v != 0; }) == 1;
  return num + "/" + (single ? den : "(" + den + ")");
}

}  // namespace clustercox
