#pragma once

// Reflection automorphisms T_i of Q(u_1, ..., u_n), Coxeter automorphisms
// T = T_{k_n} ... T_{k_1}, and their orbits on the initial cluster.
//
// Composition convention: a CoxeterAuto with sequence (k_1, ..., k_n) is the
// map f -> T_{k_n}( ... T_{k_1}(f) ...), i.e. T_{k_1} acts first. Reversing
// this silently permutes orbits, so everything in this file goes through
// apply() / step_forward() below.

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "clustercox/cartan.hpp"
#include "clustercox/errors.hpp"
#include "clustercox/laurent.hpp"
#include "clustercox/quiver.hpp"

namespace clustercox {

/// prod_k u_k^{-a_ki} + 1. The exponents come from column i of A, which is
/// what makes T_i agree with the mutation at i of any B with A(B) = A when
/// i is a sink or source of the quiver of B.
inline LaurentPoly reflection_numerator(const CartanMatrix& a, std::size_t i) {
  const std::size_t n = a.size();
  detail::require(i < n, "reflection index out of range");
  ExponentVector e(n);
  for (std::size_t k = 0; k < n; ++k)
    if (k != i && a(k, i) < 0) e[k] = static_cast<ExponentVector::value_type>(-a(k, i));
  return LaurentPoly::monomial(e) + LaurentPoly::one(n);
}

/// T_i(u_i) = (prod_k u_k^{-a_ki} + 1) / u_i; T_i(u_j) = u_j for j != i.
inline RationalExpr reflection_image(const CartanMatrix& a, std::size_t i) {
  return RationalExpr(reflection_numerator(a, i), LaurentPoly::variable(a.size(), i));
}

inline RationalExpr apply_ti(const CartanMatrix& a, std::size_t i, const RationalExpr& f) {
  detail::require(f.rank() == a.size(), "rank mismatch between Cartan matrix and argument");
  return substitute(f, i, reflection_image(a, i));
}

/// Product T_{k_m} ... T_{k_1} of reflection automorphisms for a fixed
/// Cartan matrix. With an admissible sink sequence of length n this is the
/// Coxeter automorphism of that orientation.
class CoxeterAuto {
 public:
  CoxeterAuto(CartanMatrix a, std::vector<std::size_t> sequence)
      : a_(std::move(a)), seq_(std::move(sequence)) {
    for (std::size_t k : seq_) detail::require(k < a_.size(), "reflection index out of range");
  }

  const CartanMatrix& cartan() const noexcept { return a_; }
  const std::vector<std::size_t>& sequence() const noexcept { return seq_; }
  std::size_t rank() const noexcept { return a_.size(); }

 private:
  CartanMatrix a_;
  std::vector<std::size_t> seq_;
};

/// T_Omega along the pinned (smallest-sink-first) admissible sequence.
/// Throws StructuralError for orientations with an oriented cycle.
inline CoxeterAuto coxeter_automorphism(const ValuedQuiver& q) {
  auto seq = admissible_sink_sequence(q);
  detail::require(seq.has_value(), "orientation has an oriented cycle; no admissible sequence");
  return CoxeterAuto(q.cartan(), std::move(*seq));
}

/// T^power(f) by repeated substitution. Negative powers apply the same
/// involutions in reverse order.
inline RationalExpr apply_coxeter(const CoxeterAuto& t, RationalExpr f, long power) {
  const auto& seq = t.sequence();
  for (long p = 0; p < (power < 0 ? -power : power); ++p) {
    if (power > 0) {
      for (std::size_t k : seq) f = apply_ti(t.cartan(), k, f);
    } else {
      for (auto it = seq.rbegin(); it != seq.rend(); ++it) f = apply_ti(t.cartan(), *it, f);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Tuple form. An automorphism phi is stored as (phi(u_1), ..., phi(u_n)).
// Right composition phi -> phi o T_i only touches entry i:
//   phi(T_i(u_i)) = (prod_k phi(u_k)^{-a_ki} + 1) / phi(u_i),
// an exchange relation, so every entry stays a Laurent polynomial.

inline std::vector<LaurentPoly> identity_tuple(std::size_t n) {
  std::vector<LaurentPoly> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(LaurentPoly::variable(n, i));
  return out;
}

inline void compose_right(const CartanMatrix& a, std::vector<LaurentPoly>& images, std::size_t i) {
  const std::size_t n = a.size();
  LaurentPoly mono = LaurentPoly::one(n);
  for (std::size_t k = 0; k < n; ++k)
    if (k != i && a(k, i) < 0) mono *= images[k].pow(static_cast<unsigned>(-a(k, i)));
  auto q = exact_div(mono + LaurentPoly::one(n), images[i]);
  detail::ensure(q.has_value(), "Coxeter orbit entry is not a Laurent polynomial");
  images[i] = std::move(*q);
}

/// T^m -> T^{m+1} = T^m o T_{k_n} o ... o T_{k_1}.
inline void step_forward(const CoxeterAuto& t, std::vector<LaurentPoly>& images) {
  const auto& seq = t.sequence();
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) compose_right(t.cartan(), images, *it);
}

/// T^m -> T^{m-1} = T^m o T_{k_1} o ... o T_{k_n}.
inline void step_backward(const CoxeterAuto& t, std::vector<LaurentPoly>& images) {
  for (std::size_t k : t.sequence()) compose_right(t.cartan(), images, k);
}

/// T^m(u_k) for m_min <= m <= m_max and all k.
struct CoxeterOrbit {
  std::map<std::pair<long, std::size_t>, LaurentPoly> entries;
  bool complete = true;  // false when the term budget stopped the computation

  const LaurentPoly& at(long m, std::size_t k) const { return entries.at({m, k}); }
};

inline CoxeterOrbit orbit(const CoxeterAuto& t, long m_min, long m_max,
                          std::size_t max_terms = 20000000) {
  detail::require(m_min <= 0 && 0 <= m_max, "orbit range must contain 0");
  CoxeterOrbit out;
  std::size_t terms = 0;
  auto record = [&](long m, const std::vector<LaurentPoly>& row) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      terms += row[k].size();
      out.entries.emplace(std::make_pair(m, k), row[k]);
    }
    return terms <= max_terms;
  };
  auto row = identity_tuple(t.rank());
  record(0, row);
  for (long m = 1; m <= m_max; ++m) {
    step_forward(t, row);
    if (!record(m, row)) {
      out.complete = false;
      return out;
    }
  }
  row = identity_tuple(t.rank());
  for (long m = -1; m >= m_min; --m) {
    step_backward(t, row);
    if (!record(m, row)) {
      out.complete = false;
      return out;
    }
  }
  return out;
}

/// Smallest m >= 1 with T^m(u_k) = u_k for every k, searching m <= max_power
/// while the current tuple has at most max_terms terms. nullopt means a
/// budget ran out (expected for infinite type).
inline std::optional<long> order_of_automorphism(const CoxeterAuto& t, long max_power,
                                                 std::size_t max_terms = 20000000) {
  const auto id = identity_tuple(t.rank());
  auto row = id;
  for (long m = 1; m <= max_power; ++m) {
    step_forward(t, row);
    if (row == id) return m;
    std::size_t terms = 0;
    for (const auto& f : row) terms += f.size();
    if (terms > max_terms) break;
  }
  return std::nullopt;
}

inline std::optional<long> order_of_T(const ValuedQuiver& q, long max_power = 64,
                                      std::size_t max_terms = 20000000) {
  return order_of_automorphism(coxeter_automorphism(q), max_power, max_terms);
}

/// T_+ = prod_{i in plus} T_i and T_- = prod_{i in minus} T_i, where the
/// part containing the smallest vertex of each component is `plus` and the
/// plus vertices are the sinks of the bipartite orientation. No two
/// vertices inside a part are adjacent, so the factors inside each product
/// commute.
struct BipartiteFactors {
  CoxeterAuto plus;
  CoxeterAuto minus;
};

inline std::optional<BipartiteFactors> bipartite_factors(const CartanMatrix& a) {
  auto parts = bipartition(a);
  if (!parts) return std::nullopt;
  auto independent = [&](const std::vector<std::size_t>& part) {
    for (std::size_t i : part)
      for (std::size_t j : part)
        if (i != j && a(i, j) != 0) return false;
    return true;
  };
  detail::ensure(independent(parts->plus) && independent(parts->minus),
                 "bipartition has an edge inside a part");
  return BipartiteFactors{CoxeterAuto(a, parts->plus), CoxeterAuto(a, parts->minus)};
}

/// Composition g o f of two reflection products (f acts first).
inline CoxeterAuto compose(const CoxeterAuto& g, const CoxeterAuto& f) {
  detail::require(g.cartan() == f.cartan(), "composing automorphisms of different Cartan matrices");
  std::vector<std::size_t> seq = f.sequence();
  seq.insert(seq.end(), g.sequence().begin(), g.sequence().end());
  return CoxeterAuto(f.cartan(), std::move(seq));
}

}  // namespace clustercox
