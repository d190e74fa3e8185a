#pragma once

// Finite root systems in simple-root coordinates, almost positive roots,
// truncated reflections, the correspondence gamma on PI(Omega), BGP
// reflections at the level of dimension vectors, Coxeter numbers and the
// longest-element test.
//
// Pairing: <beta, alpha_i^vee> = sum_j c_j a_ij for beta = sum_j c_j alpha_j,
// so s_i(alpha_j) = alpha_j - a_ij alpha_i.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "clustercox/cartan.hpp"
#include "clustercox/errors.hpp"
#include "clustercox/matrix.hpp"
#include "clustercox/quiver.hpp"

namespace clustercox {

using RootVector = std::vector<std::int64_t>;

inline RootVector simple_root(std::size_t n, std::size_t i, std::int64_t sign = 1) {
  RootVector v(n, 0);
  v[i] = sign;
  return v;
}

inline bool is_nonnegative(const RootVector& v) {
  return std::all_of(v.begin(), v.end(), [](auto c) { return c >= 0; });
}

/// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
inline RootVector simple_reflection(const CartanMatrix& a, std::size_t i, RootVector beta) {
  std::int64_t pairing = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) pairing += beta[j] * a(i, j);
  beta[i] -= pairing;
  return beta;
}

/// Matrix of s_i acting on coordinate columns: column j is e_j - a_ij e_i.
inline SquareMatrix reflection_matrix(const CartanMatrix& a, std::size_t i) {
  SquareMatrix s = SquareMatrix::identity(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) s(i, j) -= a(i, j);
  return s;
}

/// The root system of a finite-type Cartan matrix.
class RootSystem {
 public:
  explicit RootSystem(CartanMatrix a) : a_(std::move(a)) {
    detail::require(is_finite_type(a_), "root systems are only generated for finite type");
    const std::size_t n = a_.size();
    std::queue<std::size_t> todo;
    for (std::size_t i = 0; i < n; ++i) todo.push(add(simple_root(n, i)));
    // every positive root is reached from a simple root through simple
    // reflections that raise the height
    while (!todo.empty()) {
      const RootVector beta = positive_[todo.front()];
      todo.pop();
      for (std::size_t i = 0; i < n; ++i) {
        RootVector g = simple_reflection(a_, i, beta);
        if (g == beta || !is_nonnegative(g) || index_.count(g)) continue;
        todo.push(add(std::move(g)));
      }
    }
    // closure check: s_i permutes Phi and sends alpha_i to -alpha_i
    for (std::size_t i = 0; i < n; ++i) {
      detail::ensure(simple_reflection(a_, i, simple_root(n, i)) == simple_root(n, i, -1),
                     "s_i(alpha_i) != -alpha_i");
      for (const auto& beta : positive_)
        detail::ensure(is_root(simple_reflection(a_, i, beta)), "root set is not closed under s_i");
    }
  }

  const CartanMatrix& cartan() const noexcept { return a_; }
  std::size_t rank() const noexcept { return a_.size(); }

  /// Positive roots in discovery order (simple roots first).
  const std::vector<RootVector>& positive_roots() const noexcept { return positive_; }

  std::optional<std::size_t> positive_index(const RootVector& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool is_positive_root(const RootVector& v) const { return index_.count(v) > 0; }

  bool is_root(const RootVector& v) const {
    if (is_positive_root(v)) return true;
    RootVector neg = v;
    for (auto& c : neg) c = -c;
    return is_positive_root(neg);
  }

  /// Phi_{>=-1}: -alpha_1, ..., -alpha_n followed by the positive roots.
  std::vector<RootVector> almost_positive_roots() const {
    std::vector<RootVector> out;
    for (std::size_t i = 0; i < rank(); ++i) out.push_back(simple_root(rank(), i, -1));
    out.insert(out.end(), positive_.begin(), positive_.end());
    return out;
  }

  bool is_almost_positive(const RootVector& v) const {
    if (is_positive_root(v)) return true;
    return negative_simple_index(v).has_value();
  }

  /// i when v = -alpha_i.
  std::optional<std::size_t> negative_simple_index(const RootVector& v) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v == simple_root(v.size(), i, -1)) return i;
    return std::nullopt;
  }

  /// Position of v in almost_positive_roots().
  std::size_t almost_positive_index(const RootVector& v) const {
    if (auto i = negative_simple_index(v)) return *i;
    auto p = positive_index(v);
    detail::require(p.has_value(), "not an almost positive root");
    return rank() + *p;
  }

  /// s_i as a permutation of Phi = Phi+ followed by -Phi+.
  std::vector<std::size_t> simple_reflection_permutation(std::size_t i) const {
    const std::size_t p = positive_.size();
    std::vector<std::size_t> perm(2 * p);
    for (std::size_t r = 0; r < 2 * p; ++r) {
      RootVector v = positive_[r % p];
      if (r >= p)
        for (auto& c : v) c = -c;
      RootVector w = simple_reflection(a_, i, v);
      if (auto q = positive_index(w)) {
        perm[r] = *q;
      } else {
        for (auto& c : w) c = -c;
        perm[r] = p + *positive_index(w);
      }
    }
    return perm;
  }

 private:
  std::size_t add(RootVector v) {
    index_.emplace(v, positive_.size());
    positive_.push_back(std::move(v));
    return positive_.size() - 1;
  }

  CartanMatrix a_;
  std::vector<RootVector> positive_;
  std::map<RootVector, std::size_t> index_;
};

inline RootSystem generate_root_system(const CartanMatrix& a) { return RootSystem(a); }

/// sigma_i(alpha) = alpha if alpha = -alpha_j with j != i, s_i(alpha) otherwise.
inline RootVector truncated_reflection(const RootSystem& rs, std::size_t i, const RootVector& alpha) {
  detail::require(i < rs.rank(), "reflection index out of range");
  detail::require(rs.is_almost_positive(alpha), "argument is not an almost positive root");
  if (auto j = rs.negative_simple_index(alpha); j && *j != i) return alpha;
  return simple_reflection(rs.cartan(), i, alpha);
}

/// sigma = sigma_{k_n} ... sigma_{k_1} along the pinned admissible sequence,
/// applied |power| times (reversed sequence for negative powers).
inline RootVector apply_sigma(const RootSystem& rs, const std::vector<std::size_t>& sequence,
                              RootVector alpha, long power) {
  for (long p = 0; p < (power < 0 ? -power : power); ++p) {
    if (power > 0) {
      for (std::size_t k : sequence) alpha = truncated_reflection(rs, k, alpha);
    } else {
      for (auto it = sequence.rbegin(); it != sequence.rend(); ++it)
        alpha = truncated_reflection(rs, *it, alpha);
    }
  }
  return alpha;
}

inline std::vector<std::size_t> pinned_sequence(const ValuedQuiver& q) {
  auto seq = admissible_sink_sequence(q);
  detail::require(seq.has_value(), "orientation has an oriented cycle; no admissible sequence");
  return *seq;
}

/// sigma as a permutation of the indices of rs.almost_positive_roots().
inline std::vector<std::size_t> coxeter_sigma(const RootSystem& rs, const ValuedQuiver& q) {
  detail::require(rs.cartan() == q.cartan(), "root system and quiver have different Cartan matrices");
  const auto seq = pinned_sequence(q);
  const auto phi = rs.almost_positive_roots();
  std::vector<std::size_t> perm(phi.size());
  std::vector<bool> hit(phi.size(), false);
  for (std::size_t t = 0; t < phi.size(); ++t) {
    perm[t] = rs.almost_positive_index(apply_sigma(rs, seq, phi[t], 1));
    detail::ensure(!hit[perm[t]], "sigma is not a bijection of the almost positive roots");
    hit[perm[t]] = true;
  }
  return perm;
}

/// LCM of the cycle lengths.
inline long permutation_order(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  long order = 1;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    long len = 0;
    for (std::size_t t = s; !seen[t]; t = perm[t]) {
      seen[t] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

inline long order_of_sigma(const RootSystem& rs, const ValuedQuiver& q) {
  return permutation_order(coxeter_sigma(rs, q));
}

/// The object C^m(P_k[1]) of PI(Omega).
struct PIObject {
  long m = 0;
  std::size_t k = 0;
  friend bool operator==(const PIObject&, const PIObject&) = default;
  friend auto operator<=>(const PIObject&, const PIObject&) = default;
};

/// gamma_Omega(C^m P_k[1]) = sigma^m(-alpha_k).
inline RootVector gamma(const RootSystem& rs, const ValuedQuiver& q, const PIObject& x) {
  detail::require(x.k < rs.rank(), "vertex out of range");
  return apply_sigma(rs, pinned_sequence(q), simple_root(rs.rank(), x.k, -1), x.m);
}

/// BGP reflection at a sink k on dimension vectors:
/// alpha_k -> -alpha_k, -alpha_k -> alpha_k, -alpha_j -> -alpha_j, beta -> s_k(beta).
inline RootVector bgp_reflect(const RootSystem& rs, const ValuedQuiver& q, std::size_t k,
                              const RootVector& x) {
  detail::require(k < q.size() && is_sink(q, k), "BGP reflection needs a sink");
  detail::require(rs.is_almost_positive(x), "argument is not an almost positive root");
  const std::size_t n = rs.rank();
  if (x == simple_root(n, k)) return simple_root(n, k, -1);
  if (x == simple_root(n, k, -1)) return simple_root(n, k);
  if (rs.negative_simple_index(x)) return x;
  return simple_reflection(rs.cartan(), k, x);
}

/// The reflection functor at a sink k on PI(Omega) -> PI(s_k Omega):
/// P_k[1] goes to the simple at k, which is C P_k[1] for s_k Omega; objects
/// at the other vertices keep their coordinates.
inline PIObject bgp_reflect(const ValuedQuiver& q, std::size_t k, const PIObject& x) {
  detail::require(k < q.size() && is_sink(q, k), "BGP reflection needs a sink");
  return x.k == k ? PIObject{x.m + 1, x.k} : x;
}

/// Multiplicative order of the Coxeter element s_1 s_2 ... s_n on the root
/// lattice.
inline long coxeter_element_order(const CartanMatrix& a, long max_order = 1000) {
  SquareMatrix c = SquareMatrix::identity(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c = c * reflection_matrix(a, i);
  SquareMatrix p = c;
  for (long m = 1; m <= max_order; ++m) {
    if (p == SquareMatrix::identity(a.size())) return m;
    p = p * c;
  }
  throw StructuralError("Coxeter element has no finite order within the search bound");
}

/// h = 2 |Phi+| / n for an irreducible root system; the order of the
/// Coxeter element is computed as well and must agree.
inline long coxeter_number(const RootSystem& rs) {
  detail::require(connected_components(rs.cartan().matrix()).size() == 1,
                  "Coxeter number needs an irreducible root system");
  const long n = static_cast<long>(rs.rank());
  const long twice = 2 * static_cast<long>(rs.positive_roots().size());
  detail::ensure(twice % n == 0, "2|Phi+| is not divisible by the rank");
  const long h = twice / n;
  detail::ensure(h == coxeter_element_order(rs.cartan()),
                 "Coxeter number disagrees with the order of the Coxeter element");
  return h;
}

/// w_0 by descent: starting from w = 1, while some w(alpha_i) is positive
/// (smallest such i), replace w by w s_i. The result sends every simple root
/// to a negative root.
inline SquareMatrix longest_element(const CartanMatrix& a) {
  const std::size_t n = a.size();
  SquareMatrix w = SquareMatrix::identity(n);
  std::vector<SquareMatrix> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(reflection_matrix(a, i));
  for (;;) {
    std::optional<std::size_t> ascent;
    for (std::size_t i = 0; i < n && !ascent; ++i) {
      bool positive = true;
      for (std::size_t r = 0; r < n && positive; ++r) positive = w(r, i) >= 0;
      if (positive) ascent = i;
    }
    if (!ascent) return w;
    w = w * s[*ascent];
  }
}

inline bool longest_element_is_minus_id(const RootSystem& rs) {
  return longest_element(rs.cartan()) == -SquareMatrix::identity(rs.rank());
}

/// Per irreducible component: h, whether w_0 = -1, and the predicted order
/// (h+2)/2 or h+2.
struct ComponentOrder {
  std::vector<std::size_t> vertices;
  long coxeter_number = 0;
  bool w0_is_minus_one = false;
  long predicted_order = 0;
};

inline std::vector<ComponentOrder> component_orders(const CartanMatrix& a) {
  std::vector<ComponentOrder> out;
  for (const auto& comp : connected_components(a.matrix())) {
    RootSystem rs(CartanMatrix(a.matrix().principal(comp)));
    ComponentOrder c;
    c.vertices = comp;
    c.coxeter_number = coxeter_number(rs);
    c.w0_is_minus_one = longest_element_is_minus_id(rs);
    c.predicted_order = c.w0_is_minus_one ? (c.coxeter_number + 2) / 2 : c.coxeter_number + 2;
    out.push_back(std::move(c));
  }
  return out;
}

/// LCM over components of the predicted orders.
inline long predicted_order(const CartanMatrix& a) {
  long out = 1;
  for (const auto& c : component_orders(a)) out = std::lcm(out, c.predicted_order);
  return out;
}

inline std::string root_string(const RootVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace clustercox
