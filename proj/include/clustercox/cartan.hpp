#pragma once

// Generalized Cartan matrices, skew-symmetrizable exchange matrices,
// symmetrizers, and finite-type recognition with Dynkin labels.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "clustercox/errors.hpp"
#include "clustercox/matrix.hpp"

namespace clustercox {

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Positive integer diagonal d with d_i a_ij = d_j a_ji; each connected
/// component is scaled to the smallest integer solution.
struct Symmetrizer {
  std::vector<std::int64_t> d;
  friend bool operator==(const Symmetrizer&, const Symmetrizer&) = default;
};

/// Connected components of the graph {i - j : a_ij != 0 or a_ji != 0},
/// each sorted, listed in order of their smallest vertex.
inline std::vector<std::vector<std::size_t>> connected_components(const SquareMatrix& a) {
  const std::size_t n = a.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::queue<std::size_t> q;
    q.push(s);
    comp[s] = static_cast<int>(out.size() - 1);
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      out.back().push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && comp[j] < 0 && (a(i, j) != 0 || a(j, i) != 0)) {
          comp[j] = comp[s];
          q.push(j);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

namespace detail {

inline std::int64_t to_i64(const BigInt& v) { return static_cast<std::int64_t>(v); }

// Ratios are propagated along a BFS tree of each component and then checked
// on every pair. `a` must satisfy a_ij = 0 <=> a_ji = 0 and have a_ij, a_ji
// of the same strict sign off the diagonal.
inline std::optional<Symmetrizer> symmetrize(const SquareMatrix& a) {
  const std::size_t n = a.size();
  std::vector<BigRational> d(n, BigRational(0));
  for (const auto& comp : connected_components(a)) {
    std::queue<std::size_t> q;
    d[comp.front()] = 1;
    q.push(comp.front());
    std::vector<bool> seen(n, false);
    seen[comp.front()] = true;
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || seen[j] || a(i, j) == 0) continue;
        if (a(j, i) == 0) return std::nullopt;
        BigRational dj = d[i] * BigRational(a(i, j)) / BigRational(a(j, i));
        if (dj <= 0) return std::nullopt;
        d[j] = dj;
        seen[j] = true;
        q.push(j);
      }
    }
    BigInt lcm_den = 1;
    for (std::size_t i : comp) {
      lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(d[i]));
    }
    BigInt g = 0;
    for (std::size_t i : comp) {
      d[i] *= lcm_den;
      g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(d[i]));
    }
    for (std::size_t i : comp) d[i] /= g;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i] * a(i, j) != d[j] * a(j, i)) return std::nullopt;
  Symmetrizer s;
  s.d.reserve(n);
  for (const auto& v : d) s.d.push_back(to_i64(boost::multiprecision::numerator(v)));
  return s;
}

inline SquareMatrix absolute(const SquareMatrix& m) {
  SquareMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = m(i, j) < 0 ? -m(i, j) : m(i, j);
  return r;
}

}  // namespace detail

/// Generalized Cartan matrix: a_ii = 2, a_ij <= 0 off the diagonal,
/// a_ij = 0 <=> a_ji = 0, and symmetrizable (checked here).
class CartanMatrix {
 public:
  explicit CartanMatrix(SquareMatrix a) : a_(std::move(a)) {
    const std::size_t n = a_.size();
    detail::require(n > 0, "Cartan matrix must be non-empty");
    for (std::size_t i = 0; i < n; ++i) {
      detail::require(a_(i, i) == 2, "Cartan matrix diagonal entries must be 2");
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        detail::require(a_(i, j) <= 0, "Cartan matrix off-diagonal entries must be <= 0");
        detail::require((a_(i, j) == 0) == (a_(j, i) == 0),
                        "Cartan matrix must satisfy a_ij = 0 <=> a_ji = 0");
      }
    }
    auto s = detail::symmetrize(a_);
    detail::require(s.has_value(), "Cartan matrix is not symmetrizable");
    d_ = std::move(*s);
  }
  CartanMatrix(std::initializer_list<std::initializer_list<SquareMatrix::value_type>> rows)
      : CartanMatrix(SquareMatrix(rows)) {}

  std::size_t size() const noexcept { return a_.size(); }
  SquareMatrix::value_type operator()(std::size_t i, std::size_t j) const { return a_(i, j); }
  const SquareMatrix& matrix() const noexcept { return a_; }
  const Symmetrizer& symmetrizer() const noexcept { return d_; }

  /// D*A, which is symmetric.
  SquareMatrix symmetrized() const {
    SquareMatrix s(size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) s(i, j) = d_.d[i] * a_(i, j);
    return s;
  }

  friend bool operator==(const CartanMatrix& x, const CartanMatrix& y) { return x.a_ == y.a_; }

 private:
  SquareMatrix a_;
  Symmetrizer d_;
};

/// Minimal symmetrizer of a generalized Cartan matrix shape, or nullopt when
/// some cycle of the Coxeter graph yields inconsistent ratios.
inline std::optional<Symmetrizer> symmetrizer(const SquareMatrix& a) {
  return detail::symmetrize(a);
}
inline Symmetrizer symmetrizer(const CartanMatrix& a) { return a.symmetrizer(); }

/// Skew-symmetrizable integer matrix: b_ii = 0 and d_i b_ij = -d_j b_ji for
/// some positive integer diagonal d.
class ExchangeMatrix {
 public:
  explicit ExchangeMatrix(SquareMatrix b) : b_(std::move(b)) {
    const std::size_t n = b_.size();
    detail::require(n > 0, "exchange matrix must be non-empty");
    for (std::size_t i = 0; i < n; ++i) {
      detail::require(b_(i, i) == 0, "exchange matrix diagonal must be zero");
      for (std::size_t j = 0; j < i; ++j) {
        const bool opposite = (b_(i, j) == 0 && b_(j, i) == 0) ||
                              (b_(i, j) > 0 && b_(j, i) < 0) || (b_(i, j) < 0 && b_(j, i) > 0);
        detail::require(opposite, "exchange matrix is not sign-skew-symmetric");
      }
    }
    auto s = detail::symmetrize(detail::absolute(b_));
    detail::require(s.has_value(), "exchange matrix is not skew-symmetrizable");
    d_ = std::move(*s);
  }
  ExchangeMatrix(std::initializer_list<std::initializer_list<SquareMatrix::value_type>> rows)
      : ExchangeMatrix(SquareMatrix(rows)) {}

  /// Construction with a known skew-symmetrizer (e.g. inherited through
  /// mutation). Only the identity d_i b_ij = -d_j b_ji is re-checked.
  ExchangeMatrix(SquareMatrix b, Symmetrizer d) : b_(std::move(b)), d_(std::move(d)) {
    detail::require(d_.d.size() == b_.size(), "symmetrizer length differs from matrix size");
    for (std::size_t i = 0; i < b_.size(); ++i)
      for (std::size_t j = 0; j < b_.size(); ++j)
        detail::require(d_.d[i] * b_(i, j) == -d_.d[j] * b_(j, i),
                        "exchange matrix is not skew-symmetrized by the given diagonal");
  }

  std::size_t size() const noexcept { return b_.size(); }
  SquareMatrix::value_type operator()(std::size_t i, std::size_t j) const { return b_(i, j); }
  const SquareMatrix& matrix() const noexcept { return b_; }
  const Symmetrizer& symmetrizer() const noexcept { return d_; }

  ExchangeMatrix operator-() const { return ExchangeMatrix(-b_, d_); }

  friend bool operator==(const ExchangeMatrix& x, const ExchangeMatrix& y) { return x.b_ == y.b_; }

 private:
  SquareMatrix b_;
  Symmetrizer d_;
};

/// A(B): a_ii = 2, a_ij = -|b_ij|.
inline CartanMatrix cartan_counterpart(const ExchangeMatrix& b) {
  SquareMatrix a(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      a(i, j) = i == j ? 2 : -(b(i, j) < 0 ? -b(i, j) : b(i, j));
  return CartanMatrix(std::move(a));
}

// ---------------------------------------------------------------------------
// Exact linear algebra for definiteness tests.

inline BigRational determinant(const SquareMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  BigRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      BigRational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// det of the leading k x k block, k = 1..n.
inline std::vector<BigRational> leading_principal_minors(const SquareMatrix& m) {
  std::vector<BigRational> out;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < m.size(); ++k) {
    idx.push_back(k);
    out.push_back(determinant(m.principal(idx)));
  }
  return out;
}

inline bool is_positive_definite(const SquareMatrix& symmetric) {
  for (const auto& minor : leading_principal_minors(symmetric))
    if (minor <= 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Dynkin catalog. Conventions: vertices 1..n along the path; in B_n the last
// vertex is short (a_{n,n-1} = -2), C_n is the transpose, D_n and E_n attach
// the branch as in Bourbaki, F4 has a_32 = -2, G2 has a_12 = -3.

inline CartanMatrix cartan_of_type(char family, std::size_t rank) {
  const std::size_t n = rank;
  SquareMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j, std::int64_t aij = -1, std::int64_t aji = -1) {
    a(i - 1, j - 1) = aij;
    a(j - 1, i - 1) = aji;
  };
  auto path = [&](std::size_t last) {
    for (std::size_t i = 1; i < last; ++i) link(i, i + 1);
  };
  switch (family) {
    case 'A':
      detail::require(n >= 1, "A_n needs n >= 1");
      path(n);
      break;
    case 'B':
      detail::require(n >= 2, "B_n needs n >= 2");
      path(n);
      link(n - 1, n, -1, -2);
      break;
    case 'C':
      detail::require(n >= 2, "C_n needs n >= 2");
      path(n);
      link(n - 1, n, -2, -1);
      break;
    case 'D':
      detail::require(n >= 4, "D_n needs n >= 4");
      path(n - 1);
      link(n - 2, n);
      break;
    case 'E':
      detail::require(n >= 6 && n <= 8, "E_n needs 6 <= n <= 8");
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (std::size_t i = 4; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      detail::require(n == 4, "F_n only exists for n = 4");
      link(1, 2);
      link(2, 3, -1, -2);
      link(3, 4);
      break;
    case 'G':
      detail::require(n == 2, "G_n only exists for n = 2");
      link(1, 2, -3, -1);
      break;
    default:
      throw StructuralError(std::string("unknown Dynkin family '") + family + "'");
  }
  return CartanMatrix(std::move(a));
}

namespace detail {

// Searches for p with a(p[i], p[j]) == pattern(i, j) for all i, j. Pattern
// vertices are visited in BFS order so every new vertex has a placed
// neighbour, which prunes trees almost immediately.
inline bool valued_graph_isomorphic(const SquareMatrix& a, const SquareMatrix& pattern) {
  const std::size_t n = a.size();
  if (pattern.size() != n) return false;
  std::vector<std::size_t> order;
  for (const auto& comp : connected_components(pattern)) {
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    q.push(comp.front());
    seen[comp.front()] = true;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      order.push_back(v);
      for (std::size_t w = 0; w < n; ++w)
        if (!seen[w] && pattern(v, w) != 0) {
          seen[w] = true;
          q.push(w);
        }
    }
  }
  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t t) -> bool {
    if (t == n) return true;
    const std::size_t v = order[t];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s) {
        const std::size_t w = order[s];
        ok = a(cand, image[w]) == pattern(v, w) && a(image[w], cand) == pattern(w, v);
      }
      if (!ok) continue;
      used[cand] = true;
      image[v] = cand;
      if (place(t + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  return place(0);
}

}  // namespace detail

struct DynkinComponent {
  char family = '?';
  std::size_t rank = 0;
  std::vector<std::size_t> vertices;  // 0-based, sorted
  std::string label() const { return std::string(1, family) + std::to_string(rank); }
};

struct TypeClassification {
  bool finite = false;
  /// Infinite, and every infinite component is positive semidefinite of
  /// corank one with all proper principal blocks definite.
  bool affine = false;
  std::vector<DynkinComponent> components;  // filled only when finite

  std::string label() const {
    if (!finite) return affine ? "infinite type (affine)" : "infinite type (indefinite)";
    std::string out;
    for (const auto& c : components) {
      if (!out.empty()) out += "+";
      out += c.label();
    }
    return out;
  }
};

/// Dynkin label of a finite connected Cartan matrix, matched against the
/// catalog up to vertex relabelling.
inline std::optional<DynkinComponent> match_dynkin(const SquareMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::pair<char, std::size_t>> candidates = {{'A', n}};
  if (n >= 2) candidates.push_back({'B', n});
  if (n >= 3) candidates.push_back({'C', n});
  if (n >= 4) candidates.push_back({'D', n});
  if (n >= 6 && n <= 8) candidates.push_back({'E', n});
  if (n == 4) candidates.push_back({'F', n});
  if (n == 2) candidates.push_back({'G', n});
  for (auto [fam, r] : candidates) {
    if (detail::valued_graph_isomorphic(a, cartan_of_type(fam, r).matrix())) {
      return DynkinComponent{fam, r, {}};
    }
  }
  return std::nullopt;
}

inline TypeClassification classify(const CartanMatrix& a) {
  TypeClassification out;
  const SquareMatrix sym = a.symmetrized();
  bool all_finite = true;
  bool infinite_all_affine = true;
  for (const auto& comp : connected_components(a.matrix())) {
    const SquareMatrix block = sym.principal(comp);
    if (is_positive_definite(block)) {
      auto d = match_dynkin(a.matrix().principal(comp));
      detail::ensure(d.has_value(), "positive definite Cartan block without a Dynkin match");
      d->vertices = comp;
      out.components.push_back(std::move(*d));
      continue;
    }
    all_finite = false;
    bool affine = determinant(block) == 0;
    for (std::size_t drop = 0; affine && drop < comp.size(); ++drop) {
      std::vector<std::size_t> rest;
      for (std::size_t t = 0; t < comp.size(); ++t)
        if (t != drop) rest.push_back(t);
      affine = rest.empty() || is_positive_definite(block.principal(rest));
    }
    infinite_all_affine = infinite_all_affine && affine;
  }
  out.finite = all_finite;
  out.affine = !all_finite && infinite_all_affine;
  if (!out.finite) out.components.clear();
  return out;
}

inline bool is_finite_type(const CartanMatrix& a) { return classify(a).finite; }

}  // namespace clustercox
