#pragma once

// Self-checks relating the four layers: cluster variables from mutation,
// reflection/Coxeter automorphisms, and the root-system model of PI(Omega).
// Each suite returns one record per assertion.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "clustercox/catalog.hpp"
#include "clustercox/coxeter.hpp"
#include "clustercox/exchange_graph.hpp"
#include "clustercox/roots.hpp"
#include "clustercox/seed.hpp"

namespace clustercox {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::size_t max_rank = 3;
  long orbit_bound = 5;  // |m| range for the infinite-type orbit check
  ExploreLimits limits{};
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

// ---------------------------------------------------------------------------
// Orbit entries of an infinite type located in the exchange graph.

struct OrbitCoverEntry {
  long m = 0;
  std::size_t k = 0;
  std::string value;
  std::optional<std::size_t> depth;  // BFS level where the variable first appears
  std::size_t depth_limit = 0;       // 2 |m| n
};

struct OrbitCover {
  std::vector<OrbitCoverEntry> entries;
  bool all_laurent = true;
  std::string failure;            // set when an orbit entry did not resolve
  std::size_t distinct = 0;       // number of distinct values among entries
  std::size_t explored_depth = 0;
  bool budget_exceeded = false;

  bool all_found_within_limit() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const auto& e) { return e.depth && *e.depth <= e.depth_limit; });
  }
};

/// T^m(u_k) for |m| <= bound, then a level-by-level BFS of the exchange graph
/// of B_Omega until every entry is found or the depth passes 2 bound n.
inline OrbitCover orbit_cover(const ValuedQuiver& q, long bound, ExploreLimits limits = {}) {
  OrbitCover out;
  const std::size_t n = q.size();
  CoxeterOrbit orb;
  try {
    orb = orbit(coxeter_automorphism(q), -bound, bound, limits.max_terms);
  } catch (const InvariantViolation& e) {
    out.all_laurent = false;
    out.failure = e.what();
    return out;
  }
  out.budget_exceeded = !orb.complete;
  std::map<std::string, std::vector<std::size_t>> pending;
  for (const auto& [key, f] : orb.entries) {
    OrbitCoverEntry e;
    e.m = key.first;
    e.k = key.second;
    e.value = canonical_string(f);
    e.depth_limit = 2 * static_cast<std::size_t>(key.first < 0 ? -key.first : key.first) * n;
    pending[e.value].push_back(out.entries.size());
    out.entries.push_back(std::move(e));
  }
  out.distinct = pending.size();

  const std::size_t max_depth = 2 * static_cast<std::size_t>(bound) * n;
  limits.max_depth = std::min(limits.max_depth, max_depth);
  ExchangeGraphExplorer ex(matrix_of_orientation(q), limits);
  std::size_t scanned = 0;
  auto scan = [&] {
    const auto& keys = ex.result().keys();
    for (; scanned < keys.size(); ++scanned) {
      auto it = pending.find(keys[scanned]);
      if (it == pending.end()) continue;
      for (std::size_t idx : it->second) out.entries[idx].depth = ex.depth();
      pending.erase(it);
    }
  };
  scan();
  while (!pending.empty() && ex.step()) scan();
  scan();
  out.explored_depth = ex.depth();
  out.budget_exceeded = out.budget_exceeded || (ex.budget_exceeded() && ex.budget_reason() != "max_depth");
  return out;
}

// ---------------------------------------------------------------------------

namespace detail {

class Recorder {
 public:
  Recorder(VerifyReport& r, std::string suite) : report_(r), suite_(std::move(suite)) {}
  bool operator()(const std::string& name, bool ok, const std::string& detail = {}) {
    report_.checks.push_back({suite_, name, ok, detail});
    return ok;
  }

 private:
  VerifyReport& report_;
  std::string suite_;
};

inline std::string orientation_label(const ValuedQuiver& q) {
  std::string s;
  for (auto [from, to] : q.arrows()) {
    if (!s.empty()) s += ",";
    s += std::to_string(from + 1) + "->" + std::to_string(to + 1);
  }
  return s.empty() ? "no arrows" : s;
}

inline std::set<std::string> keys_of_orbit(const CoxeterOrbit& o) {
  std::set<std::string> out;
  for (const auto& [key, f] : o.entries) out.insert(canonical_string(f));
  return out;
}

inline LaurentPoly apply_t(const CoxeterAuto& t, const LaurentPoly& f, long power = 1) {
  return apply_coxeter(t, RationalExpr(f), power).as_laurent();
}

}  // namespace detail

/// order of T (symbolic) = order of sigma (permutation) = formula from h and
/// the w_0 test, for irreducible finite types.
inline void verify_coxeter_order(VerifyReport& report, const VerifyOptions& opt) {
  detail::Recorder check(report, "coxeter-order");
  for (const auto& t : irreducible_finite_types(opt.max_rank)) {
    RootSystem rs(t.cartan);
    const auto comp = component_orders(t.cartan).front();
    const long formula = comp.predicted_order;
    for (const auto& q : {default_orientation(t.cartan), *bipartite_orientation(t.cartan)}) {
      const long sigma = order_of_sigma(rs, q);
      const auto symbolic = order_of_T(q, 4 * formula + 4);
      check(t.name + " [" + detail::orientation_label(q) + "]",
            symbolic && *symbolic == sigma && sigma == formula,
            "T: " + (symbolic ? std::to_string(*symbolic) : std::string("none")) +
                ", sigma: " + std::to_string(sigma) + ", h = " + std::to_string(comp.coxeter_number) +
                ", w0 = -1: " + (comp.w0_is_minus_one ? "yes" : "no") + ", formula: " + std::to_string(formula));
    }
  }
}

/// sigma_k o gamma_Omega = gamma_{s_k Omega} o R_k on two periods, and the
/// root-level BGP table agrees with sigma_k.
inline void verify_reflection_diagram(VerifyReport& report, const VerifyOptions& opt) {
  detail::Recorder check(report, "reflection-diagram");
  for (const auto& t : finite_types(opt.max_rank)) {
    RootSystem rs(t.cartan);
    std::size_t count = 0, bad = 0;
    for (const auto& q : acyclic_orientations(t.cartan)) {
      const long p = order_of_sigma(rs, q);
      for (std::size_t k : sinks(q)) {
        const ValuedQuiver q2 = reflect_orientation(q, k);
        for (long m = -p; m <= p; ++m)
          for (std::size_t j = 0; j < q.size(); ++j) {
            const PIObject x{m, j};
            const RootVector g = gamma(rs, q, x);
            const RootVector lhs = truncated_reflection(rs, k, g);
            ++count;
            if (lhs != gamma(rs, q2, bgp_reflect(q, k, x)) || bgp_reflect(rs, q, k, g) != lhs) ++bad;
          }
      }
    }
    check(t.name, bad == 0, std::to_string(count) + " objects, " + std::to_string(bad) + " mismatches");
  }
}

/// T_k carries chi_Omega onto chi_{s_k Omega} (clusters to clusters) and
/// T_k T_Omega^m(u_j) = T_{s_k Omega}^{m'}(u_{j'}) with (m', j') = R_k(m, j).
inline void verify_reflection_transport(VerifyReport& report, const VerifyOptions& opt) {
  detail::Recorder check(report, "reflection-transport");
  for (const auto& t : finite_types(opt.max_rank)) {
    RootSystem rs(t.cartan);
    std::size_t sets_bad = 0, orbit_bad = 0, pairs = 0, objects = 0;
    std::map<std::string, Enumeration> cache;
    auto chi = [&](const ValuedQuiver& q) -> const Enumeration& {
      const std::string key = detail::orientation_label(q);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, enumerate(matrix_of_orientation(q), opt.limits)).first;
      return it->second;
    };
    for (const auto& q : acyclic_orientations(t.cartan)) {
      const long p = order_of_sigma(rs, q);
      const auto orb = orbit(coxeter_automorphism(q), -p, p + 1);
      for (std::size_t k : sinks(q)) {
        const ValuedQuiver q2 = reflect_orientation(q, k);
        const Enumeration& e = chi(q);
        const Enumeration& e2 = chi(q2);
        ++pairs;
        std::vector<std::string> image;
        for (const auto& x : e.set.variables())
          image.push_back(canonical_string(apply_ti(t.cartan, k, RationalExpr(x)).as_laurent()));
        std::set<std::vector<std::string>> clusters;
        for (const auto& c : e.set.clusters()) {
          std::vector<std::string> s;
          for (std::size_t i : c) s.push_back(image[i]);
          std::sort(s.begin(), s.end());
          clusters.insert(std::move(s));
        }
        if (!e.complete || !e2.complete || std::set<std::string>(image.begin(), image.end()) != e2.set.key_set() ||
            clusters != e2.set.cluster_key_set())
          ++sets_bad;
        const auto orb2 = orbit(coxeter_automorphism(q2), -p, p + 1);
        for (long m = -p; m <= p; ++m)
          for (std::size_t j = 0; j < q.size(); ++j) {
            const PIObject y = bgp_reflect(q, k, PIObject{m, j});
            ++objects;
            if (apply_ti(t.cartan, k, RationalExpr(orb.at(m, j))) != RationalExpr(orb2.at(y.m, y.k))) ++orbit_bad;
          }
      }
    }
    check(t.name + " cluster sets", sets_bad == 0,
          std::to_string(pairs) + " (orientation, sink) pairs, " + std::to_string(sets_bad) + " mismatches");
    check(t.name + " orbits", orbit_bad == 0,
          std::to_string(objects) + " objects, " + std::to_string(orbit_bad) + " mismatches");
  }
}

/// Denominator vectors of the non-initial cluster variables are exactly the
/// positive roots, each once; d(T^m(u_k)) = gamma(C^m P_k[1]); T o P = P o sigma.
/// Numerators have nonzero constant term for bipartite seeds (a linear A3
/// seed already has (u1 + u3)/u2).
inline void verify_denominators(VerifyReport& report, const VerifyOptions& opt) {
  detail::Recorder check(report, "denominators");
  for (const auto& t : finite_types(opt.max_rank)) {
    RootSystem rs(t.cartan);
    const std::size_t n = t.cartan.size();
    std::size_t bij_bad = 0, const_bad = 0, gamma_bad = 0, square_bad = 0, count = 0;
    const auto bip = bipartite_orientation(t.cartan), dual = bipartite_orientation(t.cartan, true);
    for (const auto& q : acyclic_orientations(t.cartan)) {
      const bool bipartite = q == *bip || q == *dual;
      const auto e = enumerate(matrix_of_orientation(q), opt.limits);
      std::map<RootVector, LaurentPoly> p;
      std::multiset<RootVector> dens;
      for (const auto& x : e.set.variables()) {
        const RootVector d = denominator_vector(x);
        p.emplace(d, x);
        if (!is_nonnegative(d)) continue;  // initial variables
        dens.insert(d);
        if (bipartite && fraction_form(x).numerator.coefficient(ExponentVector(n)) == 0) ++const_bad;
      }
      const auto& pos = rs.positive_roots();
      if (!e.complete || dens != std::multiset<RootVector>(pos.begin(), pos.end())) ++bij_bad;

      const auto seq = *admissible_sink_sequence(q);
      const auto tq = coxeter_automorphism(q);
      const long period = order_of_sigma(rs, q);
      const auto orb = orbit(tq, -period, period);
      for (long m = -period; m <= period; ++m)
        for (std::size_t k = 0; k < n; ++k) {
          ++count;
          if (denominator_vector(orb.at(m, k)) != gamma(rs, q, {m, k})) ++gamma_bad;
        }
      for (const auto& alpha : rs.almost_positive_roots()) {
        auto src = p.find(alpha), dst = p.find(apply_sigma(rs, seq, alpha, 1));
        if (src == p.end() || dst == p.end() || detail::apply_t(tq, src->second) != dst->second) ++square_bad;
      }
    }
    check(t.name + " denominators = positive roots", bij_bad == 0, std::to_string(bij_bad) + " orientations differ");
    check(t.name + " bipartite numerators have a constant term", const_bad == 0, std::to_string(const_bad) + " without");
    check(t.name + " d(T^m u_k) = gamma", gamma_bad == 0,
          std::to_string(count) + " entries, " + std::to_string(gamma_bad) + " mismatches");
    check(t.name + " T P = P sigma", square_bad == 0, std::to_string(square_bad) + " mismatches");
  }
}

/// One period of the T-orbit of the initial cluster is the set of all
/// cluster variables; the orbit is periodic with that period.
inline void verify_orbit_cluster(VerifyReport& report, const VerifyOptions& opt) {
  detail::Recorder check(report, "orbit-cluster");
  for (const auto& t : finite_types(opt.max_rank)) {
    std::size_t bad = 0, total = 0;
    for (const auto& q : acyclic_orientations(t.cartan)) {
      ++total;
      const auto tq = coxeter_automorphism(q);
      const auto ord = order_of_automorphism(tq, 4 * predicted_order(t.cartan) + 4);
      const auto e = enumerate(matrix_of_orientation(q), opt.limits);
      if (!ord || !e.complete) {
        ++bad;
        continue;
      }
      const auto orb = orbit(tq, 0, 2 * *ord);
      bool periodic = true;
      for (long m = 0; m <= *ord; ++m)
        for (std::size_t k = 0; k < q.size(); ++k) periodic = periodic && orb.at(m, k) == orb.at(m + *ord, k);
      if (!periodic || detail::keys_of_orbit(orbit(tq, 0, *ord - 1)) != e.set.key_set()) ++bad;
    }
    check(t.name, bad == 0, std::to_string(total) + " orientations, " + std::to_string(bad) + " mismatches");
  }
}

/// Bipartite orientations: chi_{Omega_0} = chi_{Omega_0'}, T_+ and T_-
/// permute it, and T_- T_+ / T_+ T_- are the two Coxeter automorphisms.
inline void verify_bipartite(VerifyReport& report, const VerifyOptions& opt) {
  detail::Recorder check(report, "bipartite");
  for (const auto& t : finite_types(opt.max_rank)) {
    const auto f = bipartite_factors(t.cartan);
    if (!check(t.name + " bipartite", f.has_value())) continue;
    const auto q0 = *bipartite_orientation(t.cartan);
    const auto q1 = *bipartite_orientation(t.cartan, true);
    const auto e0 = enumerate(matrix_of_orientation(q0), opt.limits);
    const auto e1 = enumerate(matrix_of_orientation(q1), opt.limits);
    check(t.name + " same cluster variables", e0.complete && e1.complete && e0.set.key_set() == e1.set.key_set(),
          std::to_string(e0.set.variables().size()) + " vs " + std::to_string(e1.set.variables().size()));
    for (const auto& [label, factor] : {std::pair{"T+", &f->plus}, std::pair{"T-", &f->minus}}) {
      std::set<std::string> img;
      for (const auto& x : e0.set.variables()) img.insert(canonical_string(detail::apply_t(*factor, x)));
      check(t.name + " " + label + " permutes the variables", img == e0.set.key_set());
    }
    const auto t0 = coxeter_automorphism(q0), t1 = coxeter_automorphism(q1);
    const auto mp = compose(f->minus, f->plus), pm = compose(f->plus, f->minus);
    bool ok = true;
    for (std::size_t k = 0; k < t.cartan.size(); ++k) {
      const auto u = LaurentPoly::variable(t.cartan.size(), k);
      ok = ok && detail::apply_t(mp, u) == detail::apply_t(t0, u) && detail::apply_t(pm, u) == detail::apply_t(t1, u);
    }
    check(t.name + " T-T+ and T+T- are the bipartite Coxeter automorphisms", ok);
  }
}

/// Infinite types: every T^m(u_k), |m| <= bound, is Laurent and shows up in
/// the exchange graph within 2|m|n mutations. Distinctness is reported only.
inline void verify_orbit_cover(VerifyReport& report, const VerifyOptions& opt) {
  detail::Recorder check(report, "orbit-cover");
  const std::vector<std::pair<std::string, ValuedQuiver>> cases = {
      {"affine-A1", default_orientation(builtin_cartan("affine-A1"))},
      {"affine-A2", default_orientation(builtin_cartan("affine-A2"))},
  };
  for (const auto& [name, q] : cases) {
    const auto c = orbit_cover(q, opt.orbit_bound, opt.limits);
    std::size_t found = 0;
    for (const auto& e : c.entries) found += e.depth && *e.depth <= e.depth_limit;
    check(name + " orbit entries are Laurent", c.all_laurent, c.failure);
    check(name + " orbit entries are cluster variables", c.all_laurent && c.all_found_within_limit(),
          std::to_string(found) + "/" + std::to_string(c.entries.size()) + " found by depth " +
              std::to_string(c.explored_depth));
    report.checks.push_back({"orbit-cover", name + " distinct entries (reported)", true,
                             std::to_string(c.distinct) + " distinct among " + std::to_string(c.entries.size())});
  }
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"coxeter-order",   "reflection-diagram", "reflection-transport",
                                                  "denominators",    "orbit-cluster",      "bipartite",
                                                  "orbit-cover"};
  return names;
}

inline VerifyReport run_verification(const std::string& suite, const VerifyOptions& opt = {}) {
  static const std::map<std::string, std::function<void(VerifyReport&, const VerifyOptions&)>> table = {
      {"coxeter-order", verify_coxeter_order},
      {"reflection-diagram", verify_reflection_diagram},
      {"reflection-transport", verify_reflection_transport},
      {"denominators", verify_denominators},
      {"orbit-cluster", verify_orbit_cluster},
      {"bipartite", verify_bipartite},
      {"orbit-cover", verify_orbit_cover},
  };
  VerifyReport report;
  if (suite == "all") {
    for (const auto& name : suite_names()) table.at(name)(report, opt);
    return report;
  }
  auto it = table.find(suite);
  detail::require(it != table.end(), "unknown verification suite '" + suite + "'");
  it->second(report, opt);
  return report;
}

}  // namespace clustercox
