// Randomised and exhaustive checks of the algebraic laws. Every random suite
// runs at least 500 cases from a fixed seed.

#include <gtest/gtest.h>

#include <map>

#include "clustercox/catalog.hpp"
#include "clustercox/coxeter.hpp"
#include "clustercox/exchange_graph.hpp"
#include "clustercox/roots.hpp"
#include "properties.hpp"

using namespace clustercox;

namespace {

void expect_clean(const props::Outcome& r) {
  EXPECT_GE(r.cases, static_cast<std::size_t>(props::kCases));
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

}  // namespace

TEST(Properties, ReflectionIsAnInvolution) { expect_clean(props::reflection_involution()); }

TEST(Properties, ReflectionDependsOnlyOnTheCartanMatrix) { expect_clean(props::reflection_independent_of_b()); }

TEST(Properties, MutationIsAnInvolutionAlongRandomPaths) {
  const auto r = props::mutation_involution();
  expect_clean(r);
  EXPECT_GT(r.steps, 2000u);
}

TEST(Properties, ExactDivisionRoundTrip) { expect_clean(props::exact_division_round_trip()); }

TEST(Properties, LaurentPhenomenonAlongRandomPaths) {
  const auto r = props::laurent_phenomenon();
  expect_clean(r);
  EXPECT_GT(r.steps, 2000u);
}

TEST(Properties, FailuresAreCounted) {
  props::Outcome o;
  o.check(true, "fine");
  o.check(false, "first");
  o.check(false, "second");
  EXPECT_EQ(o.failures, 2u);
  EXPECT_EQ(o.first_failure, "first");
  EXPECT_FALSE(o.passed());
}

// ---------------------------------------------------------------------------
// Exhaustive diagram checks on all finite types of rank <= 3 and all of
// their acyclic orientations.

namespace {

struct TypeFixture {
  NamedCartan type;
  RootSystem roots;
  std::vector<ValuedQuiver> orientations;
};

std::vector<TypeFixture> small_finite_types() {
  std::vector<TypeFixture> out;
  for (auto& t : finite_types(3)) {
    RootSystem rs(t.cartan);
    auto qs = acyclic_orientations(t.cartan);
    out.push_back({std::move(t), std::move(rs), std::move(qs)});
  }
  return out;
}

}  // namespace

// sigma_k(gamma_Omega(X)) = gamma_{s_k Omega}(R_k X) for every sink k and
// every object X in two full periods.
TEST(Diagrams, ReflectionFunctorsMatchTruncatedReflections) {
  std::size_t checked = 0;
  for (const auto& f : small_finite_types()) {
    for (const auto& q : f.orientations) {
      const long period = order_of_sigma(f.roots, q);
      for (std::size_t k : sinks(q)) {
        const ValuedQuiver q2 = reflect_orientation(q, k);
        for (long m = -period; m <= period; ++m)
          for (std::size_t j = 0; j < q.size(); ++j) {
            const PIObject x{m, j};
            const RootVector g = gamma(f.roots, q, x);
            const RootVector lhs = truncated_reflection(f.roots, k, g);
            EXPECT_EQ(bgp_reflect(f.roots, q, k, g), lhs);
            EXPECT_EQ(lhs, gamma(f.roots, q2, bgp_reflect(q, k, x))) << f.type.name;
            ++checked;
          }
      }
    }
  }
  EXPECT_GT(checked, 500u);
}

// T_k(T_Omega^m(u_j)) = T_{s_k Omega}^{m'}(u_{j'}) with (m', j') = R_k(m, j).
TEST(Diagrams, ReflectionAutomorphismsTransportOrbits) {
  std::size_t checked = 0;
  for (const auto& f : small_finite_types()) {
    for (const auto& q : f.orientations) {
      const long period = order_of_sigma(f.roots, q);
      auto orb = orbit(coxeter_automorphism(q), -period, period + 1);
      for (std::size_t k : sinks(q)) {
        const ValuedQuiver q2 = reflect_orientation(q, k);
        auto orb2 = orbit(coxeter_automorphism(q2), -period, period + 1);
        for (long m = -period; m <= period; ++m)
          for (std::size_t j = 0; j < q.size(); ++j) {
            const PIObject y = bgp_reflect(q, k, PIObject{m, j});
            auto lhs = apply_ti(f.type.cartan, k, RationalExpr(orb.at(m, j)));
            ASSERT_TRUE(lhs.is_resolved());
            EXPECT_EQ(lhs.as_laurent(), orb2.at(y.m, y.k)) << f.type.name;
            ++checked;
          }
      }
    }
  }
  EXPECT_GT(checked, 500u);
}

// Denominator vectors: d(T^m(u_k)) = gamma(C^m P_k[1]); T o P = P o sigma;
// gamma o C = sigma o gamma.
TEST(Diagrams, DenominatorsIntertwineTAndSigma) {
  std::size_t checked = 0;
  for (const auto& f : small_finite_types()) {
    const std::size_t n = f.type.cartan.size();
    for (const auto& q : f.orientations) {
      const auto seq = *admissible_sink_sequence(q);
      const auto t = coxeter_automorphism(q);
      const long period = order_of_sigma(f.roots, q);
      auto orb = orbit(t, -period, period);
      for (long m = -period; m < period; ++m)
        for (std::size_t k = 0; k < n; ++k) {
          const RootVector g = gamma(f.roots, q, {m, k});
          EXPECT_EQ(denominator_vector(orb.at(m, k)), g) << f.type.name;
          EXPECT_EQ(gamma(f.roots, q, {m + 1, k}), apply_sigma(f.roots, seq, g, 1));
          ++checked;
        }
      // P_Omega: almost positive root -> cluster variable with that denominator
      auto e = enumerate(matrix_of_orientation(q));
      std::map<RootVector, LaurentPoly> p;
      for (const auto& x : e.set.variables()) {
        auto [it, fresh] = p.emplace(denominator_vector(x), x);
        EXPECT_TRUE(fresh) << "two cluster variables share a denominator vector";
      }
      for (const auto& alpha : f.roots.almost_positive_roots()) {
        ASSERT_TRUE(p.count(alpha)) << f.type.name;
        auto img = apply_coxeter(t, RationalExpr(p.at(alpha)), 1);
        EXPECT_EQ(img.as_laurent(), p.at(apply_sigma(f.roots, seq, alpha, 1))) << f.type.name;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 500u);
}

// Orders: symbolic iteration of T, permutation order of sigma and the
// formula from h and the w_0 test agree on every orientation.
TEST(Diagrams, OrderOfTMatchesSigmaAndFormula) {
  for (const auto& f : small_finite_types()) {
    const long predicted = predicted_order(f.type.cartan);
    for (const auto& q : f.orientations) {
      EXPECT_EQ(order_of_sigma(f.roots, q), predicted) << f.type.name;
      EXPECT_EQ(order_of_T(q, 64), predicted) << f.type.name;
    }
  }
}
