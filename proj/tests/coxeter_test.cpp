#include <gtest/gtest.h>

#include <set>

#include "clustercox/catalog.hpp"
#include "clustercox/coxeter.hpp"
#include "clustercox/exchange_graph.hpp"
#include "clustercox/roots.hpp"
#include "goldens.hpp"

using namespace clustercox;

namespace {

const CartanMatrix kB2{{2, -1}, {-2, 2}};

LaurentPoly u(std::size_t n, std::size_t i) { return LaurentPoly::variable(n, i); }

LaurentPoly ti(const CartanMatrix& a, std::size_t i, const LaurentPoly& f) {
  return apply_ti(a, i, RationalExpr(f)).as_laurent();
}

std::set<std::string> orbit_keys(const CoxeterOrbit& o) {
  std::set<std::string> out;
  for (const auto& [key, f] : o.entries) out.insert(canonical_string(f));
  return out;
}

}  // namespace

TEST(Reflection, Images) {
  auto a3 = cartan_of_type('A', 3);
  EXPECT_EQ(ti(a3, 0, u(3, 0)), goldens::value(goldens::kLinearA3[0]));
  EXPECT_EQ(ti(a3, 0, u(3, 2)), u(3, 2));
  EXPECT_EQ(ti(a3, 1, u(3, 1)), goldens::value({"", "1 + u1*u3", {0, 1, 0}}));
  // exponents come from column i: T_1(u1) = (1 + u2^2)/u1 for B2
  EXPECT_EQ(ti(kB2, 0, u(2, 0)), goldens::value({"", "1 + u2^2", {1, 0}}));
  EXPECT_EQ(ti(kB2, 1, u(2, 1)), goldens::value({"", "1 + u1", {0, 1}}));
  EXPECT_THROW(apply_ti(a3, 3, RationalExpr(u(3, 0))), StructuralError);
}

TEST(Reflection, AgreesWithMutationAtSinksAndSources) {
  for (const auto& t : finite_types(3)) {
    for (const auto& q : acyclic_orientations(t.cartan)) {
      Seed s = initial_seed(matrix_of_orientation(q));
      for (std::size_t k = 0; k < q.size(); ++k) {
        if (!is_sink(q, k) && !is_source(q, k)) continue;
        EXPECT_EQ(mutate(s, k).cluster[k], ti(t.cartan, k, u(q.size(), k))) << t.name;
      }
    }
  }
}

TEST(Coxeter, ImageOfU1InA3) {
  auto t = coxeter_automorphism(default_orientation(cartan_of_type('A', 3)));
  EXPECT_EQ(t.sequence(), (std::vector<std::size_t>{0, 1, 2}));
  auto p3 = goldens::value(goldens::kLinearA3[2]);
  EXPECT_EQ(apply_coxeter(t, RationalExpr(u(3, 0)), 1).as_laurent(), p3);
  EXPECT_EQ(apply_coxeter(t, RationalExpr(u(3, 0)), 0).as_laurent(), u(3, 0));
  EXPECT_EQ(orbit(t, 0, 1).at(1, 0), p3);
}

TEST(Coxeter, SubstitutionAndTupleRoutesAgree) {
  for (const auto& t : finite_types(3)) {
    auto auto_t = coxeter_automorphism(default_orientation(t.cartan));
    auto o = orbit(auto_t, -3, 3);
    for (long m = -3; m <= 3; ++m)
      for (std::size_t k = 0; k < t.cartan.size(); ++k) {
        auto sub = apply_coxeter(auto_t, RationalExpr(u(t.cartan.size(), k)), m);
        ASSERT_TRUE(sub.is_resolved()) << t.name << " m=" << m;
        EXPECT_EQ(sub.as_laurent(), o.at(m, k)) << t.name << " m=" << m << " k=" << k;
      }
  }
  // one infinite type as well
  CoxeterAuto aff(CartanMatrix{{2, -2}, {-2, 2}}, {0, 1});
  auto o = orbit(aff, -2, 2);
  for (long m = -2; m <= 2; ++m)
    for (std::size_t k = 0; k < 2; ++k)
      EXPECT_EQ(apply_coxeter(aff, RationalExpr(u(2, k)), m).as_laurent(), o.at(m, k));
}

TEST(Coxeter, Orders) {
  EXPECT_EQ(order_of_T(default_orientation(kB2)), 3);
  EXPECT_EQ(order_of_T(default_orientation(cartan_of_type('A', 3))), 6);
  EXPECT_EQ(order_of_T(default_orientation(cartan_of_type('A', 1))), 2);
  auto t = coxeter_automorphism(default_orientation(kB2));
  for (std::size_t k = 0; k < 2; ++k)
    EXPECT_EQ(apply_coxeter(t, RationalExpr(u(2, k)), 3).as_laurent(), u(2, k));
  EXPECT_FALSE(order_of_T(ValuedQuiver(CartanMatrix{{2, -2}, {-2, 2}}, {{1, 0}}), 12).has_value());
}

TEST(Coxeter, OrbitRowZeroIsTheInitialCluster) {
  auto o = orbit(coxeter_automorphism(default_orientation(cartan_of_type('B', 3))), -2, 2);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(o.at(0, k), u(3, k));
  EXPECT_TRUE(o.complete);
  EXPECT_THROW(orbit(coxeter_automorphism(default_orientation(kB2)), 1, 2), StructuralError);
}

TEST(Coxeter, OrbitTermBudget) {
  CoxeterAuto aff(CartanMatrix{{2, -2}, {-2, 2}}, {0, 1});
  auto o = orbit(aff, 0, 40, 200);
  EXPECT_FALSE(o.complete);
  EXPECT_LT(o.entries.size(), 82u);
}

TEST(Coxeter, OnePeriodOfTheOrbitIsTheClusterSet) {
  for (const auto& t : finite_types(3)) {
    for (const auto& q : acyclic_orientations(t.cartan)) {
      auto auto_t = coxeter_automorphism(q);
      auto ord = order_of_automorphism(auto_t, 64);
      ASSERT_TRUE(ord) << t.name;
      auto e = enumerate(matrix_of_orientation(q));
      ASSERT_TRUE(e.complete);
      EXPECT_EQ(orbit_keys(orbit(auto_t, 0, *ord - 1)), e.set.key_set()) << t.name;
      // periodicity
      auto o = orbit(auto_t, 0, 2 * *ord);
      for (long m = 0; m <= *ord; ++m)
        for (std::size_t k = 0; k < q.size(); ++k) EXPECT_EQ(o.at(m, k), o.at(m + *ord, k));
    }
  }
}

TEST(Coxeter, AffineRankTwoOrbitEntriesAreDistinct) {
  CoxeterAuto aff(CartanMatrix{{2, -2}, {-2, 2}}, {0, 1});
  auto o = orbit(aff, 0, 5);
  EXPECT_EQ(orbit_keys(o).size(), 12u);
}

TEST(Bipartite, FactorsOfA3) {
  auto a3 = cartan_of_type('A', 3);
  auto f = bipartite_factors(a3);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->plus.sequence(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(f->minus.sequence(), (std::vector<std::size_t>{1}));
  EXPECT_FALSE(bipartite_factors(CartanMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}).has_value());
  auto one = bipartite_factors(cartan_of_type('A', 1));
  EXPECT_EQ(one->plus.sequence(), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(one->minus.sequence().empty());
}

// With plus = sinks of Omega_0, T_{Omega_0} applies T_+ first.
TEST(Bipartite, ProductsGiveTheBipartiteCoxeterAutomorphisms) {
  for (const auto& t : finite_types(4)) {
    if (t.cartan.size() > 3 && t.name != "A4" && t.name != "D4") continue;
    auto f = bipartite_factors(t.cartan);
    ASSERT_TRUE(f) << t.name;
    auto t0 = coxeter_automorphism(*bipartite_orientation(t.cartan));
    auto t1 = coxeter_automorphism(*bipartite_orientation(t.cartan, true));
    auto minus_after_plus = compose(f->minus, f->plus);
    auto plus_after_minus = compose(f->plus, f->minus);
    const std::size_t n = t.cartan.size();
    for (std::size_t k = 0; k < n; ++k) {
      RationalExpr x(u(n, k));
      EXPECT_EQ(apply_coxeter(minus_after_plus, x, 1), apply_coxeter(t0, x, 1)) << t.name;
      EXPECT_EQ(apply_coxeter(plus_after_minus, x, 1), apply_coxeter(t1, x, 1)) << t.name;
    }
  }
}

TEST(Bipartite, BothBipartiteOrientationsShareTheClusterSet) {
  for (const auto& t : finite_types(3)) {
    auto f = bipartite_factors(t.cartan);
    auto e0 = enumerate(matrix_of_orientation(*bipartite_orientation(t.cartan)));
    auto e1 = enumerate(matrix_of_orientation(*bipartite_orientation(t.cartan, true)));
    EXPECT_EQ(e0.set.key_set(), e1.set.key_set()) << t.name;
    for (const auto* factor : {&f->plus, &f->minus}) {
      std::set<std::string> img;
      for (const auto& x : e0.set.variables())
        img.insert(canonical_string(apply_coxeter(*factor, RationalExpr(x), 1).as_laurent()));
      EXPECT_EQ(img, e0.set.key_set()) << t.name;
    }
  }
}

// T_k carries chi_Omega onto chi_{s_k Omega} for a sink k, clusters to clusters.
TEST(Reflection, MapsClusterSetsAcrossASink) {
  for (const auto& t : finite_types(3)) {
    for (const auto& q : acyclic_orientations(t.cartan)) {
      auto e = enumerate(matrix_of_orientation(q));
      for (std::size_t k : sinks(q)) {
        auto e2 = enumerate(matrix_of_orientation(reflect_orientation(q, k)));
        std::vector<std::string> image;
        for (const auto& x : e.set.variables()) image.push_back(canonical_string(ti(t.cartan, k, x)));
        EXPECT_EQ(std::set<std::string>(image.begin(), image.end()), e2.set.key_set()) << t.name;
        std::set<std::vector<std::string>> clusters;
        for (const auto& c : e.set.clusters()) {
          std::vector<std::string> s;
          for (std::size_t i : c) s.push_back(image[i]);
          std::sort(s.begin(), s.end());
          clusters.insert(s);
        }
        EXPECT_EQ(clusters, e2.set.cluster_key_set()) << t.name;
      }
    }
  }
}
