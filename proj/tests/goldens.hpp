#pragma once

// Hand-written cluster variables of A3 for the orientations 3->2->1 and
// 3->2<-1, as numerator over a monomial.

#include <string>
#include <vector>

#include "clustercox/laurent.hpp"

namespace goldens {

struct Fraction {
  std::string name;
  std::string numerator;
  std::vector<int> denominator;
};

inline clustercox::LaurentPoly value(const Fraction& f) {
  clustercox::ExponentVector e(f.denominator.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = -f.denominator[i];
  return clustercox::parse_laurent(e.size(), f.numerator).shifted(e);
}

// 3 -> 2 -> 1
inline const std::vector<Fraction> kLinearA3 = {
    {"P1", "1 + u2", {1, 0, 0}},
    {"P2", "u1 + u3 + u2*u3", {1, 1, 0}},
    {"P3", "u1 + u3 + u1*u2 + u2*u3", {1, 1, 1}},
    {"E2", "u1 + u3", {0, 1, 0}},
    {"I2", "u1 + u3 + u1*u2", {0, 1, 1}},
    {"I3", "1 + u2", {0, 0, 1}},
};

// I3 exactly as printed alongside the list above; it is not a cluster
// variable of this algebra.
inline const Fraction kLinearA3Printed_I3 = {"I3", "1 + u1", {0, 0, 1}};

// 3 -> 2 <- 1
inline const std::vector<Fraction> kReflectedA3 = {
    {"P1", "1 + u2 + u1*u3", {1, 1, 0}},
    {"P2", "1 + u1*u3", {0, 1, 0}},
    {"P3", "1 + u2 + u1*u3", {0, 1, 1}},
    {"E1", "1 + u2", {1, 0, 0}},
    {"I2", "1 + 2*u2 + u2^2 + u1*u3", {1, 1, 1}},
    {"E3", "1 + u2", {0, 0, 1}},
};

}  // namespace goldens
