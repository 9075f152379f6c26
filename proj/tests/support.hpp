#pragma once

#include <random>
#include <vector>

#include "hyperorth/cfuncs.hpp"
#include "hyperorth/laurent.hpp"

namespace hyperorth::testing {

inline CSpec koornwinder_sample() {
  return CSpec(Koornwinder{Rational(1, 2), Rational(1, 3), {Rational(1, 2), Rational(-1, 3), Rational(1, 4), Rational(-1, 5)}});
}

inline CSpec hall_littlewood_sample() { return CSpec(HallLittlewood{Rational(1, 3), Rational(1, 2), Rational(-1, 4)}); }

inline std::mt19937& rng() {
  static std::mt19937 engine(20240611u);
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational() { return make_rational(uniform(-9, 9), uniform(1, 5)); }

inline IntVec random_vector(int n, int bound) {
  IntVec v(static_cast<std::size_t>(n));
  for (int& x : v) x = uniform(-bound, bound);
  return v;
}

inline GroupElement random_element(int n) {
  const auto& all = group_elements(n);
  return all[static_cast<std::size_t>(uniform(0, static_cast<int>(all.size()) - 1))];
}

inline LaurentPoly random_poly(int n, int terms, int bound) {
  LaurentPoly p(n);
  for (int i = 0; i < terms; ++i) p.add_term(make_exponent(random_vector(n, bound)), random_rational());
  return p;
}

/// A random W-invariant polynomial: a combination of symmetric monomials.
inline LaurentPoly random_invariant(int n, int top, int terms) {
  LaurentPoly p(n);
  const auto box = dominant_box(n, top);
  for (int i = 0; i < terms; ++i) {
    LaurentPoly m = symmetric_monomial(box[static_cast<std::size_t>(uniform(0, static_cast<int>(box.size()) - 1))]);
    m *= random_rational();
    p += m;
  }
  return p;
}

}  // namespace hyperorth::testing
