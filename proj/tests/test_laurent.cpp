#include "doctest.h"
#include "hyperorth/errors.hpp"
#include "hyperorth/laurent.hpp"
#include "support.hpp"

using namespace hyperorth;
using namespace hyperorth::testing;

namespace {

LaurentPoly mono(std::vector<int> e, Rational c = 1) { return LaurentPoly::monomial(static_cast<int>(e.size()), e, c); }

LaurentPoly poly(int n, std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
  LaurentPoly p(n);
  for (const auto& [e, c] : terms) p.add_term(make_exponent(e), c);
  return p;
}

}  // namespace

TEST_CASE("ring operations") {
  const LaurentPoly a = mono({1}) + mono({-1});
  const LaurentPoly b = mono({1}) - mono({-1});
  CHECK(a * b == mono({2}) - mono({-2}));
  CHECK(a * LaurentPoly::constant(1, 1) == a);
  const LaurentPoly c = mono({1, 1}) + LaurentPoly::constant(2, 1);
  CHECK(c * c == poly(2, {{{2, 2}, 1}, {{1, 1}, 2}, {{0, 0}, 1}}));
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(mono({1}) * mono({1, 0}), DimensionError);

  for (int trial = 0; trial < 40; ++trial) {
    const int n = uniform(1, 3);
    const LaurentPoly f = random_poly(n, 5, 3), g = random_poly(n, 5, 3), h = random_poly(n, 4, 3);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + g - g == f);
  }
}

TEST_CASE("canonical form drops zeros") {
  LaurentPoly p(2);
  p.add_term(make_exponent(std::vector<int>{1, 0}), 3);
  p.add_term(make_exponent(std::vector<int>{1, 0}), -3);
  CHECK(p.is_zero());
  CHECK(p.size() == 0);
}

TEST_CASE("conjugate and constant term") {
  const LaurentPoly f = mono({2}) + LaurentPoly::constant(1, 3);
  CHECK(conjugate(f) == mono({-2}) + LaurentPoly::constant(1, 3));
  CHECK(constant_term(LaurentPoly::constant(1, 2) - mono({2}) - mono({-2})) == 2);
  CHECK(constant_term(mono({1, -1})) == 0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = uniform(1, 3);
    const LaurentPoly g = random_poly(n, 6, 3);
    CHECK(conjugate(conjugate(g)) == g);
    Rational squares = 0;
    for (const auto& [e, c] : g.terms()) squares += c * c;
    CHECK(constant_term(g * conjugate(g)) == squares);
  }
  for (const Weight& l : dominant_box(2, 3)) CHECK(conjugate(symmetric_monomial(l)) == symmetric_monomial(l));
}

TEST_CASE("symmetric monomials and coordinates") {
  CHECK(symmetric_monomial(Weight({2})) == mono({2}) + mono({-2}));
  CHECK(symmetric_monomial(Weight::zero(2)) == LaurentPoly::constant(2, 1));
  CHECK(symmetric_monomial(Weight({1, 0})) == mono({1, 0}) + mono({-1, 0}) + mono({0, 1}) + mono({0, -1}));

  const MonomialCoords c = monomial_coordinates(mono({2}) + mono({-2}) + LaurentPoly::constant(1, 1));
  CHECK(c == MonomialCoords{{Weight({0}), 1}, {Weight({2}), 1}});
  CHECK(monomial_coordinates(symmetric_monomial(Weight({3, 1}))) == MonomialCoords{{Weight({3, 1}), 1}});
  CHECK_THROWS_AS(monomial_coordinates(mono({1})), InvarianceError);
  CHECK_FALSE(is_invariant(mono({1, 0})));

  for (int trial = 0; trial < 20; ++trial) {
    const int n = uniform(1, 3);
    const LaurentPoly f = random_invariant(n, 3, 4);
    CHECK(is_invariant(f));
    CHECK(expand(monomial_coordinates(f), n) == f);
  }
}

TEST_CASE("weyl denominator") {
  CHECK(weyl_denominator(1) == mono({1}) - mono({-1}));
  const LaurentPoly pair = mono({1, 0}) + mono({-1, 0}) - mono({0, 1}) - mono({0, -1});
  const LaurentPoly expected = pair * (mono({1, 0}) - mono({-1, 0})) * (mono({0, 1}) - mono({0, -1}));
  CHECK(weyl_denominator(2) == expected);
  CHECK(weyl_denominator(2).leading_term().first == make_exponent(std::vector<int>{2, 1}));
  CHECK(weyl_denominator(2).leading_term().second == 1);
  for (int n = 1; n <= 3; ++n) {
    const LaurentPoly& d = weyl_denominator(n);
    CHECK(d.leading_term().first == make_exponent(rho(n).span()));
    for (const GroupElement& w : group_elements(n)) {
      LaurentPoly signed_d = d;
      signed_d *= w.det();
      CHECK(substitute(d, w) == signed_d);
    }
  }
}

TEST_CASE("antisymmetrize") {
  CHECK(antisymmetrize(IntVec{2, 2}).is_zero());
  CHECK(antisymmetrize(IntVec{3, 0}).is_zero());
  CHECK(antisymmetrize(IntVec{1}) == weyl_denominator(1));
  // Weyl denominator identity
  for (int n = 1; n <= 3; ++n) CHECK(antisymmetrize(rho(n).span()) == weyl_denominator(n));
}

TEST_CASE("exact division") {
  CHECK(exact_divide(mono({2}) - mono({-2}), mono({1}) - mono({-1})) == mono({1}) + mono({-1}));
  CHECK(exact_divide(antisymmetrize(IntVec{3}), weyl_denominator(1)) ==
        mono({2}) + LaurentPoly::constant(1, 1) + mono({-2}));
  CHECK_THROWS_AS(exact_divide(mono({2}) + LaurentPoly::constant(1, 1), mono({1}) - mono({-1})), DivisibilityError);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = uniform(1, 3);
    const LaurentPoly f = random_poly(n, 5, 3);
    LaurentPoly d = random_poly(n, 3, 2);
    if (d.is_zero()) continue;
    CHECK(exact_divide(f * d, d) == f);
  }
}

TEST_CASE("weyl characters") {
  CHECK(weyl_character(Weight({2})) == mono({2}) + LaurentPoly::constant(1, 1) + mono({-2}));
  CHECK(weyl_character_coords(Weight({2})) == MonomialCoords{{Weight({0}), 1}, {Weight({2}), 1}});
  CHECK(weyl_character(Weight::zero(2)) == LaurentPoly::constant(2, 1));
  CHECK(weyl_character_coords(Weight({1, 0})) == MonomialCoords{{Weight({1, 0}), 1}});
  for (int n = 1; n <= 3; ++n) {
    for (const Weight& mu : dominant_box(n, n == 3 ? 4 : 5)) {
      const LaurentPoly& chi = weyl_character(mu);
      CHECK(is_invariant(chi));
      const MonomialCoords& c = weyl_character_coords(mu);
      CHECK(c.at(mu) == 1);
      for (const auto& [nu, v] : c) {
        CHECK(dominates(mu.span(), nu.span()));
        CHECK(v > 0);
        CHECK(v.get_den() == 1);
      }
    }
  }
}

TEST_CASE("character cache is safe under concurrent reads") {
  clear_character_cache();
  const auto box = dominant_box(2, 4);
  std::vector<MonomialCoords> parallel(box.size());
#pragma omp parallel for
  for (long i = 0; i < static_cast<long>(box.size()); ++i)
    parallel[static_cast<std::size_t>(i)] = weyl_character_coords(box[static_cast<std::size_t>(i)]);
  clear_character_cache();
  for (std::size_t i = 0; i < box.size(); ++i) CHECK(parallel[i] == weyl_character_coords(box[i]));
}
