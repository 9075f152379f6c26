#include <cmath>

#include "doctest.h"
#include "hyperorth/innerproduct.hpp"
#include "support.hpp"

using namespace hyperorth;
using namespace hyperorth::testing;

namespace {

LaurentPoly mono(std::vector<int> e, Rational c = 1) { return LaurentPoly::monomial(static_cast<int>(e.size()), e, c); }

}  // namespace

TEST_CASE("weight for trivial c-functions") {
  const LaurentPoly expected = (LaurentPoly::constant(1, 2) - mono({2}) - mono({-2})) * Rational(1, 2);
  for (int k : {1, 5, 12}) CHECK(build_delta(CSpec::trivial(), 1, k).poly() == expected);
  CHECK(constant_term(build_delta(CSpec::trivial(), 1, 3).poly()) == 1);
}

TEST_CASE("weight is invariant and self-conjugate") {
  for (const CSpec& spec : {koornwinder_sample(), hall_littlewood_sample(), CSpec::trivial()}) {
    for (int n = 1; n <= 3; ++n) {
      const DeltaApprox d = build_delta(spec, n, n == 3 ? 3 : 8);
      CHECK(is_invariant(d.poly()));
      CHECK(conjugate(d.poly()) == d.poly());
    }
  }
}

TEST_CASE("inner products") {
  const DeltaApprox d = build_delta(CSpec::trivial(), 1, 4);
  const LaurentPoly one = LaurentPoly::constant(1, 1);
  CHECK(inner_product(one, one, d) == 1);
  CHECK(inner_product(symmetric_monomial(Weight({1})), symmetric_monomial(Weight({1})), d) == 1);
  CHECK(inner_product(one, symmetric_monomial(Weight({1})), d) == 0);

  const DeltaApprox k = build_delta(koornwinder_sample(), 2, 10);
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentPoly f = random_poly(2, 5, 3), g = random_poly(2, 5, 3);
    CHECK(inner_product(f, g, k) == inner_product(g, f, k));
    CHECK(inner_product(f, g, k) == constant_term(f * conjugate(g) * k.poly()));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentPoly f = random_invariant(2, 3, 4), g = random_invariant(2, 3, 3);
    const Rational by_coords = inner_product(monomial_coordinates(f), monomial_coordinates(g), k);
    CHECK(by_coords == inner_product(f, g, k));
  }
}

TEST_CASE("positive definiteness probe") {
  const DeltaApprox k = build_delta(koornwinder_sample(), 2, 20);
  for (int trial = 0; trial < 15; ++trial) {
    const LaurentPoly f = random_invariant(2, 4, 4);
    if (f.is_zero()) continue;
    CHECK(inner_product(f, f, k) > 0);
  }
}

TEST_CASE("Gram matrices") {
  const GramMatrix g = gram_matrix(Weight({1}), build_delta(CSpec::trivial(), 1, 3));
  REQUIRE(g.size() == 2);
  CHECK(g.at(0, 0) == 1);
  CHECK(g.at(0, 1) == 0);
  CHECK(g.at(1, 0) == 0);
  CHECK(g.at(1, 1) == 1);

  const GramMatrix h = gram_matrix(Weight({3, 1}), build_delta(hall_littlewood_sample(), 2, 10));
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j) CHECK(h.at(i, j) == h.at(j, i));

  const GramMatrix kg = gram_matrix(Weight({2}), build_delta(koornwinder_sample(), 1, 30));
  CHECK(leading_minors_positive(kg));
}

TEST_CASE("stability probe") {
  const StabilityReport same = stability_probe(Weight({1}), koornwinder_sample(), 12, 0);
  CHECK(same.diff_first == 0);
  CHECK(same.diff_second == 0);

  CHECK(stability_probe(Weight({2, 1}), CSpec::trivial(), 5, 3).diff_first == 0);

  const StabilityReport k = stability_probe(Weight({1}), koornwinder_sample(), 20, 10);
  CHECK(k.diff_first > 0);
  CHECK(k.diff_second < k.diff_first);
  CHECK(k.ratio <= std::exp(-0.8 * std::log(2.0) * 10));
  CHECK(k.expected_ratio == doctest::Approx(std::pow(0.5, 10)));

  const StabilityReport h = stability_probe(Weight({1, 1}), hall_littlewood_sample(), 10, 5);
  CHECK(h.diff_second < h.diff_first);
}
