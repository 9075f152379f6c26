#include <cmath>

#include "doctest.h"
#include "hyperorth/cfuncs.hpp"
#include "hyperorth/errors.hpp"
#include "support.hpp"

using namespace hyperorth;
using namespace hyperorth::testing;

namespace {

// prod_{k<L} (1 - a q^k z), multiplied out directly and truncated at `order`.
TruncSeries finite_product(const Rational& a, const Rational& q, int factors, int order) {
  TruncSeries s{{Rational(1)}};
  Rational qk = 1;
  for (int k = 0; k < factors; ++k) {
    s = series_multiply(s, TruncSeries{{Rational(1), -a * qk}}, order);
    qk *= q;
  }
  s.coeffs.resize(static_cast<std::size_t>(order) + 1);
  return s;
}

// Least-squares slope of log|a_n| over the nonzero coefficients with n in [from, to].
double log_slope(const TruncSeries& s, int from, int to) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
  for (int k = from; k <= to; ++k) {
    const double v = std::abs(to_double(s[static_cast<std::size_t>(k)]));
    if (v == 0) continue;
    const double y = std::log(v);
    sx += k;
    sy += y;
    sxx += double(k) * k;
    sxy += k * y;
    n += 1;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("pochhammer series") {
  const TruncSeries zero = pochhammer_inf_series(0, Rational(1, 2), 6);
  CHECK(zero == TruncSeries{{1, 0, 0, 0, 0, 0, 0}});
  const Rational a(1, 2), q(1, 2);
  const TruncSeries s = pochhammer_inf_series(a, q, 5);
  CHECK(s[1] == -1);
  CHECK(s[2] == a * a * q / ((1 - q) * (1 - q * q)));
  const Rational a2(-2, 7), q2(3, 5);
  CHECK(pochhammer_inf_series(a2, q2, 3)[2] == a2 * a2 * q2 / ((1 - q2) * (1 - q2 * q2)));
  CHECK_THROWS_AS(pochhammer_inf_series(a, 1, 4), DomainError);
  CHECK_THROWS_AS(pochhammer_inf_series(a, Rational(-3, 2), 4), DomainError);
}

TEST_CASE("pochhammer series against finite products") {
  const Rational a(2, 3), q(1, 2);
  const int order = 30;
  const TruncSeries euler = pochhammer_inf_series(a, q, order);
  // (az;q)_inf = prod_{k<L} (1 - a q^k z) * (a q^L z; q)_inf, exactly
  Rational ql = 1;
  for (int l = 1; l <= order; ++l) {
    ql *= q;
    const TruncSeries split = series_multiply(finite_product(a, q, l, order), pochhammer_inf_series(a * ql, q, order), order);
    CHECK(split == euler);
  }
  // a long finite product converges to the same coefficients
  const TruncSeries longer = finite_product(a, q, 200, order);
  const Rational bound(1, Integer(1) << 100);
  for (int n = 0; n <= order; ++n) CHECK(abs(longer[static_cast<std::size_t>(n)] - euler[static_cast<std::size_t>(n)]) < bound);
}

TEST_CASE("reciprocal series") {
  const Rational t(2, 5);
  const TruncSeries r = reciprocal_series(TruncSeries{{1, -t}}, 6);
  for (int n = 0; n <= 6; ++n) {
    Rational tn = 1;
    for (int k = 0; k < n; ++k) tn *= t;
    CHECK(r[static_cast<std::size_t>(n)] == tn);
  }
  CHECK(reciprocal_series(TruncSeries{{1}}, 4) == TruncSeries{{1, 0, 0, 0, 0}});
  CHECK_THROWS_AS(reciprocal_series(TruncSeries{{2, 1}}, 4), DomainError);

  for (int trial = 0; trial < 10; ++trial) {
    TruncSeries s{{Rational(1)}};
    for (int k = 0; k < 8; ++k) s.coeffs.push_back(random_rational());
    TruncSeries one(std::vector<Rational>(61, Rational(0)));
    one.coeffs[0] = 1;
    CHECK(series_multiply(s, reciprocal_series(s, 60), 60) == one);
  }
}

TEST_CASE("taylor_c for the three families") {
  const CSpec hl = hall_littlewood_sample();
  const Rational t0(1, 2), t1(-1, 4);
  CHECK(taylor_c(hl, 1, 5) == TruncSeries{{1, -(t0 + t1), t0 * t1, 0, 0, 0}});
  CHECK(taylor_c(hl, 0, 3) == TruncSeries{{1, Rational(-1, 3), 0, 0}});
  CHECK(taylor_c(CSpec::trivial(), 0, 2) == TruncSeries{{1, 0, 0}});

  const Rational q(1, 2), t(1, 3);
  const CSpec k = koornwinder_sample();
  CHECK(taylor_c(k, 0, 4)[1] == (q - t) / (1 - q));
  const CSpec cancel(Koornwinder{q, q, {Rational(1, 2), Rational(-1, 3), Rational(1, 4), Rational(-1, 5)}});
  const TruncSeries one = taylor_c(cancel, 0, 12);
  CHECK(one[0] == 1);
  for (int n = 1; n <= 12; ++n) CHECK(one[static_cast<std::size_t>(n)] == 0);

  // c1 * (q z^2; q)_inf = prod_r (t_r z; q)_inf
  const int order = 20;
  TruncSeries den = pochhammer_inf_series(q, q, order / 2);
  TruncSeries den_z(std::vector<Rational>(order + 1, Rational(0)));
  for (int n = 0; 2 * n <= order; ++n) den_z.coeffs[static_cast<std::size_t>(2 * n)] = den[static_cast<std::size_t>(n)];
  TruncSeries num = finite_product(0, q, 0, order);
  for (const Rational& tr : {Rational(1, 2), Rational(-1, 3), Rational(1, 4), Rational(-1, 5)})
    num = series_multiply(num, pochhammer_inf_series(tr, q, order), order);
  CHECK(series_multiply(taylor_c(k, 1, order), den_z, order) == num);

  CHECK_THROWS_AS(taylor_c(k, 2, 3), DomainError);
}

TEST_CASE("taylor_c prefixes are stable in K") {
  for (const CSpec& spec : {koornwinder_sample(), hall_littlewood_sample(), CSpec::trivial()}) {
    for (int p = 0; p < 2; ++p) {
      const TruncSeries small = taylor_c(spec, p, 15);
      const TruncSeries large = taylor_c(spec, p, 27);
      for (int n = 0; n <= 15; ++n) CHECK(small[static_cast<std::size_t>(n)] == large[static_cast<std::size_t>(n)]);
      const TruncSeries r = reciprocal_series(large, 27);
      TruncSeries unit(std::vector<Rational>(28, Rational(0)));
      unit.coeffs[0] = 1;
      CHECK(series_multiply(large, r, 27) == unit);
    }
  }
}

TEST_CASE("Koornwinder coefficients decay at the admissible rate") {
  const CSpec k = koornwinder_sample();
  const double eps = std::log(2.0);
  const double eta = 0.2;
  const int order = 60;
  const TruncSeries c0 = taylor_c(k, 0, order), c1 = taylor_c(k, 1, order);
  CHECK(log_slope(c0, 10, order) <= -(1 - eta) * eps);
  CHECK(log_slope(c1, 10, order) <= -(1 - eta) * eps / 2);
  CHECK(log_slope(reciprocal_series(c0, order), 10, order) <= -(1 - eta) * eps);
  CHECK(log_slope(reciprocal_series(c1, order), 10, order) <= -(1 - eta) * eps / 2);
}

TEST_CASE("decay budget") {
  const DecayBudget kb = decay_budget(koornwinder_sample());
  CHECK_FALSE(kb.exact_beyond_degree);
  CHECK(kb.epsilon == doctest::Approx(0.6931471805599453));
  const DecayBudget hb = decay_budget(hall_littlewood_sample());
  CHECK(hb.exact_beyond_degree);
  CHECK(hb.degree == 1);
  CHECK(decay_budget(CSpec::trivial()).degree == 0);
  CHECK(CSpec(ExplicitPoly{{1, 2}, {1, 0, 0, 5}}).degree() == 2);
  CHECK(CSpec(ExplicitPoly{{1, 0, 0}, {1, 0}}).degree() == 0);
}

TEST_CASE("spec validation and JSON") {
  CHECK_THROWS_AS(CSpec(Koornwinder{1, 0, {0, 0, 0, 0}}), DomainError);
  CHECK_THROWS_AS(CSpec(Koornwinder{Rational(1, 2), 1, {0, 0, 0, 0}}), DomainError);
  CHECK_THROWS_AS(CSpec(HallLittlewood{0, Rational(-1), 0}), DomainError);
  CHECK_THROWS_AS(CSpec(ExplicitPoly{{2}, {1}}), DomainError);

  for (const CSpec& spec : {koornwinder_sample(), hall_littlewood_sample(), CSpec::trivial()})
    CHECK(CSpec::from_json(spec.to_json()) == spec);
  const auto j = nlohmann::json::parse(
      R"({"family": "koornwinder", "q": "1/2", "t": "1/3", "t_r": ["1/2","-1/3","1/4","-1/5"]})");
  CHECK(CSpec::from_json(j) == koornwinder_sample());

  auto bad = j;
  bad["q"] = "1/0";
  try {
    CSpec::from_json(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("'q'") != std::string::npos);
  }
  bad = j;
  bad["t_r"] = nlohmann::json::array({"1/2"});
  CHECK_THROWS_AS(CSpec::from_json(bad), ParseError);
  CHECK_THROWS_AS(CSpec::from_json(nlohmann::json::parse(R"({"family": "jacobi"})")), ParseError);
}

TEST_CASE("zero-free sampling") {
  CHECK(zero_free_warnings(koornwinder_sample()).empty());
  CHECK(zero_free_warnings(hall_littlewood_sample()).empty());
  const auto w = zero_free_warnings(CSpec(ExplicitPoly{{1, -1}, {1}}));
  REQUIRE(w.size() == 1);
  CHECK(w.front().find("c0") != std::string::npos);
}
