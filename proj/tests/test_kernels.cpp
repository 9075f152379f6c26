#include <omp.h>

#include "doctest.h"
#include "hyperorth/innerproduct.hpp"
#include "hyperorth/kernels.hpp"
#include "support.hpp"

using namespace hyperorth;
using namespace hyperorth::testing;

namespace {

// Runs f with the given OpenMP thread count, restoring the previous one.
template <typename F>
auto with_threads(int n, F&& f) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(n);
  auto r = f();
  omp_set_num_threads(saved);
  return r;
}

}  // namespace

TEST_CASE("scaled form round trip") {
  for (int trial = 0; trial < 20; ++trial) {
    const LaurentPoly p = random_poly(uniform(1, 3), 8, 4);
    const ScaledLaurent s = ScaledLaurent::from(p);
    CHECK(s.to_laurent() == p);
    for (std::size_t i = 1; i < s.terms.size(); ++i) CHECK(s.terms[i - 1].first < s.terms[i].first);
    const ScaledIndex idx(s);
    for (const auto& [e, c] : p.terms()) {
      const Integer* v = idx.find(e);
      REQUIRE(v != nullptr);
      CHECK(make_rational(*v, s.denominator) == c);
    }
  }
}

TEST_CASE("products agree across kernels and thread counts") {
  for (int trial = 0; trial < 10; ++trial) {
    const int n = uniform(1, 3);
    const LaurentPoly a = random_poly(n, 30, 5), b = random_poly(n, 30, 5);
    const LaurentPoly reference = kernels::multiply_serial(a, b);
    for (int threads : {1, 2, 4}) {
      CHECK(with_threads(threads, [&] { return kernels::multiply_parallel(a, b); }) == reference);
      const ScaledLaurent sp =
          with_threads(threads, [&] { return kernels::multiply_scaled_parallel(ScaledLaurent::from(a), ScaledLaurent::from(b)); });
      CHECK(sp.to_laurent() == reference);
    }
    CHECK(kernels::multiply_scaled_serial(ScaledLaurent::from(a), ScaledLaurent::from(b)).to_laurent() == reference);
    CHECK(kernels::multiply(a, b) == reference);
  }
}

TEST_CASE("pairing kernels agree with the literal constant term") {
  const DeltaApprox delta = build_delta(koornwinder_sample(), 2, 6);
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentPoly f = random_poly(2, 6, 3), g = random_poly(2, 6, 3);
    const Rational literal = kernels::pairing_serial(f, g, delta.poly());
    for (int threads : {1, 3}) CHECK(with_threads(threads, [&] { return kernels::pairing_parallel(f, g, delta.index()); }) == literal);
  }
}

TEST_CASE("Gram kernels agree") {
  const DeltaApprox delta = build_delta(hall_littlewood_sample(), 2, 8);
  const auto basis = weights_below(Weight({4, 2}));
  const auto reference = kernels::gram_serial(basis, basis, delta.index());
  for (int threads : {1, 2, 4}) {
    CHECK(with_threads(threads, [&] { return kernels::gram_parallel(basis, basis, delta.index()); }) == reference);
  }
  // entries equal the literal constant term of m_mu m_nu Delta
  for (std::size_t i = 0; i < basis.size(); i += 3) {
    for (std::size_t j = 0; j < basis.size(); j += 2) {
      const Rational entry = make_rational(reference[i * basis.size() + j], delta.scaled().denominator);
      CHECK(entry == kernels::pairing_serial(symmetric_monomial(basis[i]), symmetric_monomial(basis[j]), delta.poly()));
    }
  }
  std::vector<Integer> x(basis.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = uniform(-20, 20);
  const auto applied = kernels::gram_apply_serial(basis, basis, x, delta.index());
  for (int threads : {1, 3}) {
    CHECK(with_threads(threads, [&] { return kernels::gram_apply_parallel(basis, basis, x, delta.index()); }) == applied);
  }
}
