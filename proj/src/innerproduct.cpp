#include "hyperorth/innerproduct.hpp"

#include <algorithm>
#include <cmath>

#include "hyperorth/errors.hpp"
#include "hyperorth/linsolve.hpp"

namespace hyperorth {

DeltaApprox::DeltaApprox(int dim, int order, CSpec spec, ScaledLaurent scaled, double tail_hint)
    : dim_(dim), order_(order), spec_(std::move(spec)), tail_hint_(tail_hint),
      data_(std::make_shared<Data>(std::move(scaled))) {}

const LaurentPoly& DeltaApprox::poly() const {
  std::call_once(data_->poly_once, [this] { data_->poly = data_->scaled.to_laurent(); });
  return data_->poly;
}

std::vector<Rational> root_factor(const CSpec& spec, int p, int order) {
  const TruncSeries r = reciprocal_series(taylor_c(spec, p, order), order);
  const auto k = static_cast<std::size_t>(order);
  // R(w) R(1/w): coefficient of w^d (d >= 0) is sum_n r_{n+d} r_n; symmetric in d.
  std::vector<Rational> sym(2 * k + 1);
  for (std::size_t d = 0; d <= k; ++d) {
    Rational acc = 0;
    for (std::size_t n = 0; n + d <= k; ++n) acc += r[n + d] * r[n];
    sym[k + d] = acc;
    sym[k - d] = acc;
  }
  // times the pole factor (1 - w^s)(1 - w^-s) = 2 - w^s - w^-s, s = p + 1
  const std::size_t stride = static_cast<std::size_t>(p) + 1;
  std::vector<Rational> out(2 * k + 5);
  for (std::size_t i = 0; i < sym.size(); ++i) {
    if (sym[i] == 0) continue;
    out[i + 2] += 2 * sym[i];
    out[i + 2 - stride] -= sym[i];
    out[i + 2 + stride] -= sym[i];
  }
  return out;
}

DeltaApprox build_delta(const CSpec& spec, int dim, int order) {
  if (order < 1) throw DomainError("truncation order K must be at least 1");
  if (dim < 1 || dim > kMaxVars) throw DomainError("dimension N must lie in [1, 8]");
  const std::vector<Rational> h0 = root_factor(spec, 0, order);
  const std::vector<Rational> h1 = root_factor(spec, 1, order);
  const int offset = -(order + 2);

  auto factor = [&](std::vector<int> direction, const std::vector<Rational>& h) {
    return ScaledLaurent::from(LaurentPoly::along(dim, direction, offset, h));
  };

  ScaledLaurent acc = ScaledLaurent::from(LaurentPoly::constant(dim, 1));
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      std::vector<int> plus(static_cast<std::size_t>(dim), 0);
      std::vector<int> minus(static_cast<std::size_t>(dim), 0);
      plus[static_cast<std::size_t>(j)] = plus[static_cast<std::size_t>(k)] = 1;
      minus[static_cast<std::size_t>(j)] = 1;
      minus[static_cast<std::size_t>(k)] = -1;
      const ScaledLaurent pair = kernels::multiply_scaled(factor(plus, h0), factor(minus, h0));
      acc = kernels::multiply_scaled(acc, pair);
    }
  }
  for (int j = 0; j < dim; ++j) {
    std::vector<int> e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(j)] = 1;
    acc = kernels::multiply_scaled(acc, factor(e, h1));
  }
  acc.denominator *= static_cast<unsigned long>(group_order(dim));
  {
    Integer g = acc.denominator;
    for (const auto& [e, v] : acc.terms) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g != 1 && !acc.terms.empty()) {
      for (auto& [e, v] : acc.terms) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(acc.denominator.get_mpz_t(), acc.denominator.get_mpz_t(), g.get_mpz_t());
    }
  }

  double tail = 0;
  for (int p = 0; p < 2; ++p) {
    const TruncSeries r = reciprocal_series(taylor_c(spec, p, order), order);
    tail = std::max(tail, std::abs(to_double(r[static_cast<std::size_t>(order)])));
  }
  tail *= dim * dim;
  return DeltaApprox(dim, order, spec, std::move(acc), tail);
}

Rational inner_product(const LaurentPoly& f, const LaurentPoly& g, const DeltaApprox& delta) {
  return kernels::pairing_parallel(f, g, delta.index());
}

namespace {

struct ScaledCoords {
  std::vector<Weight> support;
  std::vector<Integer> numerators;
  Integer denominator = 1;
};

ScaledCoords scale(const MonomialCoords& f) {
  ScaledCoords out;
  for (const auto& [w, c] : f) mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [w, c] : f) {
    if (c == 0) continue;
    out.support.push_back(w);
    out.numerators.push_back(out.denominator / c.get_den() * c.get_num());
  }
  return out;
}

}  // namespace

std::vector<Rational> pair_with_monomials(const MonomialCoords& f, std::span<const Weight> basis,
                                          const DeltaApprox& delta) {
  const ScaledCoords s = scale(f);
  std::vector<Rational> out(basis.size(), Rational(0));
  if (s.support.empty()) return out;
  const std::vector<Integer> raw = kernels::gram_apply_parallel(basis, s.support, s.numerators, delta.index());
  const Integer den = s.denominator * delta.scaled().denominator;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out[i] = make_rational(raw[i], den);
  }
  return out;
}

Rational inner_product(const MonomialCoords& f, const MonomialCoords& g, const DeltaApprox& delta) {
  const ScaledCoords sf = scale(f);
  const ScaledCoords sg = scale(g);
  if (sf.support.empty() || sg.support.empty()) return 0;
  const std::vector<Integer> raw = kernels::gram_apply_parallel(sf.support, sg.support, sg.numerators, delta.index());
  Integer total = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) mpz_addmul(total.get_mpz_t(), raw[i].get_mpz_t(), sf.numerators[i].get_mpz_t());
  return make_rational(total, sf.denominator * sg.denominator * delta.scaled().denominator);
}

Rational GramMatrix::at(std::size_t i, std::size_t j) const {
  return make_rational(numerators[i * basis.size() + j], denominator);
}

GramMatrix gram_matrix(std::vector<Weight> basis, const DeltaApprox& delta) {
  GramMatrix g;
  g.numerators = kernels::gram_parallel(basis, basis, delta.index());
  g.denominator = delta.scaled().denominator;
  g.basis = std::move(basis);
  return g;
}

GramMatrix gram_matrix(const Weight& lambda, const DeltaApprox& delta) {
  if (lambda.dim() != delta.dim()) throw DimensionError("weight dimension differs from the weight function");
  return gram_matrix(weights_below(lambda), delta);
}

bool leading_minors_positive(const GramMatrix& g) {
  const auto minors = leading_principal_minors(g.numerators, g.size());
  if (minors.size() < g.size()) return false;
  return std::all_of(minors.begin(), minors.end(), [](const Integer& m) { return sgn(m) > 0; });
}

namespace {

double max_abs_difference(const GramMatrix& a, const GramMatrix& b) {
  Rational best = 0;
  for (std::size_t i = 0; i < a.numerators.size(); ++i) {
    Rational d = make_rational(a.numerators[i], a.denominator);
    d -= make_rational(b.numerators[i], b.denominator);
    d = abs(d);
    if (d > best) best = d;
  }
  return to_double(best);
}

}  // namespace

StabilityReport stability_probe(const Weight& lambda, const CSpec& spec, int order, int step) {
  if (step < 0) throw DomainError("stability step must be nonnegative");
  StabilityReport r;
  r.order = order;
  r.step = step;
  const int n = lambda.dim();
  const GramMatrix g0 = gram_matrix(lambda, build_delta(spec, n, order));
  const GramMatrix g1 = gram_matrix(lambda, build_delta(spec, n, order + step));
  const GramMatrix g2 = gram_matrix(lambda, build_delta(spec, n, order + 2 * step));
  r.diff_first = max_abs_difference(g0, g1);
  r.diff_second = max_abs_difference(g1, g2);
  r.ratio = r.diff_first > 0 ? r.diff_second / r.diff_first : 0;
  if (const auto* k = std::get_if<Koornwinder>(&spec.family())) r.expected_ratio = std::pow(to_double(k->q), step);
  return r;
}

}  // namespace hyperorth
