#include "hyperorth/orthosys.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hyperorth/errors.hpp"
#include "hyperorth/linsolve.hpp"

namespace hyperorth {

std::string to_string(Ordering o) { return o == Ordering::Dominance ? "dominance" : "lexicographic"; }

Ordering parse_ordering(const std::string& text) {
  if (text == "dominance") return Ordering::Dominance;
  if (text == "lexicographic" || text == "lex") return Ordering::Lexicographic;
  throw ParseError("unknown ordering '" + text + "' (expected dominance or lexicographic)");
}

std::vector<Weight> expansion_basis(const Weight& lambda, Ordering ordering) {
  return ordering == Ordering::Dominance ? weights_below(lambda) : weights_lex_below(lambda);
}

MonicOrthoPoly monic_orthogonal(const Weight& lambda, Ordering ordering, const DeltaApprox& delta) {
  if (lambda.dim() != delta.dim()) throw DimensionError("weight dimension differs from the weight function");
  const std::vector<Weight> basis = expansion_basis(lambda, ordering);
  const std::size_t n = basis.size() - 1;  // lambda is the largest element, stored last
  const std::vector<Integer> g = kernels::gram_parallel(basis, basis, delta.index());
  const std::size_t width = basis.size();

  std::vector<Integer> a(n * n);
  std::vector<Integer> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = g[i * width + j];
    b[i] = -g[i * width + n];
  }
  std::vector<Rational> c;
  try {
    c = solve_fraction_free(std::move(a), std::move(b), n);
  } catch (const SingularSystemError& e) {
    throw SingularSystemError("Gram system for " + to_string(lambda.span()) + " is singular at column " +
                                  std::to_string(e.column) + " (weight " + to_string(basis[e.column].span()) +
                                  "); the truncation order K may be too small",
                              e.column);
  }

  MonicOrthoPoly out;
  out.lambda = lambda;
  out.ordering = ordering;
  out.order = delta.order();
  Rational norm = Rational(g[n * width + n]);
  for (std::size_t i = 0; i < n; ++i) {
    norm += c[i] * Rational(g[n * width + i]);
    out.coords.emplace(basis[i], std::move(c[i]));
  }
  out.coords.emplace(lambda, Rational(1));
  norm /= Rational(delta.scaled().denominator);
  out.norm_sq = std::move(norm);
  return out;
}

LaurentPoly truncated_c_product(const CSpec& spec, int dim, int m) {
  if (m < 0) throw DomainError("truncation level m must be nonnegative");
  const TruncSeries c0 = taylor_c(spec, 0, m);
  const TruncSeries c1 = taylor_c(spec, 1, 2 * m);
  LaurentPoly acc = LaurentPoly::constant(dim, 1);
  const auto n = static_cast<std::size_t>(dim);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      std::vector<int> sum(n, 0);
      std::vector<int> diff(n, 0);
      sum[j] = sum[k] = -1;
      diff[j] = -1;
      diff[k] = 1;
      acc = acc * LaurentPoly::along(dim, sum, 0, c0.coeffs);
      acc = acc * LaurentPoly::along(dim, diff, 0, c0.coeffs);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> e(n, 0);
    e[j] = -1;
    acc = acc * LaurentPoly::along(dim, e, 0, c1.coeffs);
  }
  return acc;
}

namespace {

// Signed coefficient of each regular dominant vector rep in the antisymmetrized
// product C^(m) z^{lambda + rho}.
std::map<IntVec, Rational> alternant_coefficients(const Weight& lambda, int m, const CSpec& spec) {
  const int n = lambda.dim();
  const Weight r = rho(n);
  const LaurentPoly c = truncated_c_product(spec, n, m);
  std::map<IntVec, Rational> acc;
  IntVec nu(static_cast<std::size_t>(n));
  for (const auto& [e, coeff] : c.terms()) {
    for (std::size_t j = 0; j < nu.size(); ++j) nu[j] = lambda[j] + r[j] + e[j];
    DominantRep d = dominant_representative(nu);
    if (d.singular) continue;
    Rational& slot = acc[std::move(d.rep)];
    if (d.parity > 0) slot += coeff;
    else slot -= coeff;
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return acc;
}

void drop_zeros(MonomialCoords& coords) {
  std::erase_if(coords, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

AsymptoticPoly truncated_asymptotic(const Weight& lambda, int m, const CSpec& spec) {
  const int n = lambda.dim();
  const Weight r = rho(n);
  AsymptoticPoly out;
  out.lambda = lambda;
  out.m = m;
  for (const auto& [rep, coeff] : alternant_coefficients(lambda, m, spec)) {
    IntVec mu(rep.size());
    for (std::size_t j = 0; j < rep.size(); ++j) mu[j] = rep[j] - r[j];
    for (const auto& [w, c] : weyl_character_coords(Weight(std::move(mu)))) out.coords[w] += coeff * c;
  }
  drop_zeros(out.coords);
  return out;
}

AsymptoticPoly truncated_asymptotic_by_division(const Weight& lambda, int m, const CSpec& spec) {
  const int n = lambda.dim();
  LaurentPoly alternant(n);
  for (const auto& [rep, coeff] : alternant_coefficients(lambda, m, spec)) {
    LaurentPoly a = antisymmetrize(rep);
    a *= coeff;
    alternant += a;
  }
  AsymptoticPoly out;
  out.lambda = lambda;
  out.m = m;
  out.coords = monomial_coordinates(exact_divide(alternant, weyl_denominator(n)));
  return out;
}

int default_m_ref(const CSpec& spec, int m) {
  if (spec.is_polynomial()) return std::max(spec.degree(), m);
  return m + 10;
}

ErrorReport asymptotic_error(const Weight& lambda, const DeltaApprox& delta, int m, int m_ref) {
  if (m < 0 || m_ref < m) throw DomainError("asymptotic error needs 0 <= m <= m_ref");
  const MonicOrthoPoly p = monic_orthogonal(lambda, Ordering::Dominance, delta);
  const AsymptoticPoly a = truncated_asymptotic_by_division(lambda, m_ref, delta.spec());

  ErrorReport r;
  r.lambda = lambda;
  r.min_gap = min_gap(lambda);
  r.m = m;
  r.m_ref = m_ref;
  r.order = delta.order();
  r.tail_hint = delta.tail_hint();
  r.norm_sq = p.norm_sq;
  r.cross = inner_product(p.coords, a.coords, delta);
  r.asym_sq = inner_product(a.coords, a.coords, delta);

  // err^2 = 1 + Y - 2 X / sqrt(s). Nonnegativity is decided exactly:
  // for X > 0 it is (1 + Y)^2 s >= 4 X^2.
  const Rational one_plus = 1 + r.asym_sq;
  if (r.cross > 0) r.nonnegative = one_plus * one_plus * r.norm_sq >= 4 * r.cross * r.cross;
  else r.nonnegative = one_plus >= 0;

  constexpr unsigned kBits = 1024;
  const mpf_class s(r.norm_sq, kBits);
  const mpf_class x(r.cross, kBits);
  const mpf_class y(r.asym_sq, kBits);
  mpf_class root(0, kBits);
  mpf_sqrt(root.get_mpf_t(), s.get_mpf_t());
  mpf_class e2(1 + y - 2 * x / root, kBits);
  {
    std::ostringstream os;
    os.precision(30);
    os << e2;
    r.err_norm_sq = os.str();
  }
  if (e2 < 0) e2 = 0;
  mpf_class e(0, kBits);
  mpf_sqrt(e.get_mpf_t(), e2.get_mpf_t());
  r.err_norm = e.get_d();
  r.n_lambda = root.get_d();
  r.asym_norm = std::sqrt(to_double(r.asym_sq));
  return r;
}

ExactReport verify_exact(const Weight& lambda, const DeltaApprox& delta, Ordering ordering) {
  const CSpec& spec = delta.spec();
  if (!spec.is_polynomial()) throw DomainError("exactness check needs a polynomial c-function family");
  const int degree = spec.degree();
  const int gap = min_gap(lambda);
  if (gap < degree - 1) throw DomainError("exactness check needs min_gap(lambda) >= M - 1");

  const MonicOrthoPoly p = monic_orthogonal(lambda, ordering, delta);
  const AsymptoticPoly a = truncated_asymptotic(lambda, degree, spec);
  const auto lead = a.coords.find(lambda);
  if (lead == a.coords.end()) throw DegeneracyError("truncated asymptotic function has no leading term");

  ExactReport r;
  r.lambda = lambda;
  r.degree = degree;
  r.max_coord_deviation = 0;
  std::map<Weight, Rational> diff;
  for (const auto& [w, c] : p.coords) diff[w] += c;
  for (const auto& [w, c] : a.coords) diff[w] -= c / lead->second;
  for (const auto& [w, d] : diff) r.max_coord_deviation = std::max(r.max_coord_deviation, Rational(abs(d)));
  r.exact = r.max_coord_deviation == 0;
  if (gap >= degree) {
    // |sqrt(s) - 1| = |s - 1| / (sqrt(s) + 1), with s - 1 exact so tiny deviations survive
    const Rational s = inner_product(a.coords, a.coords, delta);
    r.norm_deviation = to_double(Rational(abs(s - 1))) / (std::sqrt(to_double(s)) + 1);
  }
  return r;
}

BiorthReport biorthogonality_check(const Weight& lambda, int m, const DeltaApprox& delta) {
  if (m < 0 || m > min_gap(lambda)) throw DomainError("biorthogonality check needs 0 <= m <= min_gap(lambda)");
  const AsymptoticPoly a = truncated_asymptotic(lambda, m, delta.spec());
  BiorthReport r;
  r.lambda = lambda;
  r.m = m;
  r.basis = weights_below(lambda);
  r.values = pair_with_monomials(a.coords, r.basis, delta);
  for (std::size_t i = 0; i < r.basis.size(); ++i) {
    const Rational target = r.basis[i] == lambda ? 1 : 0;
    r.max_deviation = std::max(r.max_deviation, std::abs(to_double(r.values[i] - target)));
  }
  return r;
}

DecayFit decay_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw DomainError("decay fit needs at least three points");
  double sx = 0, sy = 0;
  for (const auto& [x, err] : points) {
    if (!(err > 0)) throw DomainError("decay fit needs positive error values; exact zeros are reported separately");
    sx += x;
    sy += std::log(err);
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, err] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (std::log(err) - my);
  }
  if (sxx == 0) throw DomainError("decay fit needs at least two distinct x values");
  DecayFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (const auto& [x, err] : points) {
    const double res = std::log(err) - (f.intercept + f.slope * x);
    ss += res * res;
  }
  f.residual = std::sqrt(ss / n);
  return f;
}

OrthoScan orthogonality_scan(const std::vector<Weight>& box, const DeltaApprox& delta, Ordering ordering) {
  OrthoScan s;
  s.box = box;
  std::vector<MonicOrthoPoly> polys;
  polys.reserve(box.size());
  for (const Weight& w : box) polys.push_back(monic_orthogonal(w, ordering, delta));
  const std::size_t n = box.size();
  s.values.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Rational x = i == j ? polys[i].norm_sq : inner_product(polys[i].coords, polys[j].coords, delta);
      const double v = to_double(x) / std::sqrt(to_double(polys[i].norm_sq) * to_double(polys[j].norm_sq));
      s.values[i * n + j] = s.values[j * n + i] = v;
      if (i != j && std::abs(v) > s.max_deviation) {
        s.max_deviation = std::abs(v);
        s.worst_row = i;
        s.worst_col = j;
      }
    }
  }
  return s;
}

}  // namespace hyperorth
