#pragma once

// Gram-Schmidt orthogonal polynomials over the dominance (or lexicographic)
// ordered monomial basis, the truncated asymptotic functions P^(m), and the
// checks that compare the two.

#include <optional>
#include <string>
#include <vector>

#include "hyperorth/innerproduct.hpp"

namespace hyperorth {

enum class Ordering { Dominance, Lexicographic };

std::string to_string(Ordering o);
/// "dominance" or "lexicographic"; throws ParseError.
Ordering parse_ordering(const std::string& text);

/// Basis of the expansion of P_lambda: {mu <= lambda} in the chosen order, sorted.
std::vector<Weight> expansion_basis(const Weight& lambda, Ordering ordering);

struct MonicOrthoPoly {
  Weight lambda;
  MonomialCoords coords;  ///< coords[lambda] == 1
  Rational norm_sq;       ///< <P, P>
  Ordering ordering = Ordering::Dominance;
  int order = 0;          ///< K of the weight used
};

/// Throws SingularSystemError (a DegeneracyError) naming the first weight whose
/// column has no pivot.
MonicOrthoPoly monic_orthogonal(const Weight& lambda, Ordering ordering, const DeltaApprox& delta);

struct AsymptoticPoly {
  Weight lambda;
  int m = 0;
  MonomialCoords coords;
};

/// The product C^(m)(x) = prod_{j<k} c0^(m)(1/(z_j z_k)) c0^(m)(z_k/z_j) prod_j c1^(m)(1/z_j),
/// with c0 cut at degree m and c1 at degree 2m.
LaurentPoly truncated_c_product(const CSpec& spec, int dim, int m);

/// P^(m) by summing signed Weyl characters over the terms of C^(m).
AsymptoticPoly truncated_asymptotic(const Weight& lambda, int m, const CSpec& spec);
/// Same value, computed by antisymmetrizing once and dividing by delta.
AsymptoticPoly truncated_asymptotic_by_division(const Weight& lambda, int m, const CSpec& spec);

struct ErrorReport {
  Weight lambda;
  int min_gap = 0;
  int m = 0;
  int m_ref = 0;
  int order = 0;
  Rational norm_sq;    ///< <P~, P~> of the monic Gram-Schmidt polynomial
  Rational cross;      ///< <P~, P^(m_ref)>
  Rational asym_sq;    ///< <P^(m_ref), P^(m_ref)>
  std::string err_norm_sq;  ///< 1 + asym_sq - 2 cross / sqrt(norm_sq), high precision decimal
  double err_norm = 0;
  double n_lambda = 0;   ///< sqrt(norm_sq)
  double asym_norm = 0;  ///< sqrt(asym_sq)
  double tail_hint = 0;
  bool nonnegative = true;  ///< exact check of err_norm_sq >= 0
};

/// ||P_lambda - P^(m_ref)_lambda|| with P_lambda = P~ / sqrt(norm_sq).
ErrorReport asymptotic_error(const Weight& lambda, const DeltaApprox& delta, int m, int m_ref);

/// Default m_ref: max(M, m) for polynomial families, m + 10 for Koornwinder.
int default_m_ref(const CSpec& spec, int m);

struct ExactReport {
  Weight lambda;
  int degree = 0;
  Rational max_coord_deviation;   ///< between P~ and P^(M) / leading coefficient
  std::optional<double> norm_deviation;  ///< | ||P^(M)|| - 1 |, only when min_gap >= M
  bool exact = false;             ///< coordinates agree exactly

  bool passed(double tol) const {
    return to_double(max_coord_deviation) <= tol && (!norm_deviation || *norm_deviation <= tol);
  }
};

/// Requires a polynomial family and min_gap(lambda) >= M - 1 (DomainError otherwise).
ExactReport verify_exact(const Weight& lambda, const DeltaApprox& delta, Ordering ordering = Ordering::Dominance);

struct BiorthReport {
  Weight lambda;
  int m = 0;
  std::vector<Weight> basis;
  std::vector<Rational> values;  ///< <P^(m), m_mu>
  double max_deviation = 0;      ///< max |value - [mu == lambda]|
};

/// Requires m <= min_gap(lambda).
BiorthReport biorthogonality_check(const Weight& lambda, int m, const DeltaApprox& delta);

struct DecayFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  ///< root mean square of the fit residuals
};

/// Least squares line through (x, log err). Needs >= 3 points, all err > 0.
DecayFit decay_fit(const std::vector<std::pair<double, double>>& points);

struct OrthoScan {
  std::vector<Weight> box;
  std::vector<double> values;  ///< row-major <P_lambda, P_mu> of unit-norm polynomials
  double max_deviation = 0;    ///< over lambda != mu
  std::size_t worst_row = 0;
  std::size_t worst_col = 0;
};

OrthoScan orthogonality_scan(const std::vector<Weight>& box, const DeltaApprox& delta,
                             Ordering ordering = Ordering::Dominance);

}  // namespace hyperorth
