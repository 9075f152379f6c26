#pragma once

// Sparse exact-rational Laurent polynomials in N torus variables z_j = e^{i x_j}.
// The exponent vector n stands for the character e^{i<n,x>}.

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "hyperorth/hyperoctahedral.hpp"
#include "hyperorth/rational.hpp"

namespace hyperorth {

inline constexpr int kMaxVars = 8;

/// Exponent vector, zero padded past the polynomial's dimension so that the
/// built-in lexicographic order on the array is the lexicographic order on Z^N.
using Exponent = std::array<int, kMaxVars>;

Exponent make_exponent(std::span<const int> v);
IntVec to_intvec(const Exponent& e, int dim);

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : e) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 0x100000001b3ull;
    return h;
  }
};

/// Coordinates of a W-invariant polynomial in the symmetric monomial basis.
using MonomialCoords = std::map<Weight, Rational>;

class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(int dim);

  /// Takes ownership of a term map; zero coefficients are dropped.
  static LaurentPoly from_terms(int dim, TermMap terms);
  static LaurentPoly constant(int dim, const Rational& c);
  static LaurentPoly monomial(int dim, std::span<const int> exponent, const Rational& c = 1);

  /// sum_k coeffs[k] z^{(offset + k) * direction}; used to embed one-variable
  /// series along a root direction.
  static LaurentPoly along(int dim, std::span<const int> direction, int offset, std::span<const Rational> coeffs);

  int dim() const { return dim_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(std::span<const int> exponent) const;
  Rational coefficient(const Exponent& e) const;

  /// Adds c z^e, dropping the entry if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  /// Lexicographically largest term; precondition: nonzero.
  const TermMap::value_type& leading_term() const { return *terms_.rbegin(); }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  int dim_ = 0;
  TermMap terms_;
};

void require_same_dim(const LaurentPoly& a, const LaurentPoly& b);

/// Exponent negation (coefficients are real).
LaurentPoly conjugate(const LaurentPoly& f);

/// Coefficient of the zero exponent: the normalized torus integral.
Rational constant_term(const LaurentPoly& f);

/// f(x_w): the exponent n becomes w^T n.
LaurentPoly substitute(const LaurentPoly& f, const GroupElement& w);

bool is_invariant(const LaurentPoly& f);

LaurentPoly symmetric_monomial(const Weight& l);

/// Throws InvarianceError for non-invariant input.
MonomialCoords monomial_coordinates(const LaurentPoly& f);

/// Sum_mu c_mu m_mu.
LaurentPoly expand(const MonomialCoords& coords, int dim);

/// prod_{j<k} (z_j + z_j^-1 - z_k - z_k^-1) prod_j (z_j - z_j^-1).
const LaurentPoly& weyl_denominator(int n);

/// sum_w det(w) z^{act(w, v)}; zero iff v is singular.
LaurentPoly antisymmetrize(std::span<const int> v);

/// Quotient q with q * d == f; throws DivisibilityError on a nonzero remainder.
LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& d);

/// chi_mu = antisymmetrize(mu + rho) / delta, cached per weight.
const LaurentPoly& weyl_character(const Weight& mu);
const MonomialCoords& weyl_character_coords(const Weight& mu);

/// Empties the character cache (benchmarks use it to time cold paths).
void clear_character_cache();

}  // namespace hyperorth
