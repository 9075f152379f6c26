#pragma once

// Reduced c-functions c0, c1 (normalized to 1 at z = 0) and their truncated
// Taylor series. Three families are supported: explicit polynomials, the
// Hall-Littlewood case (degree 1 / 2) and the Koornwinder q-case
//   c0(z) = (tz;q)_inf / (qz;q)_inf,  c1(z) = prod_r (t_r z;q)_inf / (qz^2;q)_inf.

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "hyperorth/rational.hpp"
#include "json.hpp"

namespace hyperorth {

struct ExplicitPoly {
  std::vector<Rational> c0{Rational(1)};  ///< coefficients of c0, constant term first
  std::vector<Rational> c1{Rational(1)};
};

/// c0(z) = 1 - t z, c1(z) = (1 - t0 z)(1 - t1 z).
struct HallLittlewood {
  Rational t, t0, t1;
};

struct Koornwinder {
  Rational q, t;
  std::array<Rational, 4> tr;
};

class CSpec {
 public:
  using Family = std::variant<ExplicitPoly, HallLittlewood, Koornwinder>;

  CSpec() = default;
  /// Validates; throws DomainError.
  explicit CSpec(Family family);

  /// c0 = c1 = 1, the symplectic-character case.
  static CSpec trivial();

  const Family& family() const { return family_; }
  std::string family_name() const;
  bool is_polynomial() const { return !std::holds_alternative<Koornwinder>(family_); }

  /// For polynomial families: max(deg c0, ceil(deg c1 / 2)). Hall-Littlewood reports 1.
  int degree() const;

  /// {"family": "koornwinder", "q": "1/2", "t": "1/3", "t_r": [...]},
  /// {"family": "hall-littlewood", "t": .., "t0": .., "t1": ..},
  /// {"family": "explicit", "c0": [...], "c1": [...]}. Rationals are "p/q" strings.
  static CSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  friend bool operator==(const CSpec& a, const CSpec& b);

 private:
  Family family_ = ExplicitPoly{};
};

/// Coefficients a_0..a_K of a power series truncated at order K.
struct TruncSeries {
  std::vector<Rational> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs[n]; }
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;
};

/// Product truncated at order K.
TruncSeries series_multiply(const TruncSeries& a, const TruncSeries& b, int order);

/// (az;q)_inf up to z^K via Euler: coefficient (-a)^n q^{n(n-1)/2} / (q;q)_n.
TruncSeries pochhammer_inf_series(const Rational& a, const Rational& q, int order);

/// Taylor series of c_p, p in {0, 1}, to order K.
TruncSeries taylor_c(const CSpec& spec, int p, int order);

/// r with s * r = 1 + O(z^{K+1}); requires s_0 = 1.
TruncSeries reciprocal_series(const TruncSeries& s, int order);

/// Admissible exponential decay rate. Koornwinder: log(1/q). Polynomial families have
/// no finite budget; they report the degree beyond which Taylor coefficients vanish.
struct DecayBudget {
  bool exact_beyond_degree = false;
  double epsilon = 0;  ///< meaningful when !exact_beyond_degree
  int degree = 0;      ///< meaningful when exact_beyond_degree
};
DecayBudget decay_budget(const CSpec& spec);

/// Samples |c_p| on 512 points of the unit circle (the Koornwinder series truncated at
/// `order`) and returns a message for each p whose minimum drops below 1e-6.
std::vector<std::string> zero_free_warnings(const CSpec& spec, int order = 60);

}  // namespace hyperorth
