#pragma once

// Hot loops of the exact pipeline. Every kernel exists as a serial reference
// (`*_serial`) and an OpenMP variant (`*_parallel`). Arithmetic is exact, so the
// two agree bit for bit regardless of the thread count; tests assert that and
// bench/bench_kernels.cpp times them against each other.

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "hyperorth/laurent.hpp"

namespace hyperorth {

/// Laurent polynomial stored as integer numerators over one common denominator.
/// Products of such polynomials need no gcd work, which is what makes
/// assembling the truncated weight affordable.
struct ScaledLaurent {
  int dim = 0;
  Integer denominator = 1;
  std::vector<std::pair<Exponent, Integer>> terms;  ///< sorted by exponent, no zeros

  static ScaledLaurent from(const LaurentPoly& p);
  LaurentPoly to_laurent() const;
};

/// Read-only coefficient lookup for a ScaledLaurent.
class ScaledIndex {
 public:
  explicit ScaledIndex(const ScaledLaurent& p);
  /// Numerator at e, or nullptr when the coefficient is zero.
  const Integer* find(const Exponent& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? nullptr : &poly_->terms[it->second].second;
  }
  const ScaledLaurent& poly() const { return *poly_; }

 private:
  const ScaledLaurent* poly_;
  std::unordered_map<Exponent, std::size_t, ExponentHash> index_;
};

namespace kernels {

LaurentPoly multiply_serial(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly multiply_parallel(const LaurentPoly& a, const LaurentPoly& b);
/// Picks the parallel kernel once the term-pair count is large enough to pay off.
LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);

ScaledLaurent multiply_scaled_serial(const ScaledLaurent& a, const ScaledLaurent& b);
ScaledLaurent multiply_scaled_parallel(const ScaledLaurent& a, const ScaledLaurent& b);
ScaledLaurent multiply_scaled(const ScaledLaurent& a, const ScaledLaurent& b);

/// CT(f * conj(g) * weight), by literally forming the product.
Rational pairing_serial(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& weight);
/// Same value as sum_{a,b} f_a g_b weight_{b-a}, without forming the product.
Rational pairing_parallel(const LaurentPoly& f, const LaurentPoly& g, const ScaledIndex& weight);

/// Numerators of <m_mu, m_nu> over the weight's common denominator, row-major
/// rows x cols. The serial version sums over both orbits; the parallel one uses
/// W-invariance of the weight and sums over one orbit only.
std::vector<Integer> gram_serial(std::span<const Weight> rows, std::span<const Weight> cols, const ScaledIndex& weight);
std::vector<Integer> gram_parallel(std::span<const Weight> rows, std::span<const Weight> cols, const ScaledIndex& weight);

/// out_i = sum_j G(rows_i, cols_j) * x_j (numerators), never storing G.
std::vector<Integer> gram_apply_serial(std::span<const Weight> rows, std::span<const Weight> cols,
                                       std::span<const Integer> x, const ScaledIndex& weight);
std::vector<Integer> gram_apply_parallel(std::span<const Weight> rows, std::span<const Weight> cols,
                                         std::span<const Integer> x, const ScaledIndex& weight);

}  // namespace kernels
}  // namespace hyperorth
