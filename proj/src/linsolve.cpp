#include "hyperorth/linsolve.hpp"

#include <utility>

namespace hyperorth {

namespace {

void check_shape(std::size_t entries, std::size_t n) {
  if (entries != n * n) throw DimensionError("matrix is not n x n");
}

// One Bareiss step on rows below k; columns [k+1, width) of a row-major width-wide array.
void bareiss_step(std::vector<Integer>& a, std::size_t n, std::size_t width, std::size_t k, const Integer& prev,
                  std::vector<Integer>* rhs) {
  const Integer& pivot = a[k * width + k];
  Integer t;
  for (std::size_t i = k + 1; i < n; ++i) {
    const Integer factor = a[i * width + k];
    for (std::size_t j = k + 1; j < width; ++j) {
      Integer& x = a[i * width + j];
      x *= pivot;
      mpz_mul(t.get_mpz_t(), factor.get_mpz_t(), a[k * width + j].get_mpz_t());
      x -= t;
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
    }
    if (rhs) {
      Integer& y = (*rhs)[i];
      y *= pivot;
      mpz_mul(t.get_mpz_t(), factor.get_mpz_t(), (*rhs)[k].get_mpz_t());
      y -= t;
      mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), prev.get_mpz_t());
    }
    a[i * width + k] = 0;
  }
}

}  // namespace

std::vector<Rational> solve_fraction_free(std::vector<Integer> a, std::vector<Integer> b, std::size_t n) {
  check_shape(a.size(), n);
  if (b.size() != n) throw DimensionError("right-hand side length differs from the matrix size");
  if (n == 0) return {};

  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (sgn(a[i * n + k]) == 0) continue;
      if (best == n || mpz_cmpabs(a[i * n + k].get_mpz_t(), a[best * n + k].get_mpz_t()) > 0) best = i;
    }
    if (best == n) throw SingularSystemError("singular system: no pivot in column " + std::to_string(k), k);
    if (best != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[best * n + j]);
      std::swap(b[k], b[best]);
    }
    bareiss_step(a, n, n, k, prev, &b);
    prev = a[k * n + k];
  }

  // Cramer: y = det * x is integral, and each back-substitution quotient is exact.
  const Integer& det = a[(n - 1) * n + (n - 1)];
  std::vector<Integer> y(n);
  Integer t;
  for (std::size_t ii = n; ii-- > 0;) {
    Integer acc = det * b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) {
      mpz_mul(t.get_mpz_t(), a[ii * n + j].get_mpz_t(), y[j].get_mpz_t());
      acc -= t;
    }
    mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), a[ii * n + ii].get_mpz_t());
    y[ii] = std::move(acc);
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = make_rational(y[i], det);
  }
  return x;
}

std::vector<Rational> solve_exact(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t n) {
  check_shape(a.size(), n);
  if (b.size() != n) throw DimensionError("right-hand side length differs from the matrix size");
  std::vector<Integer> ai(n * n);
  std::vector<Integer> bi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer d = b[i].get_den();
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a[i * n + j].get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) ai[i * n + j] = (d / a[i * n + j].get_den()) * a[i * n + j].get_num();
    bi[i] = (d / b[i].get_den()) * b[i].get_num();
  }
  return solve_fraction_free(std::move(ai), std::move(bi), n);
}

std::vector<Integer> leading_principal_minors(std::vector<Integer> a, std::size_t n) {
  check_shape(a.size(), n);
  std::vector<Integer> minors;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a[k * n + k]);
    if (sgn(a[k * n + k]) == 0) break;
    bareiss_step(a, n, n, k, prev, nullptr);
    prev = a[k * n + k];
  }
  return minors;
}

}  // namespace hyperorth
