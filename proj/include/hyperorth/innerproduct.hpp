#pragma once

// The truncated weight Delta_K and the constant-term inner product it defines.
//
//   Delta_K = |W|^-1 prod_{j<k} h0(z_j z_k) h0(z_j / z_k) prod_j h1(z_j),
//   h0(w) = (1 - w)(1 - 1/w) R0(w) R0(1/w),  h1(z) = (1 - z^2)(1 - z^-2) R1(z) R1(1/z),
//
// where R_p is 1/c_p truncated at order K.

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "hyperorth/cfuncs.hpp"
#include "hyperorth/kernels.hpp"
#include "hyperorth/laurent.hpp"

namespace hyperorth {

class DeltaApprox {
 public:
  DeltaApprox(int dim, int order, CSpec spec, ScaledLaurent scaled, double tail_hint);

  int dim() const { return dim_; }
  int order() const { return order_; }
  const CSpec& spec() const { return spec_; }
  double tail_hint() const { return tail_hint_; }

  const ScaledLaurent& scaled() const { return data_->scaled; }
  const ScaledIndex& index() const { return data_->index; }
  /// Rational form, built on first use.
  const LaurentPoly& poly() const;

 private:
  struct Data {
    explicit Data(ScaledLaurent s) : scaled(std::move(s)), index(scaled) {}
    ScaledLaurent scaled;
    ScaledIndex index;
    std::once_flag poly_once;
    LaurentPoly poly;
  };
  int dim_;
  int order_;
  CSpec spec_;
  double tail_hint_;
  std::shared_ptr<Data> data_;
};

/// One-variable factor h_p as Laurent coefficients of w^{-(K+2)} .. w^{K+2}.
std::vector<Rational> root_factor(const CSpec& spec, int p, int order);

DeltaApprox build_delta(const CSpec& spec, int dim, int order);

/// CT(f conj(g) Delta_K).
Rational inner_product(const LaurentPoly& f, const LaurentPoly& g, const DeltaApprox& delta);

/// <f, g> for invariant f, g given by monomial coordinates.
Rational inner_product(const MonomialCoords& f, const MonomialCoords& g, const DeltaApprox& delta);

/// <f, m_mu> for every mu in `basis`.
std::vector<Rational> pair_with_monomials(const MonomialCoords& f, std::span<const Weight> basis,
                                          const DeltaApprox& delta);

struct GramMatrix {
  std::vector<Weight> basis;
  std::vector<Integer> numerators;  ///< row-major
  Integer denominator = 1;

  std::size_t size() const { return basis.size(); }
  Rational at(std::size_t i, std::size_t j) const;
};

GramMatrix gram_matrix(std::vector<Weight> basis, const DeltaApprox& delta);
/// Basis weights_below(lambda).
GramMatrix gram_matrix(const Weight& lambda, const DeltaApprox& delta);

/// Sign of every leading principal minor; false at the first nonpositive one.
bool leading_minors_positive(const GramMatrix& g);

struct StabilityReport {
  int order = 0;
  int step = 0;
  double diff_first = 0;   ///< max |G_{K+s} - G_K|
  double diff_second = 0;  ///< max |G_{K+2s} - G_{K+s}|
  double ratio = 0;        ///< diff_second / diff_first (0 when diff_first is 0)
  double expected_ratio = 0;  ///< q^s for Koornwinder, 0 otherwise
};

StabilityReport stability_probe(const Weight& lambda, const CSpec& spec, int order, int step = 10);

}  // namespace hyperorth
