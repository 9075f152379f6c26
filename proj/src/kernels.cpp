#include "hyperorth/kernels.hpp"

#include <omp.h>

#include <map>

#include "hyperorth/errors.hpp"

namespace hyperorth {

namespace {

Exponent add_exponents(const Exponent& a, const Exponent& b, int dim) {
  Exponent e{};
  for (int j = 0; j < dim; ++j) e[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)] + b[static_cast<std::size_t>(j)];
  return e;
}

Exponent sub_exponents(const Exponent& a, const Exponent& b, int dim) {
  Exponent e{};
  for (int j = 0; j < dim; ++j) e[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(j)];
  return e;
}

template <typename Map, typename Value>
void accumulate(Map& acc, const Exponent& e, const Value& v) {
  auto [it, inserted] = acc.try_emplace(e, v);
  if (!inserted) it->second += v;
}

void check_weight_dims(std::span<const Weight> rows, std::span<const Weight> cols, const ScaledIndex& weight) {
  for (const Weight& w : rows)
    if (w.dim() != weight.poly().dim) throw DimensionError("basis weight dimension differs from the weight function");
  for (const Weight& w : cols)
    if (w.dim() != weight.poly().dim) throw DimensionError("basis weight dimension differs from the weight function");
}

std::vector<std::vector<Exponent>> orbits_of(std::span<const Weight> basis) {
  std::vector<std::vector<Exponent>> out;
  out.reserve(basis.size());
  for (const Weight& w : basis) {
    std::vector<Exponent> orb;
    for (const IntVec& v : orbit(w)) orb.push_back(make_exponent(v));
    out.push_back(std::move(orb));
  }
  return out;
}

// Sum over both orbits of the weight numerators at b - a.
Integer gram_entry_full(const std::vector<Exponent>& row_orbit, const std::vector<Exponent>& col_orbit,
                        const ScaledIndex& weight) {
  const int dim = weight.poly().dim;
  Integer s = 0;
  for (const Exponent& a : row_orbit)
    for (const Exponent& b : col_orbit)
      if (const Integer* v = weight.find(sub_exponents(b, a, dim))) s += *v;
  return s;
}

// W-invariance of the weight: sum_{a,b} W_{b-a} = |orbit(mu)| sum_b W_{b-mu}.
Integer gram_entry_invariant(const Weight& row, std::size_t row_orbit_size, const std::vector<Exponent>& col_orbit,
                             const ScaledIndex& weight) {
  const int dim = weight.poly().dim;
  const Exponent mu = make_exponent(row.span());
  Integer s = 0;
  for (const Exponent& b : col_orbit)
    if (const Integer* v = weight.find(sub_exponents(b, mu, dim))) s += *v;
  s *= static_cast<unsigned long>(row_orbit_size);
  return s;
}

ScaledLaurent finish_scaled(int dim, Integer denominator, std::map<Exponent, Integer>&& acc) {
  ScaledLaurent out;
  out.dim = dim;
  Integer g = denominator;
  for (auto& [e, v] : acc) {
    if (sgn(v) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.terms.emplace_back(e, std::move(v));
  }
  if (out.terms.empty()) g = denominator;
  if (g != 1) {
    for (auto& [e, v] : out.terms) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(denominator.get_mpz_t(), denominator.get_mpz_t(), g.get_mpz_t());
  }
  if (out.terms.empty()) denominator = 1;
  out.denominator = std::move(denominator);
  return out;
}

}  // namespace

ScaledLaurent ScaledLaurent::from(const LaurentPoly& p) {
  ScaledLaurent out;
  out.dim = p.dim();
  Integer d = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  out.terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    Integer num = d / c.get_den();
    num *= c.get_num();
    out.terms.emplace_back(e, std::move(num));
  }
  out.denominator = std::move(d);
  return out;
}

LaurentPoly ScaledLaurent::to_laurent() const {
  LaurentPoly::TermMap map;
  for (const auto& [e, v] : terms) {
    map.emplace_hint(map.end(), e, make_rational(v, denominator));
  }
  return LaurentPoly::from_terms(dim, std::move(map));
}

ScaledIndex::ScaledIndex(const ScaledLaurent& p) : poly_(&p) {
  index_.reserve(p.terms.size());
  for (std::size_t i = 0; i < p.terms.size(); ++i) index_.emplace(p.terms[i].first, i);
}

namespace kernels {

LaurentPoly multiply_serial(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_dim(a, b);
  const int dim = a.dim();
  LaurentPoly::TermMap acc;
  Rational prod;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      accumulate(acc, add_exponents(ea, eb, dim), prod);
    }
  }
  return LaurentPoly::from_terms(dim, std::move(acc));
}

LaurentPoly multiply_parallel(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_dim(a, b);
  const int dim = a.dim();
  std::vector<const LaurentPoly::TermMap::value_type*> lhs;
  lhs.reserve(a.size());
  for (const auto& t : a.terms()) lhs.push_back(&t);

  const int threads = omp_get_max_threads();
  std::vector<LaurentPoly::TermMap> partial(static_cast<std::size_t>(threads));
  const auto n = static_cast<long>(lhs.size());
#pragma omp parallel num_threads(threads)
  {
    auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
    Rational prod;
#pragma omp for schedule(static)
    for (long i = 0; i < n; ++i) {
      const auto& [ea, ca] = *lhs[static_cast<std::size_t>(i)];
      for (const auto& [eb, cb] : b.terms()) {
        mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
        accumulate(acc, add_exponents(ea, eb, dim), prod);
      }
    }
  }
  LaurentPoly::TermMap merged = std::move(partial.front());
  for (std::size_t t = 1; t < partial.size(); ++t)
    for (auto& [e, c] : partial[t]) accumulate(merged, e, c);
  return LaurentPoly::from_terms(dim, std::move(merged));
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
  constexpr std::size_t kParallelThreshold = 1u << 14;
  if (omp_get_max_threads() > 1 && a.size() * b.size() >= kParallelThreshold) return multiply_parallel(a, b);
  return multiply_serial(a, b);
}

ScaledLaurent multiply_scaled_serial(const ScaledLaurent& a, const ScaledLaurent& b) {
  if (a.dim != b.dim) throw DimensionError("dimension mismatch in scaled product");
  std::map<Exponent, Integer> acc;
  Integer prod;
  for (const auto& [ea, va] : a.terms) {
    for (const auto& [eb, vb] : b.terms) {
      mpz_mul(prod.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
      accumulate(acc, add_exponents(ea, eb, a.dim), prod);
    }
  }
  return finish_scaled(a.dim, a.denominator * b.denominator, std::move(acc));
}

ScaledLaurent multiply_scaled_parallel(const ScaledLaurent& a, const ScaledLaurent& b) {
  if (a.dim != b.dim) throw DimensionError("dimension mismatch in scaled product");
  const int threads = omp_get_max_threads();
  std::vector<std::map<Exponent, Integer>> partial(static_cast<std::size_t>(threads));
  const auto n = static_cast<long>(a.terms.size());
#pragma omp parallel num_threads(threads)
  {
    auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
    Integer prod;
#pragma omp for schedule(static)
    for (long i = 0; i < n; ++i) {
      const auto& [ea, va] = a.terms[static_cast<std::size_t>(i)];
      for (const auto& [eb, vb] : b.terms) {
        mpz_mul(prod.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
        accumulate(acc, add_exponents(ea, eb, a.dim), prod);
      }
    }
  }
  std::map<Exponent, Integer> merged = std::move(partial.front());
  for (std::size_t t = 1; t < partial.size(); ++t)
    for (auto& [e, v] : partial[t]) accumulate(merged, e, v);
  return finish_scaled(a.dim, a.denominator * b.denominator, std::move(merged));
}

ScaledLaurent multiply_scaled(const ScaledLaurent& a, const ScaledLaurent& b) {
  constexpr std::size_t kParallelThreshold = 1u << 14;
  if (omp_get_max_threads() > 1 && a.terms.size() * b.terms.size() >= kParallelThreshold)
    return multiply_scaled_parallel(a, b);
  return multiply_scaled_serial(a, b);
}

Rational pairing_serial(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& weight) {
  require_same_dim(f, g);
  require_same_dim(f, weight);
  return constant_term(multiply_serial(multiply_serial(f, conjugate(g)), weight));
}

Rational pairing_parallel(const LaurentPoly& f, const LaurentPoly& g, const ScaledIndex& weight) {
  require_same_dim(f, g);
  if (f.dim() != weight.poly().dim) throw DimensionError("dimension mismatch with weight function");
  const int dim = f.dim();
  const ScaledLaurent fs = ScaledLaurent::from(f);
  const ScaledLaurent gs = ScaledLaurent::from(g);

  const int threads = omp_get_max_threads();
  std::vector<Integer> partial(static_cast<std::size_t>(threads), Integer(0));
  const auto n = static_cast<long>(fs.terms.size());
#pragma omp parallel num_threads(threads)
  {
    Integer& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
    Integer inner;
#pragma omp for schedule(static)
    for (long i = 0; i < n; ++i) {
      const auto& [ea, fa] = fs.terms[static_cast<std::size_t>(i)];
      inner = 0;
      for (const auto& [eb, gb] : gs.terms) {
        if (const Integer* w = weight.find(sub_exponents(eb, ea, dim))) mpz_addmul(inner.get_mpz_t(), gb.get_mpz_t(), w->get_mpz_t());
      }
      mpz_addmul(acc.get_mpz_t(), fa.get_mpz_t(), inner.get_mpz_t());
    }
  }
  Integer total = 0;
  for (const Integer& p : partial) total += p;
  return make_rational(total, fs.denominator * gs.denominator * weight.poly().denominator);
}

std::vector<Integer> gram_serial(std::span<const Weight> rows, std::span<const Weight> cols, const ScaledIndex& weight) {
  check_weight_dims(rows, cols, weight);
  const auto row_orbits = orbits_of(rows);
  const auto col_orbits = orbits_of(cols);
  std::vector<Integer> out(rows.size() * cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out[i * cols.size() + j] = gram_entry_full(row_orbits[i], col_orbits[j], weight);
  return out;
}

std::vector<Integer> gram_parallel(std::span<const Weight> rows, std::span<const Weight> cols,
                                   const ScaledIndex& weight) {
  check_weight_dims(rows, cols, weight);
  const auto col_orbits = orbits_of(cols);
  std::vector<std::size_t> row_sizes(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) row_sizes[i] = orbit(rows[i]).size();
  std::vector<Integer> out(rows.size() * cols.size());
  const auto total = static_cast<long>(out.size());
  const auto ncols = static_cast<long>(cols.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long idx = 0; idx < total; ++idx) {
    const auto i = static_cast<std::size_t>(idx / ncols);
    const auto j = static_cast<std::size_t>(idx % ncols);
    out[static_cast<std::size_t>(idx)] = gram_entry_invariant(rows[i], row_sizes[i], col_orbits[j], weight);
  }
  return out;
}

std::vector<Integer> gram_apply_serial(std::span<const Weight> rows, std::span<const Weight> cols,
                                       std::span<const Integer> x, const ScaledIndex& weight) {
  if (x.size() != cols.size()) throw DimensionError("vector length differs from the column basis");
  const std::vector<Integer> g = gram_serial(rows, cols, weight);
  std::vector<Integer> out(rows.size(), Integer(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      mpz_addmul(out[i].get_mpz_t(), g[i * cols.size() + j].get_mpz_t(), x[j].get_mpz_t());
  return out;
}

std::vector<Integer> gram_apply_parallel(std::span<const Weight> rows, std::span<const Weight> cols,
                                         std::span<const Integer> x, const ScaledIndex& weight) {
  check_weight_dims(rows, cols, weight);
  if (x.size() != cols.size()) throw DimensionError("vector length differs from the column basis");
  const auto col_orbits = orbits_of(cols);
  std::vector<Integer> out(rows.size(), Integer(0));
  const auto nrows = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long ii = 0; ii < nrows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const std::size_t row_size = orbit(rows[i]).size();
    Integer& acc = out[i];
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (sgn(x[j]) == 0) continue;
      const Integer entry = gram_entry_invariant(rows[i], row_size, col_orbits[j], weight);
      mpz_addmul(acc.get_mpz_t(), entry.get_mpz_t(), x[j].get_mpz_t());
    }
  }
  return out;
}

}  // namespace kernels
}  // namespace hyperorth
