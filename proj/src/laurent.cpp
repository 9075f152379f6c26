#include "hyperorth/laurent.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <shared_mutex>

#include "hyperorth/errors.hpp"
#include "hyperorth/kernels.hpp"

namespace hyperorth {

Exponent make_exponent(std::span<const int> v) {
  if (v.size() > static_cast<std::size_t>(kMaxVars)) throw DimensionError("at most 8 torus variables are supported");
  Exponent e{};
  std::copy(v.begin(), v.end(), e.begin());
  return e;
}

IntVec to_intvec(const Exponent& e, int dim) { return IntVec(e.begin(), e.begin() + dim); }

LaurentPoly::LaurentPoly(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxVars) throw DimensionError("Laurent polynomials need 1 <= N <= 8 variables");
}

LaurentPoly LaurentPoly::from_terms(int dim, TermMap terms) {
  LaurentPoly p(dim);
  std::erase_if(terms, [](const auto& t) { return sgn(t.second) == 0; });
  p.terms_ = std::move(terms);
  return p;
}

LaurentPoly LaurentPoly::constant(int dim, const Rational& c) {
  LaurentPoly p(dim);
  p.add_term(Exponent{}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int dim, std::span<const int> exponent, const Rational& c) {
  if (static_cast<int>(exponent.size()) != dim) throw DimensionError("exponent length differs from N");
  LaurentPoly p(dim);
  p.add_term(make_exponent(exponent), c);
  return p;
}

LaurentPoly LaurentPoly::along(int dim, std::span<const int> direction, int offset, std::span<const Rational> coeffs) {
  if (static_cast<int>(direction.size()) != dim) throw DimensionError("direction length differs from N");
  LaurentPoly p(dim);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    const int scale = offset + static_cast<int>(k);
    Exponent e{};
    for (int j = 0; j < dim; ++j) e[static_cast<std::size_t>(j)] = scale * direction[static_cast<std::size_t>(j)];
    p.add_term(e, coeffs[k]);
  }
  return p;
}

Rational LaurentPoly::coefficient(std::span<const int> exponent) const {
  if (static_cast<int>(exponent.size()) != dim_) throw DimensionError("exponent length differs from N");
  return coefficient(make_exponent(exponent));
}

Rational LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void require_same_dim(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_dim(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_dim(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return kernels::multiply(a, b); }

LaurentPoly conjugate(const LaurentPoly& f) {
  LaurentPoly::TermMap out;
  for (const auto& [e, c] : f.terms()) {
    Exponent n{};
    for (int j = 0; j < f.dim(); ++j) n[static_cast<std::size_t>(j)] = -e[static_cast<std::size_t>(j)];
    out.emplace(n, c);
  }
  return LaurentPoly::from_terms(f.dim(), std::move(out));
}

Rational constant_term(const LaurentPoly& f) { return f.coefficient(Exponent{}); }

namespace {

Exponent transpose_act(const GroupElement& w, const Exponent& e) {
  Exponent out{};
  for (std::size_t j = 0; j < w.sigma.size(); ++j) out[static_cast<std::size_t>(w.sigma[j])] = w.eps[j] * e[j];
  return out;
}

Exponent act_exponent(const GroupElement& w, const Exponent& e) {
  Exponent out{};
  for (std::size_t j = 0; j < w.sigma.size(); ++j) out[j] = w.eps[j] * e[static_cast<std::size_t>(w.sigma[j])];
  return out;
}

// Adjacent transpositions plus the sign change of the last coordinate generate W.
std::vector<GroupElement> generators(int n) {
  std::vector<GroupElement> gens;
  for (int j = 0; j + 1 < n; ++j) {
    GroupElement w = GroupElement::identity(n);
    std::swap(w.sigma[static_cast<std::size_t>(j)], w.sigma[static_cast<std::size_t>(j + 1)]);
    gens.push_back(std::move(w));
  }
  GroupElement flip = GroupElement::identity(n);
  flip.eps[static_cast<std::size_t>(n - 1)] = -1;
  gens.push_back(std::move(flip));
  return gens;
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& f, const GroupElement& w) {
  if (w.dim() != f.dim()) throw DimensionError("group element and polynomial dimensions differ");
  LaurentPoly::TermMap out;
  for (const auto& [e, c] : f.terms()) out.emplace(transpose_act(w, e), c);
  return LaurentPoly::from_terms(f.dim(), std::move(out));
}

bool is_invariant(const LaurentPoly& f) {
  for (const GroupElement& g : generators(f.dim())) {
    for (const auto& [e, c] : f.terms()) {
      if (f.coefficient(act_exponent(g, e)) != c) return false;
    }
  }
  return true;
}

LaurentPoly symmetric_monomial(const Weight& l) {
  LaurentPoly p(l.dim());
  for (const IntVec& v : orbit(l)) p.add_term(make_exponent(v), 1);
  return p;
}

MonomialCoords monomial_coordinates(const LaurentPoly& f) {
  if (!is_invariant(f)) throw InvarianceError("polynomial is not W-invariant");
  MonomialCoords coords;
  for (const auto& [e, c] : f.terms()) {
    const IntVec v = to_intvec(e, f.dim());
    if (is_dominant(v)) coords.emplace(Weight(v), c);
  }
  return coords;
}

LaurentPoly expand(const MonomialCoords& coords, int dim) {
  LaurentPoly p(dim);
  for (const auto& [mu, c] : coords) {
    if (mu.dim() != dim) throw DimensionError("weight dimension differs from N");
    for (const IntVec& v : orbit(mu)) p.add_term(make_exponent(v), c);
  }
  return p;
}

const LaurentPoly& weyl_denominator(int n) {
  static std::mutex mutex;
  static std::map<int, LaurentPoly> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  LaurentPoly delta = LaurentPoly::constant(n, 1);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      LaurentPoly pair(n);
      Exponent e{};
      e[static_cast<std::size_t>(j)] = 1;
      pair.add_term(e, 1);
      e[static_cast<std::size_t>(j)] = -1;
      pair.add_term(e, 1);
      e = Exponent{};
      e[static_cast<std::size_t>(k)] = 1;
      pair.add_term(e, -1);
      e[static_cast<std::size_t>(k)] = -1;
      pair.add_term(e, -1);
      delta = kernels::multiply_serial(delta, pair);
    }
  }
  for (int j = 0; j < n; ++j) {
    LaurentPoly short_root(n);
    Exponent e{};
    e[static_cast<std::size_t>(j)] = 1;
    short_root.add_term(e, 1);
    e[static_cast<std::size_t>(j)] = -1;
    short_root.add_term(e, -1);
    delta = kernels::multiply_serial(delta, short_root);
  }
  return cache.emplace(n, std::move(delta)).first->second;
}

LaurentPoly antisymmetrize(std::span<const int> v) {
  const int n = static_cast<int>(v.size());
  LaurentPoly p(n);
  for (const GroupElement& w : group_elements(n)) p.add_term(make_exponent(act(w, v)), w.det());
  return p;
}

LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& d) {
  require_same_dim(f, d);
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  const int n = f.dim();
  LaurentPoly quotient(n);
  if (f.is_zero()) return quotient;

  // Per-variable degree windows a valid quotient must live in.
  std::array<int, kMaxVars> lo{}, hi{};
  auto degree_range = [](const LaurentPoly& p, int j) {
    int mn = std::numeric_limits<int>::max(), mx = std::numeric_limits<int>::min();
    for (const auto& term : p.terms()) {
      mn = std::min(mn, term.first[static_cast<std::size_t>(j)]);
      mx = std::max(mx, term.first[static_cast<std::size_t>(j)]);
    }
    return std::pair{mn, mx};
  };
  for (int j = 0; j < n; ++j) {
    auto [fmin, fmax] = degree_range(f, j);
    auto [dmin, dmax] = degree_range(d, j);
    lo[static_cast<std::size_t>(j)] = fmin - dmin;
    hi[static_cast<std::size_t>(j)] = fmax - dmax;
  }

  const auto& [dlead_exp, dlead_coef] = d.leading_term();
  LaurentPoly::TermMap remainder = f.terms();
  Rational q;
  Rational prod;
  while (!remainder.empty()) {
    const auto& [rexp, rcoef] = *remainder.rbegin();
    Exponent qexp{};
    for (int j = 0; j < n; ++j) {
      const auto u = static_cast<std::size_t>(j);
      qexp[u] = rexp[u] - dlead_exp[u];
      if (qexp[u] < lo[u] || qexp[u] > hi[u]) throw DivisibilityError("nonzero remainder in exact division");
    }
    q = rcoef / dlead_coef;
    for (const auto& [dexp, dcoef] : d.terms()) {
      Exponent e{};
      for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = qexp[static_cast<std::size_t>(j)] + dexp[static_cast<std::size_t>(j)];
      mpq_mul(prod.get_mpq_t(), q.get_mpq_t(), dcoef.get_mpq_t());
      auto [it, inserted] = remainder.try_emplace(e);
      if (inserted) {
        it->second = -prod;
      } else {
        it->second -= prod;
        if (sgn(it->second) == 0) remainder.erase(it);
      }
    }
    quotient.add_term(qexp, q);
  }
  return quotient;
}

namespace {

struct CharacterData {
  LaurentPoly poly;
  MonomialCoords coords;
};

std::shared_mutex character_mutex;
std::map<Weight, CharacterData>& character_cache() {
  static std::map<Weight, CharacterData> cache;
  return cache;
}

const CharacterData& character_data(const Weight& mu) {
  {
    std::shared_lock lock(character_mutex);
    auto& cache = character_cache();
    if (auto it = cache.find(mu); it != cache.end()) return it->second;
  }
  const int n = mu.dim();
  IntVec shifted = mu.parts();
  const Weight r = rho(n);
  for (int j = 0; j < n; ++j) shifted[static_cast<std::size_t>(j)] += r[static_cast<std::size_t>(j)];
  CharacterData data;
  data.poly = exact_divide(antisymmetrize(shifted), weyl_denominator(n));
  data.coords = monomial_coordinates(data.poly);

  std::unique_lock lock(character_mutex);
  return character_cache().try_emplace(mu, std::move(data)).first->second;
}

}  // namespace

const LaurentPoly& weyl_character(const Weight& mu) { return character_data(mu).poly; }

const MonomialCoords& weyl_character_coords(const Weight& mu) { return character_data(mu).coords; }

void clear_character_cache() {
  std::unique_lock lock(character_mutex);
  character_cache().clear();
}

}  // namespace hyperorth
