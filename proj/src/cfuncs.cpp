#include "hyperorth/cfuncs.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "hyperorth/errors.hpp"

namespace hyperorth {

namespace {

void trim(std::vector<Rational>& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
}

void require_open_unit(const Rational& x, const char* name) {
  if (!(x > -1 && x < 1)) throw DomainError(std::string("parameter ") + name + " must lie in (-1, 1)");
}

struct Validate {
  void operator()(ExplicitPoly& p) const {
    if (p.c0.empty() || p.c1.empty()) throw DomainError("explicit c-function coefficients must be nonempty");
    if (p.c0[0] != 1) throw DomainError("c0 must have constant coefficient 1");
    if (p.c1[0] != 1) throw DomainError("c1 must have constant coefficient 1");
    trim(p.c0);
    trim(p.c1);
  }
  void operator()(const HallLittlewood& h) const {
    require_open_unit(h.t, "t");
    require_open_unit(h.t0, "t0");
    require_open_unit(h.t1, "t1");
  }
  void operator()(const Koornwinder& k) const {
    if (!(k.q > 0 && k.q < 1)) throw DomainError("parameter q must lie in (0, 1)");
    require_open_unit(k.t, "t");
    static const char* names[] = {"t_r[0]", "t_r[1]", "t_r[2]", "t_r[3]"};
    for (std::size_t r = 0; r < 4; ++r) require_open_unit(k.tr[r], names[r]);
  }
};

Rational field(const nlohmann::json& j, const std::string& name) {
  if (!j.contains(name)) throw ParseError("c-function spec is missing field '" + name + "'");
  const auto& v = j.at(name);
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const ParseError& e) {
    throw ParseError("field '" + name + "': " + e.what());
  }
  throw ParseError("field '" + name + "' must be a rational string such as \"1/2\"");
}

std::vector<Rational> field_list(const nlohmann::json& j, const std::string& name) {
  if (!j.contains(name) || !j.at(name).is_array()) throw ParseError("field '" + name + "' must be an array");
  std::vector<Rational> out;
  std::size_t i = 0;
  for (const auto& v : j.at(name)) {
    nlohmann::json wrap = {{name + "[" + std::to_string(i) + "]", v}};
    out.push_back(field(wrap, name + "[" + std::to_string(i) + "]"));
    ++i;
  }
  return out;
}

nlohmann::json list_json(const std::vector<Rational>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Rational& x : v) a.push_back(to_string(x));
  return a;
}

TruncSeries from_poly(const std::vector<Rational>& c, int order) {
  TruncSeries s;
  s.coeffs.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  for (std::size_t n = 0; n < c.size() && n <= static_cast<std::size_t>(order); ++n) s.coeffs[n] = c[n];
  return s;
}

// f(u) -> f(z^2), truncated at z^order.
TruncSeries interleave(const TruncSeries& s, int order) {
  TruncSeries out;
  out.coeffs.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  for (std::size_t n = 0; 2 * n <= static_cast<std::size_t>(order) && n < s.coeffs.size(); ++n)
    out.coeffs[2 * n] = s.coeffs[n];
  return out;
}

std::complex<double> evaluate(const TruncSeries& s, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (std::size_t n = s.coeffs.size(); n-- > 0;) acc = acc * z + to_double(s.coeffs[n]);
  return acc;
}

}  // namespace

CSpec::CSpec(Family family) : family_(std::move(family)) { std::visit(Validate{}, family_); }

CSpec CSpec::trivial() { return CSpec(ExplicitPoly{}); }

std::string CSpec::family_name() const {
  switch (family_.index()) {
    case 0: return "explicit";
    case 1: return "hall-littlewood";
    default: return "koornwinder";
  }
}

int CSpec::degree() const {
  if (const auto* p = std::get_if<ExplicitPoly>(&family_)) {
    const int d0 = static_cast<int>(p->c0.size()) - 1;
    const int d1 = static_cast<int>(p->c1.size()) - 1;
    return std::max(d0, (d1 + 1) / 2);
  }
  if (std::holds_alternative<HallLittlewood>(family_)) return 1;
  throw DomainError("the Koornwinder family has no finite degree");
}

CSpec CSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("c-function spec must be a JSON object");
  if (!j.contains("family") || !j.at("family").is_string()) throw ParseError("c-function spec needs a 'family' string");
  const std::string family = j.at("family").get<std::string>();
  if (family == "explicit") return CSpec(ExplicitPoly{field_list(j, "c0"), field_list(j, "c1")});
  if (family == "hall-littlewood" || family == "hall_littlewood")
    return CSpec(HallLittlewood{field(j, "t"), field(j, "t0"), field(j, "t1")});
  if (family == "koornwinder") {
    const auto tr = field_list(j, "t_r");
    if (tr.size() != 4) throw ParseError("field 't_r' must hold exactly four rationals");
    return CSpec(Koornwinder{field(j, "q"), field(j, "t"), {tr[0], tr[1], tr[2], tr[3]}});
  }
  throw ParseError("unknown c-function family '" + family + "'");
}

nlohmann::json CSpec::to_json() const {
  nlohmann::json j;
  j["family"] = family_name();
  if (const auto* p = std::get_if<ExplicitPoly>(&family_)) {
    j["c0"] = list_json(p->c0);
    j["c1"] = list_json(p->c1);
  } else if (const auto* h = std::get_if<HallLittlewood>(&family_)) {
    j["t"] = to_string(h->t);
    j["t0"] = to_string(h->t0);
    j["t1"] = to_string(h->t1);
  } else {
    const auto& k = std::get<Koornwinder>(family_);
    j["q"] = to_string(k.q);
    j["t"] = to_string(k.t);
    j["t_r"] = list_json({k.tr.begin(), k.tr.end()});
  }
  return j;
}

bool operator==(const CSpec& a, const CSpec& b) { return a.to_json() == b.to_json(); }

TruncSeries series_multiply(const TruncSeries& a, const TruncSeries& b, int order) {
  TruncSeries out;
  out.coeffs.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  Rational t;
  for (std::size_t i = 0; i < a.coeffs.size() && i <= static_cast<std::size_t>(order); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size() && i + j <= static_cast<std::size_t>(order); ++j) {
      mpq_mul(t.get_mpq_t(), a.coeffs[i].get_mpq_t(), b.coeffs[j].get_mpq_t());
      out.coeffs[i + j] += t;
    }
  }
  return out;
}

TruncSeries pochhammer_inf_series(const Rational& a, const Rational& q, int order) {
  if (abs(q) >= 1) throw DomainError("q-Pochhammer series needs |q| < 1");
  if (order < 0) throw DomainError("series order must be nonnegative");
  TruncSeries s;
  s.coeffs.reserve(static_cast<std::size_t>(order) + 1);
  s.coeffs.emplace_back(1);
  // term_n = term_{n-1} * (-a) q^{n-1} / (1 - q^n)
  Rational term = 1;
  Rational qpow = 1;  // q^{n-1}
  for (int n = 1; n <= order; ++n) {
    const Rational qn = qpow * q;
    term *= -a * qpow / (1 - qn);
    s.coeffs.push_back(term);
    qpow = qn;
  }
  return s;
}

TruncSeries reciprocal_series(const TruncSeries& s, int order) {
  if (s.coeffs.empty() || s.coeffs[0] != 1) throw DomainError("reciprocal series needs constant coefficient 1");
  TruncSeries r;
  r.coeffs.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  r.coeffs[0] = 1;
  Rational t;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(order); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n && k < s.coeffs.size(); ++k) {
      mpq_mul(t.get_mpq_t(), s.coeffs[k].get_mpq_t(), r.coeffs[n - k].get_mpq_t());
      acc -= t;
    }
    r.coeffs[n] = std::move(acc);
  }
  return r;
}

TruncSeries taylor_c(const CSpec& spec, int p, int order) {
  if (p != 0 && p != 1) throw DomainError("c-function index must be 0 or 1");
  if (order < 0) throw DomainError("series order must be nonnegative");
  const auto& family = spec.family();
  if (const auto* e = std::get_if<ExplicitPoly>(&family)) return from_poly(p == 0 ? e->c0 : e->c1, order);
  if (const auto* h = std::get_if<HallLittlewood>(&family)) {
    if (p == 0) return from_poly({Rational(1), -h->t}, order);
    return from_poly({Rational(1), -(h->t0 + h->t1), h->t0 * h->t1}, order);
  }
  const auto& k = std::get<Koornwinder>(family);
  if (p == 0) {
    const TruncSeries den = reciprocal_series(pochhammer_inf_series(k.q, k.q, order), order);
    return series_multiply(pochhammer_inf_series(k.t, k.q, order), den, order);
  }
  TruncSeries num = pochhammer_inf_series(k.tr[0], k.q, order);
  for (std::size_t r = 1; r < 4; ++r) num = series_multiply(num, pochhammer_inf_series(k.tr[r], k.q, order), order);
  const int half = order / 2;
  const TruncSeries den_u = reciprocal_series(pochhammer_inf_series(k.q, k.q, half), half);
  return series_multiply(num, interleave(den_u, order), order);
}

DecayBudget decay_budget(const CSpec& spec) {
  DecayBudget b;
  if (const auto* k = std::get_if<Koornwinder>(&spec.family())) {
    b.epsilon = std::log(1.0 / to_double(k->q));
    return b;
  }
  b.exact_beyond_degree = true;
  b.degree = spec.degree();
  return b;
}

std::vector<std::string> zero_free_warnings(const CSpec& spec, int order) {
  constexpr int kSamples = 512;
  constexpr double kFloor = 1e-6;
  std::vector<std::string> out;
  for (int p = 0; p < 2; ++p) {
    const TruncSeries s = taylor_c(spec, p, spec.is_polynomial() ? std::max(2 * spec.degree(), 0) : order);
    double smallest = INFINITY;
    for (int i = 0; i < kSamples; ++i) {
      const double theta = 2 * std::numbers::pi * i / kSamples;
      smallest = std::min(smallest, std::abs(evaluate(s, std::polar(1.0, theta))));
    }
    if (smallest < kFloor)
      out.push_back("c" + std::to_string(p) + " nearly vanishes on the unit circle (min |c| = " +
                    std::to_string(smallest) + ")");
  }
  return out;
}

}  // namespace hyperorth
