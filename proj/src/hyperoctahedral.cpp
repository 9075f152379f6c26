#include "hyperorth/hyperoctahedral.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "hyperorth/errors.hpp"

namespace hyperorth {

bool is_dominant(std::span<const int> v) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] < 0) return false;
    if (j + 1 < v.size() && v[j] < v[j + 1]) return false;
  }
  return true;
}

Weight::Weight(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("weight must have at least one part");
  if (!is_dominant(parts_)) throw DomainError("weight " + hyperorth::to_string(parts_) + " is not dominant");
}

Weight Weight::scaled(int l) const {
  std::vector<int> p = parts_;
  for (int& x : p) x *= l;
  return Weight(std::move(p));
}

GroupElement GroupElement::identity(int n) {
  GroupElement w;
  w.sigma.resize(static_cast<std::size_t>(n));
  std::iota(w.sigma.begin(), w.sigma.end(), 0);
  w.eps.assign(static_cast<std::size_t>(n), 1);
  return w;
}

namespace {

int permutation_sign(std::span<const int> perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

void check_dims(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

int GroupElement::det() const {
  int s = permutation_sign(sigma);
  for (int e : eps) s *= e;
  return s;
}

GroupElement GroupElement::inverse() const {
  const std::size_t n = sigma.size();
  GroupElement inv;
  inv.sigma.resize(n);
  inv.eps.resize(n);
  for (std::size_t j = 0; j < n; ++j) inv.sigma[static_cast<std::size_t>(sigma[j])] = static_cast<int>(j);
  for (std::size_t j = 0; j < n; ++j) inv.eps[j] = eps[static_cast<std::size_t>(inv.sigma[j])];
  return inv;
}

GroupElement compose(const GroupElement& w1, const GroupElement& w2) {
  check_dims(w1.sigma.size(), w2.sigma.size());
  const std::size_t n = w1.sigma.size();
  GroupElement w;
  w.sigma.resize(n);
  w.eps.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto s1 = static_cast<std::size_t>(w1.sigma[j]);
    w.sigma[j] = w2.sigma[s1];
    w.eps[j] = w1.eps[j] * w2.eps[s1];
  }
  return w;
}

const std::vector<GroupElement>& group_elements(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<GroupElement>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1 || n > 8) throw DomainError("group enumeration supports 1 <= N <= 8");

  std::vector<GroupElement> elements;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      GroupElement w;
      w.sigma = perm;
      w.eps.resize(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) w.eps[static_cast<std::size_t>(j)] = (mask >> j) & 1u ? -1 : 1;
      elements.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cache.emplace(n, std::move(elements)).first->second;
}

std::int64_t group_order(int n) {
  std::int64_t order = 1;
  for (int j = 1; j <= n; ++j) order *= 2 * j;
  return order;
}

IntVec act(const GroupElement& w, std::span<const int> v) {
  check_dims(w.sigma.size(), v.size());
  IntVec out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = w.eps[j] * v[static_cast<std::size_t>(w.sigma[j])];
  return out;
}

Order compare_dominance(std::span<const int> a, std::span<const int> b) {
  check_dims(a.size(), b.size());
  bool some_greater = false;
  bool some_less = false;
  long long sa = 0;
  long long sb = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    sa += a[j];
    sb += b[j];
    if (sa > sb) some_greater = true;
    if (sa < sb) some_less = true;
  }
  if (some_greater && some_less) return Order::Incomparable;
  if (some_greater) return Order::Greater;
  if (some_less) return Order::Less;
  return Order::Equal;
}

Order compare_dominance(const Weight& a, const Weight& b) { return compare_dominance(a.span(), b.span()); }

bool dominates(std::span<const int> a, std::span<const int> b) {
  const Order o = compare_dominance(a, b);
  return o == Order::Greater || o == Order::Equal;
}

std::strong_ordering lex_compare(const Weight& a, const Weight& b) {
  check_dims(a.parts().size(), b.parts().size());
  return a.parts() <=> b.parts();
}

int min_gap(const Weight& w) {
  int gap = w[static_cast<std::size_t>(w.dim() - 1)];
  for (std::size_t j = 0; j + 1 < w.parts().size(); ++j) gap = std::min(gap, w[j] - w[j + 1]);
  return gap;
}

std::int64_t stabilizer_order(const Weight& w) {
  auto factorial = [](int k) {
    std::int64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  std::int64_t order = 1;
  std::size_t j = 0;
  const auto& p = w.parts();
  while (j < p.size()) {
    std::size_t k = j;
    while (k < p.size() && p[k] == p[j]) ++k;
    const int run = static_cast<int>(k - j);
    if (p[j] == 0) {
      order *= factorial(run) * (std::int64_t{1} << run);
    } else {
      order *= factorial(run);
    }
    j = k;
  }
  return order;
}

std::vector<IntVec> orbit(std::span<const int> v) {
  std::set<IntVec> seen;
  for (const GroupElement& w : group_elements(static_cast<int>(v.size()))) seen.insert(act(w, v));
  return {seen.begin(), seen.end()};
}

DominantRep dominant_representative(std::span<const int> v) {
  const std::size_t n = v.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(v[static_cast<std::size_t>(a)]) > std::abs(v[static_cast<std::size_t>(b)]);
  });

  DominantRep out;
  out.rep.resize(n);
  int negatives = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const int x = v[static_cast<std::size_t>(order[j])];
    out.rep[j] = std::abs(x);
    if (x < 0) ++negatives;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (out.rep[j] == 0 || (j + 1 < n && out.rep[j] == out.rep[j + 1])) out.singular = true;
  }
  // act(w, v)_j = eps_j v_{sigma_j} with sigma = order, eps_j = sign(v_{sigma_j}).
  out.parity = permutation_sign(order) * (negatives % 2 == 0 ? 1 : -1);
  return out;
}

namespace {

template <typename Keep>
void enumerate_box(int n, int max_part, std::vector<int>& current, Keep&& keep, std::vector<Weight>& out) {
  if (static_cast<int>(current.size()) == n) {
    if (keep(current)) out.emplace_back(current);
    return;
  }
  const int upper = current.empty() ? max_part : current.back();
  for (int x = 0; x <= upper; ++x) {
    current.push_back(x);
    enumerate_box(n, max_part, current, keep, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Weight> weights_below(const Weight& l) {
  std::vector<Weight> out;
  std::vector<int> current;
  const int top = l.dim() > 0 ? l[0] : 0;
  enumerate_box(l.dim(), top, current, [&](const std::vector<int>& mu) { return dominates(l.span(), mu); }, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> dominant_box(int n, int max_part) {
  std::vector<Weight> out;
  std::vector<int> current;
  enumerate_box(n, max_part, current, [](const std::vector<int>&) { return true; }, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> weights_lex_below(const Weight& l) {
  std::vector<Weight> out;
  std::vector<int> current;
  enumerate_box(l.dim(), l[0], current, [&](const std::vector<int>& mu) { return mu <= l.parts(); }, out);
  std::sort(out.begin(), out.end());
  return out;
}

Weight rho(int n) {
  if (n < 1) throw DomainError("rho requires N >= 1");
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = n - j;
  return Weight(std::move(p));
}

Weight parse_weight(const std::string& text, int n) {
  std::string body = text;
  std::erase_if(body, [](char c) { return c == '(' || c == ')' || c == '[' || c == ']' || c == ' '; });
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("malformed weight '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed weight '" + text + "'");
    }
    if (used != item.size()) throw ParseError("malformed weight '" + text + "'");
    parts.push_back(value);
  }
  if (n > 0) {
    if (static_cast<int>(parts.size()) > n) throw ParseError("weight '" + text + "' has more than N parts");
    parts.resize(static_cast<std::size_t>(n), 0);
  }
  if (!is_dominant(parts) || parts.empty()) throw ParseError("weight '" + text + "' is not dominant");
  return Weight(std::move(parts));
}

std::string to_string(std::span<const int> v) {
  std::string s = "(";
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(v[j]);
  }
  return s + ")";
}

}  // namespace hyperorth
