#pragma once

// Combinatorics of the hyperoctahedral group W = S_N x| (Z_2)^N acting on Z^N
// by signed coordinate permutations, and of the dominant cone
// Lambda = { l in Z^N : l_1 >= ... >= l_N >= 0 }.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hyperorth {

using IntVec = std::vector<int>;

/// A dominant integral weight (a partition with at most N parts, zero padded).
class Weight {
 public:
  Weight() = default;
  /// Throws DomainError unless parts is weakly decreasing and nonnegative.
  explicit Weight(std::vector<int> parts);

  static Weight zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int dim() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t j) const { return parts_[j]; }
  const std::vector<int>& parts() const { return parts_; }
  std::span<const int> span() const { return parts_; }

  /// l * this, for l >= 0.
  Weight scaled(int l) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  /// Lexicographic; this is the order used for map keys and output sorting.
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

bool is_dominant(std::span<const int> v);

/// Signed permutation w = (sigma, eps) acting by act(w, v)_j = eps_j * v_{sigma_j}.
/// sigma is stored 0-based.
struct GroupElement {
  std::vector<int> sigma;
  std::vector<int> eps;

  static GroupElement identity(int n);

  int dim() const { return static_cast<int>(sigma.size()); }
  int det() const;
  GroupElement inverse() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// The element w1 o w2, i.e. act(compose(w1, w2), v) == act(w1, act(w2, v)).
GroupElement compose(const GroupElement& w1, const GroupElement& w2);

/// All 2^N N! elements, in a fixed order (cached per N). Intended for N <= 8.
const std::vector<GroupElement>& group_elements(int n);

std::int64_t group_order(int n);

IntVec act(const GroupElement& w, std::span<const int> v);

enum class Order { Less, Greater, Equal, Incomparable };

/// Hyperoctahedral dominance: a >= b iff every leading partial sum of a is >= that of b.
/// Defined on all of Z^N (needed for orbit members), not only on Lambda.
Order compare_dominance(std::span<const int> a, std::span<const int> b);
Order compare_dominance(const Weight& a, const Weight& b);

/// True when b is dominated by (or equal to) a.
bool dominates(std::span<const int> a, std::span<const int> b);

/// Lexicographic comparison; refines dominance on Lambda.
std::strong_ordering lex_compare(const Weight& a, const Weight& b);

/// m(l) = min_j (l_j - l_{j+1}) with l_{N+1} = 0.
int min_gap(const Weight& w);

/// |W_l|, computed combinatorially.
std::int64_t stabilizer_order(const Weight& w);

/// Distinct vectors of the W-orbit of v, sorted lexicographically.
std::vector<IntVec> orbit(std::span<const int> v);
inline std::vector<IntVec> orbit(const Weight& w) { return orbit(w.span()); }

struct DominantRep {
  IntVec rep;          ///< |v| sorted descending
  int parity = 1;      ///< det of a signed permutation taking v to rep; meaningful only if !singular
  bool singular = false;
};

DominantRep dominant_representative(std::span<const int> v);

/// All mu in Lambda with mu <= l in dominance order, sorted lexicographically.
std::vector<Weight> weights_below(const Weight& l);

/// All mu in Lambda with mu_1 <= max_part, sorted lexicographically.
std::vector<Weight> dominant_box(int n, int max_part);

/// All mu in Lambda that are lexicographically <= l, sorted (finite: mu_1 <= l_1).
std::vector<Weight> weights_lex_below(const Weight& l);

/// rho = (N, N-1, ..., 1).
Weight rho(int n);

/// Text forms: "3,2,1" and "(3,2,1)".
Weight parse_weight(const std::string& text, int n);
std::string to_string(std::span<const int> v);
inline std::string to_string(const Weight& w) { return to_string(w.span()); }

}  // namespace hyperorth
