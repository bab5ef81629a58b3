#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pavi {

/// A permutation of [n] in one-line notation. Positions and values are
/// 1-based; the object is immutable once constructed.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(InvalidPermutation) unless `entries` rearranges 1..n.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  /// Whitespace separated integers, e.g. "4 10 8 1 7 9 5 3 6 2".
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Value at 1-based position i.
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> entries() const noexcept { return entries_; }

  Permutation inverse() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// A permutation satisfying π(π(i)) = i for every i.
class Involution {
 public:
  Involution() = default;

  /// Throws Error(InvalidPermutation) if `perm` is not self-inverse.
  explicit Involution(Permutation perm);
  explicit Involution(std::vector<int> entries) : Involution(Permutation(std::move(entries))) {}

  static Involution parse(std::string_view text) { return Involution(Permutation::parse(text)); }

  const Permutation& permutation() const noexcept { return perm_; }
  operator const Permutation&() const noexcept { return perm_; }  // NOLINT

  int size() const noexcept { return perm_.size(); }
  int operator()(int i) const { return perm_(i); }
  std::span<const int> entries() const noexcept { return perm_.entries(); }
  std::string to_string() const { return perm_.to_string(); }

  friend bool operator==(const Involution&, const Involution&) = default;
  friend auto operator<=>(const Involution&, const Involution&) = default;

 private:
  Permutation perm_;
};

/// Pattern families. A_k is the set of length-k patterns starting with 1 2,
/// F_k the set of length-k patterns starting with 1.
class PatternFamily {
 public:
  enum class Kind { PrefixOneTwo, FirstIsOne, Explicit };

  /// Throws Error(InvalidK) for k < 3.
  static PatternFamily prefix_one_two(int k);
  static PatternFamily first_is_one(int k);
  /// Throws Error(InvalidPermutation) when lengths differ or the list is empty.
  static PatternFamily explicit_set(std::vector<Permutation> patterns);

  Kind kind() const noexcept { return kind_; }
  /// Pattern length.
  int k() const noexcept { return k_; }

  /// Every member spelled out; (k-2)! patterns for A_k, (k-1)! for F_k.
  std::vector<Permutation> members() const;

  std::string name() const;

 private:
  PatternFamily(Kind kind, int k, std::vector<Permutation> patterns)
      : kind_(kind), k_(k), patterns_(std::move(patterns)) {}

  Kind kind_ = Kind::Explicit;
  int k_ = 0;
  std::vector<Permutation> patterns_;
};

/// Position sets of the r-right-to-left maxima, r = 1, 2, ...
/// Each layer lists its positions in increasing order.
struct LayerDecomposition {
  std::vector<std::vector<int>> layers;

  std::size_t depth() const noexcept { return layers.size(); }
  /// Empty set for r beyond the last layer. r is 1-based.
  std::span<const int> layer(std::size_t r) const noexcept;

  friend bool operator==(const LayerDecomposition&, const LayerDecomposition&) = default;
};

bool is_involution(const Permutation& p);

std::vector<int> fixed_points(const Permutation& p);
int count_fixed_points(const Permutation& p);

/// Reference check: does some subsequence of `p` have the relative order of `tau`?
bool contains_pattern(const Permutation& p, const Permutation& tau);

/// Parameterized families use O(n^2) criteria; explicit sets use contains_pattern.
bool avoids_family(const Permutation& p, const PatternFamily& fam);

LayerDecomposition rl_maxima_layers(const Permutation& p);

inline constexpr int kDefaultInvolutionLimit = 14;
inline constexpr int kPermutationLimit = 8;

using InvolutionVisitor = std::function<void(const Involution&, int fixed_points)>;

/// Visits every involution of [n] once, built recursively on the largest
/// element (fixed point or 2-cycle). Throws Error(LimitExceeded) above `limit`.
void for_each_involution(int n, const InvolutionVisitor& visit, int limit = kDefaultInvolutionLimit);
std::vector<Involution> enumerate_involutions(int n, int limit = kDefaultInvolutionLimit);

/// All n! permutations in lexicographic order; n <= 8.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_permutations(int n);

}  // namespace pavi
