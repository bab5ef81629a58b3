#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pavi/permutation.hpp"
#include "pavi/polynomial.hpp"

namespace pavi {

/// Exhaustive tabulation of the avoiding involutions of one length.
struct BruteTable {
  std::string family;
  int k = 0;
  int n = 0;
  /// counts[t][m]: first entry t, m fixed points. Row 0 only holds the empty
  /// involution when n = 0.
  std::vector<std::vector<std::uint64_t>> counts;
  std::uint64_t total = 0;

  /// sum_m counts[t][m] p^m; t = 0 gives the full fixed-point polynomial.
  Polynomial by_fixed_points(int t = 0) const;
};

inline constexpr int kBruteLimit = 12;
inline constexpr int kBruteLimitLongPrefix = 10;  // A_k, k >= 6

/// Ground truth: every involution of [n] is tested against each explicit
/// member of the family with contains_pattern. Never touches the fast
/// avoidance criteria or any recurrence.
/// Throws Error(LimitExceeded) for n > 12 (n > 10 for A_k with k >= 6).
BruteTable brute_count(const PatternFamily& fam, int n);

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
  void append(const Report& other);
  nlohmann::json to_json() const;
};

/// Round trip, image, cardinality and step-statistic checks for every
/// symmetric path of semilength <= max_n (max_n <= 10).
Report verify_bijection(int max_n);

/// Engines against brute force for every k in `k_set`, lengths <= max_n
/// (max_n <= 12), plus the sampled-v recurrence identity and the parity law.
Report verify_engines(const std::vector<int>& k_set, int max_n);

}  // namespace pavi
