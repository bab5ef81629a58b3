#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace pavi {

/// U = (1,1), D = (1,-1), H = (2,0).
enum class Step : char { Up = 'u', Down = 'd', Horizontal = 'h' };

/// A Schröder path from (0,0) to (2n,0) that never dips below the axis.
class SchroederPath {
 public:
  SchroederPath() = default;

  /// Throws Error(BelowAxis) or Error(NotClosed) for invalid step sequences.
  explicit SchroederPath(std::vector<Step> steps);

  int semilength() const noexcept { return semilength_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  bool empty() const noexcept { return steps_.empty(); }

  /// One character per step, lowercase.
  std::string to_string() const;

  friend bool operator==(const SchroederPath&, const SchroederPath&) = default;
  friend auto operator<=>(const SchroederPath&, const SchroederPath&) = default;

 private:
  std::vector<Step> steps_;
  int semilength_ = 0;
};

struct StepStats {
  int h = 0;  // horizontal steps
  int r = 0;  // peaks, i.e. "ud" factors
  int u = 0;  // up steps not directly followed by a down step

  friend bool operator==(const StepStats&, const StepStats&) = default;
};

/// Letters u/d/h in either case. Throws BadCharacter, BelowAxis or NotClosed.
SchroederPath parse_path(std::string_view text);

/// Reverse the steps and swap U with D; the mirror about x = n.
SchroederPath reflect(const SchroederPath& p);

bool is_symmetric(const SchroederPath& p);

StepStats step_stats(const SchroederPath& p);

inline constexpr int kDefaultSymmetricLimit = 12;
inline constexpr int kAllPathsLimit = 10;

using PathVisitor = std::function<void(const SchroederPath&)>;

/// Every symmetric path of semilength n: a nonnegative prefix of width n
/// mirrored, or a prefix of width n-1, a centred H, and its mirror.
void for_each_symmetric(int n, const PathVisitor& visit, int limit = kDefaultSymmetricLimit);
std::vector<SchroederPath> enumerate_symmetric(int n, int limit = kDefaultSymmetricLimit);

void for_each_path(int n, const PathVisitor& visit);
std::vector<SchroederPath> enumerate_all(int n);

/// Multi-line ASCII drawing; '/' for U, '\' for D, '__' for H.
std::string render(const SchroederPath& p);

}  // namespace pavi
