#pragma once

#include <string>
#include <vector>

#include "pavi/permutation.hpp"
#include "pavi/schroeder_path.hpp"

namespace pavi {

enum class Letter : char { U = 'u', R = 'r', H = 'h' };

/// The word of length n+1 over {u, r, h} read off a symmetric path of
/// semilength n. Always ends in the appended h.
struct ProjectedWord {
  std::vector<Letter> letters;

  int size() const noexcept { return static_cast<int>(letters.size()); }
  std::string to_string() const;

  friend bool operator==(const ProjectedWord&, const ProjectedWord&) = default;
};

/// Append h, replace every "ud" by r, drop the remaining d's.
/// Throws Error(NotSymmetric) for paths outside Sh_n.
ProjectedWord project(const SchroederPath& p);

/// Letter classes h, r, u as layers 1, 2, 3. encode pairs within these
/// classes; only the first one is guaranteed to be a right-to-left-maxima layer.
LayerDecomposition layers_from_word(const ProjectedWord& w);

/// Pairs the i-th smallest and i-th largest positions of every layer; the
/// middle position of an odd layer is a fixed point.
/// Throws Error(NotAPartition) unless the layers partition 1..size.
Involution involution_from_layers(const LayerDecomposition& d, int size);

/// Sh_n -> I_{n+1}(1234, 1243).
Involution encode(const SchroederPath& p);

/// Inverse of encode. The h letters are exactly the right-to-left maxima of
/// q; the split of the rest into r and u is recovered while rebuilding the
/// left half of the path from both ends of the word.
/// Throws Error(PatternViolation) when q contains 1234 or 1243.
SchroederPath decode(const Involution& q);

struct InvolutionStats {
  int rl_maxima = 0;  // size of layer 1
  int rl2 = 0;
  int rl3 = 0;
  int fixed = 0;

  friend bool operator==(const InvolutionStats&, const InvolutionStats&) = default;
};

/// Statistics of encode(p) predicted from the step counts of p:
/// (h+1, r, u, (1+h) mod 2 + r mod 2 + u mod 2). The first and last entries
/// always match measured_stats; the middle two do not once a u letter sits
/// before an r letter or no r letter exists (uhd gives 132, whose second
/// layer is {1}).
InvolutionStats corollary_stats(const SchroederPath& p);

/// The same statistics measured directly on an involution.
InvolutionStats measured_stats(const Involution& q);

}  // namespace pavi
