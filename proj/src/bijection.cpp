#include "pavi/bijection.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>

#include "pavi/error.hpp"

namespace pavi {

namespace {

const PatternFamily& forbidden_pair() {
  static const PatternFamily fam = PatternFamily::explicit_set(
      {Permutation({1, 2, 3, 4}), Permutation({1, 2, 4, 3})});
  return fam;
}

void require_symmetric(const SchroederPath& p) {
  if (!is_symmetric(p)) throw Error(ErrorCode::NotSymmetric, p.to_string());
}

}  // namespace

std::string ProjectedWord::to_string() const {
  std::string out;
  for (Letter l : letters) out += static_cast<char>(l);
  return out;
}

ProjectedWord project(const SchroederPath& p) {
  require_symmetric(p);
  ProjectedWord w;
  const auto& s = p.steps();
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case Step::Horizontal:
        w.letters.push_back(Letter::H);
        break;
      case Step::Up:
        if (i + 1 < s.size() && s[i + 1] == Step::Down) {
          w.letters.push_back(Letter::R);
          ++i;
        } else {
          w.letters.push_back(Letter::U);
        }
        break;
      case Step::Down:
        break;
    }
  }
  w.letters.push_back(Letter::H);
  return w;
}

LayerDecomposition layers_from_word(const ProjectedWord& w) {
  LayerDecomposition d;
  d.layers.resize(3);
  for (int i = 1; i <= w.size(); ++i) {
    switch (w.letters[static_cast<std::size_t>(i - 1)]) {
      case Letter::H: d.layers[0].push_back(i); break;
      case Letter::R: d.layers[1].push_back(i); break;
      case Letter::U: d.layers[2].push_back(i); break;
    }
  }
  while (!d.layers.empty() && d.layers.back().empty()) d.layers.pop_back();
  return d;
}

Involution involution_from_layers(const LayerDecomposition& d, int size) {
  std::vector<int> img(static_cast<std::size_t>(size), 0);
  for (const auto& layer : d.layers) {
    if (!std::is_sorted(layer.begin(), layer.end())) {
      throw Error(ErrorCode::NotAPartition, "layer positions must be increasing");
    }
    for (std::size_t a = 0, b = layer.size(); a < layer.size(); ++a) {
      const int pos = layer[a];
      if (pos < 1 || pos > size || img[static_cast<std::size_t>(pos - 1)] != 0) {
        throw Error(ErrorCode::NotAPartition, "position " + std::to_string(pos) + " repeated or out of range");
      }
      img[static_cast<std::size_t>(pos - 1)] = layer[--b];
    }
  }
  if (std::find(img.begin(), img.end(), 0) != img.end()) {
    throw Error(ErrorCode::NotAPartition, "layers do not cover 1.." + std::to_string(size));
  }
  return Involution(std::move(img));
}

Involution encode(const SchroederPath& p) {
  const ProjectedWord w = project(p);
  return involution_from_layers(layers_from_word(w), w.size());
}

namespace {

// Rebuilds the left half L of a symmetric path from both ends of the word at
// once: letters of L itself fill positions from the left, letters coming from
// the mirror of L fill them from the right. Because every class is paired
// first-with-last, the k-th letter of a class placed from the left must be
// matched by q with the k-th one placed from the right, which prunes almost
// every wrong branch as soon as it is taken.
class HalfPathSearch {
 public:
  explicit HalfPathSearch(const Involution& q) : q_(q), n_(q.size() - 1) {
    const LayerDecomposition d = rl_maxima_layers(q);
    in_top_.assign(static_cast<std::size_t>(q.size()) + 1, false);
    for (int pos : d.layer(1)) in_top_[static_cast<std::size_t>(pos)] = true;
    right_[kH].push_back(q.size());  // the appended h
  }

  std::optional<SchroederPath> run() {
    if (search(1, n_, 0, false)) return std::move(found_);
    return std::nullopt;
  }

 private:
  static constexpr int kH = 0, kR = 1, kU = 2;

  bool top(int pos) const { return in_top_[static_cast<std::size_t>(pos)]; }

  // Records pos as the next class member seen from one side; false if it
  // contradicts the pairing already implied by the other side.
  bool place(std::vector<int>* lists, int cls, int pos) {
    auto& mine = lists[cls];
    auto& other = (lists == left_ ? right_ : left_)[cls];
    mine.push_back(pos);
    const std::size_t idx = mine.size() - 1;
    return idx >= other.size() || q_(pos) == other[idx];
  }

  bool attempt(std::vector<int>* lists, int cls, int pos, std::initializer_list<Step> add,
               auto&& next) {
    const bool ok = place(lists, cls, pos);
    if (ok) half_.insert(half_.end(), add);
    const bool done = ok && next();
    if (ok) half_.resize(half_.size() - add.size());
    lists[cls].pop_back();
    return done;
  }

  bool finish(std::initializer_list<Step> centre) {
    std::vector<Step> steps = half_;
    steps.insert(steps.end(), centre);
    for (auto it = half_.rbegin(); it != half_.rend(); ++it) {
      steps.push_back(*it == Step::Up ? Step::Down : *it == Step::Down ? Step::Up : *it);
    }
    SchroederPath path(std::move(steps));
    if (encode(path) != q_) return false;
    found_ = std::move(path);
    return true;
  }

  // lo..hi are the word positions still open; after_u marks that the last
  // step of L was an up step not closed by a peak.
  bool search(int lo, int hi, int height, bool after_u) {
    const int open = hi - lo + 1;
    if (open == 0) return !after_u && finish({});
    if (open == 1) {
      if (top(lo)) {
        if (attempt(left_, kH, lo, {}, [&] { return finish({Step::Horizontal}); })) return true;
      } else if (q_(lo) == lo) {
        if (attempt(left_, kR, lo, {}, [&] { return finish({Step::Up, Step::Down}); })) return true;
      }
    }
    if (open >= 2 && top(lo) && top(hi)) {
      const auto inner = [&] {
        return attempt(right_, kH, hi, {}, [&] { return search(lo + 1, hi - 1, height, false); });
      };
      if (attempt(left_, kH, lo, {Step::Horizontal}, inner)) return true;
    }
    if (open >= 2 && !top(lo) && !top(hi) && q_(lo) == hi) {
      const auto inner = [&] {
        return attempt(right_, kR, hi, {}, [&] { return search(lo + 1, hi - 1, height, false); });
      };
      if (attempt(left_, kR, lo, {Step::Up, Step::Down}, inner)) return true;
    }
    if (!top(hi) && height > 0 && !after_u) {
      if (attempt(right_, kU, hi, {Step::Down},
                  [&] { return search(lo, hi - 1, height - 1, false); })) {
        return true;
      }
    }
    if (!top(lo)) {
      if (attempt(left_, kU, lo, {Step::Up}, [&] { return search(lo + 1, hi, height + 1, true); })) {
        return true;
      }
    }
    return false;
  }

  const Involution& q_;
  const int n_;
  std::vector<bool> in_top_;
  std::vector<int> left_[3];
  std::vector<int> right_[3];
  std::vector<Step> half_;
  std::optional<SchroederPath> found_;
};

}  // namespace

SchroederPath decode(const Involution& q) {
  if (q.size() == 0 || !avoids_family(q, forbidden_pair())) {
    throw Error(ErrorCode::PatternViolation, "not in I_n(1234,1243): " + q.to_string());
  }
  if (auto path = HalfPathSearch(q).run()) return std::move(*path);
  throw Error(ErrorCode::ReservationConflict, "no symmetric path encodes " + q.to_string());
}

InvolutionStats corollary_stats(const SchroederPath& p) {
  require_symmetric(p);
  const StepStats s = step_stats(p);
  return {s.h + 1, s.r, s.u, (1 + s.h) % 2 + s.r % 2 + s.u % 2};
}

InvolutionStats measured_stats(const Involution& q) {
  const LayerDecomposition d = rl_maxima_layers(q);
  return {static_cast<int>(d.layer(1).size()), static_cast<int>(d.layer(2).size()),
          static_cast<int>(d.layer(3).size()), count_fixed_points(q)};
}

}  // namespace pavi
