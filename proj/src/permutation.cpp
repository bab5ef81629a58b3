#include "pavi/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pavi/error.hpp"

namespace pavi {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::InvalidPermutation, "not a rearrangement of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> e;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw Error(ErrorCode::InvalidPermutation, "bad entry '" + token + "'");
    }
    e.push_back(v);
  }
  return Permutation(std::move(e));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Involution::Involution(Permutation perm) : perm_(std::move(perm)) {
  if (!is_involution(perm_)) {
    throw Error(ErrorCode::InvalidPermutation, "not an involution: " + perm_.to_string());
  }
}

namespace {

std::vector<Permutation> prefixed_patterns(int k, int fixed_prefix) {
  std::vector<int> e(static_cast<std::size_t>(k));
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin() + fixed_prefix, e.end()));
  return out;
}

}  // namespace

PatternFamily PatternFamily::prefix_one_two(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidK, "A_k needs k >= 3, got " + std::to_string(k));
  return PatternFamily(Kind::PrefixOneTwo, k, {});
}

PatternFamily PatternFamily::first_is_one(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidK, "F_k needs k >= 3, got " + std::to_string(k));
  return PatternFamily(Kind::FirstIsOne, k, {});
}

PatternFamily PatternFamily::explicit_set(std::vector<Permutation> patterns) {
  if (patterns.empty()) throw Error(ErrorCode::InvalidPermutation, "empty pattern set");
  const int k = patterns.front().size();
  for (const auto& tau : patterns) {
    if (tau.size() != k) throw Error(ErrorCode::InvalidPermutation, "patterns differ in length");
  }
  return PatternFamily(Kind::Explicit, k, std::move(patterns));
}

std::vector<Permutation> PatternFamily::members() const {
  switch (kind_) {
    case Kind::PrefixOneTwo:
      return prefixed_patterns(k_, 2);
    case Kind::FirstIsOne:
      return prefixed_patterns(k_, 1);
    case Kind::Explicit:
      break;
  }
  return patterns_;
}

std::string PatternFamily::name() const {
  switch (kind_) {
    case Kind::PrefixOneTwo:
      return "A_" + std::to_string(k_);
    case Kind::FirstIsOne:
      return "F_" + std::to_string(k_);
    case Kind::Explicit:
      break;
  }
  std::string out = "{";
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i) out += ',';
    for (int v : patterns_[i].entries()) out += std::to_string(v);
  }
  return out + "}";
}

std::span<const int> LayerDecomposition::layer(std::size_t r) const noexcept {
  if (r == 0 || r > layers.size()) return {};
  return layers[r - 1];
}

bool is_involution(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i) {
    if (p(p(i)) != i) return false;
  }
  return true;
}

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i) out.push_back(i);
  }
  return out;
}

int count_fixed_points(const Permutation& p) {
  int m = 0;
  for (int i = 1; i <= p.size(); ++i) m += p(i) == i;
  return m;
}

namespace {

// Extends a partial occurrence chosen[0..depth) of tau by one more index.
bool match_from(std::span<const int> p, std::span<const int> tau, std::vector<int>& chosen,
                std::size_t depth) {
  if (depth == tau.size()) return true;
  const std::size_t start = depth == 0 ? 0 : static_cast<std::size_t>(chosen[depth - 1]) + 1;
  const std::size_t last = p.size() - (tau.size() - depth);
  for (std::size_t idx = start; idx <= last; ++idx) {
    bool consistent = true;
    for (std::size_t t = 0; t < depth && consistent; ++t) {
      const bool p_less = p[static_cast<std::size_t>(chosen[t])] < p[idx];
      const bool tau_less = tau[t] < tau[depth];
      consistent = p_less == tau_less;
    }
    if (!consistent) continue;
    chosen[depth] = static_cast<int>(idx);
    if (match_from(p, tau, chosen, depth + 1)) return true;
  }
  return false;
}

// later_greater[i] = #{ l > i : p_l > p_i }, 0-based.
std::vector<int> later_greater_counts(std::span<const int> p) {
  std::vector<int> out(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t l = i + 1; l < p.size(); ++l) out[i] += p[l] > p[i];
  }
  return out;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& tau) {
  if (tau.size() > p.size()) return false;
  if (tau.empty()) return true;
  std::vector<int> chosen(static_cast<std::size_t>(tau.size()));
  return match_from(p.entries(), tau.entries(), chosen, 0);
}

bool avoids_family(const Permutation& p, const PatternFamily& fam) {
  const auto e = p.entries();
  switch (fam.kind()) {
    case PatternFamily::Kind::PrefixOneTwo: {
      // Some p_i < p_j (i < j) followed by k-2 entries above p_j.
      const auto later = later_greater_counts(e);
      int prefix_min = e.empty() ? 0 : e[0];
      for (std::size_t j = 1; j < e.size(); ++j) {
        if (prefix_min < e[j] && later[j] >= fam.k() - 2) return false;
        prefix_min = std::min(prefix_min, e[j]);
      }
      return true;
    }
    case PatternFamily::Kind::FirstIsOne: {
      const auto later = later_greater_counts(e);
      return std::none_of(later.begin(), later.end(), [&](int c) { return c >= fam.k() - 1; });
    }
    case PatternFamily::Kind::Explicit:
      break;
  }
  const auto members = fam.members();
  return std::none_of(members.begin(), members.end(),
                      [&](const Permutation& tau) { return contains_pattern(p, tau); });
}

LayerDecomposition rl_maxima_layers(const Permutation& p) {
  LayerDecomposition out;
  std::vector<int> remaining(static_cast<std::size_t>(p.size()));
  std::iota(remaining.begin(), remaining.end(), 1);
  while (!remaining.empty()) {
    std::vector<int> layer;
    std::vector<int> rest;
    int best = 0;
    for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) {
      if (p(*it) > best) {
        best = p(*it);
        layer.push_back(*it);
      } else {
        rest.push_back(*it);
      }
    }
    std::reverse(layer.begin(), layer.end());
    std::reverse(rest.begin(), rest.end());
    out.layers.push_back(std::move(layer));
    remaining = std::move(rest);
  }
  return out;
}

namespace {

void involutions_rec(std::vector<int>& img, int top, int fixed, const InvolutionVisitor& visit) {
  while (top >= 1 && img[static_cast<std::size_t>(top)] != 0) --top;
  if (top == 0) {
    visit(Involution(std::vector<int>(img.begin() + 1, img.end())), fixed);
    return;
  }
  const auto t = static_cast<std::size_t>(top);
  img[t] = top;
  involutions_rec(img, top - 1, fixed + 1, visit);
  for (int j = top - 1; j >= 1; --j) {
    const auto s = static_cast<std::size_t>(j);
    if (img[s] != 0) continue;
    img[t] = j;
    img[s] = top;
    involutions_rec(img, top - 1, fixed, visit);
    img[s] = 0;
  }
  img[t] = 0;
}

}  // namespace

void for_each_involution(int n, const InvolutionVisitor& visit, int limit) {
  if (n < 0 || n > limit) {
    throw Error(ErrorCode::LimitExceeded,
                "involution length " + std::to_string(n) + " outside 0.." + std::to_string(limit));
  }
  std::vector<int> img(static_cast<std::size_t>(n) + 1, 0);
  involutions_rec(img, n, 0, visit);
}

std::vector<Involution> enumerate_involutions(int n, int limit) {
  std::vector<Involution> out;
  for_each_involution(n, [&](const Involution& q, int) { out.push_back(q); }, limit);
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  if (n < 0 || n > kPermutationLimit) {
    throw Error(ErrorCode::LimitExceeded, "permutation length " + std::to_string(n) + " outside 0..8");
  }
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  do {
    visit(Permutation(e));
  } while (std::next_permutation(e.begin(), e.end()));
}

std::vector<Permutation> enumerate_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace pavi
