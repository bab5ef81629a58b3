#include "pavi/schroeder_path.hpp"

#include <algorithm>
#include <cctype>

#include "pavi/error.hpp"

namespace pavi {

namespace {

int width(Step s) { return s == Step::Horizontal ? 2 : 1; }

int delta(Step s) {
  switch (s) {
    case Step::Up: return 1;
    case Step::Down: return -1;
    case Step::Horizontal: break;
  }
  return 0;
}

Step mirror(Step s) {
  switch (s) {
    case Step::Up: return Step::Down;
    case Step::Down: return Step::Up;
    case Step::Horizontal: break;
  }
  return Step::Horizontal;
}

}  // namespace

SchroederPath::SchroederPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int height = 0;
  int total_width = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    height += delta(steps_[i]);
    total_width += width(steps_[i]);
    if (height < 0) {
      throw Error(ErrorCode::BelowAxis, "path dips below the axis at step " + std::to_string(i + 1));
    }
  }
  if (height != 0) {
    throw Error(ErrorCode::NotClosed, "path ends at height " + std::to_string(height));
  }
  // Height 0 at the end forces #U == #D, so the width is even.
  semilength_ = total_width / 2;
}

std::string SchroederPath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += static_cast<char>(s);
  return out;
}

SchroederPath parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (std::tolower(static_cast<unsigned char>(text[i]))) {
      case 'u': steps.push_back(Step::Up); break;
      case 'd': steps.push_back(Step::Down); break;
      case 'h': steps.push_back(Step::Horizontal); break;
      default:
        throw Error(ErrorCode::BadCharacter,
                    "unexpected '" + std::string(1, text[i]) + "' at offset " + std::to_string(i));
    }
  }
  return SchroederPath(std::move(steps));
}

SchroederPath reflect(const SchroederPath& p) {
  std::vector<Step> out(p.steps().rbegin(), p.steps().rend());
  std::transform(out.begin(), out.end(), out.begin(), mirror);
  return SchroederPath(std::move(out));
}

bool is_symmetric(const SchroederPath& p) {
  const auto& s = p.steps();
  for (std::size_t i = 0, j = s.size(); i < s.size(); ++i) {
    if (s[i] != mirror(s[--j])) return false;
  }
  return true;
}

StepStats step_stats(const SchroederPath& p) {
  StepStats st;
  const auto& s = p.steps();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == Step::Horizontal) {
      ++st.h;
    } else if (s[i] == Step::Up) {
      if (i + 1 < s.size() && s[i + 1] == Step::Down) {
        ++st.r;
      } else {
        ++st.u;
      }
    }
  }
  return st;
}

namespace {

// Depth-first over nonnegative step prefixes of exactly `target` width. With
// `closed` the prefix must also return to height 0.
void prefixes(std::vector<Step>& cur, int used, int height, int target, bool closed,
              const std::function<void(const std::vector<Step>&, int)>& emit) {
  if (used == target) {
    if (!closed || height == 0) emit(cur, height);
    return;
  }
  const int left = target - used;
  if (closed && height > left) return;
  if (left >= 2) {
    cur.push_back(Step::Horizontal);
    prefixes(cur, used + 2, height, target, closed, emit);
    cur.pop_back();
  }
  cur.push_back(Step::Up);
  prefixes(cur, used + 1, height + 1, target, closed, emit);
  cur.pop_back();
  if (height > 0) {
    cur.push_back(Step::Down);
    prefixes(cur, used + 1, height - 1, target, closed, emit);
    cur.pop_back();
  }
}

SchroederPath with_mirror(const std::vector<Step>& half, bool centre_h) {
  std::vector<Step> full(half);
  if (centre_h) full.push_back(Step::Horizontal);
  for (auto it = half.rbegin(); it != half.rend(); ++it) full.push_back(mirror(*it));
  return SchroederPath(std::move(full));
}

}  // namespace

void for_each_symmetric(int n, const PathVisitor& visit, int limit) {
  if (n < 0 || n > limit) {
    throw Error(ErrorCode::LimitExceeded,
                "semilength " + std::to_string(n) + " outside 0.." + std::to_string(limit));
  }
  std::vector<Step> cur;
  prefixes(cur, 0, 0, n, false, [&](const std::vector<Step>& half, int) {
    visit(with_mirror(half, false));
  });
  if (n >= 1) {
    prefixes(cur, 0, 0, n - 1, false, [&](const std::vector<Step>& half, int) {
      visit(with_mirror(half, true));
    });
  }
}

std::vector<SchroederPath> enumerate_symmetric(int n, int limit) {
  std::vector<SchroederPath> out;
  for_each_symmetric(n, [&](const SchroederPath& p) { out.push_back(p); }, limit);
  return out;
}

void for_each_path(int n, const PathVisitor& visit) {
  if (n < 0 || n > kAllPathsLimit) {
    throw Error(ErrorCode::LimitExceeded, "semilength " + std::to_string(n) + " outside 0..10");
  }
  std::vector<Step> cur;
  prefixes(cur, 0, 0, 2 * n, true, [&](const std::vector<Step>& steps, int) {
    visit(SchroederPath(steps));
  });
}

std::vector<SchroederPath> enumerate_all(int n) {
  std::vector<SchroederPath> out;
  for_each_path(n, [&](const SchroederPath& p) { out.push_back(p); });
  return out;
}

std::string render(const SchroederPath& p) {
  int height = 0;
  int rows = 1;
  for (Step s : p.steps()) {
    height += delta(s);
    rows = std::max(rows, height + 1);
  }
  const auto cols = static_cast<std::size_t>(2 * p.semilength());
  std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(cols, ' '));
  std::size_t x = 0;
  height = 0;
  for (Step s : p.steps()) {
    switch (s) {
      case Step::Up:
        grid[static_cast<std::size_t>(height)][x++] = '/';
        ++height;
        break;
      case Step::Down:
        --height;
        grid[static_cast<std::size_t>(height)][x++] = '\\';
        break;
      case Step::Horizontal:
        grid[static_cast<std::size_t>(height)][x++] = '_';
        grid[static_cast<std::size_t>(height)][x++] = '_';
        break;
    }
  }
  std::string out;
  for (auto row = grid.rbegin(); row != grid.rend(); ++row) {
    auto line = *row;
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace pavi
