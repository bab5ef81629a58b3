#include "pavi/oracle.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "pavi/bijection.hpp"
#include "pavi/engines.hpp"
#include "pavi/error.hpp"
#include "pavi/laurent_series.hpp"
#include "pavi/schroeder_path.hpp"

namespace pavi {

Polynomial BruteTable::by_fixed_points(int t) const {
  std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
  for (std::size_t row = 0; row < counts.size(); ++row) {
    if (t != 0 && static_cast<int>(row) != t) continue;
    for (std::size_t m = 0; m < counts[row].size(); ++m) c[m] += counts[row][m];
  }
  return Polynomial(std::move(c));
}

BruteTable brute_count(const PatternFamily& fam, int n) {
  const int limit =
      fam.kind() == PatternFamily::Kind::PrefixOneTwo && fam.k() >= 6 ? kBruteLimitLongPrefix : kBruteLimit;
  if (n < 0 || n > limit) {
    throw Error(ErrorCode::LimitExceeded,
                "brute force for " + fam.name() + " supports n <= " + std::to_string(limit));
  }
  const auto members = fam.members();
  BruteTable table;
  table.family = fam.name();
  table.k = fam.k();
  table.n = n;
  table.counts.assign(static_cast<std::size_t>(n) + 1,
                      std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  for_each_involution(
      n,
      [&](const Involution& q, int fixed) {
        for (const auto& tau : members) {
          if (contains_pattern(q, tau)) return;
        }
        const int t = q.size() == 0 ? 0 : q(1);
        ++table.counts[static_cast<std::size_t>(t)][static_cast<std::size_t>(fixed)];
        ++table.total;
      },
      kBruteLimit);
  return table;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::json Report::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"suite", suite}, {"passed", passed()}, {"checks", std::move(arr)}};
}

namespace {

const PatternFamily& pair_1234_1243() {
  static const PatternFamily fam =
      PatternFamily::explicit_set({Permutation({1, 2, 3, 4}), Permutation({1, 2, 4, 3})});
  return fam;
}

BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

BigInt involution_count(int n) {
  BigInt a = 1;
  BigInt b = 1;  // I_0, I_1
  if (n == 0) return a;
  for (int m = 2; m <= n; ++m) {
    BigInt c = b + (m - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

// The first h after an r outranks it, and every later h ranks below it.
std::string label_order_violation(const SchroederPath& p, const Involution& q) {
  const auto word = project(p).letters;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] != Letter::R) continue;
    const int r_label = q(static_cast<int>(i) + 1);
    bool first = true;
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[j] != Letter::H) continue;
      const int h_label = q(static_cast<int>(j) + 1);
      if (first ? h_label < r_label : h_label > r_label) {
        return p.to_string() + " at r position " + std::to_string(i + 1);
      }
      first = false;
    }
  }
  return {};
}

std::string stats_string(const InvolutionStats& s) {
  std::ostringstream out;
  out << "(" << s.rl_maxima << "," << s.rl2 << "," << s.rl3 << "," << s.fixed << ")";
  return out.str();
}

std::string n_range(int lo, int hi) {
  return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

Report verify_bijection(int max_n) {
  if (max_n < 0 || max_n > kAllPathsLimit) {
    throw Error(ErrorCode::LimitExceeded, "verify_bijection supports max_n <= 10");
  }
  Report report;
  report.suite = "bijection";
  const auto& forbidden = pair_1234_1243();
  for (int n = 0; n <= max_n; ++n) {
    std::string round_trip, image, fixed, labels;
    // One witness per predicted statistic: rl1, rl2, rl3, fixed points.
    std::array<std::string, 4> stats;
    std::array<std::uint64_t, 4> stat_misses{};
    std::uint64_t paths = 0;
    std::set<Involution> images;
    for_each_symmetric(n, [&](const SchroederPath& p) {
      ++paths;
      const Involution q = encode(p);
      images.insert(q);
      if (q.size() != n + 1 || !is_involution(q) || !avoids_family(q, forbidden)) {
        if (image.empty()) image = p.to_string() + " -> " + q.to_string();
      }
      try {
        if (decode(q) != p && round_trip.empty()) round_trip = p.to_string() + " -> " + q.to_string();
      } catch (const Error& e) {
        if (round_trip.empty()) round_trip = p.to_string() + ": " + e.what();
      }
      const auto predicted = corollary_stats(p);
      const auto measured = measured_stats(q);
      const std::array<bool, 4> agree = {predicted.rl_maxima == measured.rl_maxima,
                                         predicted.rl2 == measured.rl2, predicted.rl3 == measured.rl3,
                                         predicted.fixed == measured.fixed};
      for (std::size_t i = 0; i < agree.size(); ++i) {
        if (agree[i]) continue;
        ++stat_misses[i];
        if (stats[i].empty()) {
          stats[i] = p.to_string() + " predicted " + stats_string(predicted) + " measured " +
                     stats_string(measured);
        }
      }
      if (measured.fixed > 3 && fixed.empty()) fixed = p.to_string() + " -> " + q.to_string();
      if (labels.empty()) labels = label_order_violation(p, q);
    });
    const std::string tag = "n=" + std::to_string(n);
    report.add("round-trip decode(encode(p)) = p, " + tag, round_trip.empty(),
               round_trip.empty() ? std::to_string(paths) + " paths" : round_trip);
    report.add("image in I_{n+1}(1234,1243), " + tag, image.empty(), image);
    report.add("encode is injective, " + tag, images.size() == paths,
               std::to_string(images.size()) + " distinct images");
    constexpr const char* kStatClaims[] = {"right-to-left maxima = h+1", "2-RL maxima = r",
                                           "3-RL maxima = u", "fixed points = parity formula"};
    for (std::size_t i = 0; i < stats.size(); ++i) {
      report.add(std::string(kStatClaims[i]) + ", " + tag, stats[i].empty(),
                 stats[i].empty() ? std::string()
                                  : std::to_string(stat_misses[i]) + " of " + std::to_string(paths) +
                                        " paths disagree, e.g. " + stats[i]);
    }
    report.add("at most three fixed points, " + tag, fixed.empty(), fixed);
    report.add("first h after an r outranks it, later ones do not, " + tag, labels.empty(), labels);

    if (n + 1 <= kBruteLimit) {
      std::uint64_t avoiders = 0;
      std::string inverse;
      for_each_involution(
          n + 1,
          [&](const Involution& q, int) {
            if (!avoids_family(q, forbidden)) return;
            ++avoiders;
            if (!inverse.empty()) return;
            try {
              if (encode(decode(q)) != q) inverse = q.to_string();
            } catch (const Error& e) {
              inverse = q.to_string() + ": " + e.what();
            }
          },
          kBruteLimit);
      report.add("|Sh_n| = |I_{n+1}(1234,1243)|, " + tag, avoiders == paths,
                 std::to_string(paths) + " paths, " + std::to_string(avoiders) + " involutions");
      report.add("encode(decode(q)) = q, " + tag, inverse.empty(), inverse);
    }
  }
  return report;
}

namespace {

void verify_family_a(Report& report, int k, int max_n) {
  const auto fam = PatternFamily::prefix_one_two(k);
  const int brute_top = std::min(max_n, k >= 6 ? kBruteLimitLongPrefix : kBruteLimit);
  const GTable g = g_engine(k, max_n);
  const PolySeries series = theorem1_series(k, max_n);
  const std::string tag = "A_" + std::to_string(k);

  std::string table_diff, series_diff, sign_diff;
  std::vector<BruteTable> brute;
  for (int n = 0; n <= brute_top; ++n) {
    brute.push_back(brute_count(fam, n));
    const auto& b = brute.back();
    for (int t = 1; t <= n && table_diff.empty(); ++t) {
      if (g.by_first[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)] != b.by_fixed_points(t)) {
        table_diff = "n=" + std::to_string(n) + " t=" + std::to_string(t) + ": engine " +
                     g.by_first[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)].to_string() +
                     ", brute " + b.by_fixed_points(t).to_string();
      }
    }
    if (g.total[static_cast<std::size_t>(n)] != b.by_fixed_points() && table_diff.empty()) {
      table_diff = "n=" + std::to_string(n) + " total";
    }
    if (series.coefficient(n) != b.by_fixed_points() && series_diff.empty()) {
      series_diff = "n=" + std::to_string(n) + ": series " + series.coefficient(n).to_string() + ", brute " +
                    b.by_fixed_points().to_string();
    }
  }
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& cell : g.by_first[static_cast<std::size_t>(n)]) {
      if (!cell.is_counting() && sign_diff.empty()) sign_diff = "n=" + std::to_string(n);
    }
  }
  report.add(tag + " first-entry table = brute force per (t, m), " + n_range(0, brute_top), table_diff.empty(),
             table_diff);
  report.add(tag + " closed-form series = brute force per (n, m), " + n_range(0, brute_top),
             series_diff.empty(), series_diff);
  report.add(tag + " table entries are counting polynomials", sign_diff.empty(), sign_diff);

  // The sampled-v recurrence, p symbolic.
  const BigRational samples[] = {BigRational(2), BigRational(1, 2), BigRational(-1), BigRational(3, 5)};
  std::string mismatch;
  for (int n = k; n <= max_n && mismatch.empty(); ++n) {
    for (const auto& v : samples) {
      if (g_at_v(g, n, v) != g_recurrence_rhs(g, n, v)) {
        mismatch = "n=" + std::to_string(n) + " v=" + rational_to_string(v);
        break;
      }
    }
  }
  report.add(tag + " G_k(n; v, p) recurrence at v in {2, 1/2, -1, 3/5}, " + n_range(k, max_n), mismatch.empty(),
             mismatch);

  if (k == 3) {
    std::string diff;
    for (int n = 0; n <= max_n; ++n) {
      const BigInt expect = binomial(n, n / 2);
      if (series.coefficient(n).evaluate(1) != BigRational(expect) && diff.empty()) diff = "n=" + std::to_string(n);
    }
    report.add("A_3 totals = binom(n, floor(n/2)), " + n_range(0, max_n), diff.empty(), diff);

    // Fixed-point-free avoiders exist only in even length 2j and number
    // binom(2j-1, j-1) = binom(2j, j) / 2, not binom(j, floor(j/2)) / 2.
    std::string fpf;
    std::ostringstream seq;
    for (int n = 0; n <= brute_top; ++n) {
      std::uint64_t observed = 0;
      for (const auto& row : brute[static_cast<std::size_t>(n)].counts) observed += row[0];
      const BigRational from_series = series.coefficient(n).coefficient(0);
      const int j = n / 2;
      const BigInt resolved = n % 2 ? BigInt(0) : (j == 0 ? BigInt(1) : binomial(2 * j - 1, j - 1));
      if (n) seq << ",";
      seq << observed;
      if ((BigRational(observed) != from_series || BigInt(observed) != resolved) && fpf.empty()) {
        fpf = "length " + std::to_string(n);
      }
    }
    report.add("A_3 fixed-point-free counts: series at p=0 = brute force, " + n_range(0, brute_top),
               fpf.empty(),
               fpf.empty() ? "lengths 0..: " + seq.str() +
                                 "; length 2j gives binom(2j,j)/2 (the remark's binom(j,floor(j/2))/2 does not match)"
                           : fpf);
  }
  if (k == 4) {
    std::string diff;
    const int top = std::min(max_n, kAllPathsLimit + 1);
    for (int n = 1; n <= top; ++n) {
      const auto paths = enumerate_symmetric(n - 1).size();
      if (series.coefficient(n).evaluate(1) != BigRational(paths) && diff.empty()) diff = "n=" + std::to_string(n);
    }
    report.add("A_4 totals = |Sh_{n-1}|, " + n_range(1, top), diff.empty(), diff);
  }
}

void verify_family_f(Report& report, int k, int max_n) {
  const auto fam = PatternFamily::first_is_one(k);
  const FTable f = f_engine(k, max_n);
  const PolySeries closed = f_closed_series(k, max_n);
  const std::string tag = "F_" + std::to_string(k);

  std::string table_diff, closed_diff;
  for (int n = 0; n <= max_n; ++n) {
    const auto b = brute_count(fam, n);
    for (int t = 1; t <= n && table_diff.empty(); ++t) {
      if (f.by_first[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)] != b.by_fixed_points(t)) {
        table_diff = "n=" + std::to_string(n) + " t=" + std::to_string(t);
      }
    }
    if (f.total[static_cast<std::size_t>(n)] != b.by_fixed_points() && table_diff.empty()) {
      table_diff = "n=" + std::to_string(n) + " total";
    }
    if (closed.coefficient(n) != f.total[static_cast<std::size_t>(n)] && closed_diff.empty()) {
      closed_diff = "n=" + std::to_string(n) + ": closed " + closed.coefficient(n).to_string() + ", engine " +
                    f.total[static_cast<std::size_t>(n)].to_string();
    }
  }
  report.add(tag + " engine = brute force per (t, m), " + n_range(0, max_n), table_diff.empty(), table_diff);
  report.add(tag + " closed form = engine, " + n_range(0, max_n), closed_diff.empty(), closed_diff);

  // Length k+2j: (k-1)^{j+1} I_{k-2}; length k+2j-1: (k-1)^j I_{k-1}.
  std::string parity;
  BigInt power = 1;  // (k-1)^j
  for (int j = 0; k + 2 * j - 1 <= max_n; ++j) {
    const BigRational odd = f.total[static_cast<std::size_t>(k + 2 * j - 1)].evaluate(1);
    if (odd != BigRational(power * involution_count(k - 1)) && parity.empty()) {
      parity = "length " + std::to_string(k + 2 * j - 1);
    }
    if (k + 2 * j <= max_n) {
      const BigRational even = f.total[static_cast<std::size_t>(k + 2 * j)].evaluate(1);
      if (even != BigRational(power * (k - 1) * involution_count(k - 2)) && parity.empty()) {
        parity = "length " + std::to_string(k + 2 * j);
      }
    }
    power *= k - 1;
  }
  report.add(tag + " parity law at p=1, " + n_range(k - 1, max_n), parity.empty(), parity);
}

}  // namespace

Report verify_engines(const std::vector<int>& k_set, int max_n) {
  if (max_n < 0 || max_n > kBruteLimit) {
    throw Error(ErrorCode::LimitExceeded, "verify_engines supports max_n <= 12");
  }
  Report report;
  report.suite = "engines";

  std::string egf;
  const auto J = j_table(20);
  const PolySeries arg = PolySeries::from_coefficients({Polynomial(), Polynomial::p(), BigRational(1, 2)}, 21);
  const PolySeries e = series_exp(arg);
  BigRational factorial = 1;
  for (int n = 0; n <= 20; ++n) {
    if (n) factorial *= n;
    if (e.coefficient(n) * factorial != J[static_cast<std::size_t>(n)] && egf.empty()) {
      egf = "n=" + std::to_string(n);
    }
  }
  report.add("n! [x^n] exp(px + x^2/2) = J_n(p), n=0..20", egf.empty(), egf);

  for (int k : k_set) {
    verify_family_a(report, k, max_n);
    verify_family_f(report, k, max_n);
  }
  return report;
}

}  // namespace pavi
