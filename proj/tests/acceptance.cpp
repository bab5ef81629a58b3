// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pavi/bijection.hpp"
#include "pavi/engines.hpp"
#include "pavi/error.hpp"
#include "pavi/laurent_series.hpp"
#include "pavi/oracle.hpp"
#include "pavi/schroeder_path.hpp"

namespace {

using namespace pavi;

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const PatternFamily& forbidden_pair() {
  static const auto fam = PatternFamily::explicit_set({Permutation({1, 2, 3, 4}), Permutation({1, 2, 4, 3})});
  return fam;
}

RationalSeries one(int order) { return RationalSeries::monomial(1, 0, order); }

RationalSeries from_ints(std::vector<int> c, int order) {
  return RationalSeries::from_coefficients(std::vector<BigRational>(c.begin(), c.end()), order);
}

Verdict worked_examples() {
  Verdict v;
  const Involution got = encode(parse_path("uhuduudhuddudhd"));
  if (got != Involution::parse("4 10 8 1 7 9 5 3 6 2")) v.fail("encode gave " + got.to_string());
  const SchroederPath back = decode(Involution::parse("10 5 8 7 2 6 4 3 9 1"));
  if (back != parse_path("huududuuddududdh")) v.fail("decode gave " + back.to_string());
  if (v.ok) v.detail = "both examples exact";
  return v;
}

Verdict bijection_laws() {
  Verdict v;
  std::uint64_t checked = 0;
  for (int n = 0; n <= 10; ++n) {
    std::set<Involution> images;
    std::uint64_t paths = 0;
    for_each_symmetric(n, [&](const SchroederPath& p) {
      ++paths;
      const Involution q = encode(p);
      if (q.size() != n + 1 || !avoids_family(q, forbidden_pair())) v.fail("image of " + p.to_string());
      if (decode(q) != p) v.fail("round trip of " + p.to_string());
      images.insert(q);
    });
    checked += paths;
    if (images.size() != paths) v.fail("encode not injective at n=" + std::to_string(n));
    if (n <= 9) {
      std::uint64_t avoiders = 0;
      for_each_involution(n + 1, [&](const Involution& q, int) {
        if (avoids_family(q, forbidden_pair())) ++avoiders;
      });
      if (avoiders != paths) {
        v.fail("|Sh_" + std::to_string(n) + "| = " + std::to_string(paths) + " but brute count " +
               std::to_string(avoiders));
      }
    }
  }
  if (v.ok) v.detail = std::to_string(checked) + " paths, n <= 10";
  return v;
}

Verdict image_statistics() {
  Verdict v;
  std::uint64_t paths = 0, rl1 = 0, rl2 = 0, rl3 = 0, fixed = 0, many_fixed = 0;
  std::string witness;
  for (int n = 0; n <= 9; ++n) {
    for_each_symmetric(n, [&](const SchroederPath& p) {
      ++paths;
      const auto want = corollary_stats(p);
      const auto got = measured_stats(encode(p));
      rl1 += want.rl_maxima != got.rl_maxima;
      rl2 += want.rl2 != got.rl2;
      rl3 += want.rl3 != got.rl3;
      fixed += want.fixed != got.fixed;
      many_fixed += got.fixed > 3;
      if (want != got && witness.empty()) {
        witness = p.to_string() + " -> " + encode(p).to_string() + " has (" + std::to_string(got.rl_maxima) + "," +
                  std::to_string(got.rl2) + "," + std::to_string(got.rl3) + "," + std::to_string(got.fixed) +
                  "), predicted (" + std::to_string(want.rl_maxima) + "," + std::to_string(want.rl2) + "," +
                  std::to_string(want.rl3) + "," + std::to_string(want.fixed) + ")";
      }
    });
  }
  std::ostringstream s;
  s << paths << " paths; mismatches rl=" << rl1 << " 2-RL=" << rl2 << " 3-RL=" << rl3 << " fixed=" << fixed
    << "; images with >3 fixed points=" << many_fixed;
  if (!witness.empty()) s << "; e.g. " << witness;
  v.ok = rl1 + rl2 + rl3 + fixed + many_fixed == 0;
  v.detail = s.str();
  return v;
}

Verdict theorem1_vs_oracle() {
  Verdict v;
  for (int k = 3; k <= 5; ++k) {
    const auto series = theorem1_series(k, 11);
    for (int n = 0; n <= 11; ++n) {
      const auto brute = brute_count(PatternFamily::prefix_one_two(k), n).by_fixed_points();
      if (series.coefficient(n) != brute) {
        v.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": " + series.coefficient(n).to_string() +
               " vs " + brute.to_string());
      }
    }
  }
  if (v.ok) v.detail = "k=3,4,5, n <= 11, every (n, m)";
  return v;
}

Verdict k3_closed_form() {
  Verdict v;
  const auto at1 = evaluate_marker(theorem1_series(3, 16), 1);
  for (int n = 0; n <= 16; ++n) {
    BigInt binom = 1;
    for (int i = 1; i <= n / 2; ++i) binom = binom * (n - i + 1) / i;
    if (at1.coefficient(n) != BigRational(binom)) v.fail("n=" + std::to_string(n));
  }
  if (v.ok) v.detail = "n <= 16";
  return v;
}

Verdict k4_closed_form() {
  Verdict v;
  constexpr int kOrder = 17;
  // sqrt(A/B) = A (AB)^{-1/2}, with A = 1+2x-x^2 and B = 1-2x-x^2.
  const auto a = from_ints({1, 2, -1}, kOrder);
  const auto b = from_ints({1, -2, -1}, kOrder);
  const auto root = a * series_sqrt_recip(a * b);
  const auto closed =
      from_ints({1, -1}, kOrder) * BigRational(1, 2) + from_ints({1, 1}, kOrder) * BigRational(1, 2) * root;
  const auto at1 = evaluate_marker(theorem1_series(4, 16), 1);
  for (int n = 0; n <= 16; ++n) {
    if (closed.coefficient(n) != at1.coefficient(n)) {
      v.fail("n=" + std::to_string(n) + ": " + rational_to_string(closed.coefficient(n)) + " vs " +
             rational_to_string(at1.coefficient(n)));
    }
  }
  if (v.ok) v.detail = "n <= 16";
  return v;
}

Verdict f_family() {
  Verdict v;
  const auto inv = j_table(8);
  for (int k = 3; k <= 6; ++k) {
    const auto table = f_engine(k, 11);
    const auto closed = f_closed_series(k, 11);
    for (int n = 0; n <= 11; ++n) {
      const auto brute = brute_count(PatternFamily::first_is_one(k), n).by_fixed_points();
      const auto& engine = table.total[static_cast<std::size_t>(n)];
      if (engine != brute || closed.coefficient(n) != engine) {
        v.fail("k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
    // f(k+2j) = (k-1)^{j+1} I_{k-2}, f(k+2j-1) = (k-1)^j I_{k-1}.
    BigRational power = 1;
    for (int j = 0; k + 2 * j <= 11; ++j) {
      const BigRational even = table.total[static_cast<std::size_t>(k + 2 * j)].evaluate(1);
      if (even != power * (k - 1) * inv[static_cast<std::size_t>(k - 2)].evaluate(1)) {
        v.fail("parity law, k=" + std::to_string(k) + " length " + std::to_string(k + 2 * j));
      }
      if (j >= 1) {
        const BigRational odd = table.total[static_cast<std::size_t>(k + 2 * j - 1)].evaluate(1);
        if (odd != power * inv[static_cast<std::size_t>(k - 1)].evaluate(1)) {
          v.fail("parity law, k=" + std::to_string(k) + " length " + std::to_string(k + 2 * j - 1));
        }
      }
      power *= k - 1;
    }
  }
  if (v.ok) v.detail = "k=3..6, n <= 11, parity law at p=1";
  return v;
}

Verdict first_entry_tables() {
  Verdict v;
  for (int k = 3; k <= 5; ++k) {
    const auto table = g_engine(k, 11);
    for (int n = 1; n <= 11; ++n) {
      const auto brute = brute_count(PatternFamily::prefix_one_two(k), n);
      for (int t = 1; t <= n; ++t) {
        if (table.by_first[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)] != brute.by_fixed_points(t)) {
          v.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + " t=" + std::to_string(t));
        }
      }
    }
  }
  for (int k = 3; k <= 4; ++k) {
    const auto table = g_engine(k, 10);
    for (int n = k; n <= 10; ++n) {
      for (const BigRational& at : {BigRational(2), BigRational(1, 2), BigRational(-1), BigRational(3, 5)}) {
        if (g_at_v(table, n, at) != g_recurrence_rhs(table, n, at)) {
          v.fail("recurrence, k=" + std::to_string(k) + " n=" + std::to_string(n) + " v=" + rational_to_string(at));
        }
      }
    }
  }
  if (v.ok) v.detail = "tables k=3,4,5 n <= 11; recurrence at 4 values of v";
  return v;
}

Verdict algebra_kernel() {
  Verdict v;
  constexpr int kOrder = 65;  // through x^64
  for (int k = 3; k <= 5; ++k) {
    const auto a = theorem1_kernel(k, kOrder - 1);
    if (!a.agrees_with(from_ints({1, 0, -2 * (k - 1), 0, (k - 3) * (k - 3)}, kOrder))) {
      v.fail("kernel polynomial at k=" + std::to_string(k));
    }
    const auto s = series_sqrt_recip(a);
    if (!(s * s * a).agrees_with(one(kOrder))) v.fail("s^2 a != 1 at k=" + std::to_string(k));
    if (!(a * series_inverse(a)).agrees_with(one(kOrder))) v.fail("a / a != 1 at k=" + std::to_string(k));
    try {
      const auto assembled = theorem1_series(k, 64);
      if (assembled.valuation() < 0) v.fail("negative powers at k=" + std::to_string(k));
      for (int n = 0; n <= 64; ++n) {
        if (!assembled.coefficient(n).is_counting()) v.fail("non-counting coefficient at x^" + std::to_string(n));
      }
    } catch (const Error& e) {
      v.fail(e.what());
    }
  }
  const auto ex = series_exp(from_ints({0, 1}, 30));
  const auto back = series_exp(from_ints({0, -1}, 30));
  if (!(ex * back).agrees_with(one(30))) v.fail("exp(x) exp(-x) != 1");
  const auto shifted = RationalSeries(-3, {1, 1}, 20);
  if (!(shifted * series_inverse(shifted)).agrees_with(one(20))) v.fail("Laurent inverse");
  if (v.ok) v.detail = "k=3,4,5 through x^64";
  return v;
}

Verdict egf_property() {
  Verdict v;
  constexpr int kMax = 20;
  const PolySeries arg = PolySeries::monomial(Polynomial::p(), 1, kMax + 1) +
                         PolySeries::monomial(Polynomial(BigRational(1, 2)), 2, kMax + 1);
  const auto e = series_exp(arg);
  const auto j = j_table(kMax);
  BigRational factorial = 1;
  for (int n = 0; n <= kMax; ++n) {
    if (n > 0) factorial *= n;
    if (e.coefficient(n) * factorial != j[static_cast<std::size_t>(n)]) v.fail("n=" + std::to_string(n));
  }
  if (v.ok) v.detail = "n <= 20";
  return v;
}

Verdict fixed_point_free() {
  Verdict v;
  const auto at0 = evaluate_marker(theorem1_series(3, 12), 0);
  std::ostringstream seq;
  for (int n = 0; n <= 12; ++n) {
    const auto brute = brute_count(PatternFamily::prefix_one_two(3), n);
    std::uint64_t observed = 0;
    for (const auto& row : brute.counts) observed += row.empty() ? 0 : row[0];
    if (at0.coefficient(n) != BigRational(observed)) v.fail("length " + std::to_string(n));
    if (n % 2 == 0) {
      // Closed form binom(2j, j) / 2 for j >= 1, where n = 2j.
      const int j = n / 2;
      BigInt central = 1;
      for (int i = 1; i <= j; ++i) central = central * (j + i) / i;
      const BigInt expected = j == 0 ? BigInt(1) : central / 2;
      if (BigInt(observed) != expected) v.fail("closed form at length " + std::to_string(n));
      seq << (n ? "," : "") << observed;
    }
  }
  if (v.ok) v.detail = "even lengths 0..12: " + seq.str() + " = binom(2j,j)/2 (j >= 1)";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"bijection worked examples", worked_examples},
      {"bijection laws, n <= 10", bijection_laws},
      {"step statistics of images, n <= 9", image_statistics},
      {"prefix-12 series vs brute force, k=3,4,5", theorem1_vs_oracle},
      {"k=3 central binomial totals", k3_closed_form},
      {"k=4 square-root closed form", k4_closed_form},
      {"first-entry-1 family and parity law", f_family},
      {"first-entry tables and sampled-v recurrence", first_entry_tables},
      {"series algebra kernel", algebra_kernel},
      {"involution EGF", egf_property},
      {"fixed-point-free 123-avoiders", fixed_point_free},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !v.ok;
    std::printf("%s %2d %s (%.2fs): %s\n", v.ok ? "PASS" : "FAIL", index, name, secs, v.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", index - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
