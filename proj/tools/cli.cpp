#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pavi/bijection.hpp"
#include "pavi/engines.hpp"
#include "pavi/error.hpp"
#include "pavi/oracle.hpp"
#include "pavi/schroeder_path.hpp"
#include "pavi/series_json.hpp"

namespace pavi::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string integer_string(const BigRational& r) { return rational_to_string(r); }

BigRational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return BigRational(BigInt(text));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    return BigRational(BigInt(text.substr(0, slash))) / BigRational(den);
  } catch (const std::runtime_error&) {
    throw UsageError("expected an integer or fraction, got '" + text + "'");
  }
}

json stats_json(const InvolutionStats& s) {
  return {{"rl_maxima", s.rl_maxima}, {"rl2", s.rl2}, {"rl3", s.rl3}, {"fixed", s.fixed}};
}

// ---------------------------------------------------------------- count

struct CountOptions {
  std::string family = "A";
  int k = 4;
  int n = 0;
  bool by_first = false;
  bool by_fixed = false;
  std::string engine = "recurrence";
  std::string format = "text";
};

// One row per first entry t (t = 0 holds the whole total when the engine
// cannot split by first entry).
struct CountResult {
  Polynomial total;
  std::vector<Polynomial> by_first;  // index t, slot 0 unused
};

CountResult compute_count(const CountOptions& o) {
  CountResult r;
  if (o.engine == "brute") {
    const auto fam = o.family == "A" ? PatternFamily::prefix_one_two(o.k) : PatternFamily::first_is_one(o.k);
    const auto table = brute_count(fam, o.n);
    r.total = table.by_fixed_points();
    for (int t = 0; t <= o.n; ++t) r.by_first.push_back(t == 0 ? Polynomial() : table.by_fixed_points(t));
  } else if (o.engine == "recurrence") {
    if (o.family == "A") {
      const auto g = g_engine(o.k, o.n);
      r.total = g.total[static_cast<std::size_t>(o.n)];
      r.by_first = g.by_first[static_cast<std::size_t>(o.n)];
    } else {
      const auto f = f_engine(o.k, o.n);
      r.total = f.total[static_cast<std::size_t>(o.n)];
      r.by_first = f.by_first[static_cast<std::size_t>(o.n)];
    }
  } else {
    if (o.by_first) throw UsageError("--engine series cannot split by first entry");
    const auto s = o.family == "A" ? theorem1_series(o.k, o.n) : f_closed_series(o.k, o.n);
    r.total = s.coefficient(o.n);
  }
  return r;
}

json poly_counts(const Polynomial& poly) {
  json out = json::object();
  for (int m = 0; m <= poly.degree(); ++m) {
    if (poly.coefficient(m) != 0) out[std::to_string(m)] = integer_string(poly.coefficient(m));
  }
  return out;
}

int run_count(const CountOptions& o, std::ostream& out) {
  const CountResult r = compute_count(o);
  const std::string total = integer_string(r.total.evaluate(1));
  if (o.format == "json") {
    json j = {{"family", o.family}, {"k", o.k}, {"n", o.n}, {"engine", o.engine}, {"total", total}};
    if (o.by_fixed) j["by_fixed_points"] = poly_counts(r.total);
    if (o.by_first) {
      json rows = json::array();
      for (int t = 1; t < static_cast<int>(r.by_first.size()); ++t) {
        const auto& cell = r.by_first[static_cast<std::size_t>(t)];
        json row = {{"t", t}, {"count", integer_string(cell.evaluate(1))}};
        if (o.by_fixed) row["by_fixed_points"] = poly_counts(cell);
        rows.push_back(std::move(row));
      }
      j["by_first_entry"] = std::move(rows);
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  const bool csv = o.format == "csv";
  const auto emit_fixed = [&](const std::string& prefix, const Polynomial& poly) {
    for (int m = 0; m <= o.n; ++m) {
      const std::string c = integer_string(poly.coefficient(m));
      if (csv) {
        out << prefix << m << ',' << c << '\n';
      } else if (poly.coefficient(m) != 0) {
        out << prefix << "m=" << m << ": " << c << '\n';
      }
    }
  };
  if (o.by_first) {
    if (csv) out << (o.by_fixed ? "t,m,count\n" : "t,count\n");
    for (int t = 1; t < static_cast<int>(r.by_first.size()); ++t) {
      const auto& cell = r.by_first[static_cast<std::size_t>(t)];
      if (o.by_fixed) {
        emit_fixed(csv ? std::to_string(t) + "," : "t=" + std::to_string(t) + " ", cell);
      } else if (csv) {
        out << t << ',' << integer_string(cell.evaluate(1)) << '\n';
      } else {
        out << "t=" << t << ": " << integer_string(cell.evaluate(1)) << '\n';
      }
    }
  } else if (o.by_fixed) {
    if (csv) out << "m,count\n";
    emit_fixed("", r.total);
  } else if (csv) {
    out << "family,k,n,engine,total\n" << o.family << ',' << o.k << ',' << o.n << ',' << o.engine << ',' << total << '\n';
  } else {
    out << total << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- series

struct SeriesOptions {
  std::string family = "A";
  int k = 4;
  int order = 64;
  std::string p = "symbolic";
  std::string format = "text";
};

int run_series(const SeriesOptions& o, std::ostream& out) {
  const PolySeries s = o.family == "A" ? theorem1_series(o.k, o.order) : f_closed_series(o.k, o.order);
  if (o.p == "symbolic") {
    if (o.format == "json") {
      out << to_json(s).dump() << '\n';
    } else {
      for (int e = 0; e <= o.order; ++e) out << "x^" << e << ": " << s.coefficient(e).to_string() << '\n';
    }
    return kExitOk;
  }
  const RationalSeries at = evaluate_marker(s, parse_rational(o.p));
  if (o.format == "json") {
    out << to_json(at).dump() << '\n';
    return kExitOk;
  }
  for (int e = 0; e <= o.order; ++e) out << (e ? "," : "") << rational_to_string(at.coefficient(e));
  out << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- verify

std::vector<int> parse_k_set(const std::string& text) {
  std::vector<int> ks;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      ks.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad --k-set entry '" + item + "'");
    }
  }
  if (ks.empty()) throw UsageError("--k-set is empty");
  return ks;
}

int run_verify(const std::string& suite, int max_n, const std::string& k_set, const std::string& format,
               std::ostream& out) {
  const auto ks = parse_k_set(k_set);
  Report report;
  report.suite = suite;
  if (suite == "bijection" || suite == "all") report.append(verify_bijection(std::min(max_n, kAllPathsLimit)));
  if (suite == "engines" || suite == "all") report.append(verify_engines(ks, max_n));
  if (format == "json") {
    out << report.to_json().dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " [" << c.detail << "]";
      out << '\n';
    }
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric Schröder paths, pattern-avoiding involutions and their generating functions", "pavi"};
  app.require_subcommand(1);

  // bij
  auto* bij = app.add_subcommand("bij", "Map between symmetric Schröder paths and {1234,1243}-avoiding involutions");
  bij->require_subcommand(1);
  std::string path_text, perm_text;
  bool with_stats = false;
  auto* enc = bij->add_subcommand("encode", "Path to involution");
  enc->add_option("--path", path_text, "Steps over u, d, h")->required();
  enc->add_flag("--stats", with_stats, "Append the step-statistic record as JSON");
  auto* dec = bij->add_subcommand("decode", "Involution to path");
  dec->add_option("--perm", perm_text, "One-line notation, e.g. \"4 10 8 1 7 9 5 3 6 2\"")->required();
  dec->add_flag("--stats", with_stats, "Append the step-statistic record as JSON");

  // paths
  auto* paths = app.add_subcommand("paths", "List Schröder paths of a given semilength");
  int path_n = 0;
  bool all_paths = false;
  bool path_stats = false;
  paths->add_option("--n", path_n, "Semilength")->required()->check(CLI::NonNegativeNumber);
  paths->add_flag("--all", all_paths, "All paths instead of only symmetric ones");
  paths->add_flag("--stats", path_stats, "Print h, r, u after each path");

  // count
  CountOptions count_opts;
  auto* count = app.add_subcommand("count", "Count involutions avoiding A_k or F_k");
  count->add_option("--family", count_opts.family, "A (prefix 12) or F (first entry 1)")
      ->check(CLI::IsMember({"A", "F"}));
  count->add_option("--k", count_opts.k, "Pattern length, at least 3")->required();
  count->add_option("--n", count_opts.n, "Involution length")->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--by-first-entry", count_opts.by_first, "Split by the first entry");
  count->add_flag("--by-fixed-points", count_opts.by_fixed, "Split by the number of fixed points");
  count->add_option("--engine", count_opts.engine, "recurrence, series or brute")
      ->check(CLI::IsMember({"recurrence", "series", "brute"}));
  count->add_option("--format", count_opts.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  // series
  SeriesOptions series_opts;
  auto* series = app.add_subcommand("series", "Generating function coefficients");
  series->add_option("--family", series_opts.family, "A or F")->check(CLI::IsMember({"A", "F"}));
  series->add_option("--k", series_opts.k, "Pattern length, at least 3")->required();
  series->add_option("--order", series_opts.order, "Highest power of x")->check(CLI::NonNegativeNumber);
  series->add_option("--p", series_opts.p, "Value for the fixed-point marker, or 'symbolic'");
  series->add_option("--format", series_opts.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Cross-check engines and the bijection against brute force");
  std::string suite = "all";
  int max_n = 10;
  std::string k_set = "3,4,5";
  std::string verify_format = "json";
  verify->add_option("--suite", suite, "bijection, engines or all")
      ->check(CLI::IsMember({"bijection", "engines", "all"}));
  verify->add_option("--max-n", max_n, "Largest length (engines) or semilength (bijection, capped at 10)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--k-set", k_set, "Comma separated pattern lengths");
  verify->add_option("--format", verify_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // render
  auto* render_cmd = app.add_subcommand("render", "Draw a path as ASCII art");
  std::string render_path;
  render_cmd->add_option("--path", render_path, "Steps over u, d, h")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bij) {
      if (*enc) {
        const auto p = parse_path(path_text);
        out << encode(p).to_string() << '\n';
        if (with_stats) out << stats_json(corollary_stats(p)).dump() << '\n';
      } else {
        const auto p = decode(Involution::parse(perm_text));
        out << p.to_string() << '\n';
        if (with_stats) out << stats_json(corollary_stats(p)).dump() << '\n';
      }
      return kExitOk;
    }
    if (*paths) {
      const auto list = all_paths ? enumerate_all(path_n) : enumerate_symmetric(path_n);
      for (const auto& p : list) {
        out << (p.empty() ? std::string("(empty)") : p.to_string());
        if (path_stats) {
          const auto st = step_stats(p);
          out << " h=" << st.h << " r=" << st.r << " u=" << st.u;
        }
        out << '\n';
      }
      return kExitOk;
    }
    if (*count) return run_count(count_opts, out);
    if (*series) return run_series(series_opts, out);
    if (*verify) return run_verify(suite, max_n, k_set, verify_format, out);
    if (*render_cmd) {
      out << render(parse_path(render_path));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pavi::cli
