#pragma once

// Command-line front end. run_cli() is the whole program; tools/rankcodes.cpp only
// forwards argv to it, which lets the tests drive every subcommand in-process.
//
// Exit codes: 0 success, 1 usage error, 2 enumeration guard exceeded,
// 3 internal invariant failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rankmetric/bounds.hpp"
#include "rankmetric/codes.hpp"
#include "rankmetric/enumerative.hpp"
#include "rankmetric/error.hpp"
#include "rankmetric/randomized.hpp"
#include "rankmetric/report.hpp"

namespace rankmetric::cli {

inline constexpr const char* kSpectrumNote =
    "the inner Gaussian binomial of the MRD spectrum uses index l-t; the l+t variant "
    "breaks sum A_s = q^{m(n-d+1)} (e.g. A_4 = 8700 instead of 30 at q=2, m=n=4, d=3)";

struct CommonOptions {
  std::string format = "csv";
  std::string output;
};

namespace detail_cli {

inline std::string log2_or_empty(const BigCount& num, const BigCount& den) {
  if (num == 0) return "";
  return format_double(log_base(num, 2.0) - log_base(den, 2.0));
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline void check_space(Residue q, std::size_t m, std::size_t n) {
  detail::require(PrimeField::is_prime(q), "q must be prime, got " + std::to_string(q));
  detail::require(m >= 1 && n >= 1, "m and n must be >= 1");
}

}  // namespace detail_cli

inline Table cmd_volumes(Residue q, std::size_t m, std::size_t n, std::optional<long> t_min, std::optional<long> t_max) {
  detail_cli::check_space(q, m, n);
  const SpaceParams sp(q, m, n);
  const long lo = t_min.value_or(0), hi = t_max.value_or(static_cast<long>(sp.min_dim()));
  detail::require(lo >= 0 && hi >= lo && static_cast<std::size_t>(hi) <= sp.min_dim(),
                  "t range must satisfy 0 <= t-min <= t-max <= min(m,n)");
  Table t;
  t.title = "rank-metric sphere and ball volumes";
  t.add_meta("command", "volumes");
  t.add_meta("q", std::to_string(q));
  t.add_meta("m", std::to_string(m));
  t.add_meta("n", std::to_string(n));
  t.add_meta("t_min", std::to_string(lo));
  t.add_meta("t_max", std::to_string(hi));
  t.columns = {"t", "S_t", "B_t", "sphere_lo", "sphere_hi", "ball_lo", "ball_hi"};
  for (long r = lo; r <= hi; ++r) {
    const auto b = volume_bounds(sp, r);
    t.rows.push_back({std::to_string(r), format_count(sphere_volume(sp, r)), format_count(ball_volume(sp, r)),
                      format_rational(b.sphere_lo), format_rational(b.sphere_hi), format_rational(b.ball_lo),
                      format_rational(b.ball_hi)});
  }
  t.add_summary("q_mn", format_count(space_size(sp)));
  return t;
}

inline Table cmd_bounds(Residue q, std::size_t m, std::size_t n, std::size_t d, std::optional<std::string> M_text) {
  detail_cli::check_space(q, m, n);
  const SpaceParams sp(q, m, n);
  detail::require(d >= 1 && d <= sp.min_dim(), "d must lie in [1, min(m,n)]");
  const BigCount singleton = singleton_bound(sp, d);
  const BigCount M = M_text ? BigCount(*M_text) : singleton;
  const CodeParams cp(sp, M, d);
  const auto packing = sphere_packing_holds(cp);
  const auto density = covering_density(cp);

  Table t;
  t.title = "bounds for an (n, M, d)_r code over F_{q^m}";
  t.add_meta("command", "bounds");
  t.add_meta("q", std::to_string(q));
  t.add_meta("m", std::to_string(m));
  t.add_meta("n", std::to_string(n));
  t.add_meta("d", std::to_string(d));
  t.add_meta("M", format_count(M));
  t.columns = {"quantity", "value"};
  auto row = [&](std::string k, std::string v) { t.rows.push_back({std::move(k), std::move(v)}); };
  row("t", std::to_string(cp.t()));
  row("q_mn", format_count(space_size(sp)));
  row("B_t", format_count(ball_volume(sp, static_cast<long>(cp.t()))));
  row("B_d_minus_1", format_count(ball_volume(sp, static_cast<long>(d) - 1)));
  row("singleton_M", format_count(singleton));
  row("meets_singleton", detail_cli::yes_no(M == singleton));
  row("within_singleton", detail_cli::yes_no(M <= singleton));
  row("packing_lhs", format_count(packing.lhs));
  row("packing_rhs", format_count(packing.rhs));
  row("sphere_packing_holds", detail_cli::yes_no(packing.holds));
  row("gv_exists_M_plus_1", detail_cli::yes_no(gv_exists(sp, M, d)));
  row("gv_on_bound", detail_cli::yes_no(gv_on_bound(cp)));
  row("gv_cardinality", format_count(gv_cardinality(sp, d)));
  row("covering_density", format_rational(density.density));
  row("covering_density_float", format_double(to_double(density.density)));
  if (density.lower_bound) {
    row("density_lower_bound", format_rational(*density.lower_bound));
    row("density_upper_bound", format_rational(*density.upper_bound));
  }
  const double logq_m = log_q(M, q);
  if (logq_m > 0) row("gv_asymptotic_d_over_m_plus_n", format_double(gv_asymptotic_distance(double(m), double(n), logq_m)));
  return t;
}

inline Table cmd_gv(Residue q, std::size_t m, std::size_t n, std::size_t d, std::optional<std::size_t> target,
                    bool construct, std::uint64_t seed) {
  detail_cli::check_space(q, m, n);
  const SpaceParams sp(q, m, n);
  detail::require(d >= 1 && d <= sp.min_dim(), "d must lie in [1, min(m,n)]");
  Table t;
  t.title = "Gilbert-Varshamov thresholds";
  t.add_meta("command", "gv");
  t.add_meta("q", std::to_string(q));
  t.add_meta("m", std::to_string(m));
  t.add_meta("n", std::to_string(n));
  t.add_meta("d", std::to_string(d));
  t.add_meta("construct", detail_cli::yes_no(construct));
  t.add_meta("seed", std::to_string(seed));
  t.columns = {"d", "B_d_minus_1", "gv_M", "singleton_M"};
  for (std::size_t dd = 1; dd <= sp.min_dim(); ++dd)
    t.rows.push_back({std::to_string(dd), format_count(ball_volume(sp, static_cast<long>(dd) - 1)),
                      format_count(gv_cardinality(sp, dd)), format_count(singleton_bound(sp, dd))});
  const BigCount gv_m = gv_cardinality(sp, d);
  t.add_summary("gv_M", format_count(gv_m));
  if (construct) {
    const std::size_t want = target.value_or(gv_m.convert_to<std::size_t>());
    t.add_meta("target_M", std::to_string(want));
    const auto code = gv_greedy_construct(sp, d, want, seed);
    t.add_summary("constructed_M", std::to_string(code.size()));
    if (code.size() >= 2) t.add_summary("verified_min_distance", std::to_string(min_rank_distance(code, CodeForm::nonlinear)));
  }
  return t;
}

inline Table cmd_perfect_search(Residue q, std::size_t max_m, std::size_t max_n, bool include_trivial) {
  detail::require(PrimeField::is_prime(q), "q must be prime");
  detail::require(max_m >= 1 && max_n >= 1, "search bounds must be >= 1");
  const auto found = perfect_code_search(q, max_m, max_n, include_trivial);
  Table t;
  t.title = "perfect rank-metric parameter search";
  t.add_meta("command", "perfect-search");
  t.add_meta("q", std::to_string(q));
  t.add_meta("max_m", std::to_string(max_m));
  t.add_meta("max_n", std::to_string(max_n));
  t.add_meta("include_trivial", detail_cli::yes_no(include_trivial));
  t.columns = {"m", "n", "d", "t", "M"};
  for (const auto& c : found)
    t.rows.push_back({std::to_string(c.m), std::to_string(c.n), std::to_string(c.d), std::to_string(c.t), format_count(c.M)});
  t.add_summary("solutions", std::to_string(found.size()));
  return t;
}

inline Table cmd_spectrum(Residue q, std::size_t m, std::size_t n, std::size_t d, bool verify, unsigned threads) {
  detail_cli::check_space(q, m, n);
  detail::require(n <= m, "spectrum requires n <= m");
  detail::require(d >= 1 && d <= n, "d must lie in [1, n]");
  const SpaceParams sp(q, m, n);
  const auto weights = mrd_spectrum(sp, d);
  Table t;
  t.title = "rank spectrum of an MRD code";
  t.add_meta("command", "spectrum");
  t.add_meta("q", std::to_string(q));
  t.add_meta("m", std::to_string(m));
  t.add_meta("n", std::to_string(n));
  t.add_meta("d", std::to_string(d));
  t.add_meta("verify", detail_cli::yes_no(verify));
  t.notes.push_back(kSpectrumNote);
  std::vector<std::uint64_t> census;
  const std::size_t k = n - d + 1;
  if (verify) {
    if (m * k * std::log2(double(q)) <= 16.0 + 1e-9) {
      const GabidulinCode code(default_generating_vector(field_new(q, m), n), k);
      census = gabidulin_census(code, threads);
    }
  }
  t.columns = {"s", "A_s", "log2_proportion"};
  if (!census.empty()) t.columns.push_back("census");
  const BigCount total = space_size(sp);
  for (std::size_t s = 0; s <= n; ++s) {
    std::vector<std::string> row{std::to_string(s), format_count(weights[s]), detail_cli::log2_or_empty(weights[s], total)};
    if (!census.empty()) row.push_back(std::to_string(census[s]));
    t.rows.push_back(std::move(row));
  }
  t.add_summary("total", format_count(weights.total()));
  if (verify) {
    if (census.empty()) {
      t.add_summary("census_check", "skipped");
    } else {
      bool match = true;
      for (std::size_t s = 0; s <= n; ++s) match = match && weights[s] == census[s];
      t.add_summary("census_check", match ? "match" : "mismatch");
    }
  }
  return t;
}

inline Table cmd_density(Residue q, std::optional<std::size_t> m, std::optional<std::size_t> n, std::optional<std::size_t> d,
                         std::optional<std::string> M_text, bool quasi_perfect, std::size_t n_max) {
  Table t;
  t.add_meta("command", "density");
  t.add_meta("q", std::to_string(q));
  detail::require(PrimeField::is_prime(q), "q must be prime");
  if (quasi_perfect) {
    t.title = "covering densities of the (n, q^{n(n-2)}, 3)_r MRD family";
    t.add_meta("quasi_perfect", "true");
    t.add_meta("n_max", std::to_string(n_max));
    detail::require(n_max >= 3, "n-max must be >= 3");
    t.columns = {"n", "density", "density_float"};
    for (const auto& r : quasi_perfect_table(q, n_max))
      t.rows.push_back({std::to_string(r.n), format_rational(r.density), format_double(to_double(r.density))});
    return t;
  }
  detail::require(m && n && d, "density needs --m, --n and --d (or --quasi-perfect)");
  detail_cli::check_space(q, *m, *n);
  const SpaceParams sp(q, *m, *n);
  detail::require(*d >= 1 && *d <= sp.min_dim(), "d must lie in [1, min(m,n)]");
  const BigCount M = M_text ? BigCount(*M_text) : singleton_bound(sp, *d);
  const auto rep = covering_density(CodeParams(sp, M, *d));
  t.title = "covering density";
  t.add_meta("m", std::to_string(*m));
  t.add_meta("n", std::to_string(*n));
  t.add_meta("d", std::to_string(*d));
  t.add_meta("M", format_count(M));
  t.columns = {"quantity", "exact", "float"};
  t.rows.push_back({"density", format_rational(rep.density), format_double(to_double(rep.density))});
  if (rep.lower_bound) {
    t.rows.push_back({"lower_bound", format_rational(*rep.lower_bound), format_double(to_double(*rep.lower_bound))});
    t.rows.push_back({"upper_bound", format_rational(*rep.upper_bound), format_double(to_double(*rep.upper_bound))});
  }
  if (*m == *n && *d == 3 && M == ipow(q, *n * (*n - 2))) {
    const Rational closed = rank1_mrd_density(q, *n);
    t.rows.push_back({"closed_form", format_rational(closed), format_double(to_double(closed))});
  }
  return t;
}

inline Table cmd_gabidulin(Residue q, std::size_t m, std::size_t n, std::size_t k, const std::string& codebook,
                           unsigned threads) {
  detail_cli::check_space(q, m, n);
  detail::require(n <= m, "Gabidulin codes need n <= m");
  detail::require(k >= 1 && k <= n, "k must lie in [1, n]");
  const GabidulinCode code(default_generating_vector(field_new(q, m), n), k);
  Table t;
  t.title = "Gabidulin code Gab_k(g), g = polynomial basis truncated to length n";
  t.add_meta("command", "gabidulin");
  t.add_meta("q", std::to_string(q));
  t.add_meta("m", std::to_string(m));
  t.add_meta("n", std::to_string(n));
  t.add_meta("k", std::to_string(k));
  t.add_meta("modulus", [&] {
    std::string s;
    for (std::size_t i = 0; i < code.field()->modulus().size(); ++i)
      s += (i ? " " : "") + std::to_string(code.field()->modulus()[i]);
    return s;
  }());
  const auto weights = mrd_spectrum(code.space(), code.designed_distance());
  const auto census = gabidulin_census(code, threads);
  t.columns = {"s", "census", "A_s"};
  std::size_t dmin = 0;
  for (std::size_t s = 0; s < census.size(); ++s) {
    t.rows.push_back({std::to_string(s), std::to_string(census[s]), format_count(weights[s])});
    if (!dmin && s && census[s]) dmin = s;
  }
  t.add_summary("M", format_count(code.cardinality()));
  t.add_summary("designed_distance", std::to_string(code.designed_distance()));
  t.add_summary("min_distance", std::to_string(dmin));
  if (!codebook.empty()) {
    std::ofstream f(codebook);
    detail::require(static_cast<bool>(f), "cannot open codebook file " + codebook);
    write_codebook(f, code);
    t.add_summary("codebook", codebook);
  }
  return t;
}

struct SimulateArgs {
  Residue q = 2;
  std::size_t m = 4, n = 4;
  std::optional<std::size_t> K;
  std::optional<std::string> M;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

inline Table cmd_simulate(const SimulateArgs& a) {
  detail_cli::check_space(a.q, a.m, a.n);
  detail::require(a.K.has_value() != a.M.has_value(), "give exactly one of --K (linear) or --M (non-linear)");
  detail::require(a.trials >= 1, "trials must be >= 1");
  const SpaceParams sp(a.q, a.m, a.n);
  const EnsembleParams ep = a.K ? EnsembleParams::linear_code(sp, *a.K) : EnsembleParams::random(sp, BigCount(*a.M));
  const auto exact = exact_distribution(ep);
  const auto emp = empirical_distribution(ep, a.trials, a.seed, a.threads);
  const auto moments = predicted_moments(ep);

  Table t;
  t.title = "minimum rank distance of random codes: formula vs Monte Carlo";
  t.add_meta("command", "simulate");
  t.add_meta("q", std::to_string(a.q));
  t.add_meta("m", std::to_string(a.m));
  t.add_meta("n", std::to_string(a.n));
  t.add_meta(ep.linear ? "K" : "M", ep.linear ? std::to_string(*ep.K) : format_count(ep.M));
  t.add_meta("linear", detail_cli::yes_no(ep.linear));
  t.add_meta("N", format_count(ep.N));
  t.add_meta("trials", std::to_string(a.trials));
  t.add_meta("seed", std::to_string(a.seed));
  t.add_meta("threads", std::to_string(a.threads));

  // MRD comparison exists when the linear code is also F_{q^m}-linear (m | K) with n <= m.
  std::optional<RankSpectrum> mrd;
  if (ep.linear && *ep.K % a.m == 0 && a.n <= a.m && *ep.K / a.m <= a.n)
    mrd = mrd_spectrum(sp, a.n - *ep.K / a.m + 1);
  if (!ep.linear)
    t.notes.push_back("non-linear codes are sampled as distinct words; the formula models independent pairs, "
                      "so p_empirical is close to p_exact / (1 - p0_exact) for small spaces");

  const BigCount total = space_size(sp);
  std::uint64_t words_total = 0;
  for (auto c : emp.word_ranks) words_total += c;
  t.columns = {"i", "p_exact", "p_empirical", "upper_bound", "log2_prop_space", "log2_prop_random_linear", "log2_prop_mrd"};
  for (std::size_t i = 0; i <= a.n; ++i) {
    std::vector<std::string> row;
    row.push_back(std::to_string(i));
    row.push_back(format_double(exact.p[i]));
    row.push_back(format_double(emp.p[i]));
    row.push_back(i == 0 ? "" : format_double(distribution_upper_bound(ep, i)));
    row.push_back(i <= sp.min_dim() ? detail_cli::log2_or_empty(sphere_volume(sp, static_cast<long>(i)), total) : "");
    if (ep.linear && i < emp.word_ranks.size() && emp.word_ranks[i] > 0)
      row.push_back(format_double(std::log2(double(emp.word_ranks[i]) / double(words_total))));
    else
      row.push_back("");
    row.push_back(mrd && i < mrd->counts.size() ? detail_cli::log2_or_empty(mrd->counts[i], ep.M) : "");
    t.rows.push_back(std::move(row));
  }
  t.add_summary("telescoped_total", format_double(telescoped_total(ep)));
  t.add_summary("tv_distance", format_double(tv_distance(emp, exact)));
  t.add_summary("E_exact", format_double(moments.expectation));
  t.add_summary("Var_exact", format_double(moments.variance));
  t.add_summary("E_empirical", format_double(emp.expectation()));
  t.add_summary("Var_empirical", format_double(emp.variance()));
  t.add_summary("center_M_n", format_double(moments.center));
  t.add_summary("a_n", moments.a_n ? format_double(*moments.a_n) : "n/a");
  t.add_summary("b_n", moments.b_n ? format_double(*moments.b_n) : "n/a");
  t.add_summary("hypothesis_n_le_m", detail_cli::yes_no(moments.n_le_m));
  t.add_summary("hypothesis_N_lower", detail_cli::yes_no(moments.lower_hypothesis));
  t.add_summary("hypothesis_N_upper", detail_cli::yes_no(moments.upper_hypothesis));
  return t;
}

/// Lines of a CSV rendering that are not '#' comments.
inline std::string csv_body(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line))
    if (line.empty() || line[0] != '#') out += line + "\n";
  return out;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"rankcodes: rank-metric code workbench"};
  app.require_subcommand(1);
  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", common.output, "write to file instead of stdout");
  };
  std::function<Table()> action;

  Residue q = 2;
  std::size_t m = 0, n = 0, d = 0, k = 0, max_m = 0, max_n = 0, n_max = 10;
  std::optional<long> t_min, t_max;
  std::optional<std::string> M_text;
  std::optional<std::size_t> target_M, opt_m, opt_n, opt_d;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool flag_a = false;
  std::string codebook;
  SimulateArgs sim;

  auto* volumes = app.add_subcommand("volumes", "sphere/ball volumes and their exponential bounds");
  volumes->add_option("--q", q)->required();
  volumes->add_option("--m", m)->required();
  volumes->add_option("--n", n)->required();
  volumes->add_option("--t-min", t_min);
  volumes->add_option("--t-max", t_max);
  add_common(volumes);
  volumes->callback([&] { action = [&] { return cmd_volumes(q, m, n, t_min, t_max); }; });

  auto* bounds = app.add_subcommand("bounds", "Singleton, sphere packing, GV and density for (q,m,n,M,d)");
  bounds->add_option("--q", q)->required();
  bounds->add_option("--m", m)->required();
  bounds->add_option("--n", n)->required();
  bounds->add_option("--d", d)->required();
  bounds->add_option("--M", M_text, "cardinality (default: Singleton bound)");
  add_common(bounds);
  bounds->callback([&] { action = [&] { return cmd_bounds(q, m, n, d, M_text); }; });

  auto* gv = app.add_subcommand("gv", "GV thresholds and greedy construction");
  gv->add_option("--q", q)->required();
  gv->add_option("--m", m)->required();
  gv->add_option("--n", n)->required();
  gv->add_option("--d", d)->required();
  gv->add_option("--M", target_M, "target cardinality for --construct (default: on-GV M)");
  gv->add_flag("--construct", flag_a, "run the greedy construction (q^{mn} <= 2^24)");
  gv->add_option("--seed", seed);
  add_common(gv);
  gv->callback([&] { action = [&] { return cmd_gv(q, m, n, d, target_M, flag_a, seed); }; });

  auto* perfect = app.add_subcommand("perfect-search", "scan for perfect parameter sets");
  perfect->add_option("--q", q)->required();
  perfect->add_option("--max-m", max_m)->required();
  perfect->add_option("--max-n", max_n)->required();
  perfect->add_flag("--include-trivial", flag_a, "also report radius-0 solutions");
  add_common(perfect);
  perfect->callback([&] { action = [&] { return cmd_perfect_search(q, max_m, max_n, flag_a); }; });

  auto* spectrum = app.add_subcommand("spectrum", "MRD rank spectrum");
  spectrum->add_option("--q", q)->required();
  spectrum->add_option("--m", m)->required();
  spectrum->add_option("--n", n)->required();
  spectrum->add_option("--d", d)->required();
  spectrum->add_flag("--verify", flag_a, "cross-check against a Gabidulin code census");
  spectrum->add_option("--threads", threads);
  add_common(spectrum);
  spectrum->callback([&] { action = [&] { return cmd_spectrum(q, m, n, d, flag_a, threads); }; });

  auto* density = app.add_subcommand("density", "covering density");
  density->add_option("--q", q)->required();
  density->add_option("--m", opt_m);
  density->add_option("--n", opt_n);
  density->add_option("--d", opt_d);
  density->add_option("--M", M_text, "cardinality (default: Singleton bound)");
  density->add_flag("--quasi-perfect", flag_a, "tabulate the d=3 square MRD family");
  density->add_option("--n-max", n_max);
  add_common(density);
  density->callback([&] { action = [&] { return cmd_density(q, opt_m, opt_n, opt_d, M_text, flag_a, n_max); }; });

  auto* gab = app.add_subcommand("gabidulin", "build a Gabidulin code, census its ranks, export codebook");
  gab->add_option("--q", q)->required();
  gab->add_option("--m", m)->required();
  gab->add_option("--n", n)->required();
  gab->add_option("--k", k)->required();
  gab->add_option("--codebook", codebook, "write every codeword to this file");
  gab->add_option("--threads", threads);
  add_common(gab);
  gab->callback([&] { action = [&] { return cmd_gabidulin(q, m, n, k, codebook, threads); }; });

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo minimum-distance distribution vs formula");
  simulate->add_option("--q", sim.q)->required();
  simulate->add_option("--m", sim.m)->required();
  simulate->add_option("--n", sim.n)->required();
  simulate->add_option("--K", sim.K, "F_q-dimension of a random linear code");
  simulate->add_option("--M", sim.M, "cardinality of a random non-linear code");
  simulate->add_option("--trials", sim.trials);
  simulate->add_option("--seed", sim.seed);
  simulate->add_option("--threads", sim.threads, "0 = hardware concurrency");
  add_common(simulate);
  simulate->callback([&] { action = [&] { return cmd_simulate(sim); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    const Table table = action();
    std::ostringstream buf;
    if (common.format == "json")
      render_json(buf, table);
    else
      render_csv(buf, table);
    if (common.output.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(common.output);
      if (!f) {
        err << "usage error: cannot open " << common.output << "\n";
        return 1;
      }
      f << buf.str();
    }
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    // e.g. malformed big-integer text for --M
    err << "usage error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace rankmetric::cli
