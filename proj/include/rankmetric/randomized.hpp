#pragma once

// Random codes and random F_q-linear codes: the exact minimum-distance
// distribution p_i = (1 - B_{i-1}/q^{mn})^N - (1 - B_i/q^{mn})^N, its upper bound,
// the concentration window, predicted moments, and Monte Carlo validation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rankmetric/enumerative.hpp"
#include "rankmetric/error.hpp"
#include "rankmetric/finite_field.hpp"
#include "rankmetric/parallel.hpp"
#include "rankmetric/rank_metric.hpp"
#include "rankmetric/rng.hpp"

namespace rankmetric {

inline constexpr std::uint64_t kNonlinearSampleGuard = std::uint64_t{1} << 20;

/// A random-code ensemble. N counts the differences the distribution depends on:
/// M - 1 for F_q-linear codes, M(M-1)/2 otherwise.
struct EnsembleParams {
  SpaceParams sp;
  BigCount M;
  std::optional<std::size_t> K;  // F_q-dimension, linear ensembles only
  bool linear = false;
  BigCount N;

  static EnsembleParams random(SpaceParams sp, BigCount M) {
    detail::require(M >= 2, "ensemble cardinality M must be >= 2");
    detail::require(M <= space_size(sp), "M exceeds the number of words q^{mn}");
    EnsembleParams e{sp, M, std::nullopt, false, M * (M - 1) / 2};
    return e;
  }

  static EnsembleParams linear_code(SpaceParams sp, std::size_t K) {
    detail::require(K >= 1 && K <= sp.mn(), "linear dimension K must lie in [1, mn]");
    BigCount M = ipow(sp.q, K);
    EnsembleParams e{sp, M, K, true, M - 1};
    return e;
  }
};

enum class Provenance { exact_formula, empirical };

/// Probabilities indexed by rank i = 0..n. Entry 0 holds the mass the model puts
/// on degenerate codes (a zero difference); the formula's p_i occupy 1..n.
struct DistributionTable {
  std::vector<double> p;
  Provenance provenance = Provenance::exact_formula;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  // Empirical linear runs only: rank census of every codeword of every sample.
  std::vector<std::uint64_t> word_ranks;

  std::size_t n() const { return p.empty() ? 0 : p.size() - 1; }

  double total() const {
    double s = 0;
    for (std::size_t i = 1; i < p.size(); ++i) s += p[i];
    return s;
  }
  double expectation() const {
    double s = 0;
    for (std::size_t i = 1; i < p.size(); ++i) s += static_cast<double>(i) * p[i];
    return s;
  }
  double variance() const {
    double s = 0;
    for (std::size_t i = 1; i < p.size(); ++i) s += static_cast<double>(i * i) * p[i];
    const double e = expectation();
    return s - e * e;
  }
};

namespace detail {

// B_i with B_i = q^{mn} beyond min(m, n).
inline BigCount ball_capped(const SpaceParams& sp, std::size_t i) {
  return ball_volume(sp, static_cast<long>(std::min(i, sp.min_dim())));
}

inline double bigcount_to_double(const BigCount& v) {
  if (v == 0) return 0.0;
  return std::exp2(log_base(v, 2.0));
}

// ln(1 - B/Q), -inf when B == Q.
inline double log_complement(const BigCount& ball, const BigCount& total) {
  if (ball >= total) return -std::numeric_limits<double>::infinity();
  const Rational r(ball, total);
  if (r <= Rational(1, 2)) return std::log1p(-to_double(r));
  return (log_base(total - ball, 2.0) - log_base(total, 2.0)) * std::log(2.0);
}

}  // namespace detail

/// Formula distribution, evaluated in the log domain so q^{mn} and N may be huge.
/// p_i = x_{i-1} - x_i with x_i = exp(N ln(1 - B_i/Q)), computed as
/// -x_{i-1} expm1(N (ln_i - ln_{i-1})) to avoid cancellation.
inline DistributionTable exact_distribution(const EnsembleParams& ep) {
  const SpaceParams& sp = ep.sp;
  const BigCount total = space_size(sp);
  const double n_pairs = detail::bigcount_to_double(ep.N);
  std::vector<double> lg(sp.n + 1);
  for (std::size_t i = 0; i <= sp.n; ++i) lg[i] = detail::log_complement(detail::ball_capped(sp, i), total);

  DistributionTable t;
  t.provenance = Provenance::exact_formula;
  t.p.assign(sp.n + 1, 0.0);
  t.p[0] = -std::expm1(n_pairs * lg[0]);
  for (std::size_t i = 1; i <= sp.n; ++i) {
    const double prev = std::exp(n_pairs * lg[i - 1]);
    if (prev == 0.0) continue;
    if (std::isinf(lg[i])) {
      t.p[i] = prev;
    } else {
      t.p[i] = -prev * std::expm1(n_pairs * (lg[i] - lg[i - 1]));
    }
  }
  return t;
}

/// (1 - B_0/Q)^N, the telescoped sum of p_1..p_n.
inline double telescoped_total(const EnsembleParams& ep) {
  const double n_pairs = detail::bigcount_to_double(ep.N);
  return std::exp(n_pairs * detail::log_complement(BigCount(1), space_size(ep.sp)));
}

/// Same distribution as exact rationals; only for tiny spaces and small N.
inline std::vector<Rational> exact_distribution_rational(const EnsembleParams& ep) {
  const SpaceParams& sp = ep.sp;
  detail::require(ep.sp.mn() * static_cast<std::size_t>(std::ceil(std::log2(sp.q))) <= 32,
                  "exact rational mode needs q^{mn} <= 2^32");
  detail::require(ep.N <= 64, "exact rational mode needs N <= 64");
  const BigCount total = space_size(sp);
  const unsigned n_pairs = ep.N.convert_to<unsigned>();
  auto x = [&](std::size_t i) {
    Rational base = Rational(1) - Rational(detail::ball_capped(sp, i), total);
    Rational r = 1;
    for (unsigned k = 0; k < n_pairs; ++k) r *= base;
    return r;
  };
  std::vector<Rational> p(sp.n + 1);
  p[0] = Rational(1) - x(0);
  for (std::size_t i = 1; i <= sp.n; ++i) p[i] = x(i - 1) - x(i);
  return p;
}

/// p_i <= N S_i / q^{mn} (1 - B_{i-1}/q^{mn})^{N-1}.
inline double distribution_upper_bound(const EnsembleParams& ep, std::size_t i) {
  const SpaceParams& sp = ep.sp;
  detail::require(i >= 1 && i <= sp.n, "rank index i must lie in [1, n]");
  if (i > sp.min_dim()) return 0.0;
  const BigCount total = space_size(sp);
  const BigCount sphere = sphere_volume(sp, static_cast<long>(i));
  const double ln2 = std::log(2.0);
  const double lg_prev = detail::log_complement(detail::ball_capped(sp, i - 1), total);
  const double n_minus_1 = detail::bigcount_to_double(ep.N - 1);
  double log_bound = (log_base(ep.N, 2.0) + log_base(sphere, 2.0) - log_base(total, 2.0)) * ln2;
  if (n_minus_1 > 0) log_bound += n_minus_1 * lg_prev;
  return std::exp(log_bound);
}

struct LemmaRanges {
  double a = 0;  // below a, p_i <= C_1 q^{-lambda}
  double b = 0;  // above b, p_i <= exp(-C_2 mu)
  double outside_mass = 0;  // exact-formula mass on i <= a or i >= b
};

inline double default_lambda(const SpaceParams& sp) { return 3.0 * std::log(static_cast<double>(sp.n)) / std::log(static_cast<double>(sp.q)); }

/// Concentration window
///   a = (m+n)/2 - sqrt((m-n)^2/4 + log_q N + (m+n)/2 + lambda)
///   b = (m+n)/2 - sqrt((m-n)^2/4 + log_q N - (m+n) - log_q mu)
/// Requires N >= q^{m+n} mu and non-negative radicands.
inline LemmaRanges lemma_ranges(const EnsembleParams& ep, double lambda, double mu) {
  const SpaceParams& sp = ep.sp;
  detail::require(mu > 0, "mu must be positive");
  const double m = static_cast<double>(sp.m), n = static_cast<double>(sp.n);
  const double log_n = log_q(ep.N, sp.q);
  const double log_mu = std::log(mu) / std::log(static_cast<double>(sp.q));
  detail::require(log_n >= m + n + log_mu, "lemma precondition N >= q^{m+n} mu does not hold");
  const double base = (m - n) * (m - n) / 4.0 + log_n;
  const double rad_a = base + (m + n) / 2.0 + lambda;
  const double rad_b = base - (m + n) - log_mu;
  detail::require(rad_a >= 0 && rad_b >= 0, "lemma precondition: negative radicand");
  LemmaRanges r;
  r.a = (m + n) / 2.0 - std::sqrt(rad_a);
  r.b = (m + n) / 2.0 - std::sqrt(rad_b);
  const auto table = exact_distribution(ep);
  for (std::size_t i = 1; i <= sp.n; ++i) {
    const double x = static_cast<double>(i);
    if (x <= r.a || x >= r.b) r.outside_mass += table.p[i];
  }
  return r;
}

struct MomentReport {
  double expectation = 0;  // from the exact distribution
  double variance = 0;
  double center = 0;       // (m+n)/2 - sqrt((m-n)^2/4 + log_q N)
  std::optional<double> a_n, b_n;
  double lambda = 0, mu = 0;
  bool n_le_m = false;
  bool lower_hypothesis = false;  // N >= 3 log_q(n) q^{m+n}
  bool upper_hypothesis = false;  // N < q^{mn}, i.e. N <= q^{alpha mn} for some alpha < 1
};

inline double moment_center(const EnsembleParams& ep) {
  const double m = static_cast<double>(ep.sp.m), n = static_cast<double>(ep.sp.n);
  return (m + n) / 2.0 - std::sqrt((m - n) * (m - n) / 4.0 + log_q(ep.N, ep.sp.q));
}

inline MomentReport predicted_moments(const EnsembleParams& ep, std::optional<double> lambda = std::nullopt,
                                      std::optional<double> mu = std::nullopt) {
  const SpaceParams& sp = ep.sp;
  MomentReport r;
  const auto table = exact_distribution(ep);
  r.expectation = table.expectation();
  r.variance = table.variance();
  r.center = moment_center(ep);
  r.lambda = lambda.value_or(default_lambda(sp));
  r.mu = mu.value_or(default_lambda(sp));
  r.n_le_m = sp.n <= sp.m;
  const double log_n = log_q(ep.N, sp.q);
  const double three_log_n = default_lambda(sp);
  r.lower_hypothesis = three_log_n > 0 &&
                       log_n >= std::log(three_log_n) / std::log(static_cast<double>(sp.q)) + static_cast<double>(sp.m + sp.n);
  r.upper_hypothesis = ep.N < space_size(sp);
  try {
    const auto lr = lemma_ranges(ep, r.lambda, r.mu);
    r.a_n = lr.a;
    r.b_n = lr.b;
  } catch (const InvalidArgument&) {
  }
  return r;
}

/// Draws one code of the ensemble in flattened form: M distinct words, or K
/// F_q-independent generators of a linear code.
inline FlatGenerators sample_flat(const EnsembleParams& ep, Rng& rng) {
  const SpaceParams& sp = ep.sp;
  FlatGenerators g;
  g.q = sp.q;
  g.rows = sp.m;
  g.cols = sp.n;
  const std::size_t len = sp.mn();
  auto draw = [&] {
    std::vector<Residue> w(len);
    for (auto& v : w) v = static_cast<Residue>(rng.below(sp.q));
    return w;
  };
  if (ep.linear) {
    const std::size_t k = *ep.K;
    checked_span_size(sp.q, k);
    const PrimeField f(sp.q);
    std::vector<Residue> stacked, scratch;
    while (true) {
      g.words.clear();
      stacked.clear();
      for (std::size_t i = 0; i < k; ++i) {
        g.words.push_back(draw());
        stacked.insert(stacked.end(), g.words.back().begin(), g.words.back().end());
      }
      if (rank_of(f, stacked, k, len, scratch) == k) break;
    }
  } else {
    if (ep.M > kNonlinearSampleGuard) throw GuardExceeded("non-linear sample size exceeds 2^20 words");
    const auto count = ep.M.convert_to<std::size_t>();
    std::set<std::vector<Residue>> seen;
    while (g.words.size() < count) {
      auto w = draw();
      if (seen.insert(w).second) g.words.push_back(std::move(w));
    }
  }
  return g;
}

inline std::vector<RankVector> sample_random_code(const EnsembleParams& ep, std::uint64_t seed) {
  Rng rng(seed);
  const FlatGenerators g = sample_flat(ep, rng);
  const Field field = field_new(ep.sp.q, ep.sp.m);
  const Basis basis = Basis::polynomial(field);
  auto make = [&](std::span<const Residue> w) {
    QMatrix mat(ep.sp.q, ep.sp.m, ep.sp.n);
    std::copy(w.begin(), w.end(), mat.data().begin());
    return to_vector(mat, basis);
  };
  std::vector<RankVector> out;
  if (!ep.linear) {
    for (const auto& w : g.words) out.push_back(make(w));
    return out;
  }
  struct Acc {
    std::vector<std::vector<Residue>> words;
  };
  auto all = span_reduce(
      g, Acc{},
      [](Acc& a, std::span<const Residue> w) { a.words.emplace_back(w.begin(), w.end()); },
      [](Acc a, const Acc& b) {
        a.words.insert(a.words.end(), b.words.begin(), b.words.end());
        return a;
      },
      1);
  for (const auto& w : all.words) out.push_back(make(w));
  return out;
}

/// Minimum rank distance of a flattened sample (pairwise, or span minimum).
inline std::size_t sample_min_distance(const EnsembleParams& ep, const FlatGenerators& g) {
  if (ep.linear) return span_min_rank(g, 1);
  const PrimeField f(g.q);
  std::vector<Residue> diff(g.word_size()), scratch;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t a = 0; a < g.words.size() && best > 1; ++a)
    for (std::size_t b = a + 1; b < g.words.size(); ++b) {
      for (std::size_t p = 0; p < diff.size(); ++p) diff[p] = f.sub(g.words[a][p], g.words[b][p]);
      best = std::min(best, rank_of(f, diff, g.rows, g.cols, scratch));
      if (best == 1) break;
    }
  return best;
}

/// Monte Carlo estimate of the minimum-distance distribution. Trial t draws from
/// the stream derive_seed(seed, t); counts are merged by addition, so the table is
/// identical for any thread count.
inline DistributionTable empirical_distribution(const EnsembleParams& ep, std::uint64_t trials, std::uint64_t seed,
                                                unsigned threads = 0) {
  detail::require(trials >= 1, "trials must be >= 1");
  const SpaceParams& sp = ep.sp;
  if (ep.linear) checked_span_size(sp.q, *ep.K);
  if (!ep.linear && ep.M > kNonlinearSampleGuard) throw GuardExceeded("non-linear sample size exceeds 2^20 words");

  const std::size_t top = sp.min_dim();
  struct Partial {
    std::vector<std::uint64_t> hist;
    std::vector<std::uint64_t> words;
  };
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(trials, 256));
  std::vector<Partial> partial(chunks, Partial{std::vector<std::uint64_t>(sp.n + 1, 0), std::vector<std::uint64_t>(top + 1, 0)});

  parallel_chunks(static_cast<std::size_t>(trials), chunks, threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    Partial& acc = partial[c];
    for (std::size_t trial = begin; trial < end; ++trial) {
      Rng rng(derive_seed(seed, trial));
      const FlatGenerators g = sample_flat(ep, rng);
      if (ep.linear) {
        const auto census = span_rank_census(g, 1);
        std::size_t dmin = 0;
        for (std::size_t r = 1; r < census.size(); ++r)
          if (census[r]) {
            dmin = r;
            break;
          }
        for (std::size_t r = 0; r < census.size(); ++r) acc.words[r] += census[r];
        ++acc.hist[dmin];
      } else {
        ++acc.hist[sample_min_distance(ep, g)];
      }
    }
  });

  std::vector<std::uint64_t> hist(sp.n + 1, 0), words(top + 1, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += p.hist[i];
    for (std::size_t i = 0; i < words.size(); ++i) words[i] += p.words[i];
  }
  DistributionTable t;
  t.provenance = Provenance::empirical;
  t.trials = trials;
  t.seed = seed;
  t.p.resize(sp.n + 1);
  for (std::size_t i = 0; i <= sp.n; ++i) t.p[i] = static_cast<double>(hist[i]) / static_cast<double>(trials);
  if (ep.linear) t.word_ranks = std::move(words);
  return t;
}

/// Total-variation distance over ranks 0..n.
inline double tv_distance(const DistributionTable& a, const DistributionTable& b) {
  detail::require(a.p.size() == b.p.size(), "distribution tables of different lengths");
  double s = 0;
  for (std::size_t i = 0; i < a.p.size(); ++i) s += std::abs(a.p[i] - b.p[i]);
  return s / 2.0;
}

}  // namespace rankmetric
