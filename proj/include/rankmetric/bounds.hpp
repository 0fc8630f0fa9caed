#pragma once

// Bounds on rank-metric codes: Singleton and sphere-packing, the perfect-code
// scan, Gilbert-Varshamov existence with a greedy constructor, the asymptotic
// GV distance, and covering densities of MRD codes.
//
// Every pass/fail decision is an exact integer or rational comparison.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankmetric/enumerative.hpp"
#include "rankmetric/error.hpp"
#include "rankmetric/finite_field.hpp"
#include "rankmetric/rank_metric.hpp"
#include "rankmetric/rng.hpp"

namespace rankmetric {

/// (n, M, d)_r code parameters over F_{q^m}.
struct CodeParams {
  SpaceParams sp;
  BigCount M = 1;
  std::size_t d = 1;

  CodeParams(SpaceParams sp_, BigCount M_, std::size_t d_) : sp(sp_), M(std::move(M_)), d(d_) {
    detail::require(M >= 1, "cardinality M must be >= 1");
    detail::require(d >= 1 && d <= sp.min_dim(), "distance d must lie in [1, min(m,n)]");
  }

  /// Linear code of F_{q^m}-dimension k: M = q^{mk}.
  static CodeParams linear(SpaceParams sp, std::size_t k, std::size_t d) {
    return CodeParams(sp, ipow(sp.q, sp.m * k), d);
  }

  /// Parameters meeting the Singleton-like bound with equality.
  static CodeParams mrd(SpaceParams sp, std::size_t d);

  std::size_t t() const { return (d - 1) / 2; }
};

/// q^{min(m(n-d+1), n(m-d+1))}.
inline BigCount singleton_bound(const SpaceParams& sp, std::size_t d) {
  detail::require(d >= 1 && d <= sp.min_dim(), "distance d must lie in [1, min(m,n)]");
  const std::size_t e = std::min(sp.m * (sp.n - d + 1), sp.n * (sp.m - d + 1));
  return ipow(sp.q, e);
}

inline CodeParams CodeParams::mrd(SpaceParams sp, std::size_t d) { return CodeParams(sp, singleton_bound(sp, d), d); }

inline bool is_mrd(const CodeParams& cp) { return cp.M == singleton_bound(cp.sp, cp.d); }

struct PackingCheck {
  bool holds = false;
  BigCount lhs;  // M * B_t
  BigCount rhs;  // q^{mn}
};

inline PackingCheck sphere_packing_holds(const CodeParams& cp) {
  PackingCheck r;
  r.lhs = cp.M * ball_volume(cp.sp, static_cast<long>(cp.t()));
  r.rhs = space_size(cp.sp);
  r.holds = r.lhs <= r.rhs;
  return r;
}

struct PerfectCandidate {
  std::size_t m = 0, n = 0, d = 0, t = 0;
  BigCount M;

  friend bool operator==(const PerfectCandidate&, const PerfectCandidate&) = default;
};

/// Every (m, n, d) with n <= m <= max_m, n <= max_n, 1 <= d <= n for which
/// M = q^{mn} / B_t is an integer not exceeding the Singleton bound.
/// Results are in (m, n, d) order. Radius-0 solutions only with include_trivial.
inline std::vector<PerfectCandidate> perfect_code_search(Residue q, std::size_t max_m, std::size_t max_n,
                                                         bool include_trivial = false) {
  detail::require(max_m >= 1 && max_n >= 1, "search bounds must be >= 1");
  std::vector<PerfectCandidate> found;
  for (std::size_t m = 1; m <= max_m; ++m)
    for (std::size_t n = 1; n <= std::min(m, max_n); ++n) {
      const SpaceParams sp(q, m, n);
      const BigCount total = space_size(sp);
      for (std::size_t d = 1; d <= n; ++d) {
        const std::size_t t = (d - 1) / 2;
        if (t == 0 && !include_trivial) continue;
        const BigCount ball = ball_volume(sp, static_cast<long>(t));
        BigCount quot, rem;
        boost::multiprecision::divide_qr(total, ball, quot, rem);
        if (rem != 0 || quot > singleton_bound(sp, d)) continue;
        found.push_back({m, n, d, t, quot});
      }
    }
  return found;
}

/// M * B_{d-1} < q^{mn}: some (n, M+1, d)_r code exists.
inline bool gv_exists(const SpaceParams& sp, const BigCount& M, std::size_t d) {
  detail::require(d >= 1 && d <= sp.min_dim(), "distance d must lie in [1, min(m,n)]");
  return M * ball_volume(sp, static_cast<long>(d) - 1) < space_size(sp);
}

/// (M-1) B_{d-1} < q^{mn} <= M B_{d-1}.
inline bool gv_on_bound(const CodeParams& cp) {
  const BigCount ball = ball_volume(cp.sp, static_cast<long>(cp.d) - 1);
  const BigCount total = space_size(cp.sp);
  return (cp.M - 1) * ball < total && total <= cp.M * ball;
}

/// The cardinality that sits on the GV threshold: ceil(q^{mn} / B_{d-1}).
inline BigCount gv_cardinality(const SpaceParams& sp, std::size_t d) {
  detail::require(d >= 1 && d <= sp.min_dim(), "distance d must lie in [1, min(m,n)]");
  const BigCount ball = ball_volume(sp, static_cast<long>(d) - 1);
  return (space_size(sp) + ball - 1) / ball;
}

/// Greedy GV construction: start from a random word, then repeatedly add a word
/// at distance >= d from every codeword so far. Candidates are visited in a seeded
/// random order, so the code depends only on the seed.
inline std::vector<RankVector> gv_greedy_construct(const SpaceParams& sp, std::size_t d, std::size_t target_M,
                                                   std::uint64_t seed) {
  detail::require(target_M >= 1, "target cardinality must be >= 1");
  detail::require(d >= 1 && d <= sp.min_dim(), "distance d must lie in [1, min(m,n)]");
  const std::uint64_t total = checked_span_size(sp.q, sp.mn());
  if (target_M >= 2)
    detail::require(gv_exists(sp, BigCount(target_M - 1), d),
                    "GV condition fails for M=" + std::to_string(target_M - 1) + ", d=" + std::to_string(d));

  const PrimeField f(sp.q);
  const std::size_t len = sp.mn();
  auto word_of = [&](std::uint64_t idx) {
    std::vector<Residue> w(len);
    for (auto& v : w) {
      v = static_cast<Residue>(idx % sp.q);
      idx /= sp.q;
    }
    return w;
  };

  std::vector<std::uint32_t> order(static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);
  Rng rng(seed);
  rng.shuffle(order);

  std::vector<std::vector<Residue>> code;
  std::vector<Residue> diff(len), scratch;
  for (std::uint32_t idx : order) {
    if (code.size() == target_M) break;
    auto cand = word_of(idx);
    bool ok = true;
    for (const auto& c : code) {
      for (std::size_t p = 0; p < len; ++p) diff[p] = f.sub(cand[p], c[p]);
      if (rank_of(f, diff, sp.m, sp.n, scratch) < d) {
        ok = false;
        break;
      }
    }
    if (ok) code.push_back(std::move(cand));
  }
  detail::ensure(code.size() == target_M, "greedy construction stalled below the GV guarantee");

  const Field field = field_new(sp.q, sp.m);
  const Basis basis = Basis::polynomial(field);
  std::vector<RankVector> out;
  out.reserve(code.size());
  for (const auto& w : code) {
    QMatrix mat(sp.q, sp.m, sp.n);
    std::copy(w.begin(), w.end(), mat.data().begin());
    out.push_back(to_vector(mat, basis));
  }
  return out;
}

/// d/(m+n) ~ 1/2 - (sqrt(L)/(m+n)) sqrt(1 + (m-n)^2 / (4L)), L = log_q M.
inline double gv_asymptotic_distance(double m, double n, double logq_M) {
  detail::require(m >= 1 && n >= 1, "m and n must be >= 1");
  detail::require(logq_M > 0, "log_q M must be positive");
  detail::require(m * n >= logq_M, "log_q M cannot exceed mn");
  return 0.5 - std::sqrt(logq_M) / (m + n) * std::sqrt(1.0 + (m - n) * (m - n) / (4.0 * logq_M));
}

struct DensityReport {
  Rational density;
  std::optional<Rational> lower_bound;  // present for MRD (n, q^{m(n-2t)}, 2t+1)_r, n <= m
  std::optional<Rational> upper_bound;
};

/// D = M B_t / q^{mn}, with the MRD sandwich
/// q^{-((m-n+2)t + t^2)} <= D <= q^{-((m-n-1)t + t^2)} attached when it applies.
inline DensityReport covering_density(const CodeParams& cp) {
  const long t = static_cast<long>(cp.t());
  DensityReport r;
  r.density = Rational(cp.M * ball_volume(cp.sp, t), space_size(cp.sp));
  const auto& sp = cp.sp;
  const bool mrd_shape = sp.n <= sp.m && cp.d == static_cast<std::size_t>(2 * t + 1) &&
                         cp.M == ipow(sp.q, sp.m * (sp.n - 2 * static_cast<std::size_t>(t)));
  if (mrd_shape) {
    const long diff = static_cast<long>(sp.m) - static_cast<long>(sp.n);
    r.lower_bound = rpow(sp.q, -((diff + 2) * t + t * t));
    r.upper_bound = rpow(sp.q, -((diff - 1) * t + t * t));
  }
  return r;
}

/// Closed-form density (1 - 2q^{-n} + q^{1-2n}) / (q - 1) of the (n, q^{n(n-2)}, 3)_r
/// MRD code over F_{q^n}.
inline Rational rank1_mrd_density(Residue q, std::size_t n) {
  detail::require(PrimeField::is_prime(q), "q must be prime");
  detail::require(n >= 3, "n must be >= 3 for d = 3");
  const long ln = static_cast<long>(n);
  return (Rational(1) - 2 * rpow(q, -ln) + rpow(q, 1 - 2 * ln)) / Rational(q - 1);
}

struct DensityRow {
  std::size_t n = 0;
  Rational density;
};

inline std::vector<DensityRow> quasi_perfect_table(Residue q, std::size_t n_max) {
  std::vector<DensityRow> rows;
  for (std::size_t n = 3; n <= n_max; ++n) rows.push_back({n, rank1_mrd_density(q, n)});
  return rows;
}

}  // namespace rankmetric
