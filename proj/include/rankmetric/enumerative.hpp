#pragma once

// Exact counting in the rank-metric space of m x n matrices over F_q:
// sphere and ball volumes, their exponential bounds, Gaussian binomials.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "rankmetric/error.hpp"
#include "rankmetric/qmatrix.hpp"

namespace rankmetric {

using BigCount = boost::multiprecision::cpp_int;
using BigInt = boost::multiprecision::cpp_int;  // signed use (alternating sums)
using Rational = boost::multiprecision::cpp_rational;

struct SpaceParams {
  Residue q = 2;
  std::size_t m = 1;
  std::size_t n = 1;

  SpaceParams() = default;
  SpaceParams(Residue q_, std::size_t m_, std::size_t n_) : q(q_), m(m_), n(n_) {
    detail::require(PrimeField::is_prime(q), "q must be prime, got " + std::to_string(q));
    detail::require(m >= 1 && n >= 1, "m and n must be >= 1");
  }

  std::size_t min_dim() const { return std::min(m, n); }
  std::size_t mn() const { return m * n; }

  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

inline BigCount ipow(Residue q, std::size_t e) { return boost::multiprecision::pow(BigCount(q), static_cast<unsigned>(e)); }

/// q^e for a possibly negative exponent, as an exact rational.
inline Rational rpow(Residue q, long e) {
  if (e >= 0) return Rational(ipow(q, static_cast<std::size_t>(e)));
  return Rational(BigCount(1), ipow(q, static_cast<std::size_t>(-e)));
}

/// q^{mn}, the size of the ambient space.
inline BigCount space_size(const SpaceParams& sp) { return ipow(sp.q, sp.mn()); }

namespace detail {

inline BigCount exact_div(const BigCount& num, const BigCount& den) {
  BigCount quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  ensure(rem == 0, "inexact division in a product formula");
  return quot;
}

inline void require_radius(const SpaceParams& sp, long t) {
  require(t >= 0 && static_cast<std::size_t>(t) <= sp.min_dim(),
          "radius t=" + std::to_string(t) + " outside [0, min(m,n)=" + std::to_string(sp.min_dim()) + "]");
}

}  // namespace detail

/// Number of k-dimensional subspaces of F_q^n; zero outside 0 <= k <= n.
/// Each step [n, i+1] = [n, i] (q^{n-i} - 1) / (q^{i+1} - 1) is an exact division.
inline BigCount gaussian_binomial(long n, long k, Residue q) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount g = 1;
  for (long i = 0; i < k; ++i)
    g = detail::exact_div(g * (ipow(q, static_cast<std::size_t>(n - i)) - 1), ipow(q, static_cast<std::size_t>(i + 1)) - 1);
  return g;
}

/// S_t: number of m x n matrices over F_q of rank exactly t.
/// Evaluated as [n, t]_q * prod_{j<t} (q^m - q^j), which regroups
/// prod_{j<t} (q^n - q^j)(q^m - q^j) / (q^t - q^j) into exact steps.
inline BigCount sphere_volume(const SpaceParams& sp, long t) {
  detail::require_radius(sp, t);
  BigCount s = gaussian_binomial(static_cast<long>(sp.n), t, sp.q);
  const BigCount qm = ipow(sp.q, sp.m);
  for (long j = 0; j < t; ++j) s *= qm - ipow(sp.q, static_cast<std::size_t>(j));
  return s;
}

/// B_t = S_0 + ... + S_t.
inline BigCount ball_volume(const SpaceParams& sp, long t) {
  detail::require_radius(sp, t);
  BigCount b = 0;
  for (long i = 0; i <= t; ++i) b += sphere_volume(sp, i);
  return b;
}

struct VolumeBounds {
  Rational sphere_lo, sphere_hi, ball_lo, ball_hi;
};

/// q^{(m+n-2)t - t^2} <= S_t <= q^{(m+n+1)t - t^2} and the ball analogue with one
/// extra factor q on the upper side. Exponents can be negative (m = n = 1), hence
/// rationals.
inline VolumeBounds volume_bounds(const SpaceParams& sp, long t) {
  detail::require_radius(sp, t);
  const long s = static_cast<long>(sp.m + sp.n);
  const long lo = (s - 2) * t - t * t;
  const long hi = (s + 1) * t - t * t;
  return {rpow(sp.q, lo), rpow(sp.q, hi), rpow(sp.q, lo), rpow(sp.q, hi + 1)};
}

/// log_base of a positive integer as a double (display and log-domain use only).
inline double log_base(const BigCount& v, double base) {
  detail::require(v > 0, "log of a non-positive count");
  const std::size_t bits = boost::multiprecision::msb(v) + 1;
  double lg2;
  if (bits <= 60) {
    lg2 = std::log2(v.convert_to<double>());
  } else {
    const std::size_t shift = bits - 60;
    const BigCount top = v >> shift;
    lg2 = std::log2(top.convert_to<double>()) + static_cast<double>(shift);
  }
  return lg2 / std::log2(base);
}

inline double log_q(const BigCount& v, Residue q) { return log_base(v, static_cast<double>(q)); }

inline double log_q(const Rational& v, Residue q) {
  return log_q(boost::multiprecision::numerator(v), q) - log_q(boost::multiprecision::denominator(v), q);
}

/// Rational as double via logs of numerator and denominator; safe for huge operands.
inline double to_double(const Rational& v) {
  if (v == 0) return 0.0;
  const BigCount num = boost::multiprecision::numerator(v);
  const BigCount den = boost::multiprecision::denominator(v);
  const bool negative = num < 0;
  const BigCount a = negative ? BigCount(-num) : num;
  if (boost::multiprecision::msb(a) < 1000 && boost::multiprecision::msb(den) < 1000)
    return v.convert_to<double>();
  const double r = std::exp2(log_base(a, 2.0) - log_base(den, 2.0));
  return negative ? -r : r;
}

}  // namespace rankmetric
