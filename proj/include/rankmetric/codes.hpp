#pragma once

// MRD and Gabidulin codes: linearized polynomials, the Frobenius-power
// generator matrix, encoding, rank-weight spectra and codebook export.

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "rankmetric/bounds.hpp"
#include "rankmetric/enumerative.hpp"
#include "rankmetric/error.hpp"
#include "rankmetric/finite_field.hpp"
#include "rankmetric/rank_metric.hpp"

namespace rankmetric {

/// sum_i c_i x^{[i]}, where x^{[i]} = x^{q^i}. Trailing zero coefficients are trimmed.
class LinearizedPoly {
 public:
  explicit LinearizedPoly(Field field) : field_(std::move(field)) {}
  LinearizedPoly(Field field, std::vector<FieldElement> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) detail::require(c.field()->same_as(*field_), "coefficient from a different field");
    trim();
  }

  /// x^{[i]}
  static LinearizedPoly monomial(const Field& f, std::size_t i) {
    std::vector<FieldElement> c(i + 1, FieldElement::zero(f));
    c[i] = FieldElement::one(f);
    return LinearizedPoly(f, std::move(c));
  }

  const Field& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// q-degree; -1 for the zero polynomial.
  long q_degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  Field field_;
  std::vector<FieldElement> coeffs_;
};

inline FieldElement lin_poly_eval(const LinearizedPoly& p, const FieldElement& a) {
  FieldElement acc = FieldElement::zero(a.field());
  FieldElement power = a;  // a^{[i]}
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) power = frobenius(power, 1);
    if (!p.coeffs()[i].is_zero()) acc += p.coeffs()[i] * power;
  }
  return acc;
}

/// Composition p(r(x)): coefficient of x^{[k]} is sum_{i+j=k} p_i r_j^{[i]}.
inline LinearizedPoly lin_poly_compose(const LinearizedPoly& p, const LinearizedPoly& r) {
  detail::require(p.field()->same_as(*r.field()), "composition of polynomials over different fields");
  if (p.is_zero() || r.is_zero()) return LinearizedPoly(p.field());
  const auto& pc = p.coeffs();
  const auto& rc = r.coeffs();
  std::vector<FieldElement> out(pc.size() + rc.size() - 1, FieldElement::zero(p.field()));
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (pc[i].is_zero()) continue;
    for (std::size_t j = 0; j < rc.size(); ++j) out[i + j] += pc[i] * frobenius(rc[j], i);
  }
  return LinearizedPoly(p.field(), std::move(out));
}

/// Gab_k(g): generator row i is (g_1^{[i]}, ..., g_n^{[i]}), i = 0..k-1.
class GabidulinCode {
 public:
  GabidulinCode(RankVector g, std::size_t k) : g_(std::move(g)), k_(k) {
    const std::size_t n = g_.size(), m = g_.field()->m();
    detail::require(n <= m, "Gabidulin codes need n <= m");
    detail::require(k >= 1 && k <= n, "dimension k must lie in [1, n]");
    detail::require(rank(g_) == n, "generating vector entries are linearly dependent over F_q");
    generator_.reserve(k);
    std::vector<FieldElement> row = g_.entries();
    for (std::size_t i = 0; i < k; ++i) {
      if (i)
        for (auto& e : row) e = frobenius(e, 1);
      generator_.push_back(row);
    }
  }

  const RankVector& g() const { return g_; }
  const Field& field() const { return g_.field(); }
  std::size_t k() const { return k_; }
  std::size_t n() const { return g_.size(); }
  std::size_t m() const { return field()->m(); }
  Residue q() const { return field()->q(); }
  SpaceParams space() const { return SpaceParams(q(), m(), n()); }
  std::size_t designed_distance() const { return n() - k_ + 1; }
  BigCount cardinality() const { return ipow(q(), m() * k_); }
  const std::vector<std::vector<FieldElement>>& generator() const { return generator_; }

 private:
  RankVector g_;
  std::size_t k_;
  std::vector<std::vector<FieldElement>> generator_;
};

/// Polynomial basis of F_{q^m} truncated to length n.
inline RankVector default_generating_vector(const Field& f, std::size_t n) {
  detail::require(n >= 1 && n <= f->m(), "generating vector length must lie in [1, m]");
  std::vector<FieldElement> g;
  for (std::size_t j = 0; j < n; ++j) g.push_back(FieldElement::monomial(f, j));
  return RankVector(std::move(g));
}

inline GabidulinCode gabidulin_new(const RankVector& g, std::size_t k) { return GabidulinCode(g, k); }

/// message * G.
inline RankVector gabidulin_encode(const GabidulinCode& code, const std::vector<FieldElement>& message) {
  detail::require(message.size() == code.k(), "message length must equal k");
  std::vector<FieldElement> out(code.n(), FieldElement::zero(code.field()));
  for (std::size_t i = 0; i < code.k(); ++i) {
    if (message[i].is_zero()) continue;
    for (std::size_t j = 0; j < code.n(); ++j) out[j] += message[i] * code.generator()[i][j];
  }
  return RankVector(std::move(out), code.g().basis());
}

/// Linearized polynomial of a message: sum_i u_i x^{[i]}.
inline LinearizedPoly message_polynomial(const GabidulinCode& code, const std::vector<FieldElement>& message) {
  detail::require(message.size() == code.k(), "message length must equal k");
  return LinearizedPoly(code.field(), message);
}

/// The mk F_q-generators beta_l * row_i of the code, flattened to m x n matrices.
inline FlatGenerators fq_generators(const GabidulinCode& code) {
  std::vector<RankVector> rows;
  const Basis basis = Basis::polynomial(code.field());
  for (const auto& row : code.generator())
    for (const auto& beta : basis.elements()) {
      std::vector<FieldElement> scaled;
      for (const auto& e : row) scaled.push_back(beta * e);
      rows.emplace_back(std::move(scaled), basis);
    }
  return flatten(rows);
}

/// Brute-force rank census of all q^{mk} codewords (index = rank).
inline std::vector<std::uint64_t> gabidulin_census(const GabidulinCode& code, unsigned threads = 0) {
  return span_rank_census(fq_generators(code), threads);
}

inline std::size_t gabidulin_min_distance(const GabidulinCode& code, unsigned threads = 0) {
  return span_min_rank(fq_generators(code), threads);
}

/// A_s for s = 0..n.
struct RankSpectrum {
  std::vector<BigCount> counts;

  BigCount total() const {
    BigCount s = 0;
    for (const auto& c : counts) s += c;
    return s;
  }
  const BigCount& operator[](std::size_t s) const { return counts.at(s); }
};

/// Rank distribution of an MRD code with n <= m and distance d:
///   A_{d+l} = [n, d+l]_q sum_{t=0}^{l} (-1)^{t+l} [d+l, l-t]_q q^{C(l-t, 2)} (q^{m(t+1)} - 1).
/// The inner binomial uses l-t; with l+t the counts no longer sum to q^{m(n-d+1)}.
inline RankSpectrum mrd_spectrum(const SpaceParams& sp, std::size_t d) {
  detail::require(sp.n <= sp.m, "mrd_spectrum needs n <= m (transpose otherwise)");
  detail::require(d >= 1 && d <= sp.n, "distance d must lie in [1, n]");
  const long n = static_cast<long>(sp.n), dd = static_cast<long>(d);
  RankSpectrum weights;
  weights.counts.assign(sp.n + 1, 0);
  weights.counts[0] = 1;
  for (long l = 0; dd + l <= n; ++l) {
    BigInt inner = 0;
    for (long t = 0; t <= l; ++t) {
      const long j = l - t;
      BigInt term = gaussian_binomial(dd + l, j, sp.q) * ipow(sp.q, static_cast<std::size_t>(j * (j - 1) / 2)) *
                    (ipow(sp.q, sp.m * static_cast<std::size_t>(t + 1)) - 1);
      if ((t + l) % 2) term = -term;
      inner += term;
    }
    BigInt a = gaussian_binomial(n, dd + l, sp.q) * inner;
    detail::ensure(a >= 0, "negative MRD spectrum entry");
    weights.counts[static_cast<std::size_t>(dd + l)] = a;
  }
  detail::ensure(weights.total() == ipow(sp.q, sp.m * (sp.n - d + 1)), "MRD spectrum does not sum to q^{m(n-d+1)}");
  return weights;
}

/// Gab_{n-2}(g) over F_{2^n} with g the polynomial basis: d = 3, t = 1.
inline GabidulinCode quasi_perfect_gabidulin(std::size_t n) {
  detail::require(n >= 3, "quasi-perfect Gabidulin family needs n >= 3");
  const Field f = field_new(2, n);
  return GabidulinCode(default_generating_vector(f, n), n - 2);
}

/// Writes every codeword, one per line, entries as coordinate tuples over F_q in the
/// polynomial basis. Header lines start with '#'.
inline void write_codebook(std::ostream& os, const GabidulinCode& code) {
  const FlatGenerators gens = fq_generators(code);
  checked_span_size(code.q(), gens.words.size());
  const auto& mod = code.field()->modulus();
  os << "# rank-metric codebook\n";
  os << "# q=" << code.q() << " m=" << code.m() << " n=" << code.n() << " k=" << code.k() << " modulus=";
  for (std::size_t i = 0; i < mod.size(); ++i) os << (i ? "," : "") << mod[i];
  os << "\n# coefficients low-order first; entry j of a codeword is (c_0,...,c_{m-1}) in the basis 1,x,...,x^{m-1}\n";
  const std::size_t m = code.m(), n = code.n();
  // Sequential walk keeps the line order fixed.
  struct Acc {};
  span_reduce(
      gens, Acc{},
      [&](Acc&, std::span<const Residue> w) {
        for (std::size_t j = 0; j < n; ++j) {
          os << (j ? " (" : "(");
          for (std::size_t i = 0; i < m; ++i) os << (i ? "," : "") << w[i * n + j];
          os << ")";
        }
        os << "\n";
      },
      [](Acc a, const Acc&) { return a; }, 1);
}

}  // namespace rankmetric
