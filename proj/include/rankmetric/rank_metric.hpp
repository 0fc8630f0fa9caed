#pragma once

// The rank metric on F_{q^m}^n: expansion of a vector into an m x n matrix over
// F_q, rank and rank distance, the transposition map T, and minimum distance of
// explicit or F_q-spanned codes.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "rankmetric/error.hpp"
#include "rankmetric/finite_field.hpp"
#include "rankmetric/parallel.hpp"
#include "rankmetric/qmatrix.hpp"

namespace rankmetric {

/// Largest code the enumeration kernels will walk.
inline constexpr std::uint64_t kSpanGuard = std::uint64_t{1} << 24;

class RankVector {
 public:
  RankVector(std::vector<FieldElement> entries, Basis basis)
      : entries_(std::move(entries)), basis_(std::move(basis)) {
    detail::require(!entries_.empty(), "rank vector length n must be >= 1");
    for (const auto& e : entries_)
      detail::require(e.field()->same_as(*basis_.field()), "rank vector entries from different fields");
  }
  explicit RankVector(std::vector<FieldElement> entries)
      : RankVector(entries, Basis::polynomial(require_nonempty(entries).front().field())) {}

  static RankVector zero(const Field& f, std::size_t n) {
    return RankVector(std::vector<FieldElement>(n, FieldElement::zero(f)));
  }

  std::size_t size() const { return entries_.size(); }
  const FieldElement& operator[](std::size_t j) const { return entries_[j]; }
  const std::vector<FieldElement>& entries() const { return entries_; }
  const Basis& basis() const { return basis_; }
  const Field& field() const { return basis_.field(); }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const FieldElement& e) { return e.is_zero(); });
  }

  friend RankVector operator+(const RankVector& a, const RankVector& b) { return a.zip(b, 1); }
  friend RankVector operator-(const RankVector& a, const RankVector& b) { return a.zip(b, -1); }

  // Multiplication of every entry by a scalar from F_{q^m}.
  friend RankVector operator*(const FieldElement& s, const RankVector& v) {
    std::vector<FieldElement> out;
    out.reserve(v.size());
    for (const auto& e : v.entries_) out.push_back(s * e);
    return RankVector(std::move(out), v.basis_);
  }

  friend bool operator==(const RankVector& a, const RankVector& b) {
    return a.entries_.size() == b.entries_.size() &&
           std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin());
  }

 private:
  static const std::vector<FieldElement>& require_nonempty(const std::vector<FieldElement>& e) {
    detail::require(!e.empty(), "rank vector length n must be >= 1");
    return e;
  }

  RankVector zip(const RankVector& b, int sign) const {
    detail::require(size() == b.size(), "rank vectors of different lengths");
    std::vector<FieldElement> out;
    out.reserve(size());
    for (std::size_t j = 0; j < size(); ++j) out.push_back(sign > 0 ? entries_[j] + b.entries_[j] : entries_[j] - b.entries_[j]);
    return RankVector(std::move(out), basis_);
  }

  std::vector<FieldElement> entries_;
  Basis basis_;
};

/// m x n matrix whose column j is expand(x_j, basis).
inline QMatrix to_matrix(const RankVector& x) {
  const std::size_t m = x.field()->m(), n = x.size();
  QMatrix out(x.field()->q(), m, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = expand(x[j], x.basis());
    for (std::size_t i = 0; i < m; ++i) out(i, j) = col[i];
  }
  return out;
}

inline RankVector to_vector(const QMatrix& mat, const Basis& basis) {
  detail::require(mat.rows() == basis.size() && mat.q() == basis.field()->q(),
                  "matrix shape does not match the basis");
  std::vector<FieldElement> entries;
  std::vector<Residue> col(mat.rows());
  for (std::size_t j = 0; j < mat.cols(); ++j) {
    for (std::size_t i = 0; i < mat.rows(); ++i) col[i] = mat(i, j);
    entries.push_back(combine(col, basis));
  }
  return RankVector(std::move(entries), basis);
}

inline std::size_t rank(const RankVector& x) { return rank_of(to_matrix(x)); }

inline std::size_t rank_distance(const RankVector& x, const RankVector& y) {
  detail::require(x.size() == y.size(), "rank_distance: length mismatch");
  detail::require(x.field()->same_as(*y.field()), "rank_distance: field mismatch");
  return rank(x - y);
}

/// T: F_{q^m}^n -> F_{q^n}^m. The expansion of T(x) over `target` is the transpose
/// of the expansion of x.
inline RankVector transpose_vector(const RankVector& x, const Basis& target) {
  detail::require(target.field()->m() == x.size(), "target field degree must equal the vector length n");
  detail::require(target.field()->q() == x.field()->q(), "target field has a different base field");
  return to_vector(to_matrix(x).transposed(), target);
}

/// Lazy image of a code under T; elements are produced on iteration.
inline auto transposed_code(std::span<const RankVector> code, const Basis& target) {
  return code | std::views::transform([&target](const RankVector& c) { return transpose_vector(c, target); });
}

/// Generators of an F_q-linear code in flattened matrix form (rows x cols, row-major).
struct FlatGenerators {
  Residue q = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Residue>> words;

  std::size_t word_size() const { return rows * cols; }
};

inline std::uint64_t checked_span_size(Residue q, std::size_t k, std::uint64_t guard = kSpanGuard) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > guard / q) throw GuardExceeded("span of " + std::to_string(k) + " generators over F_" + std::to_string(q) + " exceeds the enumeration guard");
    total *= q;
  }
  if (total > guard) throw GuardExceeded("span exceeds the enumeration guard");
  return total;
}

/// Folds visit(acc, word) over every word of the F_q-span of gens (including 0).
/// Index space is cut into fixed chunks, each reduced independently, and merged
/// in chunk order; the result does not depend on the thread count.
template <typename Acc, typename Visit, typename Merge>
Acc span_reduce(const FlatGenerators& gens, Acc init, Visit visit, Merge merge, unsigned threads = 0) {
  const std::size_t k = gens.words.size();
  const std::uint64_t total = checked_span_size(gens.q, k);
  const PrimeField f(gens.q);
  const std::size_t len = gens.word_size();
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(total, 64));
  std::vector<Acc> partial(chunks, init);

  parallel_chunks(static_cast<std::size_t>(total), chunks, threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    Acc& acc = partial[c];
    std::vector<Residue> digits(k, 0), word(len, 0);
    std::uint64_t idx = begin;
    for (std::size_t j = 0; j < k; ++j) {
      digits[j] = static_cast<Residue>(idx % gens.q);
      idx /= gens.q;
      for (std::size_t p = 0; p < len; ++p) word[p] = f.add(word[p], f.mul(digits[j], gens.words[j][p]));
    }
    for (std::size_t i = begin; i < end; ++i) {
      visit(acc, std::span<const Residue>(word));
      // Odometer step: adding g_j q times is zero, so a wrap needs no correction.
      for (std::size_t j = 0; j < k; ++j) {
        const auto& g = gens.words[j];
        for (std::size_t p = 0; p < len; ++p) word[p] = f.add(word[p], g[p]);
        if (++digits[j] < gens.q) break;
        digits[j] = 0;
      }
    }
  });

  Acc out = init;
  for (auto& p : partial) out = merge(out, p);
  return out;
}

/// Minimum rank over nonzero words of the F_q-span. Returns max() if the span is {0}.
inline std::size_t span_min_rank(const FlatGenerators& gens, unsigned threads = 0) {
  const PrimeField f(gens.q);
  struct Acc {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<Residue> scratch;
  };
  auto visit = [&](Acc& acc, std::span<const Residue> w) {
    if (acc.best == 1) return;
    if (std::all_of(w.begin(), w.end(), [](Residue v) { return v == 0; })) return;
    acc.best = std::min(acc.best, rank_of(f, w, gens.rows, gens.cols, acc.scratch));
  };
  auto merge = [](Acc a, const Acc& b) {
    a.best = std::min(a.best, b.best);
    return a;
  };
  return span_reduce(gens, Acc{}, visit, merge, threads).best;
}

/// Rank census (count of words of each rank 0..min(rows, cols)) of the F_q-span.
inline std::vector<std::uint64_t> span_rank_census(const FlatGenerators& gens, unsigned threads = 0) {
  const PrimeField f(gens.q);
  const std::size_t top = std::min(gens.rows, gens.cols);
  struct Acc {
    std::vector<std::uint64_t> counts;
    std::vector<Residue> scratch;
  };
  auto visit = [&](Acc& acc, std::span<const Residue> w) {
    ++acc.counts[rank_of(f, w, gens.rows, gens.cols, acc.scratch)];
  };
  auto merge = [](Acc a, const Acc& b) {
    for (std::size_t i = 0; i < a.counts.size(); ++i) a.counts[i] += b.counts[i];
    return a;
  };
  return span_reduce(gens, Acc{std::vector<std::uint64_t>(top + 1, 0), {}}, visit, merge, threads).counts;
}

enum class CodeForm {
  nonlinear,         // explicit list; distance is min over distinct pairs
  linear_codewords,  // explicit list of a linear code; min rank over nonzero words
  linear_basis,      // F_q-generators; the span is enumerated
};

inline FlatGenerators flatten(std::span<const RankVector> words) {
  FlatGenerators g;
  g.q = words.front().field()->q();
  g.rows = words.front().field()->m();
  g.cols = words.front().size();
  for (const auto& w : words) {
    detail::require(w.size() == g.cols && w.field()->same_as(*words.front().field()),
                    "codewords differ in length or field");
    auto mat = to_matrix(w);
    g.words.emplace_back(mat.data().begin(), mat.data().end());
  }
  return g;
}

inline std::size_t min_rank_distance(std::span<const RankVector> code, CodeForm form, unsigned threads = 0) {
  detail::require(!code.empty(), "min_rank_distance: empty code");
  const FlatGenerators flat = flatten(code);
  const PrimeField f(flat.q);
  std::vector<Residue> scratch, diff(flat.word_size());
  std::size_t best = std::numeric_limits<std::size_t>::max();

  switch (form) {
    case CodeForm::nonlinear: {
      detail::require(code.size() >= 2, "min_rank_distance: need at least two codewords");
      for (std::size_t a = 0; a < flat.words.size(); ++a)
        for (std::size_t b = a + 1; b < flat.words.size(); ++b) {
          for (std::size_t p = 0; p < diff.size(); ++p) diff[p] = f.sub(flat.words[a][p], flat.words[b][p]);
          const std::size_t r = rank_of(f, diff, flat.rows, flat.cols, scratch);
          detail::require(r != 0, "min_rank_distance: duplicate codewords");
          best = std::min(best, r);
        }
      break;
    }
    case CodeForm::linear_codewords:
      for (const auto& w : flat.words) {
        const std::size_t r = rank_of(f, w, flat.rows, flat.cols, scratch);
        if (r) best = std::min(best, r);
      }
      break;
    case CodeForm::linear_basis:
      best = span_min_rank(flat, threads);
      break;
  }
  detail::require(best != std::numeric_limits<std::size_t>::max(), "min_rank_distance: code has no nonzero codeword");
  return best;
}

}  // namespace rankmetric
