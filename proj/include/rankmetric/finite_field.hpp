#pragma once

// Arithmetic in F_q (q prime) and in the extension F_{q^m} = F_q[x]/(f).
//
// Elements are dense coordinate vectors in the polynomial basis 1, x, ..., x^{m-1}.
// A Field is a shared immutable FieldParams, so any number of fields may coexist.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rankmetric/error.hpp"
#include "rankmetric/qmatrix.hpp"

namespace rankmetric {

using Poly = std::vector<Residue>;  // coefficients over F_q, low-order first

namespace detail::poly {

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

// Remainder of a modulo b (b nonzero).
inline Poly mod(const PrimeField& f, Poly a, const Poly& b) {
  trim(a);
  const long db = degree(b);
  const Residue lead_inv = f.inv(b.back());
  while (degree(a) >= db) {
    const Residue factor = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
    trim(a);
  }
  return a;
}

inline Poly mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

inline Poly sub(const PrimeField& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

inline Poly gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& modulus) {
  Poly result{1};
  base = mod(f, std::move(base), modulus);
  while (e) {
    if (e & 1) result = mod(f, mul(f, result, base), modulus);
    base = mod(f, mul(f, base, base), modulus);
    e >>= 1;
  }
  return result;
}

// Ben-Or: monic f of degree m is irreducible iff gcd(f, x^{q^i} - x) = 1 for 1 <= i <= m/2.
inline bool is_irreducible(const PrimeField& f, const Poly& p) {
  Poly g = p;
  trim(g);
  const long m = degree(g);
  if (m < 1) return false;
  if (m == 1) return true;
  const Poly x{0, 1};
  Poly h = mod(f, x, g);
  for (long i = 1; i <= m / 2; ++i) {
    h = powmod(f, h, f.q(), g);
    Poly c = gcd(f, g, sub(f, h, x));
    if (degree(c) > 0) return false;
  }
  return true;
}

}  // namespace detail::poly

/// Parameters of F_{q^m}: prime q, degree m, monic irreducible modulus of degree m.
class FieldParams {
 public:
  FieldParams(Residue q, std::size_t m, Poly modulus) : fq_(q), m_(m), modulus_(std::move(modulus)) {
    detail::require(m >= 1, "extension degree m must be >= 1");
    detail::require(modulus_.size() == m + 1, "modulus polynomial must have degree exactly m");
    for (Residue c : modulus_) detail::require(c < q, "modulus coefficient out of range [0, q)");
    detail::require(modulus_.back() == 1, "modulus polynomial must be monic");
    detail::require(detail::poly::is_irreducible(fq_, modulus_), "modulus polynomial is reducible over F_q");
    build_tables();
  }

  Residue q() const { return fq_.q(); }
  std::size_t m() const { return m_; }
  const PrimeField& base() const { return fq_; }
  const Poly& modulus() const { return modulus_; }

  // x^{m+j} mod f for j = 0 .. m-2, as length-m coordinate vectors.
  const std::vector<std::vector<Residue>>& reduction() const { return reduction_; }
  // Matrix of a -> a^q in the polynomial basis.
  const QMatrix& frobenius_matrix() const { return frobenius_; }

  bool same_as(const FieldParams& o) const {
    return this == &o || (q() == o.q() && m_ == o.m_ && modulus_ == o.modulus_);
  }

  std::string describe() const {
    std::ostringstream os;
    os << "F_" << q() << "^" << m_ << " mod [";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    os << "]";
    return os.str();
  }

 private:
  void build_tables() {
    const Poly& f = modulus_;
    reduction_.clear();
    if (m_ >= 2) {
      // x^m = -(f_0 + ... + f_{m-1} x^{m-1})
      std::vector<Residue> cur(m_);
      for (std::size_t i = 0; i < m_; ++i) cur[i] = fq_.neg(f[i]);
      reduction_.push_back(cur);
      for (std::size_t j = 1; j + 1 < m_; ++j) {
        std::vector<Residue> next(m_, 0);
        const Residue top = cur[m_ - 1];
        for (std::size_t i = m_ - 1; i >= 1; --i) next[i] = cur[i - 1];
        for (std::size_t i = 0; i < m_; ++i) next[i] = fq_.add(next[i], fq_.mul(top, reduction_[0][i]));
        reduction_.push_back(next);
        cur = std::move(next);
      }
    }
    frobenius_ = QMatrix(q(), m_, m_);
    for (std::size_t j = 0; j < m_; ++j) {
      Poly xj(j + 1, 0);
      xj[j] = 1;
      Poly img = detail::poly::powmod(fq_, xj, q(), f);
      for (std::size_t i = 0; i < img.size(); ++i) frobenius_(i, j) = img[i];
    }
  }

  PrimeField fq_;
  std::size_t m_;
  Poly modulus_;
  std::vector<std::vector<Residue>> reduction_;
  QMatrix frobenius_;
};

using Field = std::shared_ptr<const FieldParams>;

/// Lowest monic irreducible of degree m, ordering candidates by the base-q integer
/// whose most significant digit is the x^{m-1} coefficient.
inline Poly default_modulus(Residue q, std::size_t m) {
  PrimeField fq(q);
  Poly p(m + 1, 0);
  p[m] = 1;
  while (true) {
    if (detail::poly::is_irreducible(fq, p)) return p;
    std::size_t i = 0;
    while (i < m && ++p[i] == q) p[i++] = 0;
    detail::ensure(i < m, "no irreducible polynomial found");
  }
}

inline Field field_new(Residue q, std::size_t m, std::optional<Poly> modulus = std::nullopt) {
  detail::require(PrimeField::is_prime(q), "q must be prime, got " + std::to_string(q));
  detail::require(m >= 1, "extension degree m must be >= 1");
  return std::make_shared<const FieldParams>(q, m, modulus ? std::move(*modulus) : default_modulus(q, m));
}

/// An element of F_{q^m}: coordinates in the polynomial basis.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field field, std::vector<Residue> coords) : field_(std::move(field)), coords_(std::move(coords)) {
    detail::require(field_ != nullptr, "null field");
    detail::require(coords_.size() == field_->m(), "coordinate vector must have length m");
    for (Residue c : coords_) detail::require(c < field_->q(), "coordinate out of range [0, q)");
  }

  static FieldElement zero(const Field& f) { return FieldElement(f, std::vector<Residue>(f->m(), 0)); }
  static FieldElement one(const Field& f) {
    std::vector<Residue> c(f->m(), 0);
    c[0] = 1;
    return FieldElement(f, std::move(c));
  }
  static FieldElement from_base(const Field& f, Residue v) {
    std::vector<Residue> c(f->m(), 0);
    c[0] = v % f->q();
    return FieldElement(f, std::move(c));
  }
  // x^j in the polynomial basis.
  static FieldElement monomial(const Field& f, std::size_t j) {
    detail::require(j < f->m(), "monomial index out of range");
    std::vector<Residue> c(f->m(), 0);
    c[j] = 1;
    return FieldElement(f, std::move(c));
  }
  // Element whose coordinates are the base-q digits of idx (coordinate 0 least significant).
  static FieldElement from_index(const Field& f, std::uint64_t idx) {
    std::vector<Residue> c(f->m(), 0);
    for (std::size_t i = 0; i < f->m(); ++i) {
      c[i] = static_cast<Residue>(idx % f->q());
      idx /= f->q();
    }
    return FieldElement(f, std::move(c));
  }

  const Field& field() const { return field_; }
  std::span<const Residue> coords() const { return coords_; }
  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Residue c) { return c == 0; });
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return a.coords_ == b.coords_;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    const PrimeField& f = a.field_->base();
    std::vector<Residue> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coords_[i], b.coords_[i]);
    return FieldElement(a.field_, std::move(c), Unchecked{});
  }

  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    const PrimeField& f = a.field_->base();
    std::vector<Residue> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coords_[i], b.coords_[i]);
    return FieldElement(a.field_, std::move(c), Unchecked{});
  }

  friend FieldElement operator-(const FieldElement& a) {
    const PrimeField& f = a.field_->base();
    std::vector<Residue> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.neg(a.coords_[i]);
    return FieldElement(a.field_, std::move(c), Unchecked{});
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    const FieldParams& fp = *a.field_;
    const PrimeField& f = fp.base();
    const std::size_t m = fp.m();
    std::vector<Residue> prod(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!a.coords_[i]) continue;
      for (std::size_t j = 0; j < m; ++j) prod[i + j] = f.add(prod[i + j], f.mul(a.coords_[i], b.coords_[j]));
    }
    std::vector<Residue> c(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(m));
    for (std::size_t j = 0; j + 1 < m; ++j) {
      const Residue hi = prod[m + j];
      if (!hi) continue;
      const auto& red = fp.reduction()[j];
      for (std::size_t i = 0; i < m; ++i) c[i] = f.add(c[i], f.mul(hi, red[i]));
    }
    return FieldElement(a.field_, std::move(c), Unchecked{});
  }

  // Scalar multiple by an element of F_q.
  FieldElement scaled(Residue s) const {
    const PrimeField& f = field_->base();
    std::vector<Residue> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.mul(coords_[i], s % f.q());
    return FieldElement(field_, std::move(c), Unchecked{});
  }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    os << "(";
    for (std::size_t i = 0; i < a.coords_.size(); ++i) os << (i ? "," : "") << a.coords_[i];
    return os << ")";
  }

 private:
  struct Unchecked {};
  FieldElement(Field f, std::vector<Residue> c, Unchecked) : field_(std::move(f)), coords_(std::move(c)) {}

  void check_same(const FieldElement& o) const {
    detail::require(field_ && o.field_ && field_->same_as(*o.field_), "field parameters mismatch");
  }

  Field field_;
  std::vector<Residue> coords_;
};

inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement neg(const FieldElement& a) { return -a; }

/// Multiplicative inverse via the extended Euclidean algorithm in F_q[x].
inline FieldElement inv(const FieldElement& a) {
  detail::require(!a.is_zero(), "inversion of zero");
  const FieldParams& fp = *a.field();
  const PrimeField& f = fp.base();
  namespace P = detail::poly;
  Poly r0 = fp.modulus(), r1(a.coords().begin(), a.coords().end());
  P::trim(r1);
  Poly s0{}, s1{1};
  while (P::degree(r1) > 0) {
    // One long-division step: r0 = quot * r1 + rem.
    Poly rem = r0;
    Poly quot(static_cast<std::size_t>(P::degree(r0) - P::degree(r1) + 1), 0);
    const Residue lead_inv = f.inv(r1.back());
    while (P::degree(rem) >= P::degree(r1)) {
      const Residue factor = f.mul(rem.back(), lead_inv);
      const std::size_t shift = rem.size() - r1.size();
      quot[shift] = factor;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, r1[i]));
      P::trim(rem);
    }
    Poly s2 = P::sub(f, s0, P::mul(f, quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since the modulus is irreducible.
  const Residue c_inv = f.inv(r1[0]);
  std::vector<Residue> out(fp.m(), 0);
  for (std::size_t i = 0; i < s1.size(); ++i) out[i] = f.mul(s1[i], c_inv);
  return FieldElement(a.field(), std::move(out));
}

/// a^{q^i}. The q-power map is applied as a precomputed F_q-linear matrix.
inline FieldElement frobenius(const FieldElement& a, std::size_t i) {
  const FieldParams& fp = *a.field();
  std::vector<Residue> c(a.coords().begin(), a.coords().end());
  for (std::size_t k = 0; k < i % fp.m(); ++k) c = fp.frobenius_matrix().apply(c);
  return FieldElement(a.field(), std::move(c));
}

/// Plain exponentiation, used as an independent cross-check of frobenius().
inline FieldElement pow(FieldElement a, std::uint64_t e) {
  FieldElement r = FieldElement::one(a.field());
  while (e) {
    if (e & 1) r *= a;
    a *= a;
    e >>= 1;
  }
  return r;
}

/// An F_q-basis of F_{q^m}. change_matrix maps polynomial-basis coordinates to
/// coordinates relative to `elements`.
class Basis {
 public:
  explicit Basis(std::vector<FieldElement> elements) : elements_(std::move(elements)) {
    detail::require(!elements_.empty(), "empty basis");
    field_ = elements_.front().field();
    const std::size_t m = field_->m();
    detail::require(elements_.size() == m, "a basis of F_{q^m} needs exactly m elements");
    QMatrix cols(field_->q(), m, m);
    for (std::size_t j = 0; j < m; ++j) {
      detail::require(elements_[j].field()->same_as(*field_), "basis elements from different fields");
      for (std::size_t i = 0; i < m; ++i) cols(i, j) = elements_[j].coords()[i];
    }
    detail::require(rank_of(cols) == m, "basis elements are linearly dependent over F_q");
    change_ = inverse(cols);
  }

  static Basis polynomial(const Field& f) {
    std::vector<FieldElement> e;
    for (std::size_t j = 0; j < f->m(); ++j) e.push_back(FieldElement::monomial(f, j));
    return Basis(std::move(e));
  }

  const Field& field() const { return field_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<FieldElement>& elements() const { return elements_; }
  const QMatrix& change_matrix() const { return change_; }

  bool is_polynomial() const { return change_ == QMatrix::identity(field_->q(), field_->m()); }

  friend bool operator==(const Basis& a, const Basis& b) {
    return a.field_->same_as(*b.field_) && a.change_ == b.change_;
  }

 private:
  Field field_;
  std::vector<FieldElement> elements_;
  QMatrix change_;
};

/// Coordinates of a relative to basis: a = sum_i coords[i] * basis[i].
inline std::vector<Residue> expand(const FieldElement& a, const Basis& basis) {
  detail::require(a.field()->same_as(*basis.field()), "element and basis over different fields");
  return basis.change_matrix().apply(a.coords());
}

inline FieldElement combine(std::span<const Residue> coords, const Basis& basis) {
  detail::require(coords.size() == basis.size(), "coordinate vector length differs from basis size");
  FieldElement acc = FieldElement::zero(basis.field());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i]) acc += basis.elements()[i].scaled(coords[i]);
  return acc;
}

}  // namespace rankmetric
