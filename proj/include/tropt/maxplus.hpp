#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "tropt/errors.hpp"

// The idempotent semifield R_max,+ and its dense vector/matrix algebra:
// addition is max, multiplication is arithmetic +, the additive neutral
// ("bottom") plays the role of -inf and the multiplicative neutral is 0.
// All values are immutable after construction and every operation is a
// pure function, so everything here is safe to share across threads.
namespace tropt::maxplus {

// Scalar of the semifield: a finite real or bottom. Bottom is a
// distinguished flag, not the IEEE -inf bit pattern, so every bottom in
// a computation was placed there explicitly.
class TropScalar {
 public:
  // Default-constructed scalar is bottom, the neutral accumulator start.
  constexpr TropScalar() = default;

  // Finite value. Rejects NaN and infinities.
  TropScalar(double v) : value_(v), bottom_(false) {
    if (!(v == v) || v - v != 0.0) {
      throw DegenerateInput("TropScalar requires a finite value");
    }
  }

  static constexpr TropScalar bottom() { return TropScalar{}; }
  static TropScalar one() { return TropScalar{0.0}; }

  constexpr bool is_bottom() const { return bottom_; }
  constexpr bool is_finite() const { return !bottom_; }

  // Finite payload; throws on bottom.
  double value() const {
    if (bottom_) throw InversionOfZero("no finite value: scalar is bottom");
    return value_;
  }

  friend bool operator==(const TropScalar& a, const TropScalar& b) {
    if (a.bottom_ || b.bottom_) return a.bottom_ == b.bottom_;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const TropScalar& a, const TropScalar& b) { return !(a == b); }

  // Natural order of the semifield: a <= b iff max(a, b) == b.
  friend bool operator<(const TropScalar& a, const TropScalar& b) {
    if (a.bottom_) return !b.bottom_;
    if (b.bottom_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const TropScalar& a, const TropScalar& b) { return !(b < a); }
  friend bool operator>(const TropScalar& a, const TropScalar& b) { return b < a; }
  friend bool operator>=(const TropScalar& a, const TropScalar& b) { return !(a < b); }

 private:
  double value_ = 0.0;
  bool bottom_ = true;
};

std::ostream& operator<<(std::ostream& os, const TropScalar& s);

// a (+) b = max(a, b); bottom is the neutral element.
inline TropScalar tadd(const TropScalar& a, const TropScalar& b) {
  return a < b ? b : a;
}

// a (*) b = a + b; bottom is absorbing.
inline TropScalar tmul(const TropScalar& a, const TropScalar& b) {
  if (a.is_bottom() || b.is_bottom()) return TropScalar::bottom();
  return TropScalar{a.value() + b.value()};
}

// Multiplicative inverse, i.e. conventional negation.
inline TropScalar tinv(const TropScalar& a) {
  if (a.is_bottom()) throw InversionOfZero("tinv of bottom");
  return TropScalar{-a.value()};
}

// a^r = r * a in conventional terms. bottom^r = bottom for r > 0 and is
// undefined otherwise (including r == 0).
inline TropScalar tpow(const TropScalar& a, double r) {
  if (a.is_bottom()) {
    if (r > 0.0) return TropScalar::bottom();
    throw UndefinedPower("bottom^r undefined for r <= 0");
  }
  return TropScalar{r * a.value()};
}

enum class Orient { row, column };

// Dense vector over TropScalar. A vector with no bottom element is
// called regular; the all-bottom vector is the zero vector.
class TropVector {
 public:
  explicit TropVector(std::vector<TropScalar> elems, Orient o = Orient::column);

  static TropVector column(std::initializer_list<TropScalar> elems);
  static TropVector row(std::initializer_list<TropScalar> elems);
  static TropVector filled(std::size_t n, const TropScalar& v, Orient o = Orient::column);

  std::size_t size() const { return elems_.size(); }
  Orient orient() const { return orient_; }
  const TropScalar& operator[](std::size_t i) const { return elems_[i]; }

  bool is_regular() const;  // no bottom element
  bool is_zero() const;     // all elements bottom

  friend bool operator==(const TropVector& a, const TropVector& b);
  friend bool operator!=(const TropVector& a, const TropVector& b) { return !(a == b); }

 private:
  std::vector<TropScalar> elems_;
  Orient orient_;
};

std::ostream& operator<<(std::ostream& os, const TropVector& v);

// Dense row-major matrix over TropScalar.
class TropMatrix {
 public:
  TropMatrix(std::size_t rows, std::size_t cols,
             const TropScalar& fill = TropScalar::bottom());
  TropMatrix(std::initializer_list<std::initializer_list<TropScalar>> rows);

  // 1 on the diagonal (the real 0), bottom elsewhere.
  static TropMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const TropScalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  TropScalar& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  friend bool operator==(const TropMatrix& a, const TropMatrix& b);
  friend bool operator!=(const TropMatrix& a, const TropMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<TropScalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const TropMatrix& m);

// Entry-wise sum (max). Shapes and orientations must conform.
TropVector vec_add(const TropVector& a, const TropVector& b);
TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b);

// Products. {AC}_ij = max_k (a_ik + c_kj) with the usual shape rules;
// the vector overloads keep orientation (column in, column out).
TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& c);
TropVector mat_mul(const TropMatrix& a, const TropVector& x);   // A * column
TropVector mat_mul(const TropVector& x, const TropMatrix& a);   // row * A
TropScalar mat_mul(const TropVector& a, const TropVector& b);   // row * column
TropMatrix outer(const TropVector& a, const TropVector& b);     // column * row

TropVector scale(const TropScalar& x, const TropVector& v);
TropMatrix scale(const TropScalar& x, const TropMatrix& a);

// Multiplicative conjugate transpose: flips orientation, inverts finite
// elements and keeps bottom elements bottom. Undefined for the zero vector.
TropVector conjugate(const TropVector& v);

// tr A = a_11 (+) ... (+) a_nn.
TropScalar trace(const TropMatrix& a);

// Tr(A) = tr A (+) tr A^2 (+) ... (+) tr A^n.
TropScalar tr_sum(const TropMatrix& a);

// Asterate A* = I (+) A (+) ... (+) A^{n-1}, defined when Tr(A) <= 1.
// Computed by repeated squaring of I (+) A.
TropMatrix kleene_star(const TropMatrix& a);

// Entry-wise order checks, used by solver postconditions and tests.
bool entrywise_leq(const TropVector& a, const TropVector& b);
bool entrywise_leq(const TropMatrix& a, const TropMatrix& b);

}  // namespace tropt::maxplus
