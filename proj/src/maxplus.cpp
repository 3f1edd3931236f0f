#include "tropt/maxplus.hpp"

#include <ostream>
#include <utility>

namespace tropt::maxplus {

std::ostream& operator<<(std::ostream& os, const TropScalar& s) {
  if (s.is_bottom()) return os << "bot";
  return os << s.value();
}

TropVector::TropVector(std::vector<TropScalar> elems, Orient o)
    : elems_(std::move(elems)), orient_(o) {
  if (elems_.empty()) throw ShapeMismatch("vector must have at least one element");
}

TropVector TropVector::column(std::initializer_list<TropScalar> elems) {
  return TropVector(std::vector<TropScalar>(elems), Orient::column);
}

TropVector TropVector::row(std::initializer_list<TropScalar> elems) {
  return TropVector(std::vector<TropScalar>(elems), Orient::row);
}

TropVector TropVector::filled(std::size_t n, const TropScalar& v, Orient o) {
  return TropVector(std::vector<TropScalar>(n, v), o);
}

bool TropVector::is_regular() const {
  for (const auto& e : elems_) {
    if (e.is_bottom()) return false;
  }
  return true;
}

bool TropVector::is_zero() const {
  for (const auto& e : elems_) {
    if (!e.is_bottom()) return false;
  }
  return true;
}

bool operator==(const TropVector& a, const TropVector& b) {
  return a.orient_ == b.orient_ && a.elems_ == b.elems_;
}

std::ostream& operator<<(std::ostream& os, const TropVector& v) {
  os << (v.orient() == Orient::column ? "col(" : "row(");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ')';
}

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, const TropScalar& fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
  if (rows == 0 || cols == 0) throw ShapeMismatch("matrix dimensions must be positive");
}

TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<TropScalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw ShapeMismatch("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged matrix initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = TropScalar::one();
  return m;
}

bool operator==(const TropMatrix& a, const TropMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::ostream& operator<<(std::ostream& os, const TropMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
  }
  return os << ']';
}

TropVector vec_add(const TropVector& a, const TropVector& b) {
  if (a.size() != b.size() || a.orient() != b.orient()) {
    throw ShapeMismatch("vec_add: nonconforming vectors");
  }
  std::vector<TropScalar> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(tadd(a[i], b[i]));
  return TropVector(std::move(out), a.orient());
}

TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("mat_add: nonconforming matrices");
  }
  TropMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = tadd(a(i, j), b(i, j));
  }
  return out;
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& c) {
  if (a.cols() != c.rows()) throw ShapeMismatch("mat_mul: inner dimensions differ");
  TropMatrix out(a.rows(), c.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      TropScalar acc;  // bottom
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = tadd(acc, tmul(a(i, k), c(k, j)));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

TropVector mat_mul(const TropMatrix& a, const TropVector& x) {
  if (x.orient() != Orient::column) throw ShapeMismatch("mat_mul: expected column vector");
  if (a.cols() != x.size()) throw ShapeMismatch("mat_mul: inner dimensions differ");
  std::vector<TropScalar> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    TropScalar acc;
    for (std::size_t k = 0; k < a.cols(); ++k) acc = tadd(acc, tmul(a(i, k), x[k]));
    out[i] = acc;
  }
  return TropVector(std::move(out), Orient::column);
}

TropVector mat_mul(const TropVector& x, const TropMatrix& a) {
  if (x.orient() != Orient::row) throw ShapeMismatch("mat_mul: expected row vector");
  if (x.size() != a.rows()) throw ShapeMismatch("mat_mul: inner dimensions differ");
  std::vector<TropScalar> out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    TropScalar acc;
    for (std::size_t k = 0; k < a.rows(); ++k) acc = tadd(acc, tmul(x[k], a(k, j)));
    out[j] = acc;
  }
  return TropVector(std::move(out), Orient::row);
}

TropScalar mat_mul(const TropVector& a, const TropVector& b) {
  if (a.orient() != Orient::row || b.orient() != Orient::column) {
    throw ShapeMismatch("mat_mul: expected row * column");
  }
  if (a.size() != b.size()) throw ShapeMismatch("mat_mul: lengths differ");
  TropScalar acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc = tadd(acc, tmul(a[i], b[i]));
  return acc;
}

TropMatrix outer(const TropVector& a, const TropVector& b) {
  if (a.orient() != Orient::column || b.orient() != Orient::row) {
    throw ShapeMismatch("outer: expected column * row");
  }
  TropMatrix out(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out(i, j) = tmul(a[i], b[j]);
  }
  return out;
}

TropVector scale(const TropScalar& x, const TropVector& v) {
  std::vector<TropScalar> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(tmul(x, v[i]));
  return TropVector(std::move(out), v.orient());
}

TropMatrix scale(const TropScalar& x, const TropMatrix& a) {
  TropMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = tmul(x, a(i, j));
  }
  return out;
}

TropVector conjugate(const TropVector& v) {
  if (v.is_zero()) throw ZeroVector("conjugate of the zero vector");
  std::vector<TropScalar> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(v[i].is_bottom() ? TropScalar::bottom() : tinv(v[i]));
  }
  return TropVector(std::move(out),
                    v.orient() == Orient::column ? Orient::row : Orient::column);
}

TropScalar trace(const TropMatrix& a) {
  if (!a.is_square()) throw ShapeMismatch("trace: matrix not square");
  TropScalar acc;
  for (std::size_t i = 0; i < a.rows(); ++i) acc = tadd(acc, a(i, i));
  return acc;
}

TropScalar tr_sum(const TropMatrix& a) {
  if (!a.is_square()) throw ShapeMismatch("tr_sum: matrix not square");
  TropScalar acc = trace(a);
  TropMatrix power = a;
  for (std::size_t k = 2; k <= a.rows(); ++k) {
    power = mat_mul(power, a);
    acc = tadd(acc, trace(power));
  }
  return acc;
}

TropMatrix kleene_star(const TropMatrix& a) {
  if (!a.is_square()) throw ShapeMismatch("kleene_star: matrix not square");
  if (tr_sum(a) > TropScalar::one()) {
    throw StarDiverges("kleene_star: Tr(A) exceeds the one element");
  }
  const std::size_t n = a.rows();
  // (I + A)^m equals the asterate for every m >= n - 1.
  TropMatrix m = mat_add(TropMatrix::identity(n), a);
  std::size_t covered = 1;
  while (covered < n - 1) {
    m = mat_mul(m, m);
    covered *= 2;
  }
  return m;
}

bool entrywise_leq(const TropVector& a, const TropVector& b) {
  if (a.size() != b.size() || a.orient() != b.orient()) {
    throw ShapeMismatch("entrywise_leq: nonconforming vectors");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] <= b[i])) return false;
  }
  return true;
}

bool entrywise_leq(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("entrywise_leq: nonconforming matrices");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) <= b(i, j))) return false;
    }
  }
  return true;
}

}  // namespace tropt::maxplus
