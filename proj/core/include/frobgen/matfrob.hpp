// Dense square-or-rectangular matrices over a field-like coefficient domain
// (FieldElement or RatFunc), with the Frobenius twist, Lang-Steinberg image
// and Frobenius conjugation.
#pragma once

#include <concepts>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frobgen/error.hpp"
#include "frobgen/gf.hpp"
#include "frobgen/symfield.hpp"

namespace frobgen {

template <class T>
concept FieldLike = requires(const T& a, const T& b, unsigned e, std::int64_t c) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::convertible_to<T>;
  { a.one_like() } -> std::convertible_to<T>;
  { a.scalar_like(c) } -> std::convertible_to<T>;
  { a.frobenius_power(e) } -> std::convertible_to<T>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

/// q = p^exponent for the characteristic p of the coefficient domain.
struct FrobeniusQ {
  unsigned exponent = 1;
};

template <FieldLike T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  explicit Matrix(const std::vector<std::vector<T>>& rows) {
    if (rows.empty() || rows[0].empty()) throw InvalidArgument("matrix must be non-empty");
    rows_ = rows.size();
    cols_ = rows[0].size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InvalidArgument("ragged matrix rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n, const T& proto) {
    Matrix m(n, n, proto.zero_like());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = proto.one_like();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
    if (cols.empty() || cols[0].empty()) throw InvalidArgument("matrix must be non-empty");
    Matrix m(cols[0].size(), cols.size(), cols[0][0]);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw InvalidArgument("ragged matrix columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InvalidArgument("matrix dimension mismatch in product");
    Matrix r(rows_, o.cols_, data_[0].zero_like());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const T& b = o(k, j);
          if (!b.is_zero()) r(i, j) = r(i, j) + a * b;
        }
      }
    }
    return r;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (v.size() != cols_) throw InvalidArgument("vector length mismatch");
    std::vector<T> r(rows_, data_[0].zero_like());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        if (!(*this)(i, k).is_zero() && !v[k].is_zero()) r[i] = r[i] + (*this)(i, k) * v[k];
      }
    }
    return r;
  }

  Matrix operator+(const Matrix& o) const { return zip(o, [](const T& a, const T& b) { return a + b; }); }
  Matrix operator-(const Matrix& o) const { return zip(o, [](const T& a, const T& b) { return a - b; }); }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix r(cols_, rows_, data_[0]);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    }
    return r;
  }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(data_[0]))>;
    std::vector<std::vector<U>> rows(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      rows[i].reserve(cols_);
      for (std::size_t j = 0; j < cols_; ++j) rows[i].push_back(f((*this)(i, j)));
    }
    return Matrix<U>(rows);
  }

  bool is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const T& x = (*this)(i, j);
        if (i == j ? !(x == x.one_like()) : !x.is_zero()) return false;
      }
    }
    return true;
  }

  /// "[[a, b]; [c, d]]".
  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i > 0) os << "; ";
      os << "[";
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  template <class F>
  Matrix zip(const Matrix& o, F&& f) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix dimension mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f(data_[i], o.data_[i]);
    return r;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <FieldLike T>
T det(Matrix<T> a) {
  if (!a.square()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  T result = a(0, 0).one_like();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return result.zero_like();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      result = -result;
    }
    const T pv = a(col, col);
    result = result * pv;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const T f = a(i, col) / pv;
      for (std::size_t j = col; j < n; ++j) {
        if (!a(col, j).is_zero()) a(i, j) = a(i, j) - f * a(col, j);
      }
    }
  }
  return result;
}

template <FieldLike T>
std::size_t rank(Matrix<T> a) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const T pv = a(r, col);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      const T f = a(i, col) / pv;
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Gauss-Jordan inverse with the first nonzero pivot; throws SingularMatrix.
template <FieldLike T>
Matrix<T> inverse(Matrix<T> a) {
  if (!a.square()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> inv = Matrix<T>::identity(n, a(0, 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw SingularMatrix("matrix is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const T pv = a(col, col);
    if (!(pv == pv.one_like())) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(col, j) = a(col, j) / pv;
        if (!inv(col, j).is_zero()) inv(col, j) = inv(col, j) / pv;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const T f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(i, j) = a(i, j) - f * a(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) = inv(i, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

template <FieldLike T>
Matrix<T> pow(const Matrix<T>& a, std::uint64_t e) {
  if (!a.square()) throw InvalidArgument("power of a non-square matrix");
  Matrix<T> result = Matrix<T>::identity(a.rows(), a(0, 0));
  Matrix<T> base = a;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Entrywise q-th power A^(q).
template <FieldLike T>
Matrix<T> frob_twist(const Matrix<T>& a, FrobeniusQ q) {
  return a.map([&](const T& x) { return x.frobenius_power(q.exponent); });
}

template <FieldLike T>
std::vector<T> frob_twist(const std::vector<T>& v, FrobeniusQ q) {
  std::vector<T> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.frobenius_power(q.exponent));
  return r;
}

/// lambda(U) = U (U^(q))^{-1}.
template <FieldLike T>
Matrix<T> lang_steinberg_image(const Matrix<T>& u, FrobeniusQ q) {
  return u * inverse(frob_twist(u, q));
}

/// U^{-1} A U^(q).
template <FieldLike T>
Matrix<T> frobenius_conjugate(const Matrix<T>& a, const Matrix<T>& u, FrobeniusQ q) {
  return inverse(u) * a * frob_twist(u, q);
}

/// True iff every entry is fixed by the q-power map.
template <FieldLike T>
bool is_frobenius_fixed(const Matrix<T>& u, FrobeniusQ q) {
  return frob_twist(u, q) == u;
}

using FiniteMatrix = Matrix<gf::FieldElement>;
using SymMatrix = Matrix<sym::RatFunc>;

/// Parses "[[s, 2*t]; [t, s]]"; entries use the expression grammar.
SymMatrix parse_matrix(const std::string& text, const sym::Ring& ring);

/// Entries specialized at xi in target; throws DenominatorVanishes.
FiniteMatrix specialize_matrix(const SymMatrix& a, const sym::Assignment& xi, const gf::FieldSpec& target);

/// Entrywise field change along an embedding or identity.
FiniteMatrix lift_matrix(const FiniteMatrix& a, const std::function<gf::FieldElement(const gf::FieldElement&)>& f);

}  // namespace frobgen
