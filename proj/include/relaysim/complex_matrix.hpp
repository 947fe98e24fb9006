#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace relaysim {

using Complex = std::complex<double>;

/// Thrown when matrix operands have incompatible shapes. Shapes are never
/// silently broadcast.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Dense row-major complex matrix.
///
/// Everything in this simulator is at most (T*N) x (T*N) with N = T = 2, so
/// the implementation favours clarity over blocked or sparse kernels. No
/// decompositions or inverses are provided; the solvers here never need them.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
      throw DimensionError("matrix dimensions must be positive");
    }
  }

  Matrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries)
      : Matrix(rows, cols) {
    if (entries.size() != data_.size()) {
      throw DimensionError("entry count does not match rows*cols");
    }
    std::size_t i = 0;
    for (const Complex& e : entries) data_[i++] = e;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Complex>& entries() const { return data_; }

  Matrix& operator+=(const Matrix& rhs) {
    require_same_shape(rhs, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }

  Matrix& operator-=(const Matrix& rhs) {
    require_same_shape(rhs, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }

  Matrix& operator*=(const Complex& s) {
    for (Complex& e : data_) e *= s;
    return *this;
  }

  /// Column `c` as a rows x 1 matrix.
  Matrix column(std::size_t c) const {
    if (c >= cols_) throw DimensionError("column index out of range");
    Matrix out(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
    return out;
  }

  std::string shape_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_;
    return os.str();
  }

 private:
  void require_same_shape(const Matrix& rhs, const char* op) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw DimensionError(std::string("shape mismatch for '") + op + "': " +
                           shape_string() + " vs " + rhs.shape_string());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

inline Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
inline Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
inline Matrix operator*(Matrix lhs, const Complex& s) { return lhs *= s; }
inline Matrix operator*(const Complex& s, Matrix rhs) { return rhs *= s; }
inline Matrix operator*(Matrix lhs, double s) { return lhs *= Complex{s, 0.0}; }
inline Matrix operator*(double s, Matrix rhs) { return rhs *= Complex{s, 0.0}; }

/// Standard complex matrix product; rejects non-conformable shapes.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul shape mismatch: " + a.shape_string() + " * " +
                         b.shape_string());
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

/// Conjugate transpose. Applying it twice returns the input bit for bit.
inline Matrix hermitian(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(c, r) = std::conj(a(r, c));
    }
  }
  return out;
}

/// Elementwise conjugate (no transpose).
inline Matrix conjugate(const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(r, c) = std::conj(a(r, c));
    }
  }
  return out;
}

inline Complex trace(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("trace requires a square matrix");
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// sqrt of the sum of squared entry magnitudes.
inline double frobenius_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

inline double frobenius_norm_sq(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      sum += std::norm(a(r, c));
    }
  }
  return sum;
}

/// Block-diagonal matrix with `copies` copies of `m` along the diagonal.
/// Off-block entries are exact zeros.
inline Matrix block_diag(const Matrix& m, std::size_t copies) {
  if (copies == 0) throw DimensionError("block_diag requires at least one copy");
  Matrix out(m.rows() * copies, m.cols() * copies);
  for (std::size_t b = 0; b < copies; ++b) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        out(b * m.rows() + r, b * m.cols() + c) = m(r, c);
      }
    }
  }
  return out;
}

/// Column-by-column vectorization into a (rows*cols) x 1 matrix.
inline Matrix stack_columns(const Matrix& m) {
  Matrix out(m.rows() * m.cols(), 1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out(c * m.rows() + r, 0) = m(r, c);
    }
  }
  return out;
}

inline bool is_diagonal(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (r != c && m(r, c) != Complex{0.0, 0.0}) return false;
    }
  }
  return true;
}

inline bool all_finite(const Matrix& m) {
  for (const Complex& e : m.entries()) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  }
  return true;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff shape mismatch");
  }
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
    }
  }
  return m;
}

inline bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

}  // namespace relaysim
