#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace unigen {

using Int = mpz_class;
using Rat = mpq_class;

// Invalid input (caller's fault).
class invalid_input : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated internal invariant (our fault).
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Dense row-major matrix over an exact scalar type.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
  Mat(int rows, int cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != std::size_t(rows) * cols) throw invalid_input("matrix entry count mismatch");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  std::vector<T> row(int i) const {
    return std::vector<T>(a_.begin() + std::size_t(i) * cols_,
                          a_.begin() + std::size_t(i + 1) * cols_);
  }
  void set_row(int i, const std::vector<T>& r) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  // row i += c * row j
  void addmul_row(int i, int j, const T& c) {
    if (c == 0) return;
    for (int k = 0; k < cols_; ++k)
      if ((*this)(j, k) != 0) (*this)(i, k) += c * (*this)(j, k);
  }
  // col i += c * col j
  void addmul_col(int i, int j, const T& c) {
    if (c == 0) return;
    for (int k = 0; k < rows_; ++k)
      if ((*this)(k, j) != 0) (*this)(k, i) += c * (*this)(k, j);
  }
  void negate_row(int i) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
  }
  void scale_row(int i, const T& c) {
    for (int k = 0; k < cols_; ++k)
      if ((*this)(i, k) != 0) (*this)(i, k) *= c;
  }

  bool is_zero() const {
    for (const auto& x : a_) if (x != 0) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using QMat = Mat<Rat>;
using ZMat = Mat<Int>;
using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;

// Serial reference kernel; kept as the oracle for mul().
template <class T>
Mat<T> mul_serial(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw invalid_input("mul: shape mismatch");
  Mat<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

// OpenMP product, row-parallel above a size threshold.
template <class T>
Mat<T> mul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw invalid_input("mul: shape mismatch");
  Mat<T> c(a.rows(), b.cols());
  const long work = long(a.rows()) * a.cols() * b.cols();
#pragma omp parallel for schedule(dynamic) if (work > 65536)
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) { return mul(a, b); }

template <class T>
Mat<T> operator+(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw invalid_input("add: shape mismatch");
  Mat<T> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <class T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw invalid_input("sub: shape mismatch");
  Mat<T> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <class T>
Mat<T> operator-(const Mat<T>& a) {
  Mat<T> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

template <class T>
Mat<T> transpose(const Mat<T>& a) {
  Mat<T> c(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(j, i) = a(i, j);
  return c;
}

template <class T>
Mat<T> scale(const Mat<T>& a, const T& c) {
  Mat<T> r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

// row vector * matrix
template <class T>
std::vector<T> vec_mat(const std::vector<T>& v, const Mat<T>& a) {
  if (int(v.size()) != a.rows()) throw invalid_input("vec_mat: shape mismatch");
  std::vector<T> r(a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) r[j] += v[i] * a(i, j);
  }
  return r;
}

// matrix * column vector
template <class T>
std::vector<T> mat_vec(const Mat<T>& a, const std::vector<T>& v) {
  if (int(v.size()) != a.cols()) throw invalid_input("mat_vec: shape mismatch");
  std::vector<T> r(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && v[j] != 0) r[i] += a(i, j) * v[j];
  return r;
}

// Stack b below a.
template <class T>
Mat<T> vstack(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0 && b.cols() != a.cols()) return a;
  if (a.cols() != b.cols()) throw invalid_input("vstack: shape mismatch");
  Mat<T> c(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

inline QMat to_rational(const ZMat& a) {
  QMat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = Rat(a(i, j));
  return c;
}

inline bool is_integral(const QMat& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j).get_den() != 1) return false;
  return true;
}

inline ZMat to_integral(const QMat& a) {
  ZMat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).get_den() != 1) throw invalid_input("to_integral: non-integer entry");
      c(i, j) = a(i, j).get_num();
    }
  return c;
}

// Parses "p" or "p/q" with q > 0 after canonicalization.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw invalid_input("empty rational literal");
  Rat q;
  try {
    q = Rat(s);
  } catch (const std::invalid_argument&) {
    throw invalid_input("bad rational literal: " + s);
  }
  if (q.get_den() == 0) throw invalid_input("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline std::string to_string(const QMat& a) {
  std::string s = "[";
  for (int i = 0; i < a.rows(); ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < a.cols(); ++j) s += (j ? " " : "") + a(i, j).get_str();
  }
  return s + "]";
}

}  // namespace unigen
