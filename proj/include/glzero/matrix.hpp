#pragma once
// Dense matrices over an arbitrary commutative ring, sized for the exact
// linear algebra in this project (hundreds of rows/columns, entries that are
// expensive to copy). Row-major storage; no expression templates.

#include <cassert>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "glzero/euclid.hpp"

namespace glzero {

template <class R>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Euclid<R>::zero()) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Euclid<R>::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  R& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const R& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const R& a = (*this)(i, k);
        if (Euclid<R>::is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const R& b = o(k, j);
          if (Euclid<R>::is_zero(b)) continue;
          out(i, j) = out(i, j) + a * b;
        }
      }
    return out;
  }

  Mat operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
  }

  Mat operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
  }

  Mat transpose() const {
    Mat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!Euclid<R>::is_zero(x)) return false;
    return true;
  }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& x : data_)
      if (!Euclid<R>::is_zero(x)) ++n;
    return n;
  }

  // Rows/columns as vectors (used by kernel/section extraction).
  std::vector<R> row(std::size_t i) const {
    std::vector<R> v(cols_, Euclid<R>::zero());
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  std::vector<R> col(std::size_t j) const {
    std::vector<R> v(rows_, Euclid<R>::zero());
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Mat submatrix_rows(const std::vector<std::size_t>& idx) const {
    Mat out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
    return out;
  }

  Mat submatrix_cols(const std::vector<std::size_t>& idx) const {
    Mat out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, idx[j]);
    return out;
  }

  // Horizontal / vertical stacking.
  static Mat hstack(const Mat& a, const Mat& b) {
    assert(a.rows() == b.rows());
    Mat out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
  }
  static Mat vstack(const Mat& a, const Mat& b) {
    assert(a.cols() == b.cols());
    Mat out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << "[ ";
      for (std::size_t j = 0; j < cols_; ++j) os << Euclid<R>::str((*this)(i, j)) << " ";
      os << "]\n";
    }
    return os.str();
  }

 private:
  std::size_t rows_, cols_;
  std::vector<R> data_;
};

// Apply an entrywise ring map (e.g. Laurent -> field by q |-> q0, or
// rationals -> prime field).
template <class S, class R, class F>
Mat<S> map_entries(const Mat<R>& m, F&& f) {
  Mat<S> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  return out;
}

template <class R>
std::vector<R> mat_vec(const Mat<R>& m, const std::vector<R>& v) {
  assert(v.size() == m.cols());
  std::vector<R> out(m.rows(), Euclid<R>::zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (Euclid<R>::is_zero(m(i, j)) || Euclid<R>::is_zero(v[j])) continue;
      out[i] = out[i] + m(i, j) * v[j];
    }
  return out;
}

}  // namespace glzero
