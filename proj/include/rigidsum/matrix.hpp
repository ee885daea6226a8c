#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rigidsum {

// Minimal dense matrix over an arbitrary scalar/entry type.
template <class T>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(size_t r, size_t c, const T& fill = T()) : r_(r), c_(c), a_(r * c, fill) {}

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  T& at(size_t i, size_t j) { return a_[i * c_ + j]; }
  const T& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

  Mat<T> transpose() const {
    Mat<T> t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  template <class F>
  auto map(F f) const -> Mat<decltype(f(std::declval<const T&>()))> {
    Mat<decltype(f(std::declval<const T&>()))> m(r_, c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m.at(i, j) = f(at(i, j));
    return m;
  }

 private:
  size_t r_, c_;
  std::vector<T> a_;
};

// Generic product with caller-supplied add/mul (entry types without a plain
// operator* such as truncated series go through here too).
template <class T, class Add, class Mul>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b, const T& zero, Add add, Mul mul) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat<T> c(a.rows(), b.cols(), zero);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k)
      for (size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) = add(c.at(i, j), mul(a.at(i, k), b.at(k, j)));
  return c;
}

template <class T, class Add>
Mat<T> mat_add(const Mat<T>& a, const Mat<T>& b, Add add) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_add: shape mismatch");
  Mat<T> c = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = add(a.at(i, j), b.at(i, j));
  return c;
}

// Kronecker product with entry blocks mul(a_ij, b_kl) at ((i,k),(j,l)).
template <class T, class Mul>
Mat<T> kronecker(const Mat<T>& a, const Mat<T>& b, const T& zero, Mul mul) {
  Mat<T> c(a.rows() * b.rows(), a.cols() * b.cols(), zero);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          c.at(i * b.rows() + k, j * b.cols() + l) = mul(a.at(i, j), b.at(k, l));
  return c;
}

template <class T>
Mat<T> block_diag(const Mat<T>& a, const Mat<T>& b, const T& zero) {
  Mat<T> c(a.rows() + b.rows(), a.cols() + b.cols(), zero);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

}  // namespace rigidsum
