#include "tropic/linalg.hpp"

#include <stdexcept>

namespace tropic {

bool Vector::is_bottom() const {
  for (const auto& e : entries_)
    if (e.is_finite()) return false;
  return true;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) : rows_(0), cols_(0) {
  for (const auto& r : rows) {
    if (rows_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::push_row(const Vector& v) {
  if (rows_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw std::invalid_argument("Matrix::push_row: width mismatch");
  for (std::size_t c = 0; c < cols_; ++c) data_.push_back(v[c]);
  ++rows_;
}

Vector basis_vector(std::size_t n, std::size_t i) {
  if (i >= n) throw std::invalid_argument("basis_vector: index out of range");
  Vector v(n);
  v[i] = Scalar::one();
  return v;
}

Matrix trop_matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("trop_matmul: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::bottom();
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

Scalar trop_dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("trop_dot: length mismatch");
  Scalar acc = Scalar::bottom();
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

Vector scalar_mul(const Scalar& lambda, const Vector& x) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = lambda * x[i];
  return out;
}

Vector sup(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("sup: length mismatch");
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

bool leq(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("leq: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] <= y[i])) return false;
  return true;
}

bool proportional(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) return false;
  bool have = false;
  Rat shift;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_bottom() != y[i].is_bottom()) return false;
    if (x[i].is_bottom()) continue;
    Rat d = y[i].rat() - x[i].rat();
    if (!have) {
      have = true;
      shift = d;
    } else if (d != shift) {
      return false;
    }
  }
  return true;
}

}  // namespace tropic
