#pragma once

#include <initializer_list>
#include <vector>

#include "tropic/scalar.hpp"

namespace tropic {

/// Dense max-plus vector. Immutable length; entries are exact Scalars.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : entries_(n) {}
  Vector(std::initializer_list<Scalar> xs) : entries_(xs) {}
  explicit Vector(std::vector<Scalar> xs) : entries_(std::move(xs)) {}

  std::size_t size() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  bool is_bottom() const;

  friend bool operator==(const Vector& a, const Vector& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::vector<Scalar> entries_;
};

/// Dense max-plus matrix, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  /// Appends a row; the matrix must be empty or have matching width.
  void push_row(const Vector& v);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// e^i: the canonical basis vector, one() at position i and bottom elsewhere.
Vector basis_vector(std::size_t n, std::size_t i);

/// Tropical matrix product: (AB)_{ij} = max_k (A_{ik} + B_{kj}).
Matrix trop_matmul(const Matrix& a, const Matrix& b);

/// Tropical dot product: max_i (x_i + y_i); bottom when every term is.
Scalar trop_dot(const Vector& x, const Vector& y);

/// Tropical scalar multiple: every entry shifted by lambda.
Vector scalar_mul(const Scalar& lambda, const Vector& x);

/// Componentwise semiring sum (max) of two vectors.
Vector sup(const Vector& x, const Vector& y);

/// Componentwise order x <= y.
bool leq(const Vector& x, const Vector& y);

/// Whether y = lambda * x for some scalar lambda (tropical proportionality).
bool proportional(const Vector& x, const Vector& y);

}  // namespace tropic
