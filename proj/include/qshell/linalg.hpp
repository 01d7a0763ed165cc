#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "qshell/field.hpp"

namespace qshell {

/// A vector of F_q^n as field-element reprs.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : e_(n, 0) {}
  explicit Vector(std::vector<Elem> entries) : e_(std::move(entries)) {}
  Vector(std::initializer_list<int> entries);

  std::size_t size() const { return e_.size(); }
  Elem operator[](std::size_t i) const { return e_[i]; }
  Elem& operator[](std::size_t i) { return e_[i]; }
  std::span<const Elem> entries() const { return e_; }
  bool is_zero() const;

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  friend bool operator==(const Vector&, const Vector&) = default;
  // Lexicographic on reprs, first coordinate most significant.
  friend std::strong_ordering operator<=>(const Vector& a, const Vector& b) { return a.e_ <=> b.e_; }

 private:
  std::vector<Elem> e_;
};

/// Dense row-major matrix over GF(q).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
  static Matrix from_rows(std::initializer_list<Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  const std::vector<Elem>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// A subspace of F_q^n held as its unique reduced row echelon basis, so two
/// Subspace values are equal exactly when the subspaces are.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(int n) { return Subspace(n, 0, {}); }
  // The rows must already form a reduced row echelon matrix of full rank.
  static Subspace from_reduced_rows(int n, std::vector<Elem> rows);

  int ambient_dim() const { return n_; }
  int dim() const { return r_; }
  bool is_zero() const { return r_ == 0; }
  std::span<const Elem> row(int i) const { return {rows_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)}; }
  Vector row_vector(int i) const;
  Matrix basis() const;
  const std::vector<Elem>& data() const { return rows_; }
  // 0-based pivot column of each row, strictly increasing.
  std::vector<int> pivots() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(int n, int r, std::vector<Elem> rows) : n_(n), r_(r), rows_(std::move(rows)) {}

  int n_ = 0;
  int r_ = 0;
  std::vector<Elem> rows_;
};

struct RrefResult {
  Matrix reduced;  // same shape as the input; zero rows at the bottom
  int rank = 0;
  std::vector<int> pivots;
};

/// F_q^n together with the linear algebra on it. All operations are pure.
class Ambient {
 public:
  Ambient(FieldPtr field, int n);
  Ambient(int q, int n) : Ambient(Field::make(q), n) {}

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int q() const { return field_->order(); }
  int n() const { return n_; }

  bool operator==(const Ambient& o) const { return n_ == o.n_ && field_->same_as(*o.field_); }

  RrefResult rref(const Matrix& m) const;

  Subspace span(std::span<const Vector> vectors) const;
  Subspace span(const Matrix& generators) const;
  Subspace zero() const { return Subspace::zero(n_); }
  Subspace full() const;

  bool contains(const Subspace& u, const Vector& v) const;
  bool contains(const Subspace& u, std::span<const Elem> v) const;
  bool is_subspace_of(const Subspace& v, const Subspace& u) const;
  Subspace sum(const Subspace& u, const Subspace& v) const;
  Subspace intersect(const Subspace& u, const Subspace& v) const;
  // W = U (+) V: U + V = W and U n V = 0.
  bool is_direct_sum(const Subspace& w, const Subspace& u, const Subspace& v) const;
  Subspace add_vector(const Subspace& u, const Vector& x) const;

  // All q^dim vectors of U, ordered by coefficient tuple.
  std::vector<Vector> elements(const Subspace& u) const;
  // Coordinates c (length dim U) -> sum c_i * row_i.
  Vector combine(const Subspace& u, std::span<const Elem> coeffs) const;

  bool is_rref(const Matrix& m) const;

  void check(const Subspace& u) const;
  void check(const Vector& v) const;

 private:
  FieldPtr field_;
  int n_;
};

}  // namespace qshell

template <>
struct std::hash<qshell::Subspace> {
  std::size_t operator()(const qshell::Subspace& s) const noexcept {
    std::size_t h = static_cast<std::size_t>(s.ambient_dim()) * 1315423911u + static_cast<std::size_t>(s.dim());
    for (auto e : s.data()) h = h * 1099511628211ull + e + 0x9e3779b97f4a7c15ull;
    return h;
  }
};

template <>
struct std::hash<qshell::Vector> {
  std::size_t operator()(const qshell::Vector& v) const noexcept {
    std::size_t h = v.size();
    for (auto e : v) h = h * 1099511628211ull + e + 0x9e3779b97f4a7c15ull;
    return h;
  }
};
