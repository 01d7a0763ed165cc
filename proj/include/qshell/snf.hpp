#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace qshell {

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

struct SnfResult {
  std::size_t rank = 0;
  // d_1 | d_2 | ... | d_rank, all positive.
  std::vector<mpz_class> invariant_factors;
};

/// Smith normal form by row/column reduction pivoting on the entry of least
/// absolute value.
SnfResult smith_normal_form(const IntMatrix& m);

}  // namespace qshell
