#pragma once

// Dense big-integer matrices and the Smith normal form.

#include <gmpxx.h>

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tlg/error.hpp"

namespace tlg {

using BigInt = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  // Throws DomainError on ragged rows.
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix column(const std::vector<BigInt>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<BigInt> row(std::size_t i) const;
  std::vector<BigInt> col(std::size_t j) const;

  IntMatrix operator*(const IntMatrix& o) const;
  std::vector<BigInt> operator*(const std::vector<BigInt>& v) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  IntMatrix transpose() const;
  // [this | o]
  IntMatrix hconcat(const IntMatrix& o) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  bool is_square() const { return rows_ == cols_; }
  // Exact determinant by fraction-free elimination.
  BigInt determinant() const;

  // `[[a,b],[c,d]]`
  std::string to_string() const;
  static IntMatrix parse(std::string_view text);

  // Product of random elementary operations; determinant +-1.
  static IntMatrix random_unimodular(std::size_t n, std::size_t steps, std::mt19937_64& rng);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  // U * M * V = S with U, V unimodular; Uinv, Vinv their inverses.
  IntMatrix U, S, V, Uinv, Vinv;
  std::size_t rank = 0;
  // Nonzero diagonal entries d_1 | d_2 | ... (all positive).
  std::vector<BigInt> diagonal;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Inverse of a square matrix with determinant +-1; throws DomainError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Basis of the integer kernel {x : M x = 0}, as columns.
IntMatrix integer_kernel(const IntMatrix& m);

}  // namespace tlg
