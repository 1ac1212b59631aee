#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "cayley_k0/common.hpp"

namespace cayley_k0::exact_linalg {

// Dense row-major matrix of arbitrary-precision integers.
class int_matrix {
 public:
  int_matrix() = default;
  int_matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  int_matrix(std::initializer_list<std::initializer_list<long>> rows);

  static int_matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  int_matrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += q * row b  /  col a += q * col b
  void add_row_multiple(std::size_t a, std::size_t b, const Int& q);
  void add_col_multiple(std::size_t a, std::size_t b, const Int& q);
  void negate_col(std::size_t a);

  friend int_matrix operator+(const int_matrix& a, const int_matrix& b);
  friend int_matrix operator-(const int_matrix& a, const int_matrix& b);
  friend int_matrix operator*(const int_matrix& a, const int_matrix& b);
  friend bool operator==(const int_matrix& a, const int_matrix& b) = default;

  // Text format: first line "<rows> <cols>", then one line of decimal
  // entries per row.  '#' comment lines and blank lines are skipped.
  static int_matrix parse(std::istream& in);
  static int_matrix parse(const std::string& text);
  std::string to_text() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& out, const int_matrix& m);

}  // namespace cayley_k0::exact_linalg
