#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "hfsplice/bitvector.hpp"

namespace hfs::f2la {

using Entry = std::pair<std::size_t, std::size_t>;

// Matrix over GF(2) stored as packed bit rows. Column j is the image of the
// j-th basis vector, so maps compose as ordinary matrix products.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

  static F2Matrix identity(std::size_t n);
  // Throws InputError on an out-of-range or repeated position.
  static F2Matrix from_entries(std::size_t rows, std::size_t cols, std::span<const Entry> entries);
  static F2Matrix from_columns(std::size_t rows, std::span<const BitVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool at(std::size_t r, std::size_t c) const { return data_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }
  void toggle(std::size_t r, std::size_t c) { data_[r].flip(c); }

  const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector column(std::size_t c) const;

  // Sorted (row, col) positions holding 1.
  std::vector<Entry> entries() const;

  bool is_zero() const;
  F2Matrix transpose() const;
  BitVector apply(const BitVector& x) const;

  // XORs `block` into this matrix with its top-left corner at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const F2Matrix& block);
  F2Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;

  F2Matrix& operator+=(const F2Matrix& other);
  friend F2Matrix operator+(F2Matrix lhs, const F2Matrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend F2Matrix operator*(const F2Matrix& lhs, const F2Matrix& rhs);

  bool operator==(const F2Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

// (a ⊗ b)[(i,k), (j,l)] = a[i,j] * b[k,l], row index i * b.rows() + k.
F2Matrix kronecker(const F2Matrix& a, const F2Matrix& b);

std::ostream& operator<<(std::ostream& os, const F2Matrix& m);

}  // namespace hfs::f2la
