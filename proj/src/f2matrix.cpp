#include "hfsplice/f2matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hfsplice/error.hpp"

namespace hfs::f2la {

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

F2Matrix F2Matrix::from_entries(std::size_t rows, std::size_t cols, std::span<const Entry> entries) {
  F2Matrix m(rows, cols);
  for (const auto& [r, c] : entries) {
    if (r >= rows || c >= cols) {
      std::ostringstream msg;
      msg << "matrix entry (" << r << ", " << c << ") outside " << rows << "x" << cols;
      throw InputError(msg.str());
    }
    if (m.at(r, c)) {
      std::ostringstream msg;
      msg << "duplicate matrix entry (" << r << ", " << c << ")";
      throw InputError(msg.str());
    }
    m.set(r, c);
  }
  return m;
}

F2Matrix F2Matrix::from_columns(std::size_t rows, std::span<const BitVector> columns) {
  F2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r : columns[c].ones()) m.set(r, c);
  }
  return m;
}

BitVector F2Matrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r].test(c)) v.set(r);
  return v;
}

std::vector<Entry> F2Matrix::entries() const {
  std::vector<Entry> out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c : data_[r].ones()) out.emplace_back(r, c);
  return out;
}

bool F2Matrix::is_zero() const {
  return std::none_of(data_.begin(), data_.end(), [](const BitVector& row) { return row.any(); });
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c : data_[r].ones()) t.set(c, r);
  return t;
}

BitVector F2Matrix::apply(const BitVector& x) const {
  BitVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r].dot(x)) y.set(r);
  return y;
}

void F2Matrix::add_block(std::size_t r0, std::size_t c0, const F2Matrix& block) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c : block.row(r).ones()) toggle(r0 + r, c0 + c);
}

F2Matrix F2Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  F2Matrix out(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c)
      if (at(r0 + r, c0 + c)) out.set(r, c);
  return out;
}

F2Matrix& F2Matrix::operator+=(const F2Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvariantError("matrix sum: shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r) data_[r] ^= other.data_[r];
  return *this;
}

F2Matrix operator*(const F2Matrix& lhs, const F2Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw InvariantError("matrix product: shape mismatch");
  F2Matrix out(lhs.rows_, rhs.cols_);
  for (std::size_t r = 0; r < lhs.rows_; ++r)
    for (std::size_t k : lhs.data_[r].ones()) out.data_[r] ^= rhs.data_[k];
  return out;
}

F2Matrix kronecker(const F2Matrix& a, const F2Matrix& b) {
  F2Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (const auto& [i, j] : a.entries()) out.add_block(i * b.rows(), j * b.cols(), b);
  return out;
}

std::ostream& operator<<(std::ostream& os, const F2Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (m.at(r, c) ? '1' : '0');
    os << '\n';
  }
  return os;
}

}  // namespace hfs::f2la
