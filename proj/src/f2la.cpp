#include "hfsplice/f2la.hpp"

#include <sstream>
#include <utility>

#include "hfsplice/error.hpp"

namespace hfs::f2la {

EchelonBasis::EchelonBasis(std::size_t ambient, std::size_t tag_dim)
    : ambient_(ambient), tag_dim_(tag_dim), pivot_row_(ambient, -1) {}

EchelonBasis::Reduction EchelonBasis::reduce(BitVector v, BitVector tag) const {
  // Each stored row has its pivot as lowest set bit, so xoring it in clears
  // that bit and only touches higher ones.
  while (auto p = v.first()) {
    const auto row = pivot_row_[*p];
    if (row < 0) break;
    v ^= rows_[static_cast<std::size_t>(row)];
    tag ^= tags_[static_cast<std::size_t>(row)];
  }
  return {std::move(v), std::move(tag)};
}

bool EchelonBasis::insert(const BitVector& v, const BitVector& tag) {
  auto [residual, reduced_tag] = reduce(v, tag);
  const auto p = residual.first();
  if (!p) return false;
  pivot_row_[*p] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(residual));
  tags_.push_back(std::move(reduced_tag));
  return true;
}

std::optional<BitVector> EchelonBasis::express(const BitVector& v) const {
  // reduce() subtracts stored rows; over GF(2) the accumulated tag is
  // exactly the combination that reproduces v.
  auto [residual, tag] = reduce(v, BitVector(tag_dim_));
  if (residual.any()) return std::nullopt;
  return std::move(tag);
}

bool EchelonBasis::contains(const BitVector& v) const {
  return reduce(v, BitVector(tag_dim_)).residual.none();
}

std::size_t rank(const F2Matrix& m) {
  EchelonBasis basis(m.cols(), 0);
  const BitVector no_tag(0);
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (basis.insert(m.row(i), no_tag)) ++r;
  return r;
}

std::optional<BitVector> solve(const F2Matrix& m, const BitVector& b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
  const F2Matrix columns = m.transpose();
  EchelonBasis basis(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) basis.insert(columns.row(j), BitVector::unit(m.cols(), j));
  return basis.express(b);
}

namespace {

struct ColumnSplit {
  std::vector<BitVector> independent_columns;
  std::vector<BitVector> kernel;
};

// One left-to-right pass over the columns: independent columns span the
// image, and every dependent column yields one kernel vector.
ColumnSplit split_columns(const F2Matrix& m) {
  const F2Matrix columns = m.transpose();
  EchelonBasis basis(m.rows(), m.cols());
  ColumnSplit out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto [residual, tag] = basis.reduce(columns.row(j), BitVector::unit(m.cols(), j));
    if (residual.none()) {
      out.kernel.push_back(std::move(tag));
    } else {
      basis.insert(columns.row(j), BitVector::unit(m.cols(), j));
      out.independent_columns.push_back(columns.row(j));
    }
  }
  return out;
}

}  // namespace

std::vector<BitVector> kernel_basis(const F2Matrix& m) { return split_columns(m).kernel; }

std::vector<BitVector> column_space_basis(const F2Matrix& m) { return split_columns(m).independent_columns; }

bool image_equals_kernel(const F2Matrix& a, const F2Matrix& b) {
  if (a.rows() != b.cols()) throw InvariantError("image_equals_kernel: shape mismatch");
  if (!(b * a).is_zero()) return false;
  return rank(a) + rank(b) == b.cols();
}

bool is_chain_map(const F2Matrix& f, const F2Matrix& d_dom, const F2Matrix& d_cod) {
  if (f.cols() != d_dom.rows() || f.rows() != d_cod.rows()) return false;
  return f * d_dom == d_cod * f;
}

HomologyPresentation::HomologyPresentation(F2Matrix differential, std::vector<BitVector> boundary_basis,
                                           std::vector<BitVector> cycle_reps)
    : differential_(std::move(differential)),
      boundary_basis_(std::move(boundary_basis)),
      cycle_reps_(std::move(cycle_reps)),
      classifier_(differential_.rows(), cycle_reps_.size()) {
  const BitVector zero_tag(cycle_reps_.size());
  for (const auto& b : boundary_basis_) {
    if (!classifier_.insert(b, zero_tag)) throw InvariantError("homology: boundary basis is dependent");
  }
  for (std::size_t i = 0; i < cycle_reps_.size(); ++i) {
    if (differential_.apply(cycle_reps_[i]).any()) throw InvariantError("homology: representative is not a cycle");
    if (!classifier_.insert(cycle_reps_[i], BitVector::unit(cycle_reps_.size(), i)))
      throw InvariantError("homology: representatives dependent modulo boundaries");
  }
}

std::optional<BitVector> HomologyPresentation::coordinates(const BitVector& v) const {
  if (differential_.apply(v).any()) return std::nullopt;
  return classifier_.express(v);
}

HomologyPresentation homology(const F2Matrix& d) {
  if (d.rows() != d.cols()) throw InvariantError("homology: differential is not square");
  if (!(d * d).is_zero()) throw InvariantError("homology: differential does not square to zero");

  auto [boundaries, kernel] = split_columns(d);
  EchelonBasis span(d.rows(), 0);
  const BitVector no_tag(0);
  for (const auto& b : boundaries) span.insert(b, no_tag);

  std::vector<BitVector> reps;
  for (auto& k : kernel)
    if (span.insert(k, no_tag)) reps.push_back(std::move(k));

  if (reps.size() + 2 * boundaries.size() != d.rows()) {
    std::ostringstream msg;
    msg << "homology: rank bookkeeping failed (" << d.rows() << " != " << reps.size() << " + 2*"
        << boundaries.size() << ")";
    throw InvariantError(msg.str());
  }
  return HomologyPresentation(d, std::move(boundaries), std::move(reps));
}

F2Matrix induced_map(const F2Matrix& f, const HomologyPresentation& dom, const HomologyPresentation& cod) {
  if (!is_chain_map(f, dom.differential(), cod.differential()))
    throw InvariantError("induced_map: not a chain map");
  F2Matrix out(cod.rank(), dom.rank());
  for (std::size_t j = 0; j < dom.rank(); ++j) {
    auto coords = cod.coordinates(f.apply(dom.cycle_reps()[j]));
    if (!coords) throw InvariantError("induced_map: image of a cycle is not a cycle");
    for (std::size_t i : coords->ones()) out.set(i, j);
  }
  return out;
}

}  // namespace hfs::f2la
