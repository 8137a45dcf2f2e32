#include "hfsplice/cones.hpp"

#include <string>

#include "hfsplice/error.hpp"
#include "hfsplice/f2la.hpp"

namespace hfs::cones {

std::size_t ConeComplex::block_size(Block b) const {
  switch (b) {
    case Block::Left: return left.size();
    case Block::Middle: return middle->size();
    case Block::Right: return right.size();
  }
  return 0;
}

std::size_t ConeComplex::offset(Block b) const {
  switch (b) {
    case Block::Left: return 0;
    case Block::Middle: return left.size();
    case Block::Right: return left.size() + middle->size();
  }
  return 0;
}

F2Matrix ConeComplex::embed(Block b) const {
  F2Matrix e(dim(), block_size(b));
  e.add_block(offset(b), 0, F2Matrix::identity(block_size(b)));
  return e;
}

F2Matrix ConeComplex::project(Block b) const {
  F2Matrix p(block_size(b), dim());
  p.add_block(0, offset(b), F2Matrix::identity(block_size(b)));
  return p;
}

ConeComplex three_block(const FilteredKnotComplex& k, SliceComplex left, SliceComplex right) {
  ConeComplex c;
  c.middle = &k;
  c.left = std::move(left);
  c.right = std::move(right);
  const std::size_t nx = c.left.size(), nb = k.size(), ny = c.right.size();
  c.differential = F2Matrix(nx + nb + ny, nx + nb + ny);
  c.differential.add_block(0, 0, c.left.differential);
  c.differential.add_block(nx, 0, c.left.inclusion);
  c.differential.add_block(nx, nx, k.differential());
  c.differential.add_block(nx, nx + nb, c.right.inclusion);
  c.differential.add_block(nx + nb, nx + nb, c.right.differential);
  if (!(c.differential * c.differential).is_zero())
    throw InvariantError("cone over '" + k.name() + "': total differential does not square to zero");
  return c;
}

ConeComplex level_complex(const FilteredKnotComplex& k, LevelComplex which, int s) {
  const int left_from = which == LevelComplex::C1 ? s : s + 1;
  return three_block(k, cfk::slice(k, left_from, cfk::SliceMode::AtLeast), cfk::slice(k, -s, cfk::SliceMode::AtLeast));
}

ConeComplex surgery_complex(const FilteredKnotComplex& k, int n, int s) {
  if (n < 1) throw InputError("surgery coefficient must be at least 1 (got " + std::to_string(n) + ")");
  return three_block(k, cfk::slice(k, s - n, cfk::SliceMode::Above), cfk::slice(k, -s, cfk::SliceMode::AtLeast));
}

F2Matrix mapping_cone(const F2Matrix& f, const F2Matrix& d_source, const F2Matrix& d_target) {
  if (!f2la::is_chain_map(f, d_source, d_target)) throw InvariantError("mapping_cone: not a chain map");
  const std::size_t na = d_source.rows(), nb = d_target.rows();
  F2Matrix d(na + nb, na + nb);
  d.add_block(0, 0, d_source);
  d.add_block(na, 0, f);
  d.add_block(na, na, d_target);
  return d;
}

}  // namespace hfs::cones
