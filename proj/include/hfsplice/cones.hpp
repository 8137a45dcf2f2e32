#pragma once

// Three-block total complexes X -> B <- Y (both arrows inclusions) and
// generic mapping cones of chain maps.

#include <cstddef>

#include "hfsplice/cfk.hpp"
#include "hfsplice/f2matrix.hpp"

namespace hfs::cones {

using cfk::FilteredKnotComplex;
using cfk::SliceComplex;
using f2la::F2Matrix;

enum class Block { Left, Middle, Right };

// Total space X ⊕ B ⊕ Y, in that order, with
//   D(x, m, y) = (dx, x + y + dm, dy).
// Holds a pointer to the knot complex, which must outlive it.
struct ConeComplex {
  SliceComplex left;
  const FilteredKnotComplex* middle = nullptr;
  SliceComplex right;
  F2Matrix differential;

  std::size_t dim() const { return differential.rows(); }
  std::size_t block_size(Block b) const;
  std::size_t offset(Block b) const;
  // dim() x block_size(b) and block_size(b) x dim().
  F2Matrix embed(Block b) const;
  F2Matrix project(Block b) const;
};

// Throws InvariantError if D^2 != 0.
ConeComplex three_block(const FilteredKnotComplex& k, SliceComplex left, SliceComplex right);

enum class LevelComplex { C1, C0 };

// C1(s): X = B{>=s},   Y = B{>=-s}.
// C0(s): X = B{>=s+1}, Y = B{>=-s}.
ConeComplex level_complex(const FilteredKnotComplex& k, LevelComplex which, int s);

// X = B{>s-n}, Y = B{>=-s}; n >= 1, otherwise InputError. For n = 1 this is
// C1(s) block for block.
ConeComplex surgery_complex(const FilteredKnotComplex& k, int n, int s);

// Cone of f: A -> B on A ⊕ B, D(a, b) = (da, f(a) + db).
// Throws InvariantError if f is not a chain map.
F2Matrix mapping_cone(const F2Matrix& f, const F2Matrix& d_source, const F2Matrix& d_target);

}  // namespace hfs::cones
