#pragma once

// Exact linear algebra over GF(2): rank, solving, kernels, homology
// presentations and induced maps on homology.
//
// Every routine eliminates with the lowest-index pivot first, so bases
// returned here (and everything built on them) are reproducible run to run.

#include <cstddef>
#include <optional>
#include <vector>

#include "hfsplice/bitvector.hpp"
#include "hfsplice/f2matrix.hpp"

namespace hfs::f2la {

// Semi-echelon basis of a subspace of GF(2)^ambient. Each stored vector
// carries a tag in GF(2)^tag_dim that is tracked linearly through
// elimination, so `express` returns the tag combination of any member.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t ambient, std::size_t tag_dim);

  struct Reduction {
    BitVector residual;
    BitVector tag;
  };

  // Reduces `v` (tagged `tag`) against the stored vectors.
  Reduction reduce(BitVector v, BitVector tag) const;

  // Adds `v` if it is independent; returns false otherwise.
  bool insert(const BitVector& v, const BitVector& tag);

  std::optional<BitVector> express(const BitVector& v) const;
  bool contains(const BitVector& v) const;

  std::size_t size() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t tag_dim() const { return tag_dim_; }

 private:
  std::size_t ambient_;
  std::size_t tag_dim_;
  std::vector<BitVector> rows_;
  std::vector<BitVector> tags_;
  std::vector<std::ptrdiff_t> pivot_row_;
};

std::size_t rank(const F2Matrix& m);

// Some x with m * x = b, or nullopt. Free variables are set to zero.
std::optional<BitVector> solve(const F2Matrix& m, const BitVector& b);

std::vector<BitVector> kernel_basis(const F2Matrix& m);

// Linearly independent columns of m, in column order.
std::vector<BitVector> column_space_basis(const F2Matrix& m);

// True iff the column span of `a` equals the kernel of `b`.
bool image_equals_kernel(const F2Matrix& a, const F2Matrix& b);

bool is_chain_map(const F2Matrix& f, const F2Matrix& d_dom, const F2Matrix& d_cod);

// Homology of a single GF(2) vector space with a square differential.
class HomologyPresentation {
 public:
  HomologyPresentation() : classifier_(0, 0) {}
  HomologyPresentation(F2Matrix differential, std::vector<BitVector> boundary_basis,
                       std::vector<BitVector> cycle_reps);

  std::size_t ambient_dim() const { return differential_.rows(); }
  std::size_t rank() const { return cycle_reps_.size(); }

  const F2Matrix& differential() const { return differential_; }
  const std::vector<BitVector>& cycle_reps() const { return cycle_reps_; }
  const std::vector<BitVector>& boundary_basis() const { return boundary_basis_; }

  // Class coordinates of a cycle; nullopt if `v` is not a cycle.
  std::optional<BitVector> coordinates(const BitVector& v) const;

 private:
  F2Matrix differential_;
  std::vector<BitVector> boundary_basis_;
  std::vector<BitVector> cycle_reps_;
  EchelonBasis classifier_;
};

// Throws InvariantError unless d is square with d*d = 0.
HomologyPresentation homology(const F2Matrix& d);

// Matrix of f_* in the class bases of `dom` and `cod`. Throws InvariantError
// if f is not a chain map.
F2Matrix induced_map(const F2Matrix& f, const HomologyPresentation& dom, const HomologyPresentation& cod);

}  // namespace hfs::f2la
