#pragma once

// The cube complex M(K1, K2): eight tensor products of level groups joined by
// twelve maps. Its homology has the rank of HF-hat of the splice of the two
// knot complements.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hfsplice/cfk.hpp"
#include "hfsplice/levels.hpp"

namespace hfs::splice {

using f2la::F2Matrix;

// Vertex (a, b) carries H_a(K1) ⊗ H_b(K2). OneOneTop and OneOneBottom are
// two separate copies of H_1 ⊗ H_1.
enum class Vertex { InfInf, InfOne, OneInf, OneOneTop, ZeroZero, OneZero, ZeroOne, OneOneBottom };

inline constexpr std::array<Vertex, 8> kVertices{Vertex::InfInf,   Vertex::InfOne,  Vertex::OneInf,
                                                 Vertex::OneOneTop, Vertex::ZeroZero, Vertex::OneZero,
                                                 Vertex::ZeroOne,  Vertex::OneOneBottom};

std::string_view to_string(Vertex v);

struct Edge {
  Vertex from;
  Vertex to;
  std::string label;
  F2Matrix map;  // dim(to) x dim(from)
};

struct CubeComplex {
  std::array<std::size_t, 8> dims{};
  std::array<std::size_t, 8> offsets{};
  std::vector<Edge> edges;
  F2Matrix differential;

  std::size_t dim() const { return differential.rows(); }
  std::size_t dim(Vertex v) const { return dims[static_cast<std::size_t>(v)]; }
  std::size_t offset(Vertex v) const { return offsets[static_cast<std::size_t>(v)]; }
};

// Assembles the twelve edges from the two knots' level maps:
//   11t->1inf  I⊗phi2      11t->inf1  phi1⊗I     1inf->infinf phi1⊗I
//   inf1->infinf I⊗phi2    00->10     psi1⊗I     00->01      I⊗psi2
//   10->11b    I⊗psi2      01->11b    psi1⊗I     00->infinf  eta1⊗eta2
//   10->inf1   phibar1⊗psibar2   01->1inf psibar1⊗phibar2   11t->11b Id
// Throws InvariantError naming the failing two-step paths if d_M^2 != 0.
CubeComplex build_cube(const levels::LevelMaps& k1, const levels::LevelMaps& k2);

// Homology rank after cancelling the identity edge 11t -> 11b. Must agree
// with the rank of the unreduced cube.
std::size_t reduced_homology_rank(const CubeComplex& cube);

struct EdgeRank {
  std::string from;
  std::string to;
  std::string label;
  std::size_t rank = 0;
};

struct SpliceResult {
  std::string eta_strategy;
  std::array<std::size_t, 8> vertex_dims{};
  std::vector<EdgeRank> edge_ranks;
  std::size_t total_dim = 0;
  std::size_t differential_rank = 0;
  std::size_t rank = 0;
};

SpliceResult summarize(const CubeComplex& cube, levels::EtaStrategy strategy);

struct SpliceOptions {
  levels::EtaStrategy eta = levels::EtaStrategy::PhiPsi;
  // Required per knot when eta == Explicit.
  const F2Matrix* explicit_eta1 = nullptr;
  const F2Matrix* explicit_eta2 = nullptr;
};

SpliceResult splice(const cfk::FilteredKnotComplex& k1, const cfk::FilteredKnotComplex& k2,
                    const SpliceOptions& options = {});

std::size_t splice_rank(const cfk::FilteredKnotComplex& k1, const cfk::FilteredKnotComplex& k2,
                        levels::EtaStrategy eta = levels::EtaStrategy::PhiPsi);

}  // namespace hfs::splice
