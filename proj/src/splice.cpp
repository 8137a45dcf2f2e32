#include "hfsplice/splice.hpp"

#include <sstream>
#include <utility>

#include "hfsplice/error.hpp"
#include "hfsplice/f2la.hpp"

namespace hfs::splice {

std::string_view to_string(Vertex v) {
  switch (v) {
    case Vertex::InfInf: return "inf-inf";
    case Vertex::InfOne: return "inf-1";
    case Vertex::OneInf: return "1-inf";
    case Vertex::OneOneTop: return "1-1-top";
    case Vertex::ZeroZero: return "0-0";
    case Vertex::OneZero: return "1-0";
    case Vertex::ZeroOne: return "0-1";
    case Vertex::OneOneBottom: return "1-1-bottom";
  }
  return "?";
}

namespace {

std::size_t index(Vertex v) { return static_cast<std::size_t>(v); }

// Selection of the rows belonging to `blocks`, in cube order.
F2Matrix selector(const CubeComplex& cube, std::initializer_list<Vertex> blocks) {
  std::size_t n = 0;
  for (Vertex v : blocks) n += cube.dim(v);
  F2Matrix s(n, cube.dim());
  std::size_t row = 0;
  for (Vertex v : blocks) {
    s.add_block(row, cube.offset(v), F2Matrix::identity(cube.dim(v)));
    row += cube.dim(v);
  }
  return s;
}

void check_square_zero(const CubeComplex& cube) {
  const F2Matrix d2 = cube.differential * cube.differential;
  if (d2.is_zero()) return;
  std::ostringstream msg;
  msg << "cube differential does not square to zero:";
  for (Vertex a : kVertices) {
    for (Vertex c : kVertices) {
      if (d2.block(cube.offset(c), cube.offset(a), cube.dim(c), cube.dim(a)).is_zero()) continue;
      msg << "\n  " << to_string(a) << " => " << to_string(c) << " via";
      for (const auto& e1 : cube.edges) {
        if (e1.from != a) continue;
        for (const auto& e2 : cube.edges)
          if (e2.from == e1.to && e2.to == c)
            msg << " [" << e1.label << " then " << e2.label << " through " << to_string(e1.to) << "]";
      }
    }
  }
  throw InvariantError(msg.str());
}

}  // namespace

CubeComplex build_cube(const levels::LevelMaps& k1, const levels::LevelMaps& k2) {
  CubeComplex cube;
  auto dims_of = [](const levels::LevelMaps& m) {
    return std::array<std::size_t, 3>{m.dim_infinity, m.dim_one, m.dim_zero};
  };
  const auto d1 = dims_of(k1), d2 = dims_of(k2);
  enum { Inf = 0, One = 1, Zero = 2 };
  auto set_dim = [&](Vertex v, int a, int b) { cube.dims[index(v)] = d1[a] * d2[b]; };
  set_dim(Vertex::InfInf, Inf, Inf);
  set_dim(Vertex::InfOne, Inf, One);
  set_dim(Vertex::OneInf, One, Inf);
  set_dim(Vertex::OneOneTop, One, One);
  set_dim(Vertex::ZeroZero, Zero, Zero);
  set_dim(Vertex::OneZero, One, Zero);
  set_dim(Vertex::ZeroOne, Zero, One);
  set_dim(Vertex::OneOneBottom, One, One);
  std::size_t total = 0;
  for (Vertex v : kVertices) {
    cube.offsets[index(v)] = total;
    total += cube.dim(v);
  }

  const auto I = [](std::size_t n) { return F2Matrix::identity(n); };
  using f2la::kronecker;
  cube.edges = {
      {Vertex::OneOneTop, Vertex::OneInf, "I(x)phi2", kronecker(I(d1[One]), k2.phi_total)},
      {Vertex::OneOneTop, Vertex::InfOne, "phi1(x)I", kronecker(k1.phi_total, I(d2[One]))},
      {Vertex::OneInf, Vertex::InfInf, "phi1(x)I", kronecker(k1.phi_total, I(d2[Inf]))},
      {Vertex::InfOne, Vertex::InfInf, "I(x)phi2", kronecker(I(d1[Inf]), k2.phi_total)},
      {Vertex::ZeroZero, Vertex::OneZero, "psi1(x)I", kronecker(k1.psi_total, I(d2[Zero]))},
      {Vertex::ZeroZero, Vertex::ZeroOne, "I(x)psi2", kronecker(I(d1[Zero]), k2.psi_total)},
      {Vertex::OneZero, Vertex::OneOneBottom, "I(x)psi2", kronecker(I(d1[One]), k2.psi_total)},
      {Vertex::ZeroOne, Vertex::OneOneBottom, "psi1(x)I", kronecker(k1.psi_total, I(d2[One]))},
      {Vertex::ZeroZero, Vertex::InfInf, "eta1(x)eta2", kronecker(k1.eta_total, k2.eta_total)},
      {Vertex::OneZero, Vertex::InfOne, "phibar1(x)psibar2", kronecker(k1.phibar_total, k2.psibar_total)},
      {Vertex::ZeroOne, Vertex::OneInf, "psibar1(x)phibar2", kronecker(k1.psibar_total, k2.phibar_total)},
      {Vertex::OneOneTop, Vertex::OneOneBottom, "Id", I(d1[One] * d2[One])},
  };

  cube.differential = F2Matrix(total, total);
  for (const auto& e : cube.edges) {
    if (e.map.rows() != cube.dim(e.to) || e.map.cols() != cube.dim(e.from))
      throw InvariantError("cube edge " + e.label + " has the wrong shape");
    cube.differential.add_block(cube.offset(e.to), cube.offset(e.from), e.map);
  }
  check_square_zero(cube);
  return cube;
}

std::size_t reduced_homology_rank(const CubeComplex& cube) {
  // Gaussian elimination of the identity component y <- x:
  //   D' = D_oo + D_ox D_yo  on the remaining blocks o.
  const F2Matrix so = selector(cube, {Vertex::InfInf, Vertex::InfOne, Vertex::OneInf, Vertex::ZeroZero,
                                      Vertex::OneZero, Vertex::ZeroOne});
  const F2Matrix sx = selector(cube, {Vertex::OneOneTop});
  const F2Matrix sy = selector(cube, {Vertex::OneOneBottom});
  const F2Matrix& d = cube.differential;
  const F2Matrix d_oo = so * d * so.transpose();
  const F2Matrix d_ox = so * d * sx.transpose();
  const F2Matrix d_yo = sy * d * so.transpose();
  const F2Matrix reduced = d_oo + d_ox * d_yo;
  return reduced.rows() - 2 * f2la::rank(reduced);
}

SpliceResult summarize(const CubeComplex& cube, levels::EtaStrategy strategy) {
  SpliceResult r;
  r.eta_strategy = std::string(levels::to_string(strategy));
  r.vertex_dims = cube.dims;
  for (const auto& e : cube.edges)
    r.edge_ranks.push_back({std::string(to_string(e.from)), std::string(to_string(e.to)), e.label, f2la::rank(e.map)});
  r.total_dim = cube.dim();
  r.differential_rank = f2la::rank(cube.differential);
  r.rank = r.total_dim - 2 * r.differential_rank;
  return r;
}

SpliceResult splice(const cfk::FilteredKnotComplex& k1, const cfk::FilteredKnotComplex& k2,
                    const SpliceOptions& options) {
  const auto g1 = levels::level_groups(k1);
  const auto g2 = levels::level_groups(k2);
  const auto m1 = levels::level_maps(k1, g1, options.eta, options.explicit_eta1);
  const auto m2 = levels::level_maps(k2, g2, options.eta, options.explicit_eta2);
  return summarize(build_cube(m1, m2), options.eta);
}

std::size_t splice_rank(const cfk::FilteredKnotComplex& k1, const cfk::FilteredKnotComplex& k2,
                        levels::EtaStrategy eta) {
  return splice(k1, k2, {.eta = eta}).rank;
}

}  // namespace hfs::splice
