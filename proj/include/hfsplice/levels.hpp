#pragma once

// Level groups H_inf(K,s) = H(B{s}), H_1(K,s) = H(C1(s)), H_0(K,s) = H(C0(s)),
// the chain maps phi, phibar, psi, psibar between them and their matrices on
// homology, the eta-bar strategies, surgery tables and the Alexander
// polynomial.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfsplice/cfk.hpp"
#include "hfsplice/f2la.hpp"

namespace hfs::levels {

using cfk::FilteredKnotComplex;
using f2la::F2Matrix;
using f2la::HomologyPresentation;

enum class GroupKind { Infinity, One, Zero };

std::string_view to_string(GroupKind kind);

// s -> rank, nonzero entries only.
using RankTable = std::map<int, std::size_t>;

struct LevelEntry {
  int s = 0;
  HomologyPresentation infinity;
  HomologyPresentation one;
  HomologyPresentation zero;

  const HomologyPresentation& get(GroupKind kind) const;
};

// Presentations for every s in a window [s_min, s_max] outside of which all
// three groups vanish. Classes of a kind are ordered by s, then by the
// presentation's own order; that is the basis of every total matrix.
class LevelGroups {
 public:
  LevelGroups(int s_min, std::vector<LevelEntry> entries);

  int s_min() const { return s_min_; }
  int s_max() const { return s_min_ + static_cast<int>(entries_.size()) - 1; }
  bool in_window(int s) const { return s >= s_min() && s <= s_max(); }

  const LevelEntry& at(int s) const { return entries_.at(static_cast<std::size_t>(s - s_min_)); }

  std::size_t rank(GroupKind kind, int s) const;
  std::size_t total(GroupKind kind) const;
  // Index of the first class of H_kind(s) among all classes of that kind.
  std::size_t offset(GroupKind kind, int s) const;
  RankTable table(GroupKind kind) const;
  // "<kind>:s=<s>:<k>" for every class, in total order.
  std::vector<std::string> class_labels(GroupKind kind) const;

 private:
  int s_min_;
  std::vector<LevelEntry> entries_;
};

// Throws InvariantError if the groups fail to vanish at the window edges.
LevelGroups level_groups(const FilteredKnotComplex& k);

enum class MapKind { Phi, PhiBar, Psi, PsiBar };

std::string_view to_string(MapKind kind);

struct ChainMap {
  F2Matrix matrix;
  F2Matrix source_differential;
  F2Matrix target_differential;
};

// phi_s, phibar_s : C1(s) -> B{s}
// psi_s           : C0(s-1) -> C1(s)
// psibar_s        : C0(s) -> C1(s)
// Throws InvariantError if the result is not a chain map or the witness J
// does not carry B{-s} into B{s}.
ChainMap chain_map(const FilteredKnotComplex& k, MapKind kind, int s);

enum class EtaStrategy { PhiPsi, PhiBarPsiBar, Zero, Explicit };

std::string_view to_string(EtaStrategy strategy);
std::optional<EtaStrategy> parse_eta_strategy(std::string_view name);

struct LevelMaps {
  std::size_t dim_infinity = 0;
  std::size_t dim_one = 0;
  std::size_t dim_zero = 0;

  // Per-s blocks, keyed by the s of the H_1(s) involved:
  // phi[s], phibar[s]: H_1(s) -> H_inf(s); psi[s]: H_0(s-1) -> H_1(s);
  // psibar[s]: H_0(s) -> H_1(s).
  std::map<int, F2Matrix> phi, phibar, psi, psibar;

  F2Matrix phi_total;     // dim_infinity x dim_one
  F2Matrix phibar_total;  // dim_infinity x dim_one
  F2Matrix psi_total;     // dim_one x dim_zero
  F2Matrix psibar_total;  // dim_one x dim_zero
  F2Matrix eta_total;     // dim_infinity x dim_zero

  EtaStrategy eta_strategy = EtaStrategy::PhiPsi;
};

// `explicit_eta` is required for EtaStrategy::Explicit and must be
// dim_infinity x dim_zero (InputError otherwise).
LevelMaps level_maps(const FilteredKnotComplex& k, const LevelGroups& groups,
                     EtaStrategy strategy = EtaStrategy::PhiPsi, const F2Matrix* explicit_eta = nullptr);

// Explicit eta-bar file:
//   {"name": ..., "rows": [inf labels], "cols": [zero labels],
//    "entries": [["<row label>", "<col label>"], ...]}
// Labels must match class_labels() of `groups` exactly.
F2Matrix parse_eta_matrix(std::string_view text, const LevelGroups& groups);
std::string serialize_eta_matrix(const F2Matrix& eta, const LevelGroups& groups, const std::string& name);

// rank H(surgery_complex(k, n, s)) over the support. Throws InputError for
// n < 1 and InvariantError if the complex fails to vanish where it must.
RankTable hfk_surgery(const FilteredKnotComplex& k, int n);

struct LaurentPolynomial {
  int min_exponent = 0;
  std::vector<long long> coefficients;  // from min_exponent upward

  long long coefficient(int exponent) const;
  std::string to_string() const;
  bool operator==(const LaurentPolynomial&) const = default;
};

// Sum over generators of (-1)^maslov t^A with A = -level, trimmed, with the
// overall sign chosen so the value at t = 1 is positive. Throws InputError
// without maslov gradings.
LaurentPolynomial alexander_polynomial(const FilteredKnotComplex& k);

}  // namespace hfs::levels
