#include "hfsplice/levels.hpp"

#include <cstdlib>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "hfsplice/cones.hpp"
#include "hfsplice/error.hpp"
#include "hfsplice/parallel.hpp"

namespace hfs::levels {

using cones::Block;
using cones::ConeComplex;
using cones::LevelComplex;

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Infinity: return "inf";
    case GroupKind::One: return "one";
    case GroupKind::Zero: return "zero";
  }
  return "?";
}

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Phi: return "phi";
    case MapKind::PhiBar: return "phibar";
    case MapKind::Psi: return "psi";
    case MapKind::PsiBar: return "psibar";
  }
  return "?";
}

std::string_view to_string(EtaStrategy strategy) {
  switch (strategy) {
    case EtaStrategy::PhiPsi: return "phi-psi";
    case EtaStrategy::PhiBarPsiBar: return "phibar-psibar";
    case EtaStrategy::Zero: return "zero";
    case EtaStrategy::Explicit: return "explicit";
  }
  return "?";
}

std::optional<EtaStrategy> parse_eta_strategy(std::string_view name) {
  for (auto s : {EtaStrategy::PhiPsi, EtaStrategy::PhiBarPsiBar, EtaStrategy::Zero, EtaStrategy::Explicit})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

const HomologyPresentation& LevelEntry::get(GroupKind kind) const {
  switch (kind) {
    case GroupKind::Infinity: return infinity;
    case GroupKind::One: return one;
    case GroupKind::Zero: return zero;
  }
  return infinity;
}

LevelGroups::LevelGroups(int s_min, std::vector<LevelEntry> entries) : s_min_(s_min), entries_(std::move(entries)) {}

std::size_t LevelGroups::rank(GroupKind kind, int s) const { return in_window(s) ? at(s).get(kind).rank() : 0; }

std::size_t LevelGroups::total(GroupKind kind) const {
  std::size_t t = 0;
  for (const auto& e : entries_) t += e.get(kind).rank();
  return t;
}

std::size_t LevelGroups::offset(GroupKind kind, int s) const {
  std::size_t t = 0;
  for (const auto& e : entries_) {
    if (e.s >= s) break;
    t += e.get(kind).rank();
  }
  return t;
}

RankTable LevelGroups::table(GroupKind kind) const {
  RankTable t;
  for (const auto& e : entries_)
    if (const auto r = e.get(kind).rank(); r > 0) t[e.s] = r;
  return t;
}

std::vector<std::string> LevelGroups::class_labels(GroupKind kind) const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    for (std::size_t k = 0; k < e.get(kind).rank(); ++k)
      out.push_back(std::string(to_string(kind)) + ":s=" + std::to_string(e.s) + ":" + std::to_string(k));
  return out;
}

LevelGroups level_groups(const FilteredKnotComplex& k) {
  const int g = k.genus_bound();
  const int s_min = -g - 1;
  const std::size_t count = static_cast<std::size_t>(2 * g + 3);
  std::vector<LevelEntry> entries(count);
  parallel_for(count, [&](std::size_t i) {
    const int s = s_min + static_cast<int>(i);
    auto& e = entries[i];
    e.s = s;
    e.infinity = f2la::homology(cfk::slice(k, s, cfk::SliceMode::Exactly).differential);
    e.one = f2la::homology(cones::level_complex(k, LevelComplex::C1, s).differential);
    e.zero = f2la::homology(cones::level_complex(k, LevelComplex::C0, s).differential);
  });
  for (const auto* edge : {&entries.front(), &entries.back()}) {
    if (edge->infinity.rank() + edge->one.rank() + edge->zero.rank() != 0) {
      throw InvariantError("level groups of '" + k.name() + "' do not vanish at s = " + std::to_string(edge->s));
    }
  }
  return LevelGroups(s_min, std::move(entries));
}

namespace {

// Inclusion of each block of `src` into the matching block of `dst`.
F2Matrix block_inclusion(const ConeComplex& src, const ConeComplex& dst) {
  F2Matrix m(dst.dim(), src.dim());
  const std::size_t n = src.middle->size();
  auto map_block = [&](const cfk::SliceComplex& from, const cfk::SliceComplex& to, std::size_t from_off,
                       std::size_t to_off) {
    std::vector<std::ptrdiff_t> position(n, -1);
    for (std::size_t j = 0; j < to.members.size(); ++j) position[to.members[j]] = static_cast<std::ptrdiff_t>(j);
    for (std::size_t j = 0; j < from.members.size(); ++j) {
      const auto p = position[from.members[j]];
      if (p < 0) throw InvariantError("block inclusion: source block is not contained in the target block");
      m.set(to_off + static_cast<std::size_t>(p), from_off + j);
    }
  };
  map_block(src.left, dst.left, src.offset(Block::Left), dst.offset(Block::Left));
  m.add_block(dst.offset(Block::Middle), src.offset(Block::Middle), F2Matrix::identity(n));
  map_block(src.right, dst.right, src.offset(Block::Right), dst.offset(Block::Right));
  return m;
}

}  // namespace

ChainMap chain_map(const FilteredKnotComplex& k, MapKind kind, int s) {
  ChainMap out;
  switch (kind) {
    case MapKind::Phi:
    case MapKind::PhiBar: {
      const ConeComplex c1 = cones::level_complex(k, LevelComplex::C1, s);
      const cfk::SliceComplex target = cfk::slice(k, s, cfk::SliceMode::Exactly);
      std::vector<std::ptrdiff_t> position(k.size(), -1);
      for (std::size_t j = 0; j < target.members.size(); ++j)
        position[target.members[j]] = static_cast<std::ptrdiff_t>(j);
      F2Matrix f(target.size(), c1.dim());
      if (kind == MapKind::Phi) {
        // x mod B{>=s+1}
        for (std::size_t j = 0; j < c1.left.size(); ++j) {
          const auto p = position[c1.left.members[j]];
          if (p >= 0) f.set(static_cast<std::size_t>(p), c1.offset(Block::Left) + j);
        }
      } else {
        if (!k.has_symmetry()) throw InvariantError("phibar needs a symmetry witness");
        // J(y mod B{>=-s+1})
        for (std::size_t j = 0; j < c1.right.size(); ++j) {
          const std::size_t y = c1.right.members[j];
          if (k.level(y) != -s) continue;
          const auto p = position[k.symmetry()[y]];
          if (p < 0) throw InvariantError("symmetry witness does not map B{" + std::to_string(-s) + "} into B{" +
                                          std::to_string(s) + "}");
          f.set(static_cast<std::size_t>(p), c1.offset(Block::Right) + j);
        }
      }
      out = {std::move(f), c1.differential, target.differential};
      break;
    }
    case MapKind::Psi:
    case MapKind::PsiBar: {
      const ConeComplex src = cones::level_complex(k, LevelComplex::C0, kind == MapKind::Psi ? s - 1 : s);
      const ConeComplex dst = cones::level_complex(k, LevelComplex::C1, s);
      out = {block_inclusion(src, dst), src.differential, dst.differential};
      break;
    }
  }
  if (!f2la::is_chain_map(out.matrix, out.source_differential, out.target_differential)) {
    throw InvariantError(std::string(to_string(kind)) + "_" + std::to_string(s) + " on '" + k.name() +
                         "' is not a chain map");
  }
  return out;
}

LevelMaps level_maps(const FilteredKnotComplex& k, const LevelGroups& groups, EtaStrategy strategy,
                     const F2Matrix* explicit_eta) {
  LevelMaps m;
  m.eta_strategy = strategy;
  m.dim_infinity = groups.total(GroupKind::Infinity);
  m.dim_one = groups.total(GroupKind::One);
  m.dim_zero = groups.total(GroupKind::Zero);
  m.phi_total = F2Matrix(m.dim_infinity, m.dim_one);
  m.phibar_total = F2Matrix(m.dim_infinity, m.dim_one);
  m.psi_total = F2Matrix(m.dim_one, m.dim_zero);
  m.psibar_total = F2Matrix(m.dim_one, m.dim_zero);

  const std::size_t count = static_cast<std::size_t>(groups.s_max() - groups.s_min() + 1);
  std::vector<F2Matrix> phi(count), phibar(count), psi(count), psibar(count);
  parallel_for(count, [&](std::size_t i) {
    const int s = groups.s_min() + static_cast<int>(i);
    const auto& here = groups.at(s);
    phi[i] = f2la::induced_map(chain_map(k, MapKind::Phi, s).matrix, here.one, here.infinity);
    phibar[i] = f2la::induced_map(chain_map(k, MapKind::PhiBar, s).matrix, here.one, here.infinity);
    psibar[i] = f2la::induced_map(chain_map(k, MapKind::PsiBar, s).matrix, here.zero, here.one);
    if (groups.in_window(s - 1)) {
      psi[i] = f2la::induced_map(chain_map(k, MapKind::Psi, s).matrix, groups.at(s - 1).zero, here.one);
    } else {
      psi[i] = F2Matrix(here.one.rank(), 0);
    }
  });

  for (std::size_t i = 0; i < count; ++i) {
    const int s = groups.s_min() + static_cast<int>(i);
    const std::size_t inf_off = groups.offset(GroupKind::Infinity, s);
    const std::size_t one_off = groups.offset(GroupKind::One, s);
    m.phi_total.add_block(inf_off, one_off, phi[i]);
    m.phibar_total.add_block(inf_off, one_off, phibar[i]);
    m.psibar_total.add_block(one_off, groups.offset(GroupKind::Zero, s), psibar[i]);
    if (groups.in_window(s - 1)) m.psi_total.add_block(one_off, groups.offset(GroupKind::Zero, s - 1), psi[i]);
    m.phi[s] = std::move(phi[i]);
    m.phibar[s] = std::move(phibar[i]);
    m.psi[s] = std::move(psi[i]);
    m.psibar[s] = std::move(psibar[i]);
  }

  switch (strategy) {
    case EtaStrategy::PhiPsi: m.eta_total = m.phi_total * m.psi_total; break;
    case EtaStrategy::PhiBarPsiBar: m.eta_total = m.phibar_total * m.psibar_total; break;
    case EtaStrategy::Zero: m.eta_total = F2Matrix(m.dim_infinity, m.dim_zero); break;
    case EtaStrategy::Explicit:
      if (explicit_eta == nullptr) throw InputError("explicit eta strategy needs a matrix for '" + k.name() + "'");
      if (explicit_eta->rows() != m.dim_infinity || explicit_eta->cols() != m.dim_zero) {
        std::ostringstream msg;
        msg << "explicit eta for '" << k.name() << "' is " << explicit_eta->rows() << "x" << explicit_eta->cols()
            << ", expected " << m.dim_infinity << "x" << m.dim_zero;
        throw InputError(msg.str());
      }
      m.eta_total = *explicit_eta;
      break;
  }
  return m;
}

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_array()) throw InputError(std::string("eta matrix: \"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& v : *it) {
    if (!v.is_string()) throw InputError(std::string("eta matrix: \"") + key + "\" entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

F2Matrix parse_eta_matrix(std::string_view text, const LevelGroups& groups) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("eta matrix: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("eta matrix: top level must be an object");
  const auto rows = string_list(doc, "rows");
  const auto cols = string_list(doc, "cols");
  const auto want_rows = groups.class_labels(GroupKind::Infinity);
  const auto want_cols = groups.class_labels(GroupKind::Zero);
  if (rows != want_rows || cols != want_cols) {
    std::ostringstream msg;
    msg << "eta matrix: labels do not match the level groups (got " << rows.size() << "x" << cols.size()
        << ", expected " << want_rows.size() << "x" << want_cols.size() << ")";
    throw InputError(msg.str());
  }
  auto index = [](const std::vector<std::string>& labels, const std::string& l) -> std::size_t {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return i;
    throw InputError("eta matrix: unknown label '" + l + "'");
  };
  auto it = doc.find("entries");
  if (it == doc.end() || !it->is_array()) throw InputError("eta matrix: \"entries\" must be an array");
  std::vector<f2la::Entry> entries;
  for (const auto& e : *it) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw InputError("eta matrix: entries must be [\"row\", \"col\"] label pairs");
    entries.emplace_back(index(rows, e[0].get<std::string>()), index(cols, e[1].get<std::string>()));
  }
  return F2Matrix::from_entries(rows.size(), cols.size(), entries);
}

std::string serialize_eta_matrix(const F2Matrix& eta, const LevelGroups& groups, const std::string& name) {
  const auto rows = groups.class_labels(GroupKind::Infinity);
  const auto cols = groups.class_labels(GroupKind::Zero);
  json doc = json::object();
  doc["name"] = name;
  doc["rows"] = rows;
  doc["cols"] = cols;
  json entries = json::array();
  for (const auto& [r, c] : eta.entries()) entries.push_back({rows.at(r), cols.at(c)});
  doc["entries"] = entries;
  return doc.dump(2) + "\n";
}

RankTable hfk_surgery(const FilteredKnotComplex& k, int n) {
  if (n < 1) throw InputError("surgery coefficient must be at least 1 (got " + std::to_string(n) + ")");
  const int g = k.genus_bound();
  const int s_min = -g - n;
  const std::size_t count = static_cast<std::size_t>(2 * (g + n) + 1);
  std::vector<std::size_t> ranks(count);
  parallel_for(count, [&](std::size_t i) {
    const int s = s_min + static_cast<int>(i);
    ranks[i] = f2la::homology(cones::surgery_complex(k, n, s).differential).rank();
  });
  RankTable table;
  for (std::size_t i = 0; i < count; ++i) {
    const int s = s_min + static_cast<int>(i);
    if (ranks[i] == 0) continue;
    if (s > g + n - 1 || s < -g) {
      throw InvariantError("surgery complex of '" + k.name() + "' is not acyclic at s = " + std::to_string(s));
    }
    table[s] = ranks[i];
  }
  return table;
}

long long LaurentPolynomial::coefficient(int exponent) const {
  const int i = exponent - min_exponent;
  if (i < 0 || i >= static_cast<int>(coefficients.size())) return 0;
  return coefficients[static_cast<std::size_t>(i)];
}

std::string LaurentPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coefficients.size()) - 1; i >= 0; --i) {
    const long long c = coefficients[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const int e = min_exponent + i;
    const long long mag = std::llabs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0 || mag != 1) os << mag;
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  return os.str();
}

LaurentPolynomial alexander_polynomial(const FilteredKnotComplex& k) {
  if (!k.has_maslov()) throw InputError("alexander polynomial of '" + k.name() + "' needs maslov gradings");
  std::map<int, long long> coeff;
  for (const auto& g : k.generators()) coeff[-g.level] += (*g.maslov % 2 == 0) ? 1 : -1;
  long long at_one = 0;
  for (const auto& [e, c] : coeff) at_one += c;
  const long long sign = at_one < 0 ? -1 : 1;

  LaurentPolynomial p;
  int lo = 0, hi = -1;
  for (const auto& [e, c] : coeff) {
    if (c == 0) continue;
    if (hi < lo) {
      lo = hi = e;
    } else {
      hi = e;
    }
  }
  if (hi < lo) return p;
  p.min_exponent = lo;
  for (int e = lo; e <= hi; ++e) p.coefficients.push_back(sign * (coeff.contains(e) ? coeff[e] : 0));
  return p;
}

}  // namespace hfs::levels
