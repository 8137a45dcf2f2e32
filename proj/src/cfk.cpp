#include "hfsplice/cfk.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "hfsplice/error.hpp"
#include "hfsplice/f2la.hpp"

namespace hfs::cfk {

using nlohmann::json;

namespace {

F2Matrix build_differential(std::size_t n, const std::vector<Arrow>& arrows) {
  F2Matrix d(n, n);
  for (const auto& a : arrows) d.toggle(a.to, a.from);
  return d;
}

}  // namespace

FilteredKnotComplex::FilteredKnotComplex(std::string name, std::vector<Generator> generators,
                                         std::vector<Arrow> arrows, std::vector<std::size_t> symmetry,
                                         Grading grading)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      arrows_(std::move(arrows)),
      symmetry_(std::move(symmetry)),
      grading_(grading) {
  for (const auto& a : arrows_) {
    if (a.from >= generators_.size() || a.to >= generators_.size())
      throw InputError("arrow endpoint out of range in complex '" + name_ + "'");
  }
  if (!symmetry_.empty()) {
    if (symmetry_.size() != generators_.size())
      throw InputError("symmetry witness does not cover every generator of '" + name_ + "'");
    for (std::size_t j : symmetry_)
      if (j >= generators_.size()) throw InputError("symmetry image out of range in '" + name_ + "'");
  }
  differential_ = build_differential(generators_.size(), arrows_);
}

bool FilteredKnotComplex::has_maslov() const {
  return !generators_.empty() &&
         std::all_of(generators_.begin(), generators_.end(), [](const Generator& g) { return g.maslov.has_value(); });
}

int FilteredKnotComplex::genus_bound() const {
  int g = 0;
  for (const auto& gen : generators_) g = std::max(g, std::abs(gen.level));
  return g;
}

std::optional<std::size_t> FilteredKnotComplex::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].id == id) return i;
  return std::nullopt;
}

FilteredKnotComplex FilteredKnotComplex::with_symmetry(std::vector<std::size_t> symmetry) const {
  return FilteredKnotComplex(name_, generators_, arrows_, std::move(symmetry), grading_);
}

bool FilteredKnotComplex::operator==(const FilteredKnotComplex& other) const {
  return name_ == other.name_ && generators_ == other.generators_ && arrows_ == other.arrows_ &&
         symmetry_ == other.symmetry_ && grading_ == other.grading_;
}

std::vector<Diagnostic> check_invariants(const FilteredKnotComplex& k) {
  std::vector<Diagnostic> out;
  const auto& gens = k.generators();
  auto id = [&](std::size_t i) { return "'" + gens[i].id + "'"; };

  for (const auto& a : k.arrows()) {
    if (k.level(a.to) < k.level(a.from)) {
      std::ostringstream msg;
      msg << "arrow " << id(a.from) << " -> " << id(a.to) << " lowers the level (" << k.level(a.from) << " -> "
          << k.level(a.to) << ")";
      out.push_back({"monotonicity", msg.str()});
    }
  }

  const F2Matrix d2 = k.differential() * k.differential();
  for (const auto& [to, from] : d2.entries())
    out.push_back({"d-squared", "d(d(" + id(from) + ")) contains " + id(to)});

  if (std::any_of(gens.begin(), gens.end(), [](const Generator& g) { return g.maslov.has_value(); })) {
    if (!k.has_maslov()) {
      out.push_back({"maslov", "maslov gradings must be given for all generators or none"});
    } else {
      for (const auto& a : k.arrows()) {
        if (*gens[a.to].maslov != *gens[a.from].maslov - 1)
          out.push_back({"maslov", "arrow " + id(a.from) + " -> " + id(a.to) + " does not drop maslov by 1"});
      }
    }
  }

  if (!k.has_symmetry()) {
    if (k.size() > 0) out.push_back({"symmetry", "no symmetry witness supplied"});
  } else {
    const auto& J = k.symmetry();
    std::set<std::pair<std::size_t, std::size_t>> arrow_set;
    for (const auto& a : k.arrows()) arrow_set.emplace(a.from, a.to);
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k.level(J[i]) != -k.level(i)) {
        out.push_back({"symmetry", "J(" + id(i) + ") = " + id(J[i]) + " does not negate the level"});
      }
      if (J[J[i]] != i) out.push_back({"symmetry", "J(J(" + id(i) + ")) != " + id(i)});
    }
    for (const auto& a : k.arrows()) {
      if (k.level(a.from) != k.level(a.to)) continue;
      if (!arrow_set.contains({J[a.from], J[a.to]})) {
        out.push_back({"symmetry", "level-preserving arrow " + id(a.from) + " -> " + id(a.to) + " has no image " +
                                       id(J[a.from]) + " -> " + id(J[a.to])});
      }
    }
  }

  if (d2.is_zero()) {
    const auto h = f2la::homology(k.differential());
    if (h.rank() % 2 == 0) {
      out.push_back({"homology", "rank H(B) = " + std::to_string(h.rank()) + " is even"});
    }
  }
  return out;
}

void validate(const FilteredKnotComplex& k) {
  const auto diags = check_invariants(k);
  if (diags.empty()) return;
  std::ostringstream msg;
  msg << "complex '" << k.name() << "' is invalid:";
  for (const auto& d : diags) msg << "\n  [" << d.invariant << "] " << d.message;
  throw InvariantError(msg.str());
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing \"" + key + "\"");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_string()) throw InputError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

int require_int(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_number_integer()) throw InputError(where + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<std::pair<std::size_t, std::size_t>> parse_pairs(const json& arr, const char* what,
                                                              const std::map<std::string, std::size_t>& ids) {
  if (!arr.is_array()) throw InputError(std::string("\"") + what + "\" must be an array");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw InputError(std::string(what) + ": every entry must be a [\"from\", \"to\"] pair");
    std::pair<std::size_t, std::size_t> idx;
    for (int side = 0; side < 2; ++side) {
      const auto name = p[side].get<std::string>();
      auto it = ids.find(name);
      if (it == ids.end()) throw InputError(std::string(what) + ": unknown generator '" + name + "'");
      (side == 0 ? idx.first : idx.second) = it->second;
    }
    out.push_back(idx);
  }
  return out;
}

std::map<std::string, std::size_t> id_map(const std::vector<Generator>& gens) {
  std::map<std::string, std::size_t> ids;
  for (std::size_t i = 0; i < gens.size(); ++i) ids.emplace(gens[i].id, i);
  return ids;
}

std::vector<std::size_t> symmetry_from_pairs(const json& arr, const std::vector<Generator>& gens) {
  const auto pairs = parse_pairs(arr, "symmetry", id_map(gens));
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> J(gens.size(), kUnset);
  for (const auto& [from, to] : pairs) {
    if (J[from] != kUnset) throw InputError("symmetry: '" + gens[from].id + "' mapped twice");
    J[from] = to;
  }
  for (std::size_t i = 0; i < J.size(); ++i)
    if (J[i] == kUnset) throw InputError("symmetry: '" + gens[i].id + "' has no image");
  return J;
}

}  // namespace

FilteredKnotComplex parse_complex(std::string_view text, const ParseOptions& options) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("top level must be an object");

  const std::string name = require_string(doc, "name", "complex");
  Grading grading = Grading::Level;
  if (auto it = doc.find("grading"); it != doc.end()) {
    if (*it == "level") {
      grading = Grading::Level;
    } else if (*it == "alexander") {
      grading = Grading::Alexander;
    } else {
      throw InputError("\"grading\" must be \"level\" or \"alexander\"");
    }
  }

  const auto& gen_arr = require(doc, "generators", "complex");
  if (!gen_arr.is_array()) throw InputError("\"generators\" must be an array");
  std::vector<Generator> gens;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < gen_arr.size(); ++i) {
    const auto& g = gen_arr[i];
    const std::string where = "generator #" + std::to_string(i);
    if (!g.is_object()) throw InputError(where + " must be an object");
    Generator gen;
    gen.id = require_string(g, "id", where);
    if (!seen.insert(gen.id).second) throw InputError("duplicate generator id '" + gen.id + "'");
    const std::string gwhere = "generator '" + gen.id + "'";
    if (grading == Grading::Level) {
      if (g.contains("alex")) throw InputError(gwhere + ": \"alex\" requires \"grading\": \"alexander\"");
      gen.level = require_int(g, "level", gwhere);
    } else {
      if (g.contains("level")) throw InputError(gwhere + ": \"level\" not allowed with alexander grading");
      gen.level = -require_int(g, "alex", gwhere);
    }
    if (g.contains("maslov")) gen.maslov = require_int(g, "maslov", gwhere);
    gens.push_back(std::move(gen));
  }

  const auto ids = id_map(gens);
  std::vector<Arrow> arrows;
  std::set<std::pair<std::size_t, std::size_t>> arrow_set;
  for (const auto& [from, to] : parse_pairs(require(doc, "differential", "complex"), "differential", ids)) {
    if (!arrow_set.emplace(from, to).second)
      throw InputError("differential: duplicate arrow '" + gens[from].id + "' -> '" + gens[to].id + "'");
    arrows.push_back({from, to});
  }

  std::vector<std::size_t> J;
  if (auto it = doc.find("symmetry"); it != doc.end()) J = symmetry_from_pairs(*it, gens);

  FilteredKnotComplex k(name, std::move(gens), std::move(arrows), std::move(J), grading);
  if (!k.has_symmetry() && options.infer_symmetry && k.size() > 0) {
    auto inferred = infer_symmetry(k);
    if (!inferred) throw InvariantError("complex '" + name + "': symmetry witness could not be inferred");
    k = k.with_symmetry(std::move(*inferred));
  }
  if (options.check_invariants) validate(k);
  return k;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FilteredKnotComplex load_complex(const std::filesystem::path& path, const ParseOptions& options) {
  return parse_complex(read_file(path), options);
}

std::string serialize(const FilteredKnotComplex& k) {
  const auto& gens = k.generators();
  auto quote = [](const std::string& s) { return json(s).dump(); };
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << quote(k.name()) << ",\n";
  os << "  \"grading\": \"" << (k.grading() == Grading::Level ? "level" : "alexander") << "\",\n";

  auto write_list = [&os](const char* key, std::size_t n, auto&& item, bool last) {
    os << "  \"" << key << "\": [";
    if (n == 0) {
      os << "]";
    } else {
      os << "\n";
      for (std::size_t i = 0; i < n; ++i) {
        os << "    ";
        item(i);
        os << (i + 1 < n ? ",\n" : "\n");
      }
      os << "  ]";
    }
    os << (last ? "\n" : ",\n");
  };

  write_list(
      "generators", gens.size(),
      [&](std::size_t i) {
        const auto& g = gens[i];
        os << "{\"id\": " << quote(g.id) << ", ";
        if (k.grading() == Grading::Level) {
          os << "\"level\": " << g.level;
        } else {
          os << "\"alex\": " << -g.level;
        }
        if (g.maslov) os << ", \"maslov\": " << *g.maslov;
        os << "}";
      },
      false);
  write_list(
      "differential", k.arrows().size(),
      [&](std::size_t i) {
        const auto& a = k.arrows()[i];
        os << "[" << quote(gens[a.from].id) << ", " << quote(gens[a.to].id) << "]";
      },
      !k.has_symmetry());
  if (k.has_symmetry()) {
    write_list(
        "symmetry", k.size(),
        [&](std::size_t i) { os << "[" << quote(gens[i].id) << ", " << quote(gens[k.symmetry()[i]].id) << "]"; },
        true);
  }
  os << "}\n";
  return os.str();
}

std::vector<std::size_t> parse_symmetry_witness(std::string_view text, const FilteredKnotComplex& k) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("symmetry witness: top level must be an object");
  return symmetry_from_pairs(require(doc, "symmetry", "symmetry witness"), k.generators());
}

std::optional<std::vector<std::size_t>> infer_symmetry(const FilteredKnotComplex& k) {
  for (const auto& a : k.arrows())
    if (k.level(a.from) == k.level(a.to)) return std::nullopt;
  std::map<int, std::vector<std::size_t>> by_level;
  for (std::size_t i = 0; i < k.size(); ++i) by_level[k.level(i)].push_back(i);
  std::vector<std::size_t> J(k.size());
  for (const auto& [level, members] : by_level) {
    auto it = by_level.find(-level);
    if (it == by_level.end() || it->second.size() != members.size()) return std::nullopt;
    for (std::size_t r = 0; r < members.size(); ++r) J[members[r]] = it->second[r];
  }
  return J;
}

std::string digest(const FilteredKnotComplex& k) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : serialize(k)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

SliceComplex slice(const FilteredKnotComplex& k, int s, SliceMode mode) {
  SliceComplex out;
  out.parent = &k;
  out.s = s;
  out.mode = mode;
  auto keep = [&](int level) {
    switch (mode) {
      case SliceMode::AtLeast: return level >= s;
      case SliceMode::Above: return level > s;
      case SliceMode::Exactly: return level == s;
    }
    return false;
  };
  std::vector<std::ptrdiff_t> position(k.size(), -1);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (keep(k.level(i))) {
      position[i] = static_cast<std::ptrdiff_t>(out.members.size());
      out.members.push_back(i);
    }
  }
  const std::size_t m = out.members.size();
  out.differential = F2Matrix(m, m);
  for (const auto& a : k.arrows()) {
    if (position[a.from] < 0 || position[a.to] < 0) continue;
    out.differential.toggle(static_cast<std::size_t>(position[a.to]), static_cast<std::size_t>(position[a.from]));
  }
  out.inclusion = F2Matrix(k.size(), m);
  out.projection = F2Matrix(m, k.size());
  for (std::size_t j = 0; j < m; ++j) {
    out.inclusion.set(out.members[j], j);
    out.projection.set(j, out.members[j]);
  }
  return out;
}

FilteredKnotComplex random_complex(std::mt19937_64& rng, const RandomComplexOptions& options, std::string name) {
  const int bound = options.level_bound;
  std::uniform_int_distribution<int> level_dist(-bound, bound);
  std::uniform_int_distribution<int> magnitude_dist(1, std::max(bound, 1));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<int> levels;
  std::vector<Arrow> arrows;
  std::vector<std::size_t> J;
  auto add = [&](int level) {
    levels.push_back(level);
    J.push_back(levels.size() - 1);
    return levels.size() - 1;
  };
  auto pair_up = [&](std::size_t a, std::size_t b) {
    J[a] = b;
    J[b] = a;
  };

  add(0);
  const std::size_t target = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(options.max_generators, 1))(rng);
  while (levels.size() + 4 <= target || (levels.size() + 2 <= target && unit(rng) < 0.5)) {
    const double kind = unit(rng);
    if (kind < 0.15) {
      const int a = magnitude_dist(rng);
      pair_up(add(a), add(-a));
      continue;
    }
    int a = level_dist(rng);
    int b = level_dist(rng);
    if (a > b) std::swap(a, b);
    if (a == b && a == 0) {
      const auto x = add(0), y = add(0);
      arrows.push_back({x, y});
      continue;
    }
    if (levels.size() + 4 > target) break;
    const auto x = add(a), y = add(b), xm = add(-b), ym = add(-a);
    arrows.push_back({x, y});
    arrows.push_back({xm, ym});
    if (a == b) {
      // J must carry the level-preserving arrow x->y onto xm->ym.
      pair_up(x, xm);
      pair_up(y, ym);
    } else {
      pair_up(x, ym);
      pair_up(y, xm);
    }
  }

  const std::size_t n = levels.size();
  F2Matrix d(n, n);
  for (const auto& arr : arrows) d.toggle(arr.to, arr.from);

  // Conjugate by elementary maps e_i -> e_i + e_j with level(j) > level(i).
  // These are the identity on every B{s}, so levels, the level-preserving
  // arrows and the witness J stay valid.
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  const std::size_t ops = 2 * n;
  for (std::size_t t = 0; t < ops && n > 1; ++t) {
    const std::size_t i = index(rng), j = index(rng);
    if (levels[j] <= levels[i]) continue;
    F2Matrix e = F2Matrix::identity(n);
    e.set(j, i);
    d = e * d * e;
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;

  std::vector<Generator> gens(n);
  for (std::size_t p = 0; p < n; ++p) gens[p] = {"g" + std::to_string(p), levels[order[p]], std::nullopt};
  std::vector<Arrow> out_arrows;
  for (std::size_t from = 0; from < n; ++from)
    for (std::size_t to = 0; to < n; ++to)
      if (d.at(order[to], order[from])) out_arrows.push_back({from, to});
  std::vector<std::size_t> out_J(n);
  for (std::size_t p = 0; p < n; ++p) out_J[p] = position[J[order[p]]];

  return FilteredKnotComplex(std::move(name), std::move(gens), std::move(out_arrows), std::move(out_J));
}

}  // namespace hfs::cfk
