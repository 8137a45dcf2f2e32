// hfsplice: level groups, surgery tables and splice ranks from filtered knot
// complexes over GF(2).
//
// Exit status: 0 pass, 1 invariant failure, 2 input or usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hfsplice/catalog.hpp"
#include "hfsplice/cfk.hpp"
#include "hfsplice/error.hpp"
#include "hfsplice/levels.hpp"
#include "hfsplice/selftest.hpp"
#include "hfsplice/splice.hpp"

namespace {

using hfs::InputError;
using hfs::InvariantError;
using hfs::cfk::FilteredKnotComplex;
using nlohmann::ordered_json;

enum class Format { Table, Json };

struct InputFlags {
  bool infer_symmetry = false;
  std::string symmetry_file;
};

struct Input {
  std::string source;
  std::string witness;  // "file", "catalog", "inferred" or "replacement:<path>"
  FilteredKnotComplex complex;
};

// Paths win over catalog names so a local file called "trefoil" is honoured.
Input load_input(const std::string& source, const InputFlags& flags, bool strict) {
  std::string text;
  std::string witness = "file";
  if (std::filesystem::exists(source)) {
    text = hfs::cfk::read_file(source);
  } else {
    text = std::string(hfs::cfk::catalog_text(source));
    witness = "catalog";
  }
  auto k = hfs::cfk::parse_complex(text, {.infer_symmetry = false, .check_invariants = false});

  if (!flags.symmetry_file.empty()) {
    k = k.with_symmetry(hfs::cfk::parse_symmetry_witness(hfs::cfk::read_file(flags.symmetry_file), k));
    witness = "replacement:" + flags.symmetry_file;
  } else if (!k.has_symmetry() && flags.infer_symmetry && k.size() > 0) {
    auto inferred = hfs::cfk::infer_symmetry(k);
    if (!inferred)
      throw InvariantError("'" + k.name() + "': symmetry witness could not be inferred (level-preserving arrows present)");
    k = k.with_symmetry(std::move(*inferred));
    witness = "inferred";
  }
  if (strict) hfs::cfk::validate(k);
  return {source, witness, std::move(k)};
}

ordered_json describe(const Input& in) {
  return {{"source", in.source}, {"name", in.complex.name()}, {"digest", hfs::cfk::digest(in.complex)},
          {"witness", in.witness}};
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

void print_header(const Input& in) {
  std::cout << "# " << in.complex.name() << "  digest " << hfs::cfk::digest(in.complex) << "  witness "
            << in.witness << '\n';
}

// ---- validate -------------------------------------------------------------

int cmd_validate(const std::string& file, const InputFlags& flags, Format format) {
  const auto in = load_input(file, flags, false);
  const auto diags = hfs::cfk::check_invariants(in.complex);
  if (format == Format::Json) {
    ordered_json j{{"command", "validate"}, {"input", describe(in)}, {"valid", diags.empty()}};
    j["diagnostics"] = ordered_json::array();
    for (const auto& d : diags) j["diagnostics"].push_back({{"invariant", d.invariant}, {"message", d.message}});
    print_json(j);
  } else {
    print_header(in);
    for (const auto& d : diags) std::cout << "FAIL " << d.invariant << ": " << d.message << '\n';
    std::cout << (diags.empty() ? "valid" : "invalid") << '\n';
  }
  return diags.empty() ? 0 : 1;
}

// ---- groups ---------------------------------------------------------------

int cmd_groups(const std::string& file, const InputFlags& flags, Format format, std::optional<int> only) {
  using hfs::levels::GroupKind;
  const auto in = load_input(file, flags, true);
  const auto groups = hfs::levels::level_groups(in.complex);

  std::vector<int> classes;
  if (only) {
    classes.push_back(*only);
  } else {
    for (int s = groups.s_min(); s <= groups.s_max(); ++s) classes.push_back(s);
  }
  auto rank = [&](GroupKind kind, int s) -> std::size_t { return groups.in_window(s) ? groups.rank(kind, s) : 0; };

  if (format == Format::Json) {
    ordered_json j{{"command", "groups"}, {"input", describe(in)}};
    ordered_json rows = ordered_json::array();
    for (int s : classes)
      rows.push_back({{"s", s},
                      {"reflected", -s},
                      {"infinity", rank(GroupKind::Infinity, s)},
                      {"one", rank(GroupKind::One, s)},
                      {"zero", rank(GroupKind::Zero, s)}});
    j["classes"] = rows;
    j["totals"] = {{"infinity", groups.total(GroupKind::Infinity)},
                   {"one", groups.total(GroupKind::One)},
                   {"zero", groups.total(GroupKind::Zero)}};
    print_json(j);
    return 0;
  }
  print_header(in);
  std::printf("%5s %5s %6s %6s %6s\n", "s", "-s", "H_inf", "H_1", "H_0");
  for (int s : classes)
    std::printf("%5d %5d %6zu %6zu %6zu\n", s, -s, rank(GroupKind::Infinity, s), rank(GroupKind::One, s),
                rank(GroupKind::Zero, s));
  std::printf("%11s %6zu %6zu %6zu\n", "total", groups.total(GroupKind::Infinity), groups.total(GroupKind::One),
              groups.total(GroupKind::Zero));
  return 0;
}

// ---- surgery --------------------------------------------------------------

int cmd_surgery(const std::string& file, const InputFlags& flags, Format format, int n) {
  if (n < 1)
    throw InputError("surgery needs n >= 1; for the n = 0 groups H_0(s) use `hfsplice groups`");
  const auto in = load_input(file, flags, true);
  const auto table = hfs::levels::hfk_surgery(in.complex, n);
  std::size_t total = 0;
  for (const auto& [s, r] : table) total += r;

  if (format == Format::Json) {
    ordered_json j{{"command", "surgery"}, {"input", describe(in)}, {"n", n}};
    ordered_json rows = ordered_json::array();
    for (const auto& [s, r] : table) rows.push_back({{"s", s}, {"reflected", -s}, {"rank", r}});
    j["classes"] = rows;
    j["total"] = total;
    print_json(j);
    return 0;
  }
  print_header(in);
  std::printf("n = %d\n%5s %5s %6s\n", n, "s", "-s", "rank");
  for (const auto& [s, r] : table) std::printf("%5d %5d %6zu\n", s, -s, r);
  std::printf("%11s %6zu\n", "total", total);
  return 0;
}

// ---- splice ---------------------------------------------------------------

struct SpliceFlags {
  std::string eta = "phi-psi";
  std::string eta_file1;
  std::string eta_file2;
  std::string symmetry1;
  std::string symmetry2;
};

int cmd_splice(const std::string& file1, const std::string& file2, const InputFlags& flags, Format format,
               const SpliceFlags& sf) {
  const auto strategy = hfs::levels::parse_eta_strategy(sf.eta);
  if (!strategy) throw InputError("unknown eta strategy '" + sf.eta + "'");
  const bool is_explicit = *strategy == hfs::levels::EtaStrategy::Explicit;
  if (is_explicit != (!sf.eta_file1.empty() && !sf.eta_file2.empty()))
    throw InputError("--eta explicit needs both --eta-file1 and --eta-file2, and they need --eta explicit");

  InputFlags flags1 = flags, flags2 = flags;
  if (!sf.symmetry1.empty()) flags1.symmetry_file = sf.symmetry1;
  if (!sf.symmetry2.empty()) flags2.symmetry_file = sf.symmetry2;
  const auto a = load_input(file1, flags1, true);
  const auto b = load_input(file2, flags2, true);

  std::optional<hfs::f2la::F2Matrix> eta1, eta2;
  hfs::splice::SpliceOptions options{.eta = *strategy};
  if (is_explicit) {
    eta1 = hfs::levels::parse_eta_matrix(hfs::cfk::read_file(sf.eta_file1), hfs::levels::level_groups(a.complex));
    eta2 = hfs::levels::parse_eta_matrix(hfs::cfk::read_file(sf.eta_file2), hfs::levels::level_groups(b.complex));
    options.explicit_eta1 = &*eta1;
    options.explicit_eta2 = &*eta2;
  }
  const auto r = hfs::splice::splice(a.complex, b.complex, options);

  if (format == Format::Json) {
    ordered_json j{{"command", "splice"}, {"inputs", {describe(a), describe(b)}}, {"eta", r.eta_strategy}};
    ordered_json dims = ordered_json::object();
    for (std::size_t i = 0; i < hfs::splice::kVertices.size(); ++i)
      dims[std::string(hfs::splice::to_string(hfs::splice::kVertices[i]))] = r.vertex_dims[i];
    j["vertex_dims"] = dims;
    ordered_json edges = ordered_json::array();
    for (const auto& e : r.edge_ranks)
      edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}, {"rank", e.rank}});
    j["edges"] = edges;
    j["total_dim"] = r.total_dim;
    j["differential_rank"] = r.differential_rank;
    j["rank"] = r.rank;
    print_json(j);
    return 0;
  }
  print_header(a);
  print_header(b);
  std::cout << "eta " << r.eta_strategy << '\n';
  for (std::size_t i = 0; i < hfs::splice::kVertices.size(); ++i)
    std::printf("  %-11s dim %zu\n", std::string(hfs::splice::to_string(hfs::splice::kVertices[i])).c_str(),
                r.vertex_dims[i]);
  for (const auto& e : r.edge_ranks)
    std::printf("  %-11s -> %-11s %-20s rank %zu\n", e.from.c_str(), e.to.c_str(), e.label.c_str(), e.rank);
  std::cout << "dim " << r.total_dim << "  rank d " << r.differential_rank << "\nrank " << r.rank << '\n';
  return 0;
}

// ---- selftest -------------------------------------------------------------

struct SelftestFlags {
  std::vector<std::string> files;
  int random = 0;
  std::uint64_t seed = 0;
  bool pairs = false;
};

int cmd_selftest(const InputFlags& flags, Format format, const SelftestFlags& st) {
  std::vector<FilteredKnotComplex> subjects;
  std::vector<ordered_json> described;
  const bool catalog_mode = st.files.empty() && st.random == 0;
  if (catalog_mode) {
    for (const auto& name : hfs::cfk::catalog_names()) {
      auto in = load_input(name, flags, false);
      described.push_back(describe(in));
      subjects.push_back(std::move(in.complex));
    }
  }
  for (const auto& f : st.files) {
    auto in = load_input(f, flags, false);
    described.push_back(describe(in));
    subjects.push_back(std::move(in.complex));
  }
  if (st.random < 0) throw InputError("--random must be non-negative");
  std::mt19937_64 rng(st.seed);
  for (int i = 0; i < st.random; ++i)
    subjects.push_back(hfs::cfk::random_complex(rng, {}, "random-" + std::to_string(st.seed) + "-" + std::to_string(i)));

  std::vector<hfs::selftest::CheckResult> results;
  for (const auto& k : subjects) {
    auto r = hfs::selftest::check_complex(k);
    results.insert(results.end(), r.begin(), r.end());
  }
  if (catalog_mode || st.pairs) {
    for (std::size_t i = 0; i < subjects.size(); ++i)
      for (std::size_t j = i; j < subjects.size(); ++j) {
        auto r = hfs::selftest::check_pair(subjects[i], subjects[j]);
        results.insert(results.end(), r.begin(), r.end());
      }
  }
  const auto failed = hfs::selftest::failures(results);

  if (format == Format::Json) {
    ordered_json j{{"command", "selftest"}, {"inputs", described}, {"random", st.random}, {"seed", st.seed}};
    ordered_json checks = ordered_json::array();
    for (const auto& r : results)
      checks.push_back({{"subject", r.subject}, {"check", r.check}, {"passed", r.passed}, {"detail", r.detail}});
    j["checks"] = checks;
    j["failures"] = failed;
    print_json(j);
  } else {
    for (const auto& r : results)
      if (!r.passed) std::cout << "FAIL " << r.subject << " " << r.check << ": " << r.detail << '\n';
    std::cout << subjects.size() << " complexes, " << results.size() << " checks, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heegaard Floer splice and surgery calculator over GF(2)"};
  app.require_subcommand(1);

  InputFlags flags;
  Format format = Format::Table;
  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--infer-symmetry", flags.infer_symmetry, "Infer a missing witness J by level matching");
    sub->add_option("--symmetry", flags.symmetry_file, "Replacement witness file")->check(CLI::ExistingFile);
    sub->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats));
  };

  std::string file1, file2;

  auto* validate = app.add_subcommand("validate", "Check every invariant of a complex");
  validate->add_option("file", file1, "Complex file or catalog name")->required();
  add_common(validate);

  std::optional<int> only_class;
  auto* groups = app.add_subcommand("groups", "Per-class ranks of H_inf, H_1 and H_0");
  groups->add_option("file", file1, "Complex file or catalog name")->required();
  groups->add_option("--class", only_class, "Only this class s");
  add_common(groups);

  int n = 1;
  auto* surgery = app.add_subcommand("surgery", "Per-class ranks of the n-surgery complex");
  surgery->add_option("file", file1, "Complex file or catalog name")->required();
  surgery->add_option("-n", n, "Surgery coefficient (>= 1)")->required();
  add_common(surgery);

  SpliceFlags sf;
  auto* splice = app.add_subcommand("splice", "Rank of the splice cube homology");
  splice->add_option("file1", file1, "First complex")->required();
  splice->add_option("file2", file2, "Second complex")->required();
  splice->add_option("--eta", sf.eta, "phi-psi | phibar-psibar | zero | explicit")->capture_default_str();
  splice->add_option("--eta-file1", sf.eta_file1, "Explicit eta-bar for the first complex")->check(CLI::ExistingFile);
  splice->add_option("--eta-file2", sf.eta_file2, "Explicit eta-bar for the second complex")->check(CLI::ExistingFile);
  splice->add_option("--symmetry1", sf.symmetry1, "Replacement witness for the first complex")->check(CLI::ExistingFile);
  splice->add_option("--symmetry2", sf.symmetry2, "Replacement witness for the second complex")->check(CLI::ExistingFile);
  add_common(splice);

  SelftestFlags st;
  auto* selftest = app.add_subcommand("selftest", "Run the invariant battery");
  selftest->add_option("files", st.files, "Complex files or catalog names (default: the catalog)");
  selftest->add_option("--random", st.random, "Number of random complexes");
  selftest->add_option("--seed", st.seed, "Random seed");
  selftest->add_flag("--pairs", st.pairs, "Also check every pair of subjects");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(file1, flags, format);
    if (*groups) return cmd_groups(file1, flags, format, only_class);
    if (*surgery) return cmd_surgery(file1, flags, format, n);
    if (*splice) return cmd_splice(file1, file2, flags, format, sf);
    if (*selftest) return cmd_selftest(flags, format, st);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
