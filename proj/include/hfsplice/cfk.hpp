#pragma once

// Filtered knot Floer complexes over GF(2).
//
// Internal convention: every arrow x -> y satisfies level(y) >= level(x), so
// each B{>=s} is a subcomplex. Files written in the usual Alexander
// convention (differential non-increasing in A) are read with
// level = -alexander and written back unchanged.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hfsplice/f2matrix.hpp"

namespace hfs::cfk {

using f2la::F2Matrix;

enum class Grading { Level, Alexander };

struct Generator {
  std::string id;
  int level = 0;
  std::optional<int> maslov;

  bool operator==(const Generator&) const = default;
};

struct Arrow {
  std::size_t from = 0;
  std::size_t to = 0;

  bool operator==(const Arrow&) const = default;
};

// Plain data plus the derived differential. Construction does not validate;
// use check_invariants / validate, or parse_complex which does both.
class FilteredKnotComplex {
 public:
  FilteredKnotComplex(std::string name, std::vector<Generator> generators, std::vector<Arrow> arrows,
                      std::vector<std::size_t> symmetry, Grading grading = Grading::Level);

  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  // J as an index map; empty when no witness was supplied.
  const std::vector<std::size_t>& symmetry() const { return symmetry_; }
  Grading grading() const { return grading_; }

  std::size_t size() const { return generators_.size(); }
  int level(std::size_t i) const { return generators_[i].level; }
  bool has_symmetry() const { return !symmetry_.empty(); }
  bool has_maslov() const;

  // differential().at(to, from) == 1 for each arrow.
  const F2Matrix& differential() const { return differential_; }

  // max |level| over generators (0 for the empty complex).
  int genus_bound() const;

  std::optional<std::size_t> index_of(std::string_view id) const;

  FilteredKnotComplex with_symmetry(std::vector<std::size_t> symmetry) const;

  bool operator==(const FilteredKnotComplex& other) const;

 private:
  std::string name_;
  std::vector<Generator> generators_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> symmetry_;
  Grading grading_;
  F2Matrix differential_;
};

struct Diagnostic {
  std::string invariant;  // short tag, e.g. "monotonicity"
  std::string message;
};

std::vector<Diagnostic> check_invariants(const FilteredKnotComplex& k);

// Throws InvariantError listing every failed invariant.
void validate(const FilteredKnotComplex& k);

struct ParseOptions {
  // Fill a missing witness by matching generators level by level.
  bool infer_symmetry = false;
  // When false the parser returns structurally sound but possibly invalid
  // complexes (used to feed deliberately broken fixtures to the self-test).
  bool check_invariants = true;
};

// Throws InputError on malformed text, InvariantError on failed invariants.
FilteredKnotComplex parse_complex(std::string_view text, const ParseOptions& options = {});
FilteredKnotComplex load_complex(const std::filesystem::path& path, const ParseOptions& options = {});

// Canonical text form; parse_complex(serialize(k)) == k and serializing a
// canonical file reproduces it byte for byte.
std::string serialize(const FilteredKnotComplex& k);

// Replacement witness: {"symmetry": [["from","to"], ...]} against k's ids.
std::vector<std::size_t> parse_symmetry_witness(std::string_view text, const FilteredKnotComplex& k);

// Level-multiplicity matching in listed order; only for complexes without
// level-preserving arrows. nullopt when inference is not possible.
std::optional<std::vector<std::size_t>> infer_symmetry(const FilteredKnotComplex& k);

// FNV-1a 64 of the canonical serialization, as 16 hex digits.
std::string digest(const FilteredKnotComplex& k);

std::string read_file(const std::filesystem::path& path);

enum class SliceMode { AtLeast, Above, Exactly };

// B{>=s}, B{>s} or B{s} with its induced differential. For the first two
// modes `inclusion` is a chain map into the parent; for B{s} only
// level-preserving arrows survive.
struct SliceComplex {
  const FilteredKnotComplex* parent = nullptr;
  int s = 0;
  SliceMode mode = SliceMode::AtLeast;
  std::vector<std::size_t> members;  // parent indices, in parent order
  F2Matrix differential;
  F2Matrix inclusion;   // parent.size() x members.size()
  F2Matrix projection;  // members.size() x parent.size()

  std::size_t size() const { return members.size(); }
};

SliceComplex slice(const FilteredKnotComplex& k, int s, SliceMode mode);

struct RandomComplexOptions {
  std::size_t max_generators = 40;
  int level_bound = 3;
};

// Valid complex by construction: a level-0 survivor, symmetric pairs of
// survivors and cancelling arrows, then a random filtered change of basis
// that is the identity on every B{s}.
FilteredKnotComplex random_complex(std::mt19937_64& rng, const RandomComplexOptions& options = {},
                                   std::string name = "random");

}  // namespace hfs::cfk
