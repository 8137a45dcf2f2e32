#include <doctest.h>

#include <random>
#include <string>

#include "hfsplice/catalog.hpp"
#include "hfsplice/cfk.hpp"
#include "hfsplice/error.hpp"
#include "hfsplice/f2la.hpp"

using namespace hfs::cfk;

namespace {

const char* kTrefoilText = R"({
  "name": "trefoil",
  "generators": [{"id": "u", "level": -1}, {"id": "v", "level": 0}, {"id": "w", "level": 1}],
  "differential": [["u", "v"]],
  "symmetry": [["u", "w"], ["v", "v"], ["w", "u"]]
})";

bool has_diagnostic(const FilteredKnotComplex& k, const std::string& tag) {
  for (const auto& d : check_invariants(k))
    if (d.invariant == tag) return true;
  return false;
}

FilteredKnotComplex unchecked(const std::string& text) { return parse_complex(text, {.check_invariants = false}); }

}  // namespace

TEST_CASE("parse valid complexes") {
  SUBCASE("unknot") {
    const auto k = parse_complex(
        R"({"name": "unknot", "generators": [{"id": "x", "level": 0}], "differential": [], "symmetry": [["x", "x"]]})");
    CHECK(k.size() == 1);
    CHECK(k.level(0) == 0);
    CHECK(k.arrows().empty());
  }
  SUBCASE("trefoil keeps generator order") {
    const auto k = parse_complex(kTrefoilText);
    REQUIRE(k.size() == 3);
    CHECK(k.generators()[0].id == "u");
    CHECK(k.generators()[2].id == "w");
    CHECK(k.differential().at(1, 0));
    CHECK(k.symmetry() == std::vector<std::size_t>{2, 1, 0});
    CHECK(k.genus_bound() == 1);
  }
}

TEST_CASE("format errors") {
  CHECK_THROWS_AS(parse_complex("{not json"), hfs::InputError);
  CHECK_THROWS_AS(parse_complex(R"({"name": "x", "generators": [{"id": "a", "level": 0}, {"id": "a", "level": 0}],
                                   "differential": []})"),
                  hfs::InputError);
  CHECK_THROWS_AS(parse_complex(R"({"name": "x", "generators": [{"id": "a", "level": 0}],
                                   "differential": [["a", "b"]]})"),
                  hfs::InputError);
  CHECK_THROWS_AS(parse_complex(R"({"name": "x", "generators": [{"id": "a", "level": 0}],
                                   "differential": [], "symmetry": [["a", "q"]]})"),
                  hfs::InputError);
  CHECK_THROWS_AS(parse_complex(R"({"name": "x", "generators": [{"id": "a", "level": "zero"}], "differential": []})"),
                  hfs::InputError);
  CHECK_THROWS_AS(parse_complex(R"({"name": "x", "grading": "spin", "generators": [], "differential": []})"),
                  hfs::InputError);
  CHECK_THROWS_AS(parse_complex(R"({"name": "x", "generators": [{"id": "a", "level": 0}],
                                   "differential": [], "symmetry": [["a", "a"], ["a", "a"]]})"),
                  hfs::InputError);
}

TEST_CASE("invariant violations name the offender") {
  SUBCASE("monotonicity") {
    const std::string text = R"({"name": "bad", "generators": [{"id": "u", "level": -1}, {"id": "v", "level": 0},
      {"id": "w", "level": 1}], "differential": [["w", "v"]], "symmetry": [["u", "w"], ["v", "v"], ["w", "u"]]})";
    CHECK_THROWS_AS(parse_complex(text), hfs::InvariantError);
    const auto k = unchecked(text);
    CHECK(has_diagnostic(k, "monotonicity"));
    try {
      parse_complex(text);
    } catch (const hfs::InvariantError& e) {
      CHECK(std::string(e.what()).find("'w' -> 'v'") != std::string::npos);
    }
  }
  SUBCASE("d squared") {
    const auto k = unchecked(R"({"name": "bad", "generators": [{"id": "a", "level": 0}, {"id": "b", "level": 0},
      {"id": "c", "level": 0}], "differential": [["a", "b"], ["b", "c"]],
      "symmetry": [["a", "a"], ["b", "b"], ["c", "c"]]})");
    CHECK(has_diagnostic(k, "d-squared"));
  }
  SUBCASE("maslov step") {
    const auto k = unchecked(R"({"name": "bad", "generators": [{"id": "a", "level": 0, "maslov": 0},
      {"id": "b", "level": 0, "maslov": 0}, {"id": "c", "level": 0, "maslov": 0}],
      "differential": [["a", "b"]], "symmetry": [["a", "a"], ["b", "b"], ["c", "c"]]})");
    CHECK(has_diagnostic(k, "maslov"));
  }
  SUBCASE("symmetry must negate levels") {
    const auto k = unchecked(R"({"name": "bad", "generators": [{"id": "u", "level": -1}, {"id": "v", "level": 0},
      {"id": "w", "level": 1}], "differential": [["u", "v"]], "symmetry": [["u", "u"], ["v", "v"], ["w", "w"]]})");
    CHECK(has_diagnostic(k, "symmetry"));
  }
  SUBCASE("symmetry must be an involution") {
    const auto k = unchecked(R"({"name": "bad", "generators": [{"id": "a", "level": 0}, {"id": "b", "level": 0},
      {"id": "c", "level": 0}], "differential": [], "symmetry": [["a", "b"], ["b", "c"], ["c", "a"]]})");
    CHECK(has_diagnostic(k, "symmetry"));
  }
  SUBCASE("level-preserving arrows must be carried by J") {
    const auto k = unchecked(R"({"name": "bad", "generators": [{"id": "a", "level": 1}, {"id": "b", "level": 1},
      {"id": "c", "level": -1}, {"id": "d", "level": -1}, {"id": "x", "level": 0}],
      "differential": [["a", "b"]], "symmetry": [["a", "c"], ["b", "d"], ["c", "a"], ["d", "b"], ["x", "x"]]})");
    CHECK(has_diagnostic(k, "symmetry"));
  }
  SUBCASE("even homology rank") {
    const auto k = unchecked(R"({"name": "bad", "generators": [{"id": "a", "level": 0}, {"id": "b", "level": 0}],
      "differential": [], "symmetry": [["a", "a"], ["b", "b"]]})");
    CHECK(has_diagnostic(k, "homology"));
  }
  SUBCASE("missing witness") {
    const auto k = unchecked(R"({"name": "bad", "generators": [{"id": "a", "level": 0}], "differential": []})");
    CHECK(has_diagnostic(k, "symmetry"));
  }
}

TEST_CASE("symmetry inference") {
  const std::string no_witness = R"({"name": "trefoil", "generators": [{"id": "u", "level": -1},
    {"id": "v", "level": 0}, {"id": "w", "level": 1}], "differential": [["u", "v"]]})";
  CHECK_THROWS_AS(parse_complex(no_witness), hfs::InvariantError);
  const auto k = parse_complex(no_witness, {.infer_symmetry = true});
  CHECK(k.symmetry() == std::vector<std::size_t>{2, 1, 0});

  SUBCASE("not level-rigid") {
    const std::string rigid_fail = R"({"name": "x", "generators": [{"id": "a", "level": 0},
      {"id": "b", "level": 0}, {"id": "c", "level": 0}], "differential": [["a", "b"]]})";
    CHECK_THROWS_AS(parse_complex(rigid_fail, {.infer_symmetry = true}), hfs::InvariantError);
  }
  SUBCASE("unbalanced levels") {
    const std::string unbalanced = R"({"name": "x", "generators": [{"id": "a", "level": 1}], "differential": []})";
    CHECK_THROWS_AS(parse_complex(unbalanced, {.infer_symmetry = true}), hfs::InvariantError);
  }
  SUBCASE("catalog complexes without level-preserving arrows infer their own witness") {
    for (const auto& name : catalog_names()) {
      const auto cat = catalog(name);
      auto inferred = infer_symmetry(cat);
      REQUIRE(inferred);
      CHECK(check_invariants(cat.with_symmetry(*inferred)).empty());
    }
  }
}

TEST_CASE("alexander grading files") {
  const std::string text = R"({
  "name": "trefoil-a",
  "grading": "alexander",
  "generators": [
    {"id": "u", "alex": 1, "maslov": 0},
    {"id": "v", "alex": 0, "maslov": -1},
    {"id": "w", "alex": -1, "maslov": -2}
  ],
  "differential": [
    ["u", "v"]
  ],
  "symmetry": [
    ["u", "w"],
    ["v", "v"],
    ["w", "u"]
  ]
}
)";
  const auto k = parse_complex(text);
  CHECK(k.grading() == Grading::Alexander);
  CHECK(k.level(0) == -1);
  CHECK(k.level(2) == 1);
  CHECK(serialize(k) == text);
  CHECK_THROWS_AS(parse_complex(R"({"name": "x", "grading": "alexander", "generators": [{"id": "a", "level": 0}],
                                   "differential": []})"),
                  hfs::InputError);
}

TEST_CASE("catalog") {
  const auto unknot = catalog("unknot");
  CHECK(unknot.size() == 1);
  CHECK(unknot.level(0) == 0);

  const auto trefoil = catalog("trefoil");
  REQUIRE(trefoil.size() == 3);
  CHECK(trefoil.generators()[0].maslov == 0);
  CHECK(trefoil.generators()[1].maslov == -1);
  CHECK(trefoil.generators()[2].maslov == -2);
  CHECK(hfs::f2la::homology(trefoil.differential()).rank() == 1);

  const auto figure8 = catalog("figure8");
  CHECK(figure8.size() == 5);
  CHECK(figure8.genus_bound() == 1);

  CHECK_THROWS_AS(catalog("granny"), hfs::InputError);
}

TEST_CASE("serialization round trip is exact on the catalog") {
  for (const auto& name : catalog_names()) {
    const auto k = catalog(name);
    CHECK(serialize(k) == catalog_text(name));
    CHECK(parse_complex(serialize(k)) == k);
  }
}

TEST_CASE("replacement witness") {
  const auto fig8 = catalog("figure8");
  const auto J = parse_symmetry_witness(
      R"({"symmetry": [["a", "e"], ["b", "c"], ["c", "b"], ["x", "x"], ["e", "a"]]})", fig8);
  const auto swapped = fig8.with_symmetry(J);
  CHECK(check_invariants(swapped).empty());
  CHECK(digest(swapped) != digest(fig8));
  CHECK_THROWS_AS(parse_symmetry_witness(R"({"symmetry": [["a", "e"]]})", fig8), hfs::InputError);
}

TEST_CASE("slices") {
  const auto trefoil = catalog("trefoil");
  SUBCASE("B{>=1} of the trefoil") {
    const auto s = slice(trefoil, 1, SliceMode::AtLeast);
    CHECK(s.members == std::vector<std::size_t>{2});
    CHECK(s.differential.is_zero());
  }
  SUBCASE("above the top level is empty") {
    CHECK(slice(trefoil, 2, SliceMode::AtLeast).size() == 0);
    CHECK(slice(catalog("figure8"), 5, SliceMode::AtLeast).size() == 0);
  }
  SUBCASE("B{0} of the trefoil") {
    const auto s = slice(trefoil, 0, SliceMode::Exactly);
    CHECK(s.members == std::vector<std::size_t>{1});
    CHECK(s.differential.is_zero());
    CHECK(hfs::f2la::homology(s.differential).rank() == 1);
  }
}

TEST_CASE("slice properties on random complexes") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto k = random_complex(rng);
    REQUIRE(check_invariants(k).empty());
    CHECK(k.size() <= 40);
    const int g = k.genus_bound();
    CHECK(g <= 3);
    for (int s = -g - 1; s <= g + 1; ++s) {
      const auto ge = slice(k, s, SliceMode::AtLeast);
      const auto gt = slice(k, s, SliceMode::Above);
      const auto eq = slice(k, s, SliceMode::Exactly);
      CHECK(hfs::f2la::is_chain_map(ge.inclusion, ge.differential, k.differential()));
      CHECK(hfs::f2la::is_chain_map(gt.inclusion, gt.differential, k.differential()));
      CHECK((ge.differential * ge.differential).is_zero());
      CHECK(eq.size() == ge.size() - slice(k, s + 1, SliceMode::AtLeast).size());
      CHECK(ge.projection * ge.inclusion == hfs::f2la::F2Matrix::identity(ge.size()));
      const auto down = slice(k, -s, SliceMode::Exactly);
      CHECK(hfs::f2la::homology(eq.differential).rank() == hfs::f2la::homology(down.differential).rank());
    }
    CHECK(parse_complex(serialize(k)) == k);
  }
}

TEST_CASE("random complexes are reproducible") {
  std::mt19937_64 a(7), b(7);
  CHECK(serialize(random_complex(a)) == serialize(random_complex(b)));
}

TEST_CASE("bundled data files round-trip byte for byte") {
  for (const auto& name : catalog_names()) {
    const auto text = read_file(std::string(HFSPLICE_DATA_DIR) + "/" + name + ".json");
    CHECK(text == catalog_text(name));
    CHECK(serialize(parse_complex(text)) == text);
  }
  for (const char* file : {"trefoil_alexander.json", "broken_symmetry.json", "bad_d_squared.json"}) {
    const auto text = read_file(std::string(HFSPLICE_DATA_DIR) + "/" + file);
    CHECK(serialize(parse_complex(text, {.check_invariants = false})) == text);
  }
}
