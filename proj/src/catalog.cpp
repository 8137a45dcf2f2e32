#include "hfsplice/catalog.hpp"

#include <array>
#include <utility>

#include "hfsplice/error.hpp"

namespace hfs::cfk {

namespace {

// All models are complexes for knots in S^3, written in the internal level
// convention. The maslov gradings give the Alexander polynomial as the
// graded Euler characteristic.
constexpr std::string_view kUnknot = R"({
  "name": "unknot",
  "grading": "level",
  "generators": [
    {"id": "x", "level": 0, "maslov": 0}
  ],
  "differential": [],
  "symmetry": [
    ["x", "x"]
  ]
}
)";

constexpr std::string_view kTrefoil = R"({
  "name": "trefoil",
  "grading": "level",
  "generators": [
    {"id": "u", "level": -1, "maslov": 0},
    {"id": "v", "level": 0, "maslov": -1},
    {"id": "w", "level": 1, "maslov": -2}
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

// Hat part of the usual square-plus-isolated model: the two vertical
// arrows of the square and the isolated generator x.
constexpr std::string_view kFigure8 = R"({
  "name": "figure8",
  "grading": "level",
  "generators": [
    {"id": "a", "level": -1, "maslov": 1},
    {"id": "b", "level": 0, "maslov": 0},
    {"id": "c", "level": 0, "maslov": 0},
    {"id": "x", "level": 0, "maslov": 0},
    {"id": "e", "level": 1, "maslov": -1}
  ],
  "differential": [
    ["a", "c"],
    ["b", "e"]
  ],
  "symmetry": [
    ["a", "e"],
    ["b", "b"],
    ["c", "c"],
    ["x", "x"],
    ["e", "a"]
  ]
}
)";

constexpr std::string_view kTorus25 = R"({
  "name": "torus_2_5",
  "grading": "level",
  "generators": [
    {"id": "a", "level": -2, "maslov": 0},
    {"id": "b", "level": -1, "maslov": -1},
    {"id": "c", "level": 0, "maslov": -2},
    {"id": "d", "level": 1, "maslov": -3},
    {"id": "e", "level": 2, "maslov": -4}
  ],
  "differential": [
    ["a", "b"],
    ["c", "d"]
  ],
  "symmetry": [
    ["a", "e"],
    ["b", "d"],
    ["c", "c"],
    ["d", "b"],
    ["e", "a"]
  ]
}
)";

constexpr std::array<std::pair<std::string_view, std::string_view>, 4> kCatalog{{
    {"unknot", kUnknot},
    {"trefoil", kTrefoil},
    {"figure8", kFigure8},
    {"torus_2_5", kTorus25},
}};

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : kCatalog) out.emplace_back(name);
  return out;
}

std::string_view catalog_text(std::string_view name) {
  for (const auto& [n, text] : kCatalog)
    if (n == name) return text;
  throw InputError("unknown catalog entry '" + std::string(name) + "'");
}

FilteredKnotComplex catalog(std::string_view name) { return parse_complex(catalog_text(name)); }

}  // namespace hfs::cfk
