#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hfsplice/cfk.hpp"

namespace hfs::cfk {

// Names of the bundled models, in catalog order.
std::vector<std::string> catalog_names();

// Canonical text of a bundled model; throws InputError for unknown names.
std::string_view catalog_text(std::string_view name);

// Parsed and validated bundled model.
FilteredKnotComplex catalog(std::string_view name);

}  // namespace hfs::cfk
