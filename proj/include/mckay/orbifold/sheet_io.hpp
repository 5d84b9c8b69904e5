#pragma once

#include <string>

#include "mckay/orbifold/sheet.hpp"

namespace mckay::orbifold {

/// JSON document with keys name, group_order, classes[], strata[], commuting_pairs[],
/// stated_checks[] and metadata. Value fields are {"value": int, "provenance": tag}.
std::string write_sheet(const GSpaceSheet& sheet);

/// Throws ParseError for malformed JSON (with line and column) and SchemaError with a field path.
GSpaceSheet read_sheet(const std::string& text);

GSpaceSheet load_sheet(const std::string& path);

}  // namespace mckay::orbifold
