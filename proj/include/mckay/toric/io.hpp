#pragma once

#include <string>

#include "mckay/toric/triangulation.hpp"

namespace mckay::toric {

struct TriangulationDocument {
  LatticePair lp;
  Triangulation t;
};

/// JSON text with keys n, generators, vertices ("p/q" strings), simplices and optional coarse.
std::string write_triangulation(const LatticePair& lp, const Triangulation& t);

/// Inverse of write_triangulation. Throws ParseError on malformed JSON, SchemaError with a field
/// path on schema violations.
TriangulationDocument read_triangulation(const std::string& text);

}  // namespace mckay::toric
