#pragma once

// JSON encodings shared by the command line and tests. The byte layout is
// described in docs/formats.md; every emitter here produces 2-space indented
// JSON with a fixed key order, so emit -> parse -> emit is the identity.

#include "octaves/fano_octonions.hpp"
#include "octaves/finite_geometry.hpp"

#include <string>
#include <vector>

namespace octaves::formats {

/// {"format": "octonion-table", "entries": [[...8 ints...] x 8]}
std::string table_to_json(const fano::MultTable& t);
/// Throws std::invalid_argument on malformed input.
fano::MultTable table_from_json(const std::string& text);

/// {"n", "q", "k", "count", "subspaces": [[point strings...], ...]}
std::string subspaces_to_json(int n, int q, int k, const std::vector<geometry::Subspace>& subspaces);

struct SubspaceListing {
    int n = 0;
    int q = 0;
    int k = 0;
    std::vector<std::vector<std::string>> subspaces;
};
SubspaceListing subspaces_from_json(const std::string& text);

/// Re-serializes any JSON document in the canonical layout.
std::string reformat_json(const std::string& text);

} // namespace octaves::formats
