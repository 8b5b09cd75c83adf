#pragma once

#include "brion/face_complexes.hpp"
#include "brion/polytope.hpp"
#include "brion/series.hpp"
#include "brion/sigma.hpp"

#include "json.hpp"

#include <string>

namespace brion {

using Json = nlohmann::json;

/// Malformed or invalid input document; the message names the location.
class InputError : public UsageError {
  public:
    using UsageError::UsageError;
};

/// {"dimension": n, "vertices": [[...], ...]}, coordinates as integers or
/// "p/q" strings.
Polytope polytope_from_json(const Json& doc);
Polytope polytope_from_text(const std::string& text);
Json polytope_to_json(const Polytope& p);

/// Integers as JSON numbers when they fit in 64 bits, otherwise strings.
Json to_json(const Int& z);
/// Reduced "p/q" / "p" strings.
Json to_json(const Rat& r);
Json to_json(std::span<const Int> v);
Json to_json(std::span<const Rat> v);

Json faces_report(const Polytope& p);
Json subset_report(const FaceSubset& s);
Json gram_report(const GramReport& r);
Json brion_report(const BrionReport& r);
Json decomposition_report(const VertexConeDecomposition& d);

} // namespace brion
