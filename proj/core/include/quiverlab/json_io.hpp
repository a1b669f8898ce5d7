#ifndef QUIVERLAB_JSON_IO_HPP
#define QUIVERLAB_JSON_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "quiverlab/quiver.hpp"

namespace quiverlab {

using Json = nlohmann::ordered_json;

/// Canonical JSON document for a quiver and optional alpha/lambda:
/// {"vertices":[...], "arrows":[{"id","tail","head"}], "alpha":{vid:int},
///  "lambda":{vid:"p/q"}}. Key order and map order follow declaration order,
/// so serialization is deterministic and byte-stable.
Json quiver_to_json(const Quiver& q, const std::optional<IntVec>& alpha = {},
                    const std::optional<RatVec>& lambda = {});

/// serialize = quiver_to_json rendered with 2-space indentation.
std::string serialize(const Quiver& q, const std::optional<IntVec>& alpha = {},
                      const std::optional<RatVec>& lambda = {});

/// Key-order-insensitive inverse of quiver_to_json.
QuiverFile quiver_from_json(const nlohmann::json& doc);

/// Reads either format: JSON documents start with '{', anything else is
/// treated as the text format.
QuiverFile parse_any(std::string_view text);

/// Per-vertex maps rendered in declaration order.
Json vec_to_json(const Quiver& q, const IntVec& v);
Json weights_to_json(const Quiver& q, const RatVec& w);

}  // namespace quiverlab

#endif
