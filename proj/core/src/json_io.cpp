#include "quiverlab/json_io.hpp"

#include <cctype>

#include "quiverlab/dsl.hpp"
#include "quiverlab/errors.hpp"

namespace quiverlab {

Json vec_to_json(const Quiver& q, const IntVec& v) {
  Json m = Json::object();
  for (int i = 0; i < q.vertex_count(); ++i) m[q.vertex_id(i)] = to_long(v[i]);
  return m;
}

Json weights_to_json(const Quiver& q, const RatVec& w) {
  Json m = Json::object();
  for (int i = 0; i < q.vertex_count(); ++i) m[q.vertex_id(i)] = to_string(w[i]);
  return m;
}

Json quiver_to_json(const Quiver& q, const std::optional<IntVec>& alpha,
                    const std::optional<RatVec>& lambda) {
  if (alpha) check_dim_vector(q, *alpha);
  if (lambda) check_weights(q, *lambda);
  Json doc = Json::object();
  doc["vertices"] = q.vertices();
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) {
    Json obj = Json::object();
    obj["id"] = a.id;
    obj["tail"] = q.vertex_id(a.tail);
    obj["head"] = q.vertex_id(a.head);
    arrows.push_back(std::move(obj));
  }
  doc["arrows"] = std::move(arrows);
  if (alpha) doc["alpha"] = vec_to_json(q, *alpha);
  if (lambda) doc["lambda"] = weights_to_json(q, *lambda);
  return doc;
}

std::string serialize(const Quiver& q, const std::optional<IntVec>& alpha,
                      const std::optional<RatVec>& lambda) {
  return quiver_to_json(q, alpha, lambda).dump(2) + "\n";
}

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw ParseError(ParseError::Kind::Syntax, msg);
}

}  // namespace

QuiverFile quiver_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) bad("top-level JSON value must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    bad("missing or invalid 'vertices' array");

  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) bad("vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }

  std::vector<std::array<std::string, 3>> arrows;
  if (doc.contains("arrows")) {
    if (!doc["arrows"].is_array()) bad("'arrows' must be an array");
    for (const auto& a : doc["arrows"]) {
      if (!a.is_object() || !a.contains("id") || !a.contains("tail") || !a.contains("head"))
        bad("each arrow needs 'id', 'tail' and 'head'");
      arrows.push_back({a["id"].get<std::string>(), a["tail"].get<std::string>(),
                        a["head"].get<std::string>()});
    }
  }

  QuiverFile file;
  file.quiver = Quiver::make(std::move(vertices), arrows);
  const Quiver& q = file.quiver;

  if (doc.contains("alpha")) {
    if (!doc["alpha"].is_object()) bad("'alpha' must be an object");
    IntVec alpha(q.vertex_count(), Int(0));
    for (const auto& [key, value] : doc["alpha"].items()) {
      int v = q.vertex_index(key);
      if (v < 0)
        throw ParseError(ParseError::Kind::UnknownVertex, "unknown vertex '" + key + "' in alpha");
      if (value.is_number_integer()) {
        alpha[v] = Int(value.get<long>());
      } else if (value.is_string()) {
        alpha[v] = parse_int(value.get<std::string>());
      } else {
        bad("alpha entries must be integers");
      }
      if (alpha[v] < 0) bad("alpha entries must be nonnegative");
    }
    file.alpha = std::move(alpha);
  }

  if (doc.contains("lambda")) {
    if (!doc["lambda"].is_object()) bad("'lambda' must be an object");
    RatVec lambda(q.vertex_count(), Rat(0));
    for (const auto& [key, value] : doc["lambda"].items()) {
      int v = q.vertex_index(key);
      if (v < 0)
        throw ParseError(ParseError::Kind::UnknownVertex,
                         "unknown vertex '" + key + "' in lambda");
      if (value.is_string()) {
        lambda[v] = parse_rational(value.get<std::string>());
      } else if (value.is_number_integer()) {
        lambda[v] = Rat(Int(value.get<long>()));
      } else {
        bad("lambda entries must be 'p/q' strings or integers");
      }
    }
    file.lambda = std::move(lambda);
  }

  return file;
}

QuiverFile parse_any(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(ParseError::Kind::Syntax, std::string("JSON: ") + e.what());
      }
      return quiver_from_json(doc);
    }
    return parse_quiver_file(text);
  }
  throw ParseError(ParseError::Kind::Syntax, "empty input");
}

}  // namespace quiverlab
