#include "triblock/document.hpp"

#include <string>

#include <json.hpp>

namespace triblock {

namespace {

using nlohmann::json;

std::string edge_text(const json& pair) { return pair.dump(); }

}  // namespace

BlockerDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");

  if (!doc.contains("n")) throw ParseError("document is missing the field \"n\"");
  if (!doc["n"].is_number_integer()) throw ParseError("field \"n\" must be an integer");
  int n = doc["n"].get<int>();
  if (n < 3) throw ParseError("field \"n\" must be at least 3, got " + std::to_string(n));

  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("document is missing the array field \"edges\"");
  }

  BlockerDocument out;
  out.edges = EdgeSet(n);
  for (const json& pair : doc["edges"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      throw ParseError("edge " + edge_text(pair) + " is not an [a, b] integer pair");
    }
    int a = pair[0].get<int>();
    int b = pair[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw ParseError("edge " + edge_text(pair) + ": vertex out of range [0, " + std::to_string(n - 1) + "]");
    }
    if (a == b) throw ParseError("edge " + edge_text(pair) + ": endpoints must be distinct");
    Edge e = make_edge(a, b);
    if (is_boundary_edge(e, n)) {
      throw ParseError("edge " + edge_text(pair) + " is a boundary edge of the " + std::to_string(n) + "-gon; only diagonals are allowed");
    }
    if (out.edges.contains(e)) throw ParseError("duplicate edge " + edge_text(pair));
    out.edges.insert(e);
  }

  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) throw ParseError("field \"metadata\" must be an object of strings");
    for (const auto& [key, value] : doc["metadata"].items()) {
      if (!value.is_string()) throw ParseError("metadata value for \"" + key + "\" must be a string");
      out.metadata[key] = value.get<std::string>();
    }
  }
  return out;
}

std::string serialize_document(const BlockerDocument& doc) {
  json j;
  j["n"] = doc.edges.polygon_size();
  j["edges"] = json::array();
  for (const Edge& e : doc.edges.edges()) j["edges"].push_back({e.a, e.b});
  json meta = json::object();
  for (const auto& [key, value] : doc.metadata) meta[key] = value;
  j["metadata"] = meta;
  return j.dump(2) + "\n";
}

}  // namespace triblock
