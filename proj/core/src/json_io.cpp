#include "hurwitz/json_io.hpp"

#include <cctype>

#include "hurwitz/errors.hpp"

namespace hurwitz {

using nlohmann::json;

json diagram_to_json(const CoxeterDiagram& d) {
  json bonds = json::array();
  for (int i = 1; i <= d.rank(); ++i)
    for (int j = i + 1; j <= d.rank(); ++j) {
      Label m = d.label(i, j);
      if (m != 2) bonds.push_back(json::array({i, j, m}));
    }
  return json{{"rank", d.rank()}, {"bonds", bonds}};
}

CoxeterDiagram diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rank") || !j["rank"].is_number_integer())
    fail(ErrorCode::SyntaxError, "diagram JSON needs an integer \"rank\"");
  long rank = j["rank"].get<long>();
  if (rank < 1) fail(ErrorCode::InvalidDiagram, "rank must be at least 1");
  CoxeterDiagram d(static_cast<int>(rank));
  if (j.contains("bonds")) {
    if (!j["bonds"].is_array())
      fail(ErrorCode::SyntaxError, "\"bonds\" must be an array");
    for (const auto& bond : j["bonds"]) {
      if (!bond.is_array() || bond.size() != 3 || !bond[0].is_number_integer() ||
          !bond[1].is_number_integer() || !bond[2].is_number_integer())
        fail(ErrorCode::SyntaxError, "each bond must be [i, j, label]");
      d.set_label(bond[0].get<int>(), bond[1].get<int>(), bond[2].get<long>());
    }
  }
  return d;
}

CoxeterDiagram diagram_from_text(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      json j = json::parse(text, nullptr, false);
      if (j.is_discarded())
        fail(ErrorCode::SyntaxError, "diagram JSON failed to parse");
      return diagram_from_json(j);
    }
    break;
  }
  return parse_diagram(text);
}

Factorization factorization_from_json(const RootSpace& space, const json& j) {
  if (!j.is_array())
    fail(ErrorCode::SyntaxError, "factorization must be an array of words");
  std::vector<Reflection> factors;
  factors.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& entry = j[k];
    if (!entry.is_array() || entry.empty())
      fail(ErrorCode::SyntaxError,
           "factor " + std::to_string(k + 1) + " must be a nonempty word");
    Word w;
    for (const auto& letter : entry) {
      if (!letter.is_number_integer())
        fail(ErrorCode::SyntaxError,
             "factor " + std::to_string(k + 1) + " has a non-integer letter");
      int v = letter.get<int>();
      if (v < 1 || v > space.rank())
        fail(ErrorCode::InvalidArgument,
             "letter " + std::to_string(v) + " out of range in factor " +
                 std::to_string(k + 1));
      w.push_back(v);
    }
    factors.push_back(space.reflection_of_word(w));
  }
  return Factorization(space, std::move(factors));
}

json factorization_to_json(const Factorization& f) {
  json out = json::array();
  for (const auto& t : f.factors()) out.push_back(f.space().word_of(t));
  return out;
}

BraidWord braid_from_json(const json& j) {
  if (!j.is_array())
    fail(ErrorCode::SyntaxError, "braid must be an array of signed integers");
  BraidWord b;
  for (const auto& entry : j) {
    if (!entry.is_number_integer())
      fail(ErrorCode::SyntaxError, "braid entries must be integers");
    int v = entry.get<int>();
    if (v == 0) fail(ErrorCode::InvalidArgument, "braid entry 0 is invalid");
    b.push_back(v);
  }
  return b;
}

json braid_to_json(const BraidWord& b) { return json(b); }

json multiset_to_json(const ClassMultiset& m) {
  json out = json::object();
  for (const auto& [cls, count] : m.counts)
    out[std::to_string(cls)] = count;
  return out;
}

json labeling_to_json(const ClassLabeling& labeling) {
  json classes = json::array();
  for (std::size_t i = 1; i < labeling.class_of_simple.size(); ++i)
    classes.push_back(labeling.class_of_simple[i]);
  return json{{"class_count", labeling.class_count},
              {"class_of_simple", classes}};
}

}  // namespace hurwitz
