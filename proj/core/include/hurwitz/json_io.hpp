#pragma once

#include <nlohmann/json.hpp>

#include "hurwitz/connect.hpp"

namespace hurwitz {

/// File formats:
///   diagram   {"rank": n, "bonds": [[i, j, label], ...]}  (label 0 = infinite)
///   factorization   [[1], [2,1,2], ...]   (reflection words)
///   braid     [1, -2, ...]                (signed 1-based positions)

nlohmann::json diagram_to_json(const CoxeterDiagram& d);
CoxeterDiagram diagram_from_json(const nlohmann::json& j);

/// Accepts either the DSL or JSON (first non-space character `{`).
CoxeterDiagram diagram_from_text(const std::string& text);

Factorization factorization_from_json(const RootSpace& space,
                                      const nlohmann::json& j);
nlohmann::json factorization_to_json(const Factorization& f);

BraidWord braid_from_json(const nlohmann::json& j);
nlohmann::json braid_to_json(const BraidWord& b);

nlohmann::json multiset_to_json(const ClassMultiset& m);
nlohmann::json labeling_to_json(const ClassLabeling& labeling);

}  // namespace hurwitz
