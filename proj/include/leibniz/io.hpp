#pragma once

/**
 * @file io.hpp
 * @brief Algebra and action documents, report serialization.
 *
 * Algebra document (JSON):
 *   {"name": "mu_1", "dim": 2, "field": "Q",
 *    "brackets": [{"left": 1, "right": 1, "result": {"2": "1"}}]}
 * Indices are 1-based, omitted products are zero, coefficients use the
 * scalar grammar of the declared field.
 *
 * Action document (JSON):
 *   {"dim": 3, "field": "Q",
 *    "elements": [[["1","0","0"], ...], ...],   // matrices as rows; columns are images of e_i
 *    "table": [[0, 1], [1, 0]],                  // optional
 *    "identity": 0}                              // optional
 */

#include <string>
#include <string_view>

#include <json.hpp>

#include "leibniz/centralizer.hpp"
#include "leibniz/morphism.hpp"

namespace leibniz {

struct AlgebraDocument {
    std::string name;
    StructureTable table;
};

/// Parses without checking the Leibniz identity. Throws DocumentError,
/// IndexOutOfRange, ParseError.
AlgebraDocument parse_algebra_document(std::string_view text);

/// Parses and validates; throws LeibnizIdentityViolation in addition.
LeibnizAlgebra parse_algebra_file(std::string_view text);

/// Canonical document text (stable key order, products in (left, right) order).
std::string export_algebra(const StructureTable& t, const std::string& name);

/// If the document omits "table", it is derived from matrix products and a
/// missing product raises InvalidAction.
FiniteGroupAction parse_action_document(std::string_view text, Field field);

std::string export_action(const FiniteGroupAction& action);

std::string sha256_hex(std::string_view bytes);

/// Parses "e3" (1-based basis vector) or comma-separated scalars.
Vector parse_vector(std::string_view text, std::size_t dim, Field field);

nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const Subspace& s);
nlohmann::json to_json(const ClVerdict& v);
nlohmann::json to_json(const ClElementReport& r);
nlohmann::json to_json(const SeriesResult& s);
nlohmann::json to_json(const ActionReport& r);

}  // namespace leibniz
