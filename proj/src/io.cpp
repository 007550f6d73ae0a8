#include "leibniz/io.hpp"

#include <cstdio>
#include <map>

#include <openssl/evp.h>

namespace leibniz {

using nlohmann::json;

namespace {

Field parse_field(const json& doc) {
    if (!doc.contains("field")) return Field::Q;
    const auto& f = doc.at("field");
    if (!f.is_string()) throw DocumentError("'field' must be a string");
    const std::string s = f.get<std::string>();
    if (s == "Q") return Field::Q;
    if (s == "Qa") return Field::Qa;
    throw DocumentError("unknown field '" + s + "' (expected Q or Qa)");
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("syntax error: ") + e.what());
    }
}

std::size_t index_in_range(const json& v, std::size_t dim, const char* what) {
    if (!v.is_number_integer()) throw DocumentError(std::string("'") + what + "' must be an integer");
    const long long i = v.get<long long>();
    if (i < 1 || static_cast<std::size_t>(i) > dim)
        throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
    return static_cast<std::size_t>(i - 1);
}

}  // namespace

AlgebraDocument parse_algebra_document(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw DocumentError("algebra document must be a JSON object");
    if (!doc.contains("dim") || !doc.at("dim").is_number_integer()) throw DocumentError("missing integer 'dim'");
    const long long dim = doc.at("dim").get<long long>();
    if (dim < 1 || dim > 64) throw DocumentError("'dim' must be between 1 and 64");
    const Field field = parse_field(doc);
    AlgebraDocument out;
    out.name = doc.value("name", std::string("unnamed"));
    const std::size_t n = static_cast<std::size_t>(dim);
    out.table = StructureTable(n, field);
    if (!doc.contains("brackets")) return out;
    const auto& brackets = doc.at("brackets");
    if (!brackets.is_array()) throw DocumentError("'brackets' must be an array");
    for (const auto& b : brackets) {
        if (!b.is_object() || !b.contains("left") || !b.contains("right") || !b.contains("result"))
            throw DocumentError("each bracket needs 'left', 'right' and 'result'");
        const std::size_t i = index_in_range(b.at("left"), n, "left");
        const std::size_t j = index_in_range(b.at("right"), n, "right");
        const auto& result = b.at("result");
        if (!result.is_object()) throw DocumentError("'result' must map basis indices to scalars");
        for (const auto& [key, value] : result.items()) {
            long long k = 0;
            try {
                std::size_t used = 0;
                k = std::stoll(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw DocumentError("result key '" + key + "' is not an integer index");
            }
            if (k < 1 || static_cast<std::size_t>(k) > n)
                throw IndexOutOfRange("result index " + std::to_string(k) + " outside 1.." + std::to_string(n));
            if (!value.is_string()) throw DocumentError("coefficients must be strings in the scalar grammar");
            out.table.set(i, j, static_cast<std::size_t>(k - 1), parse_scalar(value.get<std::string>(), field));
        }
    }
    return out;
}

LeibnizAlgebra parse_algebra_file(std::string_view text) {
    return LeibnizAlgebra::from_table(parse_algebra_document(text).table);
}

std::string export_algebra(const StructureTable& t, const std::string& name) {
    json doc;
    doc["name"] = name;
    doc["dim"] = t.dim();
    doc["field"] = std::string(field_name(t.field()));
    json brackets = json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j) {
            json result = json::object();
            for (std::size_t k = 0; k < t.dim(); ++k)
                if (!t.at(i, j, k).is_zero()) result[std::to_string(k + 1)] = t.at(i, j, k).to_string();
            if (!result.empty()) brackets.push_back({{"left", i + 1}, {"right", j + 1}, {"result", result}});
        }
    doc["brackets"] = brackets;
    return doc.dump(2) + "\n";
}

FiniteGroupAction parse_action_document(std::string_view text, Field default_field) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("elements") || !doc.at("elements").is_array())
        throw DocumentError("action document needs an 'elements' array");
    const Field field = doc.contains("field") ? parse_field(doc) : default_field;
    std::vector<Matrix> elements;
    for (const auto& m : doc.at("elements")) {
        if (!m.is_array() || m.empty()) throw DocumentError("each element must be a non-empty array of rows");
        const std::size_t rows = m.size();
        Matrix M(rows, rows, field);
        for (std::size_t r = 0; r < rows; ++r) {
            const auto& row = m.at(r);
            if (!row.is_array() || row.size() != rows) throw DocumentError("each element must be a square matrix");
            for (std::size_t c = 0; c < rows; ++c) {
                if (!row.at(c).is_string()) throw DocumentError("matrix entries must be strings in the scalar grammar");
                M(r, c) = parse_scalar(row.at(c).get<std::string>(), field);
            }
        }
        elements.push_back(std::move(M));
    }
    if (doc.contains("dim") && !elements.empty() && doc.at("dim").is_number_integer() &&
        static_cast<std::size_t>(doc.at("dim").get<long long>()) != elements.front().rows())
        throw DocumentError("'dim' does not match the matrix size");
    if (!doc.contains("table")) return FiniteGroupAction::from_elements(std::move(elements));
    FiniteGroupAction a;
    a.elements = std::move(elements);
    const auto& table = doc.at("table");
    if (!table.is_array()) throw DocumentError("'table' must be an array of rows");
    for (const auto& row : table) {
        if (!row.is_array()) throw DocumentError("'table' rows must be arrays");
        std::vector<std::size_t> r;
        for (const auto& v : row) {
            if (!v.is_number_unsigned()) throw DocumentError("'table' entries must be element indices");
            r.push_back(v.get<std::size_t>());
        }
        a.table.push_back(std::move(r));
    }
    if (doc.contains("identity")) {
        if (!doc.at("identity").is_number_unsigned()) throw DocumentError("'identity' must be an element index");
        a.identity_index = doc.at("identity").get<std::size_t>();
    } else {
        const Matrix id = Matrix::identity(a.elements.empty() ? 0 : a.elements.front().rows(), field);
        for (std::size_t i = 0; i < a.elements.size(); ++i)
            if (a.elements[i] == id) {
                a.identity_index = i;
                break;
            }
    }
    return a;
}

std::string export_action(const FiniteGroupAction& action) {
    json doc;
    json elems = json::array();
    for (const auto& M : action.elements) {
        json rows = json::array();
        for (std::size_t r = 0; r < M.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(M(r, c).to_string());
            rows.push_back(row);
        }
        elems.push_back(rows);
    }
    if (!action.elements.empty()) {
        doc["dim"] = action.elements.front().rows();
        doc["field"] = std::string(field_name(action.elements.front().field()));
    }
    doc["elements"] = elems;
    doc["table"] = action.table;
    doc["identity"] = action.identity_index;
    return doc.dump(2) + "\n";
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    std::string hex;
    hex.reserve(2 * len);
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

Vector parse_vector(std::string_view text, std::size_t dim, Field field) {
    if (text.size() >= 2 && (text[0] == 'e' || text[0] == 'E')) {
        const std::string digits(text.substr(1));
        std::size_t used = 0;
        long idx = 0;
        try {
            idx = std::stol(digits, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == digits.size() && used > 0) {
            if (idx < 1 || static_cast<std::size_t>(idx) > dim)
                throw IndexOutOfRange("basis index " + std::to_string(idx) + " outside 1.." + std::to_string(dim));
            return Vector::basis(dim, static_cast<std::size_t>(idx - 1), field);
        }
    }
    std::vector<Scalar> entries;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        entries.push_back(parse_scalar(piece, field));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (entries.size() != dim)
        throw DimensionMismatch("vector has " + std::to_string(entries.size()) + " entries, algebra dimension is " +
                                std::to_string(dim));
    Vector v(dim, field);
    for (std::size_t i = 0; i < dim; ++i) v[i] = entries[i];
    return v;
}

// ------------------------------------------------------------------ JSON

json to_json(const Vector& v) {
    json a = json::array();
    for (const auto& s : v.entries()) a.push_back(s.to_string());
    return a;
}

json to_json(const Subspace& s) {
    json basis = json::array();
    for (const auto& b : s.basis()) basis.push_back(to_json(b));
    return {{"dim", s.dim()}, {"basis", basis}, {"display", s.to_basis_string()}};
}

namespace {

json selection_json(const XSelection& sel) {
    json j{{"mode", sel.describe()}};
    if (sel.mode() == XSelection::Mode::sampled) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(sel.seed()));
        j["seed"] = buf;
        j["count"] = sel.count();
    }
    return j;
}

}  // namespace

json to_json(const ClVerdict& v) {
    json j{{"pass", v.pass}, {"selection", selection_json(v.selection)}, {"checked", v.checked}};
    if (v.witness) {
        const auto& w = *v.witness;
        j["witness"] = {{"x", to_json(w.x)},
                        {"condition", w.condition},
                        {"a", to_json(w.a)},
                        {"y", to_json(w.y)},
                        {"value", to_json(w.value)}};
    }
    return j;
}

json to_json(const ClElementReport& r) {
    json j{{"element", to_json(r.element)}, {"pass", r.pass}, {"selection", selection_json(r.selection)}};
    if (r.witness) {
        const auto& w = *r.witness;
        j["witness"] = {
            {"x", to_json(w.x)}, {"condition", w.condition}, {"y", to_json(w.y)}, {"value", to_json(w.value)}};
    }
    return j;
}

json to_json(const SeriesResult& s) {
    json terms = json::array();
    for (const auto& t : s.terms) terms.push_back(to_json(t));
    std::string verdict = "neither";
    if (s.verdict == SeriesVerdict::nilpotent) verdict = "nilpotent";
    if (s.verdict == SeriesVerdict::solvable) verdict = "solvable";
    return {{"terms", terms}, {"stabilized_at", s.stabilized_at}, {"verdict", verdict}, {"steps", s.steps}};
}

json to_json(const ActionReport& r) {
    json conds = json::array();
    for (bool c : r.conditions) conds.push_back(c);
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"condition", v.condition},
                              {"g", v.g},
                              {"h", v.h},
                              {"i", v.i + 1},
                              {"j", v.j + 1},
                              {"detail", v.detail}});
    return {{"pass", r.pass()}, {"conditions", conds}, {"violations", violations}};
}

}  // namespace leibniz
