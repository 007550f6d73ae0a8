#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leibniz/catalog.hpp"

namespace fixtures {

struct Named {
    std::string label;
    leibniz::LeibnizAlgebra algebra;
};

/// Every catalog entry over Q: plain entries as-is, parametric ones at each
/// admissible sample value.
inline std::vector<Named> rational_catalog() {
    std::vector<Named> out;
    for (const auto& e : leibniz::catalog()) {
        if (!e.parametric) {
            out.push_back({e.name, leibniz::catalog_get(e.name)});
            continue;
        }
        std::vector<leibniz::Rational> values =
            e.allowed ? *e.allowed : (e.samples.empty() ? leibniz::parameter_samples() : e.samples);
        for (const auto& a : values) {
            bool excluded = false;
            for (const auto& x : e.excluded) excluded = excluded || x == a;
            if (!excluded) out.push_back({e.name + "(a=" + a.to_string() + ")", leibniz::catalog_get(e.name, a)});
        }
    }
    return out;
}

/// Every catalog entry, parametric ones at generic a (over Q(a)) where allowed.
inline std::vector<Named> full_catalog() {
    std::vector<Named> out = rational_catalog();
    for (const auto& e : leibniz::catalog())
        if (e.parametric && !e.allowed) out.push_back({e.name + "(generic)", leibniz::catalog_get(e.name)});
    return out;
}

inline leibniz::Vector e(std::size_t n, std::size_t one_based, leibniz::Field f = leibniz::Field::Q) {
    return leibniz::Vector::basis(n, one_based - 1, f);
}

inline leibniz::Subspace span_e(std::size_t n, std::initializer_list<std::size_t> idx,
                                leibniz::Field f = leibniz::Field::Q) {
    std::vector<leibniz::Vector> vs;
    for (auto i : idx) vs.push_back(e(n, i, f));
    return leibniz::Subspace::span(vs, n, f);
}

}  // namespace fixtures
