#pragma once

/**
 * @file catalog.hpp
 * @brief Built-in structure-constant tables.
 *
 * Nilpotent Leibniz algebras of dimension <= 4 (abelian_1, abelian_2, mu_1,
 * lambda_1..lambda_6, rho_1..rho_17; the parametric families over Q(a)),
 * the non-nilpotent CL algebra counterexample_s4, and the small worked
 * examples example_3_8, remark_3_2 and example_2_4.
 *
 * Each entry also carries the published centralizer list C_L(e_i) used by the
 * centralizer audit.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

struct BracketRule {
    int left = 0;   ///< 1-based
    int right = 0;  ///< 1-based
    /// (1-based basis index, coefficient in the scalar grammar)
    std::vector<std::pair<int, std::string>> result;
};

struct CatalogEntry {
    std::string name;
    std::size_t dim = 0;
    bool parametric = false;
    std::vector<BracketRule> rules;
    /// Parameter values that must be rejected.
    std::vector<Rational> excluded;
    /// If set, the only admissible parameter values.
    std::optional<std::vector<Rational>> allowed;
    /// Parameter values sampled by the theorem corpus; empty means parameter_samples().
    std::vector<Rational> samples;
    std::string citation;
    bool nilpotent = true;
    /// Published C_L(e_i) as 1-based basis indices, one entry per e_i (empty list if not published).
    std::vector<std::vector<int>> published_centralizers;
    /// Basis index (1-based) whose published centralizer is annotated, 0 if none.
    int annotated_index = 0;
    std::string annotation;

    Field field() const noexcept { return parametric ? Field::Qa : Field::Q; }
};

const std::vector<CatalogEntry>& catalog();
/// Throws UnknownName.
const CatalogEntry& catalog_entry(std::string_view name);

StructureTable build_table(const CatalogEntry& e, const std::optional<Rational>& alpha = std::nullopt);

/// Q(a)-algebra when alpha is omitted on a parametric entry; Q-algebra otherwise.
/// Throws UnknownName, ExcludedParameter or PoleError.
LeibnizAlgebra catalog_get(std::string_view name, const std::optional<Rational>& alpha = std::nullopt);

struct CorpusItem {
    std::string name;
    /// "-" for non-parametric entries, "generic" or "a=<value>".
    std::string alpha_label;
    std::optional<Rational> alpha;
    LeibnizAlgebra algebra;
};

/// Default parameter samples for the parametric families.
const std::vector<Rational>& parameter_samples();

/// All nilpotent algebras of dimension <= 4, in fixed order.
std::vector<CorpusItem> theorem_corpus();
inline constexpr std::size_t kTheoremCorpusSize = 43;

}  // namespace leibniz
