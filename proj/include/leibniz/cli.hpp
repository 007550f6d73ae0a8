#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "leibniz/catalog.hpp"
#include "leibniz/centralizer.hpp"

namespace leibniz {

inline constexpr const char* kToolName = "leibniz-cl";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr std::size_t kTheoremSamples = 200;

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

struct TheoremReport {
    nlohmann::json document;
    bool pass = false;
};

/// One row per corpus item: Leibniz check, nilpotency class, CL verdict in basis
/// mode and in sampled(samples, seed) mode.
TheoremReport theorem_report(const std::vector<CorpusItem>& corpus, std::size_t samples = kTheoremSamples,
                             std::uint64_t seed = kDefaultSeed);
inline TheoremReport theorem_report() { return theorem_report(theorem_corpus()); }

/// Human-readable table for a theorem report document.
std::string render_theorem_report(const nlohmann::json& report);

/// Runs one CLI command. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz
