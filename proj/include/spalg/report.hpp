#pragma once

#include <json.hpp>

#include "spalg/parse.hpp"

namespace spalg {

struct AnalyzeOptions {
    bool relations_mode = false;
    std::size_t m = 2;               ///< relation degree when the input is a potential
    std::optional<std::size_t> ell;  ///< superpotential degree, required in relations mode
    std::size_t koszul_depth = 8;
};

/// Runs the full pipeline on a parsed input and returns the report document.
/// `twists`, when non-null, supplies named automorphisms to twist by.  Module
/// errors are captured as entries of the "failures" array, never thrown; the
/// document always carries "checks" and "all_checks_passed".
nlohmann::ordered_json analyze(const ParsedInput& in, const ParsedInput* twists,
                               const AnalyzeOptions& opts);

/// Indented "key: value" rendering of a report document.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace spalg
