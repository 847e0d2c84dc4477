#pragma once
// Run configuration shared by the CLI subcommands. Defaults mirror the
// reference parameterization (H=30, alpha 0.03/0.08, beta 0.01, gamma 0.15,
// D_max 2, weights 0.35/0.25/0.25/0.15, seed 7), so a flag-free run is the
// canonical configuration. Loadable from key=value or JSON files.

#include <string>

#include "smartvector/bench.hpp"
#include "smartvector/eval.hpp"

namespace smartvector {

struct RunConfig {
    BenchConfig bench;
    ScoreWeights weights;
    EvalParams eval;

    // Applies recognized keys; unknown keys are rejected so typos fail
    // loudly. Format auto-detected: JSON when the first non-space byte is
    // '{', key=value lines otherwise ('#' comments allowed).
    void apply_file(const std::string& path);
    void apply_text(const std::string& text);
};

}  // namespace smartvector
