#pragma once

/**
 * @file presets.hpp
 * @brief Named parameter instances for the CLI, plus an optional user config file.
 *
 * Built-ins: fibonacci (P=1, Q=-1, u), lucas (P=1, Q=-1, v), pell (P=2, Q=-1, u),
 * mersenne (alias of gaussian:2), and the dynamic family gaussian:<q>
 * (P=q+1, Q=q, u). A config file named by the LUCANOMIAL_PRESETS environment
 * variable is merged in front of the built-ins; its format is one
 *
 *     name=P,Q,family
 *
 * per line, where family is u, v, w:<w0>:<w1>, or h:<h0>:<h1>, with # comments
 * and blank lines allowed.
 */

#include <optional>
#include <string>
#include <vector>

#include "lucanomial/quadfield.hpp"
#include "lucanomial/sequences.hpp"

namespace lucanomial {

struct Preset {
    std::string name;
    LucasParams params;
    SequenceKind kind;
};

std::vector<Preset> builtin_presets();

/// Look the name up among user presets first, then built-ins, then gaussian:<q>.
std::optional<Preset> resolve_preset(const std::string& name,
                                     const std::vector<Preset>& user = {});

std::vector<Preset> parse_preset_file(const std::string& text);

/// Presets from the file named by LUCANOMIAL_PRESETS; empty when unset.
std::vector<Preset> load_env_presets();

}  // namespace lucanomial
