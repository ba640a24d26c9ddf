#pragma once

/**
 * @file triangle_io.hpp
 * @brief Lossless serialization: triangle JSON/CSV, report JSON lines, sequence files.
 *
 * Every number crosses the boundary as an exact decimal string ("num/den",
 * integers bare), never as a JSON number, so parse(emit(x)) == x holds bit for
 * bit. Triangle JSON schema:
 *
 *   {"family": "u", "params": {"P": "1", "Q": "-1"}, "rule": "factorial",
 *    "rows": [["1"], ["1", "1"], ...]}
 *
 * ("params" is omitted for custom sequences, which have none.) CSV output is
 * one ragged row per line. Sequence files hold one exact rational per line
 * (# comments and blank lines allowed) or a single JSON array of strings.
 */

#include <string>
#include <vector>

#include "lucanomial/binomials.hpp"
#include "lucanomial/rational.hpp"
#include "lucanomial/verify.hpp"

namespace lucanomial {

std::string triangle_to_json(const Triangle& tri);
Triangle triangle_from_json(const std::string& text);

std::string triangle_to_csv(const Triangle& tri);

/// One report as a single JSON line (no trailing newline).
std::string report_to_json_line(const Report& report);

/// Suite summary as a single JSON line (no trailing newline).
std::string summary_to_json_line(const std::string& suite, const Summary& summary);

/// Parse a sequence file: rationals one per line, or one JSON array of strings.
std::vector<Rational> parse_sequence_file(const std::string& text);

/// Slurp a file as bytes; throws Error when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace lucanomial
