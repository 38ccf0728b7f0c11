#pragma once

#include <string>

#include <json.hpp>

#include "jpdom/circle_sets.hpp"
#include "jpdom/majorants.hpp"

namespace jpdom {

using nlohmann::json;

// JSON forms used by the CLI file flags and outputs.
json majorant_to_json(const RegularMajorant& h);
RegularMajorant majorant_from_json(const json& j);

json sequence_to_json(const PositiveSequence& c);
PositiveSequence sequence_from_json(const json& j);

json arcset_to_json(const ArcSet& E);
ArcSet arcset_from_json(const json& j);

// One gap per row: index, start, end, length, stage.
std::string gaps_to_csv(const ArcSet& E);

/* Resolve a --h argument: a builtin name (sqrt, identity, xlog, one_over_log,
 * const:<v>) or a path to a majorant JSON file. Same idea for --c with rule
 * names (one_over_n, one_over_log) or a sequence JSON file. */
RegularMajorant load_majorant_spec(const std::string& arg);
PositiveSequence load_sequence_spec(const std::string& arg);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Fixed shortest-round-trip formatting, so serialized reports are stable.
std::string format_double(double v);

} // namespace jpdom
