#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "bctkit/sbox.hpp"

namespace bctkit {

// Table file: first line "n=<int>", then 2^n lines with one hex value each,
// indexed implicitly by line order. Values are written as 0x-prefixed
// lowercase hex; the prefix is optional on input.

void write_table(std::ostream& out, const SBoxTable& t);
/// Throws BadFormat with the offending line number.
SBoxTable read_table(std::istream& in);
void save_table(const std::filesystem::path& path, const SBoxTable& t);
SBoxTable load_table(const std::filesystem::path& path);

/// Parses "0x1f", "1F" or "1f"; throws BadFormat.
std::uint64_t parse_hex(const std::string& text);
std::string format_hex(std::uint64_t v, unsigned bits);

/// Sparse "a,b,count" triples for the nonzero entries of a full table.
void write_spectrum_csv(std::ostream& out, const SpectrumTable& table);
/// {kind, n, delta_or_beta, argmax: [a, b], mode, seed}; WALSH adds nonlinearity.
nlohmann::json summary_json(const SpectrumSummary& s);

/// Manifest skeleton: tool name, version, active kernel set, command; callers add parameters.
nlohmann::json make_manifest(const std::string& command);
/// <output>.manifest.json next to the output file or inside the output directory.
std::filesystem::path manifest_path_for(const std::filesystem::path& output);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace bctkit
