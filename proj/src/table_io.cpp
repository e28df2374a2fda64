#include "bctkit/table_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "bctkit/error.hpp"
#include "bctkit/kernels.hpp"
#include "bctkit/version.hpp"

namespace bctkit {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::uint64_t parse_hex(const std::string& text) {
  std::string s = trim(text);
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s = s.substr(2);
  if (s.empty() || s.size() > 16) throw Error(Errc::BadFormat, "bad hex value '" + text + "'");
  std::uint64_t v = 0;
  for (char ch : s) {
    unsigned d;
    if (ch >= '0' && ch <= '9') d = ch - '0';
    else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
    else throw Error(Errc::BadFormat, "bad hex value '" + text + "'");
    v = (v << 4) | d;
  }
  return v;
}

std::string format_hex(std::uint64_t v, unsigned bits) {
  const int width = static_cast<int>(std::clamp((bits + 3) / 4, 1u, 16u));
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%0*llx", width, static_cast<unsigned long long>(v));
  return buf;
}

void write_table(std::ostream& out, const SBoxTable& t) {
  out << "n=" << t.n() << '\n';
  for (std::size_t x = 0; x < t.size(); ++x) out << format_hex(t[x], t.n()) << '\n';
}

SBoxTable read_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::BadFormat, "empty table file");
  line = trim(line);
  if (line.rfind("n=", 0) != 0) throw Error(Errc::BadFormat, "line 1: expected n=<int>");
  unsigned n = 0;
  try {
    std::size_t used = 0;
    n = static_cast<unsigned>(std::stoul(line.substr(2), &used));
    if (used != line.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error(Errc::BadFormat, "line 1: bad width '" + line + "'");
  }
  if (n == 0 || n > 24) throw Error(Errc::BadFormat, "line 1: width out of range");

  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> values;
  values.reserve(size);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    if (values.size() == size) throw Error(Errc::BadFormat, "line " + std::to_string(lineno) + ": extra value");
    try {
      const std::uint64_t v = parse_hex(line);
      if (v >= size) throw Error(Errc::BadFormat, "value out of range");
      values.push_back(static_cast<std::uint32_t>(v));
    } catch (const Error& e) {
      throw Error(Errc::BadFormat, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (values.size() != size) {
    throw Error(Errc::BadFormat, "expected " + std::to_string(size) + " values, got " +
                                     std::to_string(values.size()));
  }
  return SBoxTable(n, std::move(values));
}

void save_table(const std::filesystem::path& path, const SBoxTable& t) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::BadFormat, "cannot write " + path.string());
  write_table(out, t);
}

SBoxTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadFormat, "cannot read " + path.string());
  return read_table(in);
}

void write_spectrum_csv(std::ostream& out, const SpectrumTable& table) {
  out << "a,b,count\n";
  if (!table.has_entries()) return;
  const std::uint32_t size = std::uint32_t{1} << table.summary.n;
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = 0; b < size; ++b) {
      const int v = table.at(a, b);
      if (v != 0) out << a << ',' << b << ',' << v << '\n';
    }
  }
}

nlohmann::json summary_json(const SpectrumSummary& s) {
  nlohmann::json j;
  j["kind"] = kind_name(s.kind);
  j["n"] = s.n;
  j["delta_or_beta"] = s.value;
  j["argmax"] = {s.argmax_a, s.argmax_b};
  j["mode"] = mode_name(s.mode);
  j["seed"] = s.seed;
  if (s.mode == Mode::Sampled) j["samples"] = s.samples;
  if (s.kind == SpectrumKind::Walsh) {
    j["nonlinearity"] = (std::int64_t{1} << (s.n - 1)) - s.value / 2;
  }
  return j;
}

nlohmann::json make_manifest(const std::string& command) {
  nlohmann::json j;
  j["tool"] = "bctkit";
  j["version"] = kVersion;
  j["command"] = command;
  j["kernels"] = kernels::active().name;
  return j;
}

std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
  if (std::filesystem::is_directory(output)) return output / "manifest.json";
  std::filesystem::path p = output;
  p += ".manifest.json";
  return p;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::BadFormat, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace bctkit
