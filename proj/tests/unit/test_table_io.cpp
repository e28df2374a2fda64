#include <filesystem>
#include <sstream>

#include <doctest.h>

#include "bctkit/error.hpp"
#include "bctkit/table_io.hpp"

using namespace bctkit;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidParams;
}

SBoxTable read_string(const std::string& s) {
  std::istringstream in(s);
  return read_table(in);
}

}  // namespace

TEST_CASE("hex helpers") {
  CHECK(parse_hex("0x1f") == 31);
  CHECK(parse_hex("1F") == 31);
  CHECK(parse_hex("0") == 0);
  CHECK(error_of([] { parse_hex(""); }) == Errc::BadFormat);
  CHECK(error_of([] { parse_hex("0x"); }) == Errc::BadFormat);
  CHECK(error_of([] { parse_hex("12g"); }) == Errc::BadFormat);
  CHECK(format_hex(5, 6) == "0x05");
  CHECK(format_hex(0x3f, 6) == "0x3f");
  CHECK(format_hex(1, 1) == "0x1");
}

TEST_CASE("table round trip") {
  const SBoxTable t(3, {3, 0, 7, 1, 2, 6, 5, 4});
  std::ostringstream out;
  write_table(out, t);
  CHECK(out.str().rfind("n=3\n0x3\n0x0\n", 0) == 0);
  CHECK(read_string(out.str()) == t);

  const auto path = std::filesystem::temp_directory_path() / "bctkit_table_io_test.txt";
  save_table(path, t);
  CHECK(load_table(path) == t);
  std::filesystem::remove(path);
  CHECK(error_of([&] { load_table(path); }) == Errc::BadFormat);
}

TEST_CASE("malformed tables") {
  CHECK(read_string("n=1\n1\n0\n") == SBoxTable(1, {1, 0}));
  CHECK(error_of([] { read_string(""); }) == Errc::BadFormat);
  CHECK(error_of([] { read_string("m=1\n0\n1\n"); }) == Errc::BadFormat);
  CHECK(error_of([] { read_string("n=1\n0\n"); }) == Errc::BadFormat);
  CHECK(error_of([] { read_string("n=1\n0\n1\n1\n"); }) == Errc::BadFormat);
  CHECK(error_of([] { read_string("n=1\n0\n2\n"); }) == Errc::BadFormat);
  CHECK(error_of([] { read_string("n=1\n0\nzz\n"); }) == Errc::BadFormat);
  try {
    read_string("n=2\n0\n1\nq\n3\n");
    FAIL("expected BadFormat");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("spectrum output") {
  const SBoxTable t(2, {0, 1, 3, 2});
  const SpectrumTable d = ddt(t);
  std::ostringstream csv;
  write_spectrum_csv(csv, d);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "a,b,count");
  int rows = 0, total = 0;
  while (std::getline(lines, line)) {
    ++rows;
    total += std::stoi(line.substr(line.rfind(',') + 1));
  }
  CHECK(total == 16);
  CHECK(rows < 16);

  const nlohmann::json j = summary_json(d.summary);
  CHECK(j["kind"] == "DDT");
  CHECK(j["n"] == 2);
  CHECK(j["delta_or_beta"] == d.summary.value);
  CHECK(j["argmax"].size() == 2);
  CHECK_FALSE(j.contains("nonlinearity"));
  CHECK(summary_json(walsh(t).summary).contains("nonlinearity"));

  AnalysisOptions sampled;
  sampled.mode = Mode::Sampled;
  sampled.samples = 5;
  CHECK(summary_json(bct(t, sampled).summary)["samples"] == 5);
}

TEST_CASE("manifests") {
  const nlohmann::json m = make_manifest("build");
  CHECK(m["command"] == "build");
  CHECK(m.contains("version"));
  CHECK(m.contains("kernels"));
  CHECK(manifest_path_for("out/table.txt") == std::filesystem::path("out/table.txt.manifest.json"));
  const auto dir = std::filesystem::temp_directory_path();
  CHECK(manifest_path_for(dir) == dir / "manifest.json");
}
