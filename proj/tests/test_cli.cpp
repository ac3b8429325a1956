#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "crc/cli.hpp"
#include "crc/code_spec.hpp"
#include "crc/cr_analysis.hpp"

using namespace crc;
namespace fs = std::filesystem;

namespace {

const fs::path kData = CRC_TEST_DATA;
const fs::path kGolden = CRC_GOLDEN_DIR;

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
  Json error() const { return Json::parse(err); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (kData / name).string(); }

/// Compares against a frozen report; CRC_UPDATE_GOLDEN=1 rewrites it instead.
void check_golden(const Run& r, const std::string& name) {
  const fs::path path = kGolden / (name + ".json");
  if (std::getenv("CRC_UPDATE_GOLDEN")) {
    std::ofstream(path) << r.json().dump(2) << "\n";
    return;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden " << path);
  CHECK(r.json() == Json::parse(in));
}

}  // namespace

TEST_CASE("check") {
  const auto r = run({"check", data("hamming74.json")});
  CHECK(r.code == kExitOk);
  const auto j = r.json();
  CHECK(j["cr"] == true);
  CHECK(j["spectrum"] == Json::array({7, -1}));
  check_golden(r, "check_hamming74");

  const auto bad = run({"check", data("not_cr.json")});
  CHECK(bad.code == kExitRefuted);
  CHECK(bad.json()["cr"] == false);
  CHECK(bad.json().contains("witness"));
  check_golden(bad, "check_not_cr");

  const auto text = run({"check", data("hamming74.json"), "--format", "text"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("cr: true") != std::string::npos);
}

TEST_CASE("spectrum and quotient") {
  const auto s = run({"spectrum", data("rep6.json")});
  CHECK(s.code == kExitOk);
  CHECK(s.json()["spectrum"] == Json::array({6, 2, -2, -6}));

  const auto q = run({"quotient", data("h24_partition.json")});
  CHECK(q.code == kExitOk);
  check_golden(q, "quotient_h24_partition");
  const auto qr = run({"quotient", data("rep6.json")});
  CHECK(qr.code == kExitOk);
  CHECK(qr.json()["predicted_matches"] == true);
}

TEST_CASE("classify and decompose") {
  const auto c = run({"classify", data("rep6.json")});
  CHECK(c.code == kExitOk);
  CHECK(c.json()["name"] == "FoldedCube(6)");
  check_golden(c, "classify_rep6");
  const auto d = run({"decompose", data("hamming74.json")});
  CHECK(d.code == kExitOk);
  check_golden(d, "decompose_hamming74");
}

TEST_CASE("product") {
  const auto ok = run({"product", data("rep3.json"), data("rep3.json"), "--verify"});
  CHECK(ok.code == kExitOk);
  check_golden(ok, "product_rep3_rep3");
  const auto bad = run({"product", data("hamming74.json"), data("rep3.json")});
  CHECK(bad.code == kExitRefuted);
}

TEST_CASE("construct round trip") {
  const auto r = run({"construct", "hamming", "--q", "3", "--r", "2"});
  REQUIRE(r.code == kExitOk);
  const Code c = code_from_spec(r.json());
  CHECK(c.length() == 4);
  CHECK(c.size() == 9);
  CHECK(code_from_spec(spec_from_code(c)).members() == c.members());
  CHECK(run({"construct", "nonsense"}).code == kExitInput);
}

TEST_CASE("search and replay") {
  const auto dir = fs::temp_directory_path() / "crc_cli_search";
  fs::remove_all(dir);
  const auto r = run({"search", "--max-length", "4", "--out", dir.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.json()["failed"] == false);
  REQUIRE(fs::exists(dir / "census.jsonl"));
  CHECK(fs::exists(dir / "summary.csv"));
  const auto rp = run({"replay", (dir / "census.jsonl").string()});
  CHECK(rp.code == kExitOk);
  CHECK(rp.json()["identical"] == true);
  fs::remove_all(dir);
}

TEST_CASE("errors") {
  const auto missing = run({"check", data("absent.json")});
  CHECK(missing.code == kExitInput);
  CHECK(missing.error()["error"] == "input");
  CHECK(run({"check", data("malformed.json")}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({}).code == kExitInput);
  CHECK(run({"check", data("hamming74.json"), "--max-vertices", "200000000"}).code == kExitInput);
  CHECK(run({"check", data("hamming74.json"), "--format", "yaml"}).code == kExitInput);
  const auto big = run({"check", data("too_large.json")});
  CHECK(big.code == kExitCapacity);
  CHECK(big.error()["error"] == "capacity");
  CHECK(run({"--help"}).code == kExitOk);
}
