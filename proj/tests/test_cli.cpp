#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "centerpoint/cli.hpp"
#include "centerpoint/serialize.hpp"

using namespace centerpoint;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json parsed(const Result& r) {
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return Json::parse(r.out);
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "centerpoint_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

int exit_status(const std::string& args) {
  const std::string cmd = std::string(CENTERPOINT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST_CASE("every document survives a round trip") {
  const auto tensor = scratch("tensor.json");
  write_file(tensor, R"({"d": 3, "n": 2, "entries": ["1", "2", "3", "4", "5", "6", "7", "1/2"]})");
  const std::vector<std::vector<std::string>> commands{
      {"describe", "--builtin", "S4"},
      {"classalg", "--builtin", "Q8"},
      {"points", "--builtin", "A5"},
      {"points", "--builtin", "S4", "--field", "Fp:7"},
      {"points", "--builtin", "S3", "--field", "Qzeta:3"},
      {"idempotents", "--builtin", "D5"},
      {"chartable", "--builtin", "A4"},
      {"irrep", "--builtin", "S4", "--component", "3"},
      {"irrep", "--builtin", "Q8", "--component", "4", "--field", "Qzeta:4"},
      {"split-check", "--builtin", "S3"},
      {"decompose", tensor.string()},
      {"verify", "--builtin", "S3"}};
  for (const auto& args : commands) {
    auto doc = parsed(call(args));
    CHECK(doc["schema_version"] == kSchemaVersion);
    CHECK(doc["kind"] == args[0]);
    CHECK_MESSAGE(roundtrip(doc) == doc, args[0]);
  }
}

TEST_CASE("output is byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"points", "--builtin", "A5"},
                                                                {"irrep", "--builtin", "S4", "--component", "4"},
                                                                {"chartable", "--builtin", "D6", "--format", "table"}}) {
    auto a = call(args), b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  // the seed does not change the points
  CHECK(call({"points", "--builtin", "S4", "--seed", "7"}).out == call({"points", "--builtin", "S4"}).out);
}

TEST_CASE("points and escalation") {
  auto s3 = parsed(call({"points", "--builtin", "S3"}));
  CHECK(s3["field_escalated"] == false);
  CHECK(s3["points"]["points"] == Json::parse(R"([["1","3","2"],["1","0","-1"],["1","-3","2"]])"));

  auto a5 = parsed(call({"points", "--builtin", "A5"}));
  CHECK(a5["field_escalated"] == true);
  CHECK(a5["points"]["field"] == "Qzeta:5");
  CHECK(a5["report"]["ok"] == true);

  auto f7 = parsed(call({"points", "--builtin", "S4", "--field", "Fp:7"}));
  CHECK(f7["points"]["prime"] == "7");
}

TEST_CASE("character table and idempotents") {
  auto q8 = parsed(call({"chartable", "--builtin", "Q8"}));
  auto dims = q8["character_table"]["dims"].get<std::vector<int>>();
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 1, 1, 1, 2});

  auto s3 = parsed(call({"idempotents", "--builtin", "S3"}));
  CHECK(s3["idempotents"]["items"][1]["coeffs"] == Json::parse(R"(["2/3","0","-1/3"])"));
  CHECK(s3["report"]["ok"] == true);
}

TEST_CASE("irrep and split-check") {
  auto q8 = parsed(call({"irrep", "--builtin", "Q8", "--component", "4", "--field", "Qzeta:4"}));
  CHECK(q8["dim"] == 2);
  CHECK(q8["report"]["ok"] == true);
  CHECK(q8["representation"]["matrices"].size() == 8);

  auto miss = call({"irrep", "--builtin", "Q8", "--component", "4", "--budget", "50"});
  CHECK(miss.code == kExitVerificationFailure);
  CHECK(Json::parse(miss.out)["witness"].is_null());
  CHECK(miss.err.find("no splitting witness") != std::string::npos);

  auto split = call({"split-check", "--builtin", "Q8", "--budget", "200"});
  CHECK(split.code == 0);
  CHECK(Json::parse(split.out)["all_split"] == false);
  CHECK(parsed(call({"split-check", "--builtin", "S4"}))["all_split"] == true);

  CHECK(call({"irrep", "--builtin", "S3", "--component", "9"}).code == kExitInputError);
}

TEST_CASE("group files") {
  const auto gens = scratch("gens.json");
  write_file(gens, R"js({"generators": ["(1 2)", "(1 2 3 4)"], "degree": 4})js");
  auto d = parsed(call({"describe", gens.string()}));
  CHECK(d["group"]["order"] == 24);
  CHECK(d["classes"].size() == 5);
  CHECK(parsed(call({"describe", "--group", gens.string()}))["group"] == d["group"]);
  CHECK(parsed(call({"describe", "--group", "dihedral:4"}))["group"]["order"] == 8);

  const auto table = scratch("table.json");
  write_file(table, R"({"table": [[0, 1], [1, 0]], "labels": ["e", "a"], "name": "C2"})");
  CHECK(parsed(call({"chartable", table.string()}))["report"]["ok"] == true);

  const auto broken = scratch("broken.json");
  write_file(broken, "{ not json");
  CHECK(call({"describe", broken.string()}).code == kExitInputError);
  CHECK(call({"describe", scratch("missing.json").string()}).code == kExitInputError);
}

TEST_CASE("decompose") {
  const auto tensor = scratch("tensor4.json");
  std::string entries;
  for (int i = 0; i < 16; ++i) entries += (i ? ", \"" : "\"") + std::to_string(i * i % 7) + "\"";
  write_file(tensor, R"({"d": 4, "n": 2, "entries": [)" + entries + "]}");
  auto doc = parsed(call({"decompose", tensor.string()}));
  CHECK(doc["components"].size() == 5);
  CHECK(doc["report"]["ok"] == true);
  for (const auto& comp : doc["components"])
    for (const auto& cert : comp["certificates"]) CHECK(cert["holds"] == true);
  CHECK(call({"decompose", tensor.string(), "--builtin", "S3"}).code == kExitInputError);
}

TEST_CASE("out file and table format") {
  const auto target = scratch("out.json");
  std::filesystem::remove(target);
  auto r = call({"classalg", "--builtin", "S3", "--out", target.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(target);
  auto doc = Json::parse(in);
  CHECK(doc["class_algebra"]["relations"][0] == "α² = 3 + 3β");

  auto t = call({"classalg", "--builtin", "S3", "--format", "table"});
  CHECK(t.out.find("α² = 3 + 3β") != std::string::npos);
}

TEST_CASE("input errors") {
  CHECK(call({"points", "--builtin", "nonsense"}).code == kExitInputError);
  CHECK(call({"points", "--builtin", "S3", "--field", "Fp:3"}).code == kExitInputError);
  CHECK(call({"points", "--builtin", "S3", "--field", "R"}).code == kExitInputError);
  CHECK(call({"points"}).code == kExitInputError);
  CHECK(call({"points", "--builtin", "S3", "--group", "S4"}).code == kExitInputError);
  CHECK(call({"frobnicate"}).code == kExitInputError);
  CHECK(call({}).code == kExitInputError);
  CHECK(call({"irrep", "--builtin", "S3"}).code == kExitInputError);
  auto help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("split-check") != std::string::npos);
}

TEST_CASE("the installed binary reports exit codes") {
  CHECK(exit_status("verify --builtin S4") == 0);
  CHECK(exit_status("points --builtin S3 --field Fp:2") == 1);
  CHECK(exit_status("irrep --builtin Q8 --component 4 --budget 20") == 2);
}
