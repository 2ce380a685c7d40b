#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "deon/cli.hpp"

using namespace deon;

namespace {

const std::string kCorpus = std::string(DEON_CORPUS_DIR) + "/gdpr_ctd.deon";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "deon");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("deon_test_" + name);
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

std::map<std::string, std::string> text_verdicts(const std::string& out) {
  std::map<std::string, std::string> v;
  std::regex line(R"(^(\w+): .*  =>  (\w+) \[)");
  std::istringstream in(out);
  std::string l;
  while (std::getline(in, l)) {
    std::smatch m;
    if (std::regex_search(l, m, line)) v[m[1]] = m[2];
  }
  return v;
}

std::map<std::string, std::string> json_verdicts(const std::string& out) {
  std::map<std::string, std::string> v;
  auto doc = nlohmann::json::parse(out);
  for (const auto& q : doc["queries"]) v[q["id"]] = q["verdict"];
  return v;
}

}  // namespace

TEST_CASE("check under SDL") {
  Run r = run({"check", kCorpus, "--logic", "sdl"});
  CHECK(r.code == kExitOk);
  auto v = text_verdicts(r.out);
  CHECK(v["q0"] == "INCONSISTENT");
  CHECK(v["q1"] == "ENTAILED");
  CHECK(v["q2"] == "ENTAILED");
  CHECK(v["q3"] == "ENTAILED");
  CHECK(r.out.find("inconsistency via tableau") != std::string::npos);
}

TEST_CASE("check under DDL") {
  Run r = run({"check", kCorpus, "--logic", "ddl"});
  CHECK(r.code == kExitOk);
  auto v = text_verdicts(r.out);
  CHECK(v["q0"] == "CONSISTENT");
  CHECK(v["q1"] == "ENTAILED");
  CHECK(v["q2"] == "NOT_ENTAILED");
  CHECK(v["q3"] == "NOT_ENTAILED");
}

TEST_CASE("text and JSON agree") {
  for (const char* logic : {"sdl", "ddl"}) {
    Run t = run({"check", kCorpus, "--logic", logic});
    Run j = run({"check", kCorpus, "--logic", logic, "--format", "json"});
    CHECK(t.code == j.code);
    CHECK(text_verdicts(t.out) == json_verdicts(j.out));
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["scenario"] == "gdpr_ctd");
    CHECK(doc["logic"] == logic);
    CHECK_FALSE(doc.contains("wall_time_us"));
  }
}

TEST_CASE("JSON is byte-stable without timings") {
  Run a = run({"check", kCorpus, "--logic", "ddl", "--format", "json"});
  Run b = run({"check", kCorpus, "--logic", "ddl", "--format", "json"});
  CHECK(a.out == b.out);
  Run t = run({"check", kCorpus, "--logic", "ddl", "--format", "json", "--timings"});
  auto doc = nlohmann::json::parse(t.out);
  CHECK(doc.contains("wall_time_us"));
  CHECK(doc["queries"][0].contains("elapsed_us"));
}

TEST_CASE("prove, model, export") {
  Run p = run({"prove", kCorpus, "--query", "q2", "--logic", "ddl", "--format", "json"});
  CHECK(p.code == kExitOk);
  auto doc = nlohmann::json::parse(p.out);
  REQUIRE(doc["queries"].size() == 1);
  CHECK(doc["queries"][0]["verdict"] == "NOT_ENTAILED");
  CHECK(doc["queries"][0]["model"]["type"] == "cj");

  Run m = run({"model", kCorpus});
  CHECK(m.code == kExitOk);
  CHECK(m.out.find("INCONSISTENT") != std::string::npos);
  Run md = run({"model", kCorpus, "--logic", "ddl"});
  CHECK(md.out.find("CJ model, 2 world(s)") != std::string::npos);

  auto out = std::filesystem::temp_directory_path() / "deon_test_export.p";
  Run e = run({"export-thf", kCorpus, "--logic", "ddl", "--out", out.string(), "--query", "q3"});
  CHECK(e.code == kExitOk);
  std::ifstream in(out);
  std::string last, line;
  while (std::getline(in, line)) last = line;
  CHECK(last.rfind("thf(dl_goal, conjecture", 0) == 0);
}

TEST_CASE("the logic line is the default, the flag overrides it") {
  auto f = temp_file("ddl.deon", "logic ddl\nnorm n: O{p}\nfact f: ~p\nquery q: entails? O{p}\n");
  Run r = run({"check", f.string(), "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["logic"] == "ddl");
  r = run({"check", f.string(), "--format", "json", "--logic", "sdl"});
  CHECK(nlohmann::json::parse(r.out)["logic"] == "sdl");
}

TEST_CASE("input errors exit 1") {
  CHECK(run({"check", "missing.deon"}).code == kExitInput);
  CHECK(run({"prove", kCorpus, "--query", "nope"}).code == kExitInput);
  CHECK(run({"prove", kCorpus}).code == kExitInput);
  CHECK(run({"check", kCorpus, "--logic", "kd45"}).code == kExitInput);
  CHECK(run({"check", kCorpus, "--max-worlds", "0"}).code == kExitInput);
  CHECK(run({"check", kCorpus, "--logic", "ddl", "--max-worlds", "11"}).code == kExitInput);
  CHECK(run({"export-thf", kCorpus, "--out", "/tmp/x.p", "--query", "q0"}).code == kExitInput);
  CHECK(run({}).code == kExitInput);
  auto bad = temp_file("bad.deon", "norm n p\nquery q: consistent?\n");
  Run r = run({"check", bad.string()});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("line 1") != std::string::npos);
  auto dyadic = temp_file("dyadic.deon", "norm n: O{p | q}\nquery q: consistent?\n");
  CHECK(run({"check", dyadic.string()}).code == kExitInput);
  CHECK(run({"check", dyadic.string(), "--logic", "ddl"}).code == kExitOk);
}

TEST_CASE("UNKNOWN exits 3, limits exit 2") {
  auto f = temp_file("unknown.deon", "norm n: O{p}\nquery g: entails? ~O{~p}\n");
  Run r = run({"check", f.string(), "--logic", "ddl", "--max-worlds", "1"});
  if (text_verdicts(r.out)["g"] == "UNKNOWN") {
    CHECK(r.code == kExitUnknown);
    CHECK(r.out.find("no model up to 1 worlds") != std::string::npos);
  } else {
    CHECK(r.code == kExitOk);
  }
  Run ok = run({"check", kCorpus, "--logic", "ddl", "--max-worlds", "1"});
  CHECK(json_verdicts(run({"check", kCorpus, "--logic", "ddl", "--max-worlds", "1", "--format", "json"}).out)["q0"] ==
        "UNKNOWN");
  CHECK(ok.code == kExitUnknown);
}

TEST_CASE("DEON_MAX_WORLDS supplies the default bound") {
  setenv("DEON_MAX_WORLDS", "1", 1);
  Run r = run({"check", kCorpus, "--logic", "ddl", "--format", "json"});
  CHECK(json_verdicts(r.out)["q0"] == "UNKNOWN");
  Run flag = run({"check", kCorpus, "--logic", "ddl", "--format", "json", "--max-worlds", "2"});
  CHECK(json_verdicts(flag.out)["q0"] == "CONSISTENT");
  setenv("DEON_MAX_WORLDS", "zero", 1);
  CHECK(run({"check", kCorpus, "--logic", "ddl"}).code == kExitInput);
  unsetenv("DEON_MAX_WORLDS");
}

TEST_CASE("version") {
  Run r = run({"--version"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("0.1.0") != std::string::npos);
}
