#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cotv_cli/commands.hpp"
#include "cotv_cli/datasets.hpp"
#include "cotv_cli/document.hpp"

using namespace cotv::cli;

namespace {

std::string dataset_text(const std::string& name) {
  return run({"gen-example", name}, [] { return std::string(); }).out;
}

RunResult run_on(const std::string& input, std::vector<std::string> args) {
  return run(args, [&] { return input; });
}

Json result_of(const RunResult& r) { return Json::parse(r.out).at("result"); }

}  // namespace

TEST_CASE("bundled datasets round-trip byte for byte") {
  for (const auto& name : dataset_names()) {
    const std::string text = dataset_text(name);
    REQUIRE_FALSE(text.empty());
    const std::string again = serialize(parse_document(Json::parse(text))).dump(2) + "\n";
    CHECK(again == text);
  }
}

TEST_CASE("hirzebruch2 Weil expansion") {
  const auto r = run_on(dataset_text("hirzebruch2"), {"weil", "h"});
  CHECK(r.code == kSuccess);
  const Json expected = Json::parse(R"({"B[tau0]":3,"Z[0,-1/2]":1,"Z[inf,0]":1})");
  CHECK(result_of(r).at("expansion") == expected);
}

TEST_CASE("check-weight c1 shows the residual lines") {
  const auto r = run_on(dataset_text("hirzebruch2"), {"check-weight", "c1"});
  CHECK(r.code == kSuccess);
  const Json result = result_of(r);
  std::vector<std::string> lines;
  for (const auto& e : result.at("conditions")) lines.push_back(e.at("rendered").get<std::string>());
  CHECK(lines == std::vector<std::string>{"-1+3-2=0", "3=3"});
}

TEST_CASE("pairing a principal function gives zero") {
  const auto r = run_on(dataset_text("hirzebruch2"), {"pair", "SF(u=1)", "c1"});
  CHECK(r.code == kSuccess);
  CHECK(result_of(r).at("zero") == true);
  const auto s = run_on(dataset_text("hirzebruch2"), {"pair", "SF(u=-2;D=0:1,inf:-1)", "cX"});
  CHECK(s.code == kSuccess);
  CHECK(result_of(s).at("zero") == true);
}

TEST_CASE("top reports both routes") {
  const auto r = run_on(dataset_text("hirzebruch2"), {"top", "h"});
  CHECK(r.code == kSuccess);
  CHECK(result_of(r).at("inductive") == 4);
  CHECK(result_of(r).at("integral") == 4);
  const auto t = run_on(dataset_text("three-point"), {"top", "h"});
  CHECK(t.code == kSuccess);
  CHECK(result_of(t).at("equal") == true);
}

TEST_CASE("exit codes") {
  const std::string h2 = dataset_text("hirzebruch2");
  CHECK(run_on("{not json", {"validate"}).code == kMalformedInput);
  CHECK(run_on(R"({"schema_version":7})", {"validate"}).code == kMalformedInput);
  CHECK(run_on(h2, {"pair", "h", "nope"}).code == kMalformedInput);
  CHECK(run_on(h2, {"pair", "SF(u=1;D=0:1)", "c1"}).code == kMalformedInput);
  CHECK(run_on(h2, {"ranks", "--codim", "5"}).code == kMalformedInput);
  CHECK(run({"frobnicate"}, [] { return std::string(); }).code == kMalformedInput);
  CHECK(run({"gen-example", "nothing"}, [] { return std::string(); }).code == kMalformedInput);
  CHECK(run_on(h2, {"validate", "--strict"}).code == kValidationFailure);
  CHECK(run_on(dataset_text("marked-cone"), {"pair", "h", "cX"}).code == kUnsupported);
  CHECK(run_on(dataset_text("three-point"), {"oracle-check", "h"}).code == kUnsupported);

  Json doc = Json::parse(h2);
  for (auto& w : doc["weights"])
    if (w["name"] == "c1") w["values"][3]["value"] = 4;
  const auto bad = run_on(doc.dump(), {"check-weight", "c1"});
  CHECK(bad.code == kValidationFailure);
  CHECK(result_of(bad).at("balanced") == false);
  CHECK(run_on(doc.dump(), {"pair", "h", "c1"}).code == kValidationFailure);

  Json broken = Json::parse(h2);
  broken["support_functions"][0]["cells"][1]["translation"] = 5;
  CHECK(run_on(broken.dump(), {"weil", "h"}).code == kValidationFailure);
  CHECK(run_on(broken.dump(), {"validate"}).code == kValidationFailure);
}

TEST_CASE("restrictions through the command surface") {
  const std::string h2 = dataset_text("hirzebruch2");
  const auto r = run_on(h2, {"restrict", "--ray", "tau0", "--sf", "h", "--weight", "c1"});
  CHECK(r.code == kSuccess);
  CHECK(result_of(r).at("function").at("m_tau") == Json::parse("[3]"));
  const auto v = run_on(h2, {"restrict", "--cell", "inf,vinf_0", "--sf", "h"});
  CHECK(v.code == kSuccess);
  CHECK(run_on(h2, {"restrict", "--sf", "h"}).code == kMalformedInput);
  CHECK(run_on(dataset_text("marked-cone"), {"restrict", "--ray", "tau1", "--sf", "h"}).code == kUnsupported);
}

TEST_CASE("oracle-check on hirzebruch2") {
  const auto r = run_on(dataset_text("hirzebruch2"), {"oracle-check", "h", "--format", "table"});
  CHECK(r.code == kSuccess);
  CHECK(r.out.find("agree: true") != std::string::npos);
}

TEST_CASE("outputs are deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"validate"},          {"ranks", "--all"},  {"check-weight", "cX"}, {"pair", "h", "cX"}, {"top", "h"},
      {"measure", "h"},      {"weil", "h"},       {"principal", "h"},     {"oracle-check", "h"},
      {"restrict", "--ray", "tau0", "--sf", "h", "--weight", "cX"}};
  for (const auto& name : dataset_names()) {
    CHECK(dataset_text(name) == dataset_text(name));
    const std::string text = dataset_text(name);
    for (const auto& cmd : commands)
      for (const char* format : {"json", "table"}) {
        auto args = cmd;
        args.push_back("--format");
        args.push_back(format);
        const auto a = run_on(text, args);
        const auto b = run_on(text, args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
      }
  }
}
