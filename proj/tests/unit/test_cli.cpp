#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypermoment_cli/cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hypermoment::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("hypermoment-cli-" + std::to_string(std::rand()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string file(const std::string& name, const std::string& body) const {
    const auto p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

const char* kBadRecurrence = R"({"kind": "recurrence1d", "a": ["1", "9/10"], "b": ["0", "-1/5"],
  "c": ["0", "3/10"], "tail": {"a": "1/2", "b": "0", "c": "1/2", "from": 2}})";

}  // namespace

TEST_CASE("conv on one and two dimensions") {
  Scratch s;
  const auto c1 = s.file("c1.json", R"({"kind": "chebyshev", "dim": 1})");
  auto r = call({"--spec", c1, "conv", "--x", "1", "--y", "2"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  REQUIRE(j["measure"].size() == 2);
  CHECK(j["measure"][0]["point"] == Json::parse("[1]"));
  CHECK(j["measure"][0]["re"] == "1/2");
  CHECK(j["measure"][1]["point"] == Json::parse("[3]"));

  const auto c2 = s.file("c2.json", R"({"kind": "chebyshev", "dim": 2})");
  r = call({"conv", "--x", "1,2", "--y", "2,1", "--spec", c2});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  REQUIRE(j["measure"].size() == 4);
  for (const auto& w : j["measure"]) CHECK(w["re"] == "1/4");
  CHECK(j["measure"][3]["point"] == Json::parse("[3, 3]"));
}

TEST_CASE("reports are byte-identical across runs and --out writes the file") {
  Scratch s;
  const auto c2 = s.file("c2.json", R"({"kind": "chebyshev", "dim": 2})");
  const std::vector<std::string> args{"--spec", c2, "--box", "4", "--seed", "7", "check-eq", "--kind", "degree",
                                      "--alpha", "1,1", "--lambda", "1/3,2/5", "--n", "2", "--trials", "3"};
  const auto a = call(args), b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  auto with_out = args;
  with_out.insert(with_out.begin(), {"--out", s.path("r.json")});
  const auto c = call(with_out);
  CHECK(c.code == 0);
  std::ifstream in(s.path("r.json"));
  std::stringstream body;
  body << in.rdbuf();
  CHECK(Json::parse(body.str()) == Json::parse(a.out));
  CHECK(c.out.find('{') == std::string::npos);
}

TEST_CASE("verify passes on the chebyshev hypergroup and rejects a bad recurrence") {
  Scratch s;
  const auto c1 = s.file("c1.json", R"({"kind": "chebyshev", "dim": 1})");
  auto r = call({"--spec", c1, "--box", "10", "verify"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["passed"] == true);

  const auto bad = s.file("bad.json", kBadRecurrence);
  r = call({"--spec", bad, "--box", "4", "verify"});
  CHECK(r.code == 1);
  const auto j = Json::parse(r.out);
  CHECK(j["passed"] == false);
  CHECK(j["rejection"]["value"] == "-1/5");
  // Any command on a rejected spec reports the same witness.
  r = call({"--spec", bad, "--box", "4", "conv", "--x", "1", "--y", "1"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["rejection"] == j["rejection"]);
}

TEST_CASE("check-eq exit codes") {
  Scratch s;
  const auto c2 = s.file("c2.json", R"({"kind": "chebyshev", "dim": 2})");
  auto r = call({"--spec", c2, "--box", "6", "check-eq", "--kind", "sine", "--lambda", "2/7,-3/5", "--a", "1,0"});
  CHECK(r.code == 0);
  r = call({"--spec", c2, "--box", "6", "check-eq", "--kind", "sine", "--lambda", "2/7,-3/5", "--mu", "1/7,-3/5",
            "--a", "1,0"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["report"]["witness"].is_object());
  r = call({"--spec", c2, "--box", "6", "--mode", "float", "check-eq", "--kind", "moment", "--lambda", "1/3,1/4",
            "--cap", "1,1"});
  CHECK(r.code == 0);
}

TEST_CASE("usage errors exit 2") {
  Scratch s;
  const auto c2 = s.file("c2.json", R"({"kind": "chebyshev", "dim": 2})");
  CHECK(call({}).code == 2);
  CHECK(call({"--spec", c2, "bogus"}).code == 2);
  CHECK(call({"conv", "--x", "1,2", "--y", "2,1"}).code == 2);
  CHECK(call({"--spec", c2, "conv", "--x", "1", "--y", "2,1"}).code == 2);
  CHECK(call({"--spec", c2, "--mode", "float", "conv", "--x", "1,2", "--y", "2,1"}).code == 2);
  CHECK(call({"--spec", s.path("missing.json"), "verify"}).code == 2);
  const auto broken = s.file("broken.json", "{\"kind\": ");
  CHECK(call({"--spec", broken, "verify"}).code == 2);
}

TEST_CASE("synth decomposes a two-dimensional sine") {
  Scratch s;
  const auto c2 = s.file("c2.json", R"({"kind": "chebyshev", "dim": 2})");
  const auto f = s.file("f.json", R"([{"coeff": "3", "alpha": [1, 0], "lambda": ["2/7", "-3/5"]},
                                      {"coeff": "-5", "alpha": [0, 1], "lambda": ["2/7", "-3/5"]}])");
  const auto r = call({"--spec", c2, "synth", "--function", f, "--lambda", "2/7,-3/5"});
  REQUIRE(r.code == 0);
  const auto d = Json::parse(r.out)["decomposition"];
  CHECK(d["variety_dim"] == 2);
  CHECK(d["sine_dim"] == 1);
  CHECK(d["degree"] == 1);
  CHECK(d["residual"] == "0");
  for (std::size_t i = 0; i < d["atoms"].size(); ++i) {
    const auto alpha = d["atoms"][i]["alpha"];
    if (alpha == Json::parse("[1, 0]")) CHECK(d["coefficients"][i] == "3");
    if (alpha == Json::parse("[0, 1]")) CHECK(d["coefficients"][i] == "-5");
  }
}

TEST_CASE("a forced box too small to stabilize is inconclusive") {
  Scratch s;
  const auto c1 = s.file("c1.json", R"({"kind": "chebyshev", "dim": 1})");
  const auto g = s.file("g.json", R"([{"coeff": "1", "alpha": [3], "lambda": ["1/5"]}])");
  CHECK(call({"--spec", c1, "--box", "1", "synth", "--function", g, "--lambda", "1/5"}).code == 3);
}

TEST_CASE("the installed binary returns the same exit codes") {
  const char* bin = std::getenv("HYPERMOMENT_BIN");
  if (bin == nullptr) return;
  Scratch s;
  const auto bad = s.file("bad.json", kBadRecurrence);
  const std::string cmd = std::string(bin) + " --spec " + bad + " --box 4 verify > " + s.path("o.txt") + " 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 1);
}
