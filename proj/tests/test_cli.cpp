#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "vhlf/square_complex.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout only; stderr carries logs and timing.
Run run(const std::string& args) {
  const std::string cmd = std::string(VHLF_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("verify") {
  const Run ok = run("verify --q 3 --tau 2");
  CHECK(ok.code == 0);
  const auto doc = json_of(ok);
  REQUIRE(doc["checks"].is_array());
  CHECK(doc["checks"].size() >= 11);
  std::vector<std::string> names;
  for (const auto& c : doc["checks"]) {
    CHECK(c["ok"] == true);
    names.push_back(c["name"]);
  }
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(run("verify --q 3 --tau 1").code == 2);
  CHECK(run("verify --q 4 --tau 2").code == 2);
  CHECK(run("verify --q 3").code == 2);
  CHECK(run("verify --p 5 --r 1 --tau 3").code == 0);
  CHECK(run("verify --q 9 --tau 2 --c 4").code == 0);
  CHECK(run("verify --q 5 --tau 2 --zeta 1").code == 2);
}

TEST_CASE("construct writes the q = 3 complex") {
  const auto path = std::filesystem::temp_directory_path() / "vhlf_cli_construct.json";
  std::filesystem::remove(path);
  const Run r = run("construct --q 3 --tau 2 --out " + path.string());
  CHECK(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  const vhlf::OneVertexComplex cx = vhlf::import_json(nlohmann::json::parse(in));
  CHECK(vhlf::counts(cx).edges == 4);
  CHECK(vhlf::counts(cx).squares == 4);
  CHECK(cx.q == 3);
  std::filesystem::remove(path);
}

TEST_CASE("mass") {
  const Run r = run("mass --m 1 --n 1 --method both");
  CHECK(r.code == 0);
  const auto doc = json_of(r);
  CHECK(doc["formula"] == 3);
  CHECK(doc["enumerate"] == 3);
  CHECK(doc["weighted"] == "3/4");
  CHECK(doc["agree"] == true);
  CHECK(json_of(run("mass --m 2 --n 2 --method formula"))["formula"] == 541);
  CHECK(run("mass --m 3 --n 3 --method formula").code == 2);
}

TEST_CASE("classify") {
  const auto flip = json_of(run("classify --q 5 --tau1 2 --tau2 4"));
  CHECK(flip["related"] == true);
  CHECK(flip["flip"] == true);
  CHECK(flip["relations_checked"] == 36);
  CHECK(flip["generator_map"].size() == 12);
  const auto none = json_of(run("classify --q 5 --tau1 2 --tau2 3"));
  CHECK(none["related"] == false);
  const auto frob = json_of(run("classify --q 9 --tau1 3 --tau2 6"));
  CHECK(frob["related"] == true);
  CHECK(frob["frobenius_power"] == 1);
  CHECK(frob["flip"] == false);
  CHECK(frob["relations_checked"] == 100);
}

TEST_CASE("presentation, balls, invariants, local groups") {
  const Run plain = run("presentation --q 3 --tau 2");
  CHECK(plain.code == 0);
  CHECK(plain.out.find("generators: a0 a1 a2 a3 b0 b1 b2 b3") != std::string::npos);
  const auto js = json_of(run("presentation --q 3 --tau 2 --format json --no-dedup"));
  CHECK(js["relators"].size() == 20);
  CHECK(run("presentation --q 3 --tau 2 --group lambda --format gap").code == 0);
  CHECK(run("presentation --q 3 --tau 2 --group nonsense").code == 2);

  const auto balls = json_of(run("balls --q 3 --tau 2 --k 2 --l 1"));
  CHECK(balls["ok"] == true);
  CHECK(run("balls --q 3 --tau 2 --k 4 --l 3").code == 2);

  const auto inv = json_of(run("invariants --q 3 --tau 2"));
  CHECK(inv["fake_quadric"] == true);
  CHECK(inv["c1sq"] == 8);
  CHECK(inv["c2"] == 4);

  const auto lg = json_of(run("local-groups --q 5 --tau 4"));
  CHECK(lg["P_A"]["order"] == 120);
  CHECK(lg["P_B"]["order"] == 60);
}

TEST_CASE("outputs are byte-identical across runs") {
  for (const char* args : {"verify --q 5 --tau 3", "presentation --q 7 --tau 3 --format json", "balls --q 5 --tau 2",
                           "classify --q 9 --tau1 2 --tau2 8", "mass --m 2 --n 1 --method both"}) {
    CAPTURE(args);
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}
