#include <doctest.h>

#include <json.hpp>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "logitlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = logitlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct Workdir {
  fs::path root;
  Workdir() {
    root = fs::temp_directory_path() / ("logitlab_cli_" + std::to_string(::getpid()));
    fs::create_directories(root);
  }
  ~Workdir() { fs::remove_all(root); }
  std::string operator/(const std::string& name) const { return (root / name).string(); }
};

std::string make_game(const Workdir& dir, const std::string& name,
                      std::vector<std::string> args) {
  const std::string path = dir / name;
  args.insert(args.begin(), "generate");
  args.push_back("-o");
  args.push_back(path);
  REQUIRE(invoke(args).code == 0);
  return path;
}

}  // namespace

TEST_CASE("usage errors exit with 1") {
  const Result none = invoke({});
  CHECK(none.code == 1);
  CHECK(none.err.find("Usage") != std::string::npos);
  CHECK(none.out.empty());
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"mix", "--beta", "1"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"--version"}).out == "0.1.0\n");
}

TEST_CASE("mix reports t_mix and the distance curve") {
  Workdir dir;
  const std::string ring4 = make_game(dir, "ring4.game.json", {"--family", "coordination", "--n", "4"});
  const Result r = invoke({"mix", "--game", ring4, "--beta", "1", "--eps", "0.25"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["t_mix"] == 14);
  CHECK(j["distances"].size() == 15);
  CHECK(j["rng"] == "splitmix64");
  CHECK(j["config"]["eps"] == 0.25);
  CHECK(j["distances"][14].get<double>() <= 0.25);
  CHECK(j["distances"][13].get<double>() > 0.25);

  const Result csv = invoke({"mix", "--game", ring4, "--beta", "1", "--format", "csv"});
  CHECK(csv.out.rfind("t,d\n0,", 0) == 0);

  CHECK(invoke({"mix", "--game", ring4, "--beta", "5", "--cap", "3"}).code == 2);
  CHECK(invoke({"mix", "--game", ring4, "--beta", "-1"}).code == 1);
  CHECK(invoke({"mix", "--game", dir / "missing.json", "--beta", "1"}).code == 1);
}

TEST_CASE("bounds on the lower-bound family are all satisfied") {
  Workdir dir;
  const std::string lb = make_game(dir, "lbpot.game.json",
                                   {"--family", "lbpot", "--n", "4", "--g", "2", "--l", "1"});
  const Result r = invoke({"bounds", "--game", lb, "--beta", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_satisfied"] == true);
  int checked = 0;
  for (const auto& b : j["bounds"]) {
    if (b["applicable"] == true && !b["satisfied"].is_null()) {
      CHECK(b["satisfied"] == true);
      ++checked;
    }
  }
  CHECK(checked >= 5);
  CHECK(j["exact"]["t_mix"] == 29);

  const Result csv = invoke({"bounds", "--game", lb, "--beta", "2", "--format", "csv"});
  CHECK(csv.out.rfind("id,kind,target,applicable,value,exact,satisfied,formula,reason\n", 0) == 0);
}

TEST_CASE("sweep reports rows and the exponential fit") {
  Workdir dir;
  const std::string lb = make_game(dir, "lbpot.game.json",
                                   {"--family", "lbpot", "--n", "4", "--g", "2", "--l", "1"});
  const Result r = invoke({"sweep", "--game", lb, "--beta", "0.5,1,1.5,2,2.5,3,3.5,4"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const double slope = j["fit"]["log_tmix_slope"];
  CHECK(slope >= 1.0);
  CHECK(slope <= 2.4);
  CHECK(j["rows"].size() == 8);
  CHECK(j["rows"][7]["t_mix_exact"] == 793);

  const std::string dom = make_game(dir, "dom.game.json", {"--family", "dominant", "--n", "2"});
  const auto d = nlohmann::json::parse(invoke({"sweep", "--game", dom, "--beta", "5,10,20,40"}).out);
  CHECK(d["fit"]["tmix_max_over_min"].get<double>() <= 4.0);

  const Result csv = invoke({"sweep", "--game", lb, "--beta", "1,2", "--format", "csv"});
  CHECK(csv.out.rfind("beta,t_mix_exact,t_rel,delta_phi_tmix,", 0) == 0);
  CHECK(csv.err.find("slope") != std::string::npos);

  CHECK(invoke({"sweep", "--game", lb}).code == 1);
  CHECK(invoke({"sweep", "--game", lb, "--beta", ""}).code == 1);
}

TEST_CASE("hypothesis and budget failures exit with 2") {
  Workdir dir;
  const std::string lb = make_game(dir, "lbpot.game.json",
                                   {"--family", "lbpot", "--n", "4", "--g", "2", "--l", "1"});
  CHECK(invoke({"cutwidth", "--game", lb}).code == 2);
  const std::string ring = make_game(dir, "ring.game.json", {"--family", "coordination", "--n", "4"});
  CHECK(invoke({"bottleneck", "--game", ring, "--beta", "1", "--set", "0,1,2,3,4,5,6,7,8"}).code == 2);
  CHECK(invoke({"generate", "--family", "lbpot", "--n", "3", "--g", "2", "--l", "1"}).code == 2);
  CHECK(invoke({"generate", "--family", "random", "--n", "30"}).code == 2);
}

TEST_CASE("simulate writes per-trial rows and a summary") {
  Workdir dir;
  const std::string ring = make_game(dir, "ring.game.json", {"--family", "coordination", "--n", "4"});
  const std::string trials = dir / "trials.csv";
  const Result r = invoke({"simulate", "--game", ring, "--beta", "1", "--t", "10", "--trials",
                           "50", "--trials-out", trials});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coupling"]["estimate"].get<double>() >= 0.0);
  const std::string rows = slurp(trials);
  CHECK(rows.rfind("pair,x,y,trial,seed,tau\n", 0) == 0);
  CHECK(std::count(rows.begin(), rows.end(), '\n') == 51);

  const Result h = invoke({"simulate", "--game", ring, "--beta", "1", "--mode", "hitting",
                           "--start", "5", "--target", "0,15", "--trials", "40"});
  REQUIRE(h.code == 0);
  CHECK(nlohmann::json::parse(h.out)["hitting"]["censored"] == 0);
}

TEST_CASE("every command is byte-for-byte reproducible") {
  Workdir dir;
  const std::string ring = make_game(dir, "ring.game.json", {"--family", "coordination", "--n", "4"});
  const std::vector<std::vector<std::string>> commands{
      {"generate", "--family", "random", "--n", "3", "--m", "3", "--seed", "9"},
      {"analyze", "--game", ring, "--beta", "1"},
      {"mix", "--game", ring, "--beta", "1"},
      {"zeta", "--game", ring},
      {"cutwidth", "--game", ring},
      {"bottleneck", "--game", ring, "--beta", "1"},
      {"bounds", "--game", ring, "--beta", "1"},
      {"simulate", "--game", ring, "--beta", "1", "--t", "5", "--trials", "30", "--seed", "4"},
      {"simulate", "--game", ring, "--beta", "1", "--mode", "hitting", "--trials", "30"},
      {"sweep", "--game", ring, "--beta", "0.5,1"},
  };
  for (const auto& command : commands) {
    for (const std::string& format : {std::string("json"), std::string("csv")}) {
      if (format == "csv" && (command[0] == "generate" || command[0] == "analyze" ||
                              command[0] == "zeta" || command[0] == "cutwidth" ||
                              command[0] == "bottleneck")) {
        continue;
      }
      std::string first, second;
      for (std::string* sink : {&first, &second}) {
        auto args = command;
        const std::string path = dir / ("out_" + command[0]);
        args.insert(args.end(), {"-o", path});
        if (format == "csv") args.insert(args.end(), {"--format", format});
        REQUIRE(invoke(args).code == 0);
        *sink = slurp(path);
      }
      CHECK_MESSAGE(first == second, command[0]);
      CHECK(!first.empty());
    }
  }
}
