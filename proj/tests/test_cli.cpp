#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hyperorth/cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using hyperorth::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "hyperorth_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const char* kKoornwinder = R"({"family":"koornwinder","q":"1/2","t":"1/3","t_r":["1/2","-1/3","1/4","-1/5"]})";

}  // namespace

TEST_CASE("ortho emits monic coordinates with config and version") {
  const Result r = invoke({"ortho", "--N", "1", "--K", "4", "--lambda", "2"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("hyperorth").get<std::string>() == "0.1.0");
  CHECK(doc.at("config").at("N") == 1);
  const auto& coords = doc.at("results").at(0).at("coords");
  REQUIRE(coords.size() == 3);
  CHECK(coords.at(2).at("value") == "1/1");
  CHECK(doc.at("results").at(0).at("norm_sq").at("value") == "1/1");
}

TEST_CASE("config file with flag overrides") {
  const fs::path cfg = scratch("hl.json");
  std::ofstream(cfg) << R"({"experiment": "exact", "spec": {"family": "explicit", "c0": ["1"], "c1": ["1"]},
                            "N": 3, "K": 3, "lambda_max": 2})";
  const Result r = invoke({"exact", "--config", cfg.string(), "--N", "2", "--lambda-max", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# hyperorth 0.1.0\n# config: ", 0) == 0);
  CHECK(r.out.find("\"N\":2") != std::string::npos);
  CHECK(r.out.find("fail") == std::string::npos);
  CHECK(r.out.find("4 4,0,0,") != std::string::npos);
}

TEST_CASE("configuration errors exit with 2") {
  const fs::path cfg = scratch("bad.json");
  std::ofstream(cfg) << R"({"spec": {"family": "koornwinder", "q": "1/0", "t": "1/3", "t_r": ["1/2","-1/3","1/4","-1/5"]}})";
  const Result bad_rational = invoke({"ortho", "--config", cfg.string()});
  CHECK(bad_rational.code == 2);
  CHECK(bad_rational.err.find("'q'") != std::string::npos);

  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"ortho", "--lambda", "1,2", "--N", "2"}).code == 2);
  CHECK(invoke({"ortho", "--N", "2", "--lambda", "1,1,1"}).code == 2);
  CHECK(invoke({"ortho", "--config", scratch("missing.json").string()}).code == 2);
  CHECK(invoke({"ortho", "--spec", "{not json"}).code == 2);
  CHECK(invoke({"decay-ray", "--N", "2", "--lambda", "1,1"}).code == 2);
  CHECK(invoke({"ortho", "--N", "1", "--K", "0"}).code == 2);
}

TEST_CASE("verification failures exit with 1") {
  // Incomparable pairs at a tiny K cannot meet a 1e-12 tolerance.
  const Result r = invoke({"ortho-scan", "--spec", kKoornwinder, "--N", "2", "--K", "4", "--lambda-max", "3",
                           "--tolerance", "1e-12"});
  CHECK(r.code == 1);
  const Result ok = invoke({"ortho-scan", "--N", "2", "--K", "3", "--lambda-max", "2"});
  CHECK(ok.code == 0);
}

TEST_CASE("subcommands produce their formats") {
  const Result gram = invoke({"gram", "--N", "1", "--K", "3", "--lambda", "1"});
  CHECK(gram.code == 0);
  CHECK(gram.out.find("mu,0,1\n0,1/1,0/1\n1,0/1,1/1\n") != std::string::npos);

  const Result asym = invoke({"asym", "--spec", R"({"family":"hall-littlewood","t":"0","t0":"1/2","t1":"0"})", "--N",
                              "1", "--lambda", "2", "--m", "1"});
  CHECK(asym.code == 0);
  CHECK(asym.out.find("\"-1/2\"") != std::string::npos);

  const Result stab = invoke({"stability", "--spec", kKoornwinder, "--N", "1", "--K", "8", "--k-step", "4",
                              "--lambda", "1"});
  CHECK(stab.code == 0);
  CHECK(nlohmann::json::parse(stab.out).at("results").at(0).contains("ratio"));

  const fs::path csv = scratch("ray.csv"), summary = scratch("ray.json");
  const Result ray = invoke({"decay-ray", "--spec", kKoornwinder, "--N", "1", "--K", "16", "--lambda", "1",
                             "--ell-max", "4", "--m-ref-offset", "6", "--output", csv.string(), "--summary",
                             summary.string()});
  CHECK(ray.code == 0);
  CHECK(slurp(csv).find("ell,lambda,min_gap,m,m_ref,K,err_norm,n_lambda,asym_norm,tail_hint") != std::string::npos);
  CHECK(nlohmann::json::parse(slurp(summary)).contains("ray_fit"));
}

TEST_CASE("outputs are identical across runs and thread counts") {
  for (const std::string kind : {"ortho", "gram", "ortho-scan"}) {
    std::vector<std::string> base{kind, "--spec", kKoornwinder, "--N", "2", "--K", "6", "--lambda", "2,1"};
    auto one = base, four = base;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    const Result a = invoke(one), b = invoke(four), c = invoke(one);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
}
