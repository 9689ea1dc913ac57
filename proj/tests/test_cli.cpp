#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "gabor/cli.hpp"

namespace fs = std::filesystem;
using gabor::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string k, v;
  while (in >> k >> v)
    if (k == key) return v;
  return {};
}

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / ("gabor_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval prints bounds with fifteen significant digits") {
    auto r = call({"eval", "--family", "sech", "--n", "2", "--eta", "1.41421356"});
    CHECK(r.code == 0);
    CHECK(std::stod(field(r.out, "A")) == doctest::Approx(1.18309772453798).epsilon(1e-13));
    CHECK(field(r.out, "A").size() <= 17);
    CHECK(std::stod(field(r.out, "B")) == doctest::Approx(2.85625057219234).epsilon(1e-13));
  }

  TEST_CASE("eval of the box window is tight") {
    auto r = call({"eval", "--family", "cutoff1", "--n", "3", "--a", "1", "--gamma", "0"});
    CHECK(r.code == 0);
    CHECK(field(r.out, "A") == "3");
    CHECK(field(r.out, "B") == "3");
    CHECK(field(r.out, "kappa") == "1");
  }

  TEST_CASE("degenerate kappa prints inf") {
    auto r = call({"eval", "--family", "sech", "--n", "1", "--eta", "1"});
    CHECK(r.code == 0);
    CHECK(field(r.out, "kappa") == "inf");
  }

  TEST_CASE("exit codes") {
    CHECK(call({"eval", "--family", "twosided", "--n", "1", "--eta", "2"}).code == 2);
    CHECK(call({"eval", "--family", "sech", "--n", "2", "--eta", "-1"}).code == 2);
    CHECK(call({"eval", "--family", "sech", "--n", "2"}).code == 2);
    CHECK(call({"eval", "--family", "nope", "--n", "2", "--eta", "1"}).code == 2);
    CHECK(call({"eval", "--family", "sech", "--n", "two", "--eta", "1"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"sweep", "--family", "sech", "--n", "2", "--eta-range", "1", "2", "5", "--output",
                "/nonexistent-dir/x.csv"})
              .code == 3);
    CHECK(call({"optimize", "--family", "cutoff1", "--n", "2", "--quantity", "A"}).code == 4);
    CHECK(call({"certify", "--filter", "psi_small", "--inject-negative"}).code == 5);
    CHECK(call({"certify", "--filter", "no-such-certificate"}).code == 2);
  }

  TEST_CASE("depth exceeded maps to its own code") {
    fs::path corpus = scratch_dir() / "tangent.json";
    std::ofstream(corpus) << R"json([{"name": "tangent", "expression": "(^ (- x 1) 2)", "domain": [0, 2],
                                 "claim": "positive", "max_depth": 10}])json";
    auto r = call({"certify", "--corpus", corpus.string()});
    CHECK(r.code == 6);
    CHECK(nlohmann::json::parse(r.out)["status"] == "depth_exceeded");
  }

  TEST_CASE("bad env tolerance is a parameter error") {
    ::setenv("GABOR_BOUNDS_EPS", "banana", 1);
    CHECK(call({"eval", "--family", "sech", "--n", "2", "--eta", "1"}).code == 2);
    ::setenv("GABOR_BOUNDS_EPS", "1e-6", 1);
    auto r = call({"eval", "--family", "sech", "--n", "2", "--eta", "1"});
    CHECK(r.code == 0);
    CHECK(std::stod(field(r.out, "trunc_bound")) <= 4e-6 * 3);
    ::unsetenv("GABOR_BOUNDS_EPS");
  }

  TEST_CASE("optimize reports the square lattice") {
    auto r = call({"optimize", "--family", "sech", "--n", "5", "--quantity", "A"});
    CHECK(r.code == 0);
    CHECK(std::stod(field(r.out, "eta_star")) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
    CHECK(std::stod(field(r.out, "a")) == doctest::Approx(1 / std::sqrt(5.0)).epsilon(1e-9));
    CHECK(std::stod(field(r.out, "b")) == doctest::Approx(1 / std::sqrt(5.0)).epsilon(1e-9));
    r = call({"optimize", "--family", "onesided", "--n", "2", "--quantity", "kappa"});
    CHECK(std::stod(field(r.out, "eta_star")) == doctest::Approx(std::asinh(2.0)).epsilon(1e-10));
    r = call({"optimize", "--family", "cutoff2", "--n", "3", "--quantity", "kappa", "--over", "gamma", "--a", "1"});
    CHECK(r.code == 0);
    CHECK(std::stod(field(r.out, "gamma_star")) == doctest::Approx(std::asinh(3.0) / 3).epsilon(1e-10));
  }

  TEST_CASE("sweep csv layout and determinism") {
    fs::path dir = scratch_dir();
    std::vector<std::string> args{"sweep", "--family", "sech", "--n", "2,5,8", "--eta-range", "0.8", "4", "33",
                                  "--output", (dir / "sech.csv").string()};
    REQUIRE(call(args).code == 0);
    std::string first = slurp(dir / "sech_n5.csv");
    REQUIRE(call(args).code == 0);
    CHECK(slurp(dir / "sech_n5.csv") == first);
    CHECK(first.rfind("eta,A,B,kappa,trunc_bound\n", 0) == 0);
    std::istringstream in(first);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    double best_eta = 0, best_B = 1e300;
    while (std::getline(in, line)) {
      ++rows;
      std::istringstream cells(line);
      std::string eta, A, B;
      std::getline(cells, eta, ',');
      std::getline(cells, A, ',');
      std::getline(cells, B, ',');
      if (std::stod(B) < best_B) {
        best_B = std::stod(B);
        best_eta = std::stod(eta);
      }
    }
    CHECK(rows == 33);
    CHECK(std::abs(best_eta - std::sqrt(5.0)) <= 0.1);
    CHECK(fs::exists(dir / "sech_n2.csv"));
    CHECK(fs::exists(dir / "sech_n8.csv"));
  }

  TEST_CASE("gamma sweep of the cut-off m1 window") {
    auto r = call({"sweep", "--family", "cutoff1", "--n", "2", "--a", "1", "--gamma-range", "0", "2", "11"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("gamma,A,B,kappa,trunc_bound\n", 0) == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    double prevA = 1e300, prevB = -1e300;
    while (std::getline(in, line)) {
      std::istringstream cells(line);
      std::string g, A, B;
      std::getline(cells, g, ',');
      std::getline(cells, A, ',');
      std::getline(cells, B, ',');
      CHECK(std::stod(A) < prevA);
      CHECK(std::stod(B) > prevB);
      prevA = std::stod(A);
      prevB = std::stod(B);
    }
  }

  TEST_CASE("two-sided sweep brackets the lower-bound maximum") {
    auto r = call({"sweep", "--family", "twosided", "--n", "2", "--eta-range", "2.38", "4.2", "183", "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    auto rows = doc["series"][0]["rows"];
    std::size_t arg = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i]["A"].get<double>() > rows[arg]["A"].get<double>()) arg = i;
    CHECK(arg > 0);
    CHECK(arg + 1 < rows.size());
    CHECK(rows[arg]["eta"].get<double>() > 3.6);
  }

  TEST_CASE("json sweep encodes infinite kappa as a string") {
    auto r = call({"sweep", "--family", "sech", "--n", "1", "--eta-range", "0.5", "2", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["series"][0]["rows"][0]["kappa"] == "inf");
  }

  TEST_CASE("multi-density csv to stdout is refused") {
    CHECK(call({"sweep", "--family", "sech", "--n", "2,3", "--eta-range", "1", "2", "3"}).code == 2);
    CHECK(call({"sweep", "--family", "sech", "--n", "2", "--eta-range", "1", "2", "1"}).code == 2);
    CHECK(call({"sweep", "--family", "sech", "--n", "2", "--eta-range", "2", "1", "3"}).code == 2);
  }

  TEST_CASE("certify filter and output file") {
    auto r = call({"certify", "--filter", "psi_small"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["results"].size() == 1);
    CHECK(doc["results"][0]["status"] == "proved");
    fs::path out = scratch_dir() / "cert.json";
    r = call({"certify", "--inject-negative", "--filter", "xcothx", "--output", out.string()});
    CHECK(r.code == 5);
    auto saved = nlohmann::json::parse(slurp(out));
    CHECK(saved["status"] == "failed");
    CHECK(saved["results"].back().contains("witness"));
  }

  TEST_CASE("oracle subcommand") {
    auto r = call({"oracle", "--family", "cutoff1", "--gamma", "0", "--n", "4", "--eta", "2", "--L", "512"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["A_d"].get<double>() == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(doc["B_d"].get<double>() == doctest::Approx(4.0).epsilon(1e-12));
    r = call({"oracle", "--family", "sech", "--n", "2", "--eta", "3.14159265358979", "--L", "512", "--max-denominator", "8"});
    CHECK(r.code == 0);
    doc = nlohmann::json::parse(r.out);
    CHECK(doc["note"].get<std::string>().find("22/7") != std::string::npos);
    CHECK(call({"oracle", "--family", "sech", "--n", "5", "--eta", "1", "--L", "12"}).code == 2);
  }

  TEST_CASE("helpers") {
    CHECK(gabor::cli::format_number(1.0 / 3) == "0.333333333333333");
    CHECK(gabor::cli::format_number(INFINITY) == "inf");
    CHECK(gabor::cli::per_n_path("out/data.csv", 3) == "out/data_n3.csv");
    CHECK(gabor::cli::per_n_path("data", 2) == "data_n2");
    CHECK(gabor::cli::per_n_path("a.b/data", 2) == "a.b/data_n2");
  }
}
