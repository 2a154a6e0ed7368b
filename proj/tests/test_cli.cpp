#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/cli.hpp"
#include "dunkl/solution_builder.hpp"

using namespace dunkl;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dunkl_oscillator");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("spectrum lists the reference energies") {
  const Outcome r = invoke({"spectrum", "--sector", "1,1", "--n", "0..1", "--k-max", "1"});
  REQUIRE(r.code == cli::kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "sector,n,branch,k,k_prime,energy,regime,status");
  CHECK(rows[1] == "+1+1,0,+,0,,1,positive,invalid_pair");
  bool found = false;
  for (const auto& row : rows) {
    const auto cells = split(row);
    if (cells[1] == "1" && cells[2] == "+" && cells[3] == "1") {
      found = true;
      CHECK(std::stod(cells[5]) == doctest::Approx(std::sqrt(13.0)).epsilon(1e-15));
      CHECK(cells[4] == "0");
      CHECK(cells[7] == "ok");
    }
  }
  CHECK(found);
}

TEST_CASE("spectrum JSON rows carry the same data") {
  const Outcome r = invoke({"spectrum", "--sector", "1,1", "--n", "1", "--branch", "+", "--k", "1",
                            "--k-max", "1", "--format", "json", "--negative-energies"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("regime") == "positive");
  REQUIRE(j.at("rows").size() == 2);
  CHECK(j.at("rows")[0].at("energy").get<double>() == doctest::Approx(std::sqrt(13.0)));
  CHECK(j.at("rows")[1].at("energy").get<double>() == doctest::Approx(-std::sqrt(13.0)));
}

TEST_CASE("spectrum keeps unphysical invalid pairs as blank rows") {
  const Outcome r = invoke({"spectrum", "--mu-x", "1", "--mu-y", "1", "--sector", "1,1", "--n", "1",
                            "--branch", "-", "--k-max", "3"});
  REQUIRE(r.code == cli::kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(split(rows[1])[5].empty());
  CHECK(split(rows[1])[7] == "invalid_pair");
  CHECK(split(rows[4])[7] == "ok");
}

TEST_CASE("critical regime prints a message and succeeds") {
  const Outcome r = invoke({"spectrum", "--omega", "1", "--omega-c", "2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("critical") != std::string::npos);
  CHECK(r.out.find("--energy") != std::string::npos);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(invoke({"spectrum", "--mu-x", "0.3"}).code == cli::kExitConfigError);
  CHECK(invoke({"verify", "bogus"}).code == cli::kExitConfigError);
  CHECK(invoke({"spectrum", "--precision", "3"}).code == cli::kExitConfigError);
  CHECK(invoke({"spectrum", "--sector", "2,1"}).code == cli::kExitConfigError);
  CHECK(invoke({"spectrum", "--omega", "-1"}).code == cli::kExitConfigError);
  CHECK(invoke({"--no-such-flag"}).code == cli::kExitConfigError);
  CHECK(invoke({"wavefunction", "--sector", "1,1", "--n", "1", "--branch", "+", "--mu-x", "1",
                "--mu-y", "1", "--k", "0"})
            .code == cli::kExitConfigError);
  CHECK(invoke({"--help"}).code == cli::kExitOk);
}

TEST_CASE("verify exit codes follow the report") {
  const Outcome ok = invoke({"verify", "angular", "--n", "0..2"});
  CHECK(ok.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("suite") == "angular");
  CHECK(j.at("pass") == true);
  CHECK(j.at("checks").size() == 18);

  const Outcome strict =
      invoke({"verify", "kg", "--sector", "1,1", "--n", "1", "--branch", "+", "--tol", "1e-15"});
  CHECK(strict.code == cli::kExitCheckFailed);
  CHECK(nlohmann::json::parse(strict.out).at("pass") == false);

  const Outcome kg = invoke({"verify", "kg", "--sector", "1,1", "--n", "1", "--branch", "+"});
  CHECK(kg.code == cli::kExitOk);
  CHECK(invoke({"verify", "nrlimit", "--omega-c", "2"}).code == cli::kExitConfigError);
}

TEST_CASE("wavefunction grid shape, finiteness and round trip") {
  const std::vector<std::string> args = {"wavefunction", "--mu-x",   "0.5", "--mu-y", "0.5",
                                         "--sector",     "1,1",      "--n", "1",      "--branch",
                                         "+",            "--k",      "2",   "--grid", "4x4"};
  const Outcome r = invoke(args);
  REQUIRE(r.code == cli::kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 17);
  CHECK(rows[0] == "rho,phi,re_upper,im_upper,re_lower,im_lower");

  const AngularMode mode{{1, 1}, AngularIndex::from_twice(2), Branch::Plus, {0.5, 0.5}};
  const SpinorSolution s = build_spinor(mode, 2, OscillatorConfig{});
  double previous_rho = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split(rows[i]);
    REQUIRE(cells.size() == 6);
    std::vector<double> v;
    for (const auto& cell : cells) v.push_back(std::stod(cell));
    for (double x : v) CHECK(std::isfinite(x));
    CHECK(v[0] >= previous_rho);
    previous_rho = v[0];
    const Complex upper = s.upper.at({v[0], v[1]});
    const Complex lower = s.lower.at({v[0], v[1]});
    CHECK(v[2] == upper.real());
    CHECK(v[3] == upper.imag());
    CHECK(v[4] == lower.real());
    CHECK(v[5] == lower.imag());
  }
}

TEST_CASE("critical wavefunction needs an energy") {
  const std::vector<std::string> base = {"wavefunction", "--omega-c", "2",  "--sector", "1,1",
                                         "--n",          "1",         "--branch", "+", "--grid",
                                         "3x5"};
  CHECK(invoke(base).code == cli::kExitConfigError);
  auto with_energy = base;
  with_energy.insert(with_energy.end(), {"--energy", "2"});
  const Outcome r = invoke(with_energy);
  CHECK(r.code == cli::kExitOk);
  CHECK(lines(r.out).size() == 16);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args = {"verify", "all", "--mu-x", "1", "--mu-y", "1", "--n",
                                         "0..1",   "--threads", "1"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);

  auto threaded = args;
  threaded.back() = "3";
  const Outcome c = invoke(threaded);
  const auto ja = nlohmann::json::parse(a.out);
  const auto jc = nlohmann::json::parse(c.out);
  REQUIRE(ja.at("checks").size() == jc.at("checks").size());
  for (std::size_t i = 0; i < ja.at("checks").size(); ++i) {
    CHECK(ja.at("checks")[i].at("name") == jc.at("checks")[i].at("name"));
    CHECK(std::fabs(ja.at("checks")[i].at("residual").get<double>() -
                    jc.at("checks")[i].at("residual").get<double>()) <= 1e-13);
  }

  const Outcome s1 = invoke({"spectrum", "--mu-x", "1", "--mu-y", "1"});
  const Outcome s2 = invoke({"spectrum", "--mu-x", "1", "--mu-y", "1"});
  CHECK(s1.code == cli::kExitOk);
  CHECK(s1.out == s2.out);
}
