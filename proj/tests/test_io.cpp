#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "grover/io.hpp"
#include "grover/search.hpp"
#include "grover/statevector.hpp"
#include "oracles.hpp"

using namespace grover;

TEST_CASE("shortest round-trip double formatting") {
  auto gen = oracles::rng(501);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 5000; ++trial) {
    const double v = dist(gen) * std::pow(10.0, trial % 40 - 20);
    CHECK(io::parse_double(io::format_double(v)) == v);
  }
  for (double v : {0.0, -0.0, 1.0 / 3.0, 0.1, 1e300, 5e-324}) {
    CHECK(io::parse_double(io::format_double(v)) == v);
  }
}

TEST_CASE("multivector JSON round-trips bit-exactly") {
  auto gen = oracles::rng(502);
  for (int trial = 0; trial < 1000; ++trial) {
    const cl3::Multivector m = oracles::random_multivector(gen, 10.0);
    const auto j = io::multivector_to_json(m);
    // through text, as the CLI and golden files do
    const auto parsed = nlohmann::json::parse(j.dump());
    const cl3::Multivector back = io::multivector_from_json(parsed);
    for (int i = 0; i < 8; ++i) {
      CHECK(back.c[static_cast<std::size_t>(i)] == m.c[static_cast<std::size_t>(i)]);
    }
  }
  CHECK_THROWS_AS(io::multivector_from_json(nlohmann::json::array({1, 2})),
                  std::invalid_argument);

  // documented blade order: 1, e1, e2, e3, e12, e13, e23, e123
  cl3::Multivector ordered;
  for (int i = 0; i < 8; ++i) ordered.c[static_cast<std::size_t>(i)] = i + 1;
  CHECK(io::multivector_to_json(ordered).dump() == "[1.0,2.0,3.0,4.0,5.0,6.0,7.0,8.0]");
  const cl3::Multivector rotor_pi3 = standard_rotor(kPi / 3.0).to_multivector();
  const auto j = io::multivector_to_json(rotor_pi3);
  CHECK(j[0].get<double>() == std::cos(kPi / 3.0));   // scalar
  CHECK(j[5].get<double>() == -std::sin(kPi / 3.0));  // e13 = -iota e2
  CHECK(j[1] == 0.0);
  CHECK(j[7] == 0.0);
}

TEST_CASE("trajectory CSV and JSON round-trip and agree") {
  SearchSpec spec(16, 1);
  const double phi = solve_exact_phase(spec.theta(), 3);
  spec.phi1 = spec.phi2 = phi;
  const auto records = io::records_from(run_trajectory(spec, 3));

  std::stringstream csv;
  io::write_csv(csv, records);
  CHECK(csv.str().substr(0, 25) == "k,px,py,pz,success_prob\n0");
  const auto from_csv = io::read_csv(csv);

  std::stringstream js;
  io::write_json(js, records);
  const auto from_json = io::read_json(js);

  REQUIRE(from_csv.size() == records.size());
  REQUIRE(from_json.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto* got : {&from_csv[i], &from_json[i]}) {
      CHECK(got->k == records[i].k);
      REQUIRE(got->polarization.has_value());
      CHECK(got->polarization->x == records[i].polarization->x);
      CHECK(got->polarization->y == records[i].polarization->y);
      CHECK(got->polarization->z == records[i].polarization->z);
      CHECK(got->success_prob == records[i].success_prob);
    }
  }
}

TEST_CASE("statevector records leave the polarization columns empty") {
  const auto sol = sv::SolutionSet::first(1, 4);
  const auto records = io::records_from(sv::run_search(4, sol, kPi, kPi, 1));

  std::stringstream csv;
  io::write_csv(csv, records);
  std::string line;
  std::getline(csv, line);  // header
  std::getline(csv, line);
  CHECK(line == "0,,,,0.25");
  std::getline(csv, line);
  CHECK(line == "1,,,,1");

  csv.clear();
  csv.seekg(0);
  const auto back = io::read_csv(csv);
  REQUIRE(back.size() == 2);
  CHECK_FALSE(back[0].polarization.has_value());
  CHECK(back[1].success_prob == 1.0);

  std::stringstream js;
  io::write_json(js, records);
  const auto jback = io::read_json(js);
  REQUIRE(jback.size() == 2);
  CHECK_FALSE(jback[0].polarization.has_value());
  CHECK(jback[0].success_prob == 0.25);
}

TEST_CASE("identical runs produce byte-identical files") {
  SearchSpec spec(64, 3);
  const auto records = io::records_from(run_trajectory(spec, 10));

  std::stringstream a, b;
  io::write_csv(a, records);
  io::write_csv(b, io::records_from(run_trajectory(spec, 10)));
  CHECK(a.str() == b.str());

  std::stringstream ja, jb;
  io::write_json(ja, records);
  io::write_json(jb, io::records_from(run_trajectory(spec, 10)));
  CHECK(ja.str() == jb.str());
}

TEST_CASE("csv parser rejects malformed input") {
  std::stringstream missing_header("0,1,2,3,4\n");
  CHECK_THROWS_AS(io::read_csv(missing_header), std::invalid_argument);

  std::stringstream short_row("k,px,py,pz,success_prob\n0,1,2\n");
  CHECK_THROWS_AS(io::read_csv(short_row), std::invalid_argument);

  std::stringstream bad_number("k,px,py,pz,success_prob\n0,x,2,3,4\n");
  CHECK_THROWS_AS(io::read_csv(bad_number), std::invalid_argument);
}
