#include "resinfo/figures.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "resinfo/resolution.hpp"

using namespace resinfo;

TEST_CASE("GridSpec parsing and values") {
  const GridSpec linear = GridSpec::parse("0.1:0.5:5:linear");
  const std::vector<double> lv = linear.values();
  REQUIRE(lv.size() == 5);
  CHECK(lv.front() == 0.1);
  CHECK(lv.back() == 0.5);
  CHECK(lv[2] == doctest::Approx(0.3).epsilon(1e-15));

  const GridSpec log_grid = GridSpec::parse("0.001:0.1:3:log");
  const std::vector<double> gv = log_grid.values();
  CHECK(gv.front() == 0.001);
  CHECK(gv[1] == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(gv.back() == 0.1);

  // Default scale is linear.
  CHECK_FALSE(GridSpec::parse("0:1:2").log_scale);

  CHECK_THROWS_AS(GridSpec::parse("1:0:5"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("0:1:1"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("0:1:5:log"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("garbage"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("0:1:5:cubic"), std::invalid_argument);
}

TEST_CASE("tradeoff heatmap cells carry the closed form") {
  const GridSpec prior(0.05, 0.15, 3, false);
  const GridSpec eps(0.1, 0.2, 2, false);
  const auto cells = tradeoff_heatmap(prior, eps);
  REQUIRE(cells.size() == 6);
  // Row-major with the prior axis outer.
  CHECK(cells[0].prior_mass == 0.05);
  CHECK(cells[0].epsilon == 0.1);
  CHECK(cells[1].prior_mass == 0.05);
  CHECK(cells[1].epsilon == 0.2);
  CHECK(cells[2].prior_mass == doctest::Approx(0.1).epsilon(1e-15));

  for (const auto& c : cells) {
    CHECK(c.info_nats ==
          resolution_info_region(Probability(c.prior_mass), AmbiguityTarget(c.epsilon)));
  }
  // Reference cell: prior 0.1, eps 0.1.
  CHECK(cells[2].info_nats == doctest::Approx(1.757779661868975506).epsilon(1e-12));

  CHECK_THROWS_AS(tradeoff_heatmap(GridSpec(0.0, 0.5, 3, false), eps), std::invalid_argument);
}

TEST_CASE("floor heatmap uses integer dimensions") {
  const auto cells = floor_heatmap(GridSpec(1, 5, 5, false), GridSpec(2.13, 3.0, 2, false));
  REQUIRE(cells.size() == 10);
  CHECK(cells[0].m == 1);
  CHECK(cells[8].m == 5);
  CHECK(cells[8].mu_max == 2.13);
  CHECK(cells[8].epsilon_min == doctest::Approx(0.08022339219692124).epsilon(1e-12));

  CHECK_THROWS_AS(floor_heatmap(GridSpec(0, 5, 6, false), GridSpec(1, 2, 2, false)),
                  std::invalid_argument);
}

TEST_CASE("decay curve rows combine both geometries with the floor column") {
  const OrthantPolytope cube5(5, 1.0);
  const PrecisionLimit lim(1.0 / 2.13);
  const auto rows = decay_curves(0.0, 3.0, cube5, lim, GridSpec(0.0, 50.0, 101, false));
  REQUIRE(rows.size() == 101);
  CHECK(rows[0].info_nats == 0.0);
  CHECK(rows[0].halfspace_ambiguity == 0.5);
  const double floor = rows[0].floor;
  CHECK(floor == doctest::Approx(0.08022339219692124).epsilon(1e-12));
  for (const auto& r : rows) {
    CHECK(r.floor == floor);
    CHECK(r.polytope_ambiguity >= floor - 1e-12);
  }
  CHECK(rows.back().halfspace_ambiguity < 1e-10);
  CHECK(rows.back().polytope_ambiguity == floor);
}

TEST_CASE("csv writers emit stable 17-digit rows") {
  std::ostringstream out;
  write_tradeoff_csv(out, {{0.1, 0.1, 1.757779661868975506232392}});
  CHECK(out.str() ==
        "prior_mass,epsilon,info_nats\n"
        "0.10000000000000001,0.10000000000000001,1.7577796618689756\n");

  std::ostringstream floor_out;
  write_floor_csv(floor_out, {{5, 2.13, 0.25}});
  CHECK(floor_out.str() == "m,mu_max,epsilon_min\n5,2.1299999999999999,0.25\n");

  // Round trip through the printed representation is exact.
  const double value = 0.08022339219692124;
  CHECK(std::strtod(format_double(value).c_str(), nullptr) == value);
}

TEST_CASE("parallel sweeps match the serial result bit for bit") {
  const GridSpec prior(0.01, 0.15, 64, true);
  const GridSpec eps(0.001, 0.25, 64, true);

  setenv("RESINFO_THREADS", "1", 1);
  const auto serial = tradeoff_heatmap(prior, eps);
  setenv("RESINFO_THREADS", "4", 1);
  const auto parallel = tradeoff_heatmap(prior, eps);
  unsetenv("RESINFO_THREADS");

  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].info_nats == parallel[i].info_nats);
  }
}
