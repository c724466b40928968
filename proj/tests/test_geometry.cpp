#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "edgeloc/geometry.hpp"
#include "edgeloc/scenario.hpp"

using namespace edgeloc;

namespace {
constexpr double kPi = std::numbers::pi;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

Position random_position(std::mt19937_64& rng) {
  return Position{uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0)};
}
}  // namespace

TEST_CASE("principal_value folds into [-pi, pi)") {
  CHECK(principal_value(0.0) == doctest::Approx(0.0));
  CHECK(principal_value(kPi) == doctest::Approx(-kPi));
  CHECK(principal_value(3.0 * kPi / 2.0) == doctest::Approx(-kPi / 2.0));
  CHECK_THROWS_AS(principal_value(std::nan("")), GeometryError);
  CHECK_THROWS_AS(principal_value(INFINITY), GeometryError);
}

TEST_CASE("principal_value is idempotent and 2*pi periodic") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const double theta = uniform(rng, -40.0, 40.0);
    const double pv = principal_value(theta);
    CHECK(pv >= -kPi);
    CHECK(pv < kPi);
    CHECK(principal_value(pv) == doctest::Approx(pv).epsilon(0.0));
    const int k = static_cast<int>(rng() % 21) - 10;
    CHECK(principal_value(theta + 2.0 * kPi * k) ==
          doctest::Approx(pv).epsilon(1e-10));
  }
}

TEST_CASE("bearing_angle on axis-aligned and diagonal pairs") {
  CHECK(bearing_angle({0, 0}, {1, 0}) == doctest::Approx(0.0));
  CHECK(bearing_angle({0, 0}, {0, 1}) == doctest::Approx(kPi / 2.0));
  CHECK(bearing_angle({1, 1}, {0, 0}) == doctest::Approx(-3.0 * kPi / 4.0));
  CHECK_THROWS_AS(bearing_angle({1, 1}, {1, 1}), GeometryError);
}

TEST_CASE("bearing antisymmetry: opposite directions differ by pi") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Position u = random_position(rng);
    const Position v = random_position(rng);
    if (u.x == v.x && u.y == v.y) {
      continue;
    }
    CHECK(principal_value(bearing_angle(u, v) - bearing_angle(v, u)) ==
          doctest::Approx(-kPi));
  }
}

TEST_CASE("bearing_vector basics and unit norm") {
  const auto e0 = bearing_vector(0.0);
  CHECK(e0.x == doctest::Approx(1.0));
  CHECK(e0.y == doctest::Approx(0.0));
  const auto e1 = bearing_vector(kPi / 2.0);
  CHECK(e1.x == doctest::Approx(0.0));
  CHECK(e1.y == doctest::Approx(1.0));
  const auto e2 = bearing_vector(-3.0 * kPi / 4.0);
  CHECK(e2.x == doctest::Approx(-std::sqrt(2.0) / 2.0));
  CHECK(e2.y == doctest::Approx(-std::sqrt(2.0) / 2.0));

  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto b = bearing_vector(uniform(rng, -10.0, 10.0));
    CHECK(std::abs(b.x * b.x + b.y * b.y - 1.0) <= 1e-12);
  }
}

TEST_CASE("subtended_angle worked values") {
  CHECK(subtended_angle({0, 0}, {1, 0}, {0, 1}) == doctest::Approx(kPi / 2.0));
  CHECK(subtended_angle({0, 0}, {0, 1}, {1, 0}) == doctest::Approx(-kPi / 2.0));
  CHECK(subtended_angle({0, 0}, {1, 0}, {-1, 0}) == doctest::Approx(-kPi));
  CHECK_THROWS_AS(subtended_angle({0, 0}, {0, 0}, {1, 0}), GeometryError);
  CHECK_THROWS_AS(subtended_angle({0, 0}, {1, 0}, {0, 0}), GeometryError);
}

TEST_CASE("subtended sign symmetry and chaining") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const Position u = random_position(rng);
    const Position v = random_position(rng);
    const Position w = random_position(rng);
    const Position x = random_position(rng);
    CHECK(subtended_angle(u, v, w) ==
          doctest::Approx(principal_value(-subtended_angle(u, w, v))));
    // alpha(v->w) + alpha(w->x) chains to alpha(v->x) at the same observer.
    CHECK(principal_value(subtended_angle(u, v, w) + subtended_angle(u, w, x)) ==
          doctest::Approx(subtended_angle(u, v, x)).epsilon(1e-9));
  }
}

TEST_CASE("synthesize_measurements produces the sign-symmetric closure") {
  const Scenario sc = preset_scenario("example3");
  const auto s = synthesize_measurements(sc);
  CHECK(s.size() == 6);
  for (const char* obs : {"1", "2", "4"}) {
    CAPTURE(obs);
    CHECK(s.observers().size() == 3);
    CHECK(s.measured_pairs(obs).size() == 1);
  }
  CHECK(*s.angle("1", "2", "4") ==
        doctest::Approx(subtended_angle(sc.position("1"), sc.position("2"),
                                        sc.position("4"))));
  CHECK(*s.angle("1", "4", "2") ==
        doctest::Approx(-*s.angle("1", "2", "4")));
}

TEST_CASE("synthesize_measurements trivial cases") {
  Scenario sc;
  sc.agents = {{"a", {0, 0}}, {"b", {1, 0}}, {"c", {2, 0}}};
  CHECK(synthesize_measurements(sc).empty());

  sc.measurements = {{"a", "b", "c"}};
  const auto s = synthesize_measurements(sc);
  CHECK(s.size() == 2);
  CHECK(*s.angle("a", "b", "c") == doctest::Approx(0.0));  // same ray
  CHECK(*s.angle("a", "c", "b") == doctest::Approx(0.0));
}

TEST_CASE("scenario validation rejects bad inputs") {
  Scenario sc;
  sc.agents = {{"a", {0, 0}}, {"b", {0, 0}}};
  CHECK_THROWS_AS(sc.validate(), GeometryError);  // shared position

  sc.agents = {{"a", {0, 0}}, {"a", {1, 0}}};
  CHECK_THROWS_AS(sc.validate(), MeasurementError);  // duplicate id

  sc.agents = {{"a", {0, 0}}, {"b~c", {1, 0}}};
  CHECK_THROWS_AS(sc.validate(), MeasurementError);  // reserved character

  sc.agents = {{"a", {0, 0}}, {"b", {1, 0}}, {"c", {0, 1}}};
  sc.measurements = {{"a", "b", "b"}};
  CHECK_THROWS_AS(sc.validate(), MeasurementError);  // endpoints equal

  sc.measurements = {{"a", "a", "b"}};
  CHECK_THROWS_AS(sc.validate(), MeasurementError);  // observer as endpoint

  sc.measurements = {{"a", "b", "d"}};
  CHECK_THROWS_AS(sc.validate(), MeasurementError);  // unknown agent
}

TEST_CASE("scenario JSON round-trip and angle overrides") {
  Scenario sc = preset_scenario("example3");
  sc.angle_overrides = {{"1", "2", "4", 0.25}};
  const auto text = sc.to_json_string();
  const Scenario back = Scenario::from_json_string(text);
  REQUIRE(back.agents.size() == 4);
  CHECK(back.agents[1].first == "2");
  CHECK(back.agents[1].second.y == doctest::Approx(3.5));
  REQUIRE(back.measurements.size() == 3);
  REQUIRE(back.angle_overrides.size() == 1);

  const auto s = synthesize_measurements(back);
  CHECK(*s.angle("1", "2", "4") == doctest::Approx(0.25));
  CHECK(*s.angle("1", "4", "2") == doctest::Approx(-0.25));

  CHECK_THROWS_AS(Scenario::from_json_string("{"), MeasurementError);
  CHECK_THROWS_AS(Scenario::from_json_string("{}"), MeasurementError);
}
