#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "seatcfn/geometry.hpp"
#include "seatcfn/rng.hpp"
#include "test_util.hpp"

using namespace seatcfn;

TEST_CASE("round layout places seats on the circle, counterclockwise from east") {
  const auto coords = layout_coordinates(Table::round("t", {0, 0}, 1.0, 4));
  REQUIRE(coords.size() == 4);
  CHECK(coords[0].x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(coords[0].y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(coords[1].x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(coords[1].y == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(coords[2].x == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(coords[2].y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(coords[3].x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(coords[3].y == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("one-seat round table sits at angle zero") {
  const auto coords = layout_coordinates(Table::round("t", {5, 5}, 2.0, 1));
  REQUIRE(coords.size() == 1);
  CHECK(coords[0].x == doctest::Approx(7.0));
  CHECK(coords[0].y == doctest::Approx(5.0));
}

TEST_CASE("row layout marches along the run direction") {
  const auto coords = layout_coordinates(Table::row("t", {0, 0}, 1.5, 0.0, 3));
  REQUIRE(coords.size() == 3);
  CHECK(coords[0].x == doctest::Approx(0.0));
  CHECK(coords[1].x == doctest::Approx(1.5));
  CHECK(coords[2].x == doctest::Approx(3.0));
  CHECK(coords[2].y == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("table construction rejects bad parameters") {
  CHECK_THROWS_AS(Table::round("t", {0, 0}, 0.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(Table::round("t", {0, 0}, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Table::row("t", {0, 0}, 0.0, 0.0, 2), std::invalid_argument);
}

TEST_CASE("seat distance is Euclidean") {
  Seat a{0, "t", 0, {0, 0}};
  Seat b{1, "t", 1, {3, 4}};
  CHECK(seat_distance(a, b) == doctest::Approx(5.0));
  CHECK(seat_distance(a, a) == 0.0);

  const auto coords = layout_coordinates(Table::round("t", {0, 0}, 1.0, 4));
  Seat s0{0, "t", 0, coords[0]};
  Seat s2{2, "t", 2, coords[2]};
  CHECK(seat_distance(s0, s2) == doctest::Approx(2.0));
}

TEST_CASE("adjacency pairs per layout") {
  const auto round4 = adjacency_pairs(Table::round("t", {0, 0}, 1.0, 4));
  CHECK(round4 == std::vector<SeatPair>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});

  CHECK(adjacency_pairs(Table::round("t", {0, 0}, 1.0, 1)).empty());
  CHECK(adjacency_pairs(Table::round("t", {0, 0}, 1.0, 2)) == std::vector<SeatPair>{{0, 1}});
  CHECK(adjacency_pairs(Table::row("t", {0, 0}, 1.0, 0.0, 3)) ==
        std::vector<SeatPair>{{0, 1}, {1, 2}});
  CHECK(adjacency_pairs(Table::row("t", {0, 0}, 1.0, 0.0, 2)) == std::vector<SeatPair>{{0, 1}});
}

TEST_CASE("same-table pairs are all combinations") {
  CHECK(same_table_pairs(Table::round("t", {0, 0}, 1.0, 4)).size() == 6);
  CHECK(same_table_pairs(Table::round("t", {0, 0}, 1.0, 1)).empty());
  CHECK(same_table_pairs(Table::round("t", {0, 0}, 1.0, 6)).size() == 15);
}

TEST_CASE("adjacency is a subset of same-table for random layouts") {
  auto rng = make_engine(7001);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = test_util::random_problem(rng);
    for (const Table& t : p.tables) {
      const auto adj = adjacency_pairs(t);
      auto all = same_table_pairs(t);
      std::sort(all.begin(), all.end());
      for (const SeatPair& pair : adj)
        CHECK(std::binary_search(all.begin(), all.end(),
                                 SeatPair{std::min(pair.first, pair.second),
                                          std::max(pair.first, pair.second)}));
    }
  }
}

TEST_CASE("round seats are equidistant from the center") {
  auto rng = make_engine(7002);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = test_util::random_problem(rng);
    for (std::size_t t = 0; t < p.tables.size(); ++t) {
      const Table& table = p.tables[t];
      if (table.kind != TableKind::kRound) continue;
      for (const Seat& s : p.seats) {
        if (s.table_id != table.id) continue;
        CHECK(distance(s.position, table.origin) == doctest::Approx(table.radius).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("seat distance behaves like a metric on random layouts") {
  auto rng = make_engine(7003);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = test_util::random_problem(rng);
    const auto& seats = p.seats;
    for (int reps = 0; reps < 40; ++reps) {
      const Seat& a = seats[uniform_below(rng, p.seat_count())];
      const Seat& b = seats[uniform_below(rng, p.seat_count())];
      const Seat& c = seats[uniform_below(rng, p.seat_count())];
      CHECK(seat_distance(a, b) >= 0.0);
      CHECK(seat_distance(a, b) == doctest::Approx(seat_distance(b, a)));
      CHECK(seat_distance(a, c) <= seat_distance(a, b) + seat_distance(b, c) + 1e-9);
    }
  }
}

TEST_CASE("problem build validates guests, seats and references") {
  auto tables = [] { return std::vector<Table>{Table::round("t", {0, 0}, 1.0, 2)}; };
  CHECK_THROWS_AS(SeatingProblem::build(tables(), {"a", "b", "c"}, {}, {}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SeatingProblem::build(tables(), {"a", "a"}, {}, {}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SeatingProblem::build(tables(), {"a", "b"}, {{0, 0}, {1, 0}}, {}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SeatingProblem::build(tables(), {"a", "b"}, {{0, 7}}, {}, {}),
                  std::invalid_argument);

  const auto ok = SeatingProblem::build(tables(), {"a", "b"}, {{0, 1}}, {}, {});
  CHECK(ok.guest_count() == 2);
  CHECK(ok.seat_count() == 2);
  CHECK(ok.seats[1].index_in_table == 1);
}
