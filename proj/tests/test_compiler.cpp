#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "seatcfn/compiler.hpp"
#include "seatcfn/problem_io.hpp"
#include "seatcfn/rng.hpp"
#include "test_util.hpp"

using namespace seatcfn;

TEST_CASE("gaussian penalty equals p at unit distance") {
  CHECK(gaussian_penalty(1.0, 7.0, 2.5) == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(gaussian_penalty(1.0, -3.0, 0.7) == doctest::Approx(-3.0).epsilon(1e-12));

  auto rng = make_engine(201);
  for (int trial = 0; trial < 200; ++trial) {
    const double p = test_util::urand(rng, -20, 20);
    const double lambda = test_util::urand(rng, 0.05, 8.0);
    CHECK(gaussian_penalty(1.0, p, lambda) == doctest::Approx(p).epsilon(1e-12));
  }
}

TEST_CASE("gaussian penalty at selected distances") {
  CHECK(gaussian_penalty(0.0, 1.0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(gaussian_penalty(2.0, 1.0, 1.0) == doctest::Approx(std::exp(-3.0)).epsilon(1e-12));
}

TEST_CASE("gaussian magnitude decreases with distance and keeps its sign") {
  auto rng = make_engine(202);
  for (int trial = 0; trial < 100; ++trial) {
    const double p = test_util::urand(rng, -10, 10);
    if (p == 0.0) continue;
    const double lambda = test_util::urand(rng, 0.3, 5.0);
    double prev = std::abs(gaussian_penalty(0.0, p, lambda));
    for (double d = 0.5; d < 6.0; d += 0.5) {
      const double g = gaussian_penalty(d, p, lambda);
      CHECK(std::signbit(g) == std::signbit(p));
      CHECK(std::abs(g) < prev);
      prev = std::abs(g);
    }
  }
}

TEST_CASE("overlap block is a Kronecker delta on seat ids") {
  CHECK(build_overlap_block(100.0, {0, 1}, {0, 1}) ==
        std::vector<double>{100, 0, 0, 100});
  CHECK(build_overlap_block(100.0, {0, 1}, {2, 3}) == std::vector<double>{0, 0, 0, 0});
  CHECK(build_overlap_block(100.0, {0, 1, 2}, {2}) == std::vector<double>{0, 0, 100});
}

TEST_CASE("pair block marks exactly the sigma entries") {
  const auto table = Table::round("t", {0, 0}, 1.0, 4);
  auto sigma = adjacency_pairs(table);
  std::sort(sigma.begin(), sigma.end());
  const std::vector<int> all = {0, 1, 2, 3};
  const auto block = build_pair_block(sigma, -5.0, all, all);
  int hits = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const double v = block[a * 4 + b];
      if (v != 0.0) {
        ++hits;
        CHECK(v == -5.0);
        CHECK(a != b);
      }
    }
  }
  CHECK(hits == 8);  // four unordered adjacent pairs, both orientations
  CHECK(block[0 * 4 + 2] == 0.0);
  CHECK(block[1 * 4 + 3] == 0.0);

  const auto solo = build_pair_block(same_table_pairs(Table::round("s", {4, 0}, 1.0, 1)),
                                     5.0, {0}, {0});
  CHECK(solo == std::vector<double>{0});
}

TEST_CASE("proximity block on a sized round table") {
  // radius 1/sqrt(2): adjacent seats sit at distance 1, opposite at sqrt(2)
  const auto table = Table::round("t", {0, 0}, 1.0 / std::sqrt(2.0), 4);
  const auto coords = layout_coordinates(table);
  std::vector<Seat> seats;
  for (int k = 0; k < 4; ++k) seats.push_back({k, "t", k, coords[k]});
  const std::vector<int> all = {0, 1, 2, 3};
  const auto block = build_proximity_block(1.0, 1.0, seats, all, all);
  CHECK(block[0 * 4 + 1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(block[1 * 4 + 2] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(block[0 * 4 + 2] == doctest::Approx(std::exp(-1.0)).epsilon(1e-9));
  CHECK(block[1 * 4 + 3] == doctest::Approx(std::exp(-1.0)).epsilon(1e-9));
  CHECK(block[0 * 4 + 0] == doctest::Approx(std::exp(1.0)).epsilon(1e-9));

  const auto bonus = build_proximity_block(-2.0, 1.5, seats, all, all);
  for (double v : bonus) CHECK(v < 0.0);
}

TEST_CASE("prob1 compiles to four nodes with overlap on every pair") {
  const auto compiled = compile_cfn(builtin_problem(BuiltinProblem::kProb1));
  CHECK(compiled.cfn.node_count() == 4);
  for (int i = 0; i < 4; ++i) CHECK(compiled.cfn.choice_count(i) == 4);
  CHECK(compiled.cfn.overlap_penalty == 100.0);
  CHECK(compiled.cfn.blocks.size() == 4);  // the four adjacency-constrained pairs
  int interacting = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pair_interacts(compiled.cfn, i, j)) ++interacting;
  CHECK(interacting == 6);
}

TEST_CASE("fully fixed problem collapses into the constant offset") {
  auto problem = parse_problem(
      "[tables]\n"
      "round t cx=0 cy=0 radius=1 seats=4\n"
      "[guests]\n"
      "guest a\nguest b\n"
      "[assignments]\n"
      "assign a t:0\nassign b t:1\n"
      "[constraints]\n"
      "adjacent a b -5\n");
  const auto compiled = compile_cfn(problem);
  CHECK(compiled.cfn.node_count() == 0);
  CHECK(compiled.cfn.constant_offset == doctest::Approx(-5.0));
  CHECK(evaluate(compiled.cfn, {}) == doctest::Approx(-5.0));
}

TEST_CASE("prob5 fixes the couple and restrains six relatives to the head table") {
  const auto problem = builtin_problem(BuiltinProblem::kProb5);
  CHECK(problem.guest_count() == 37);
  CHECK(problem.fixed_assignments.size() == 2);
  const auto compiled = compile_cfn(problem);
  CHECK(compiled.cfn.node_count() == 35);
  int restrained = 0;
  for (int node = 0; node < compiled.cfn.node_count(); ++node)
    if (compiled.cfn.choice_count(node) == 8) ++restrained;
  CHECK(restrained == 6);  // head-table relatives choose among its 8 seats
}

TEST_CASE("compiled evaluation equals the independent oracle on every assignment") {
  auto rng = make_engine(203);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto problem = test_util::random_problem(rng);
    const auto compiled = compile_cfn(problem);
    double space = 1.0;
    for (int i = 0; i < compiled.cfn.node_count(); ++i) space *= compiled.cfn.choice_count(i);
    if (space > 4000) continue;
    test_util::for_all_assignments(compiled.cfn, [&](const Assignment& a) {
      const auto seating = test_util::full_seating(problem, compiled.map, a);
      const double expected = test_util::oracle_score(problem, seating);
      CHECK(evaluate(compiled.cfn, a) == doctest::Approx(expected).epsilon(1e-9));
      ++checked;
    });
  }
  CHECK(checked > 1000);
}

TEST_CASE("fixing a guest matches forcing the free choice") {
  auto rng = make_engine(204);
  int tested = 0;
  for (int trial = 0; trial < 100 && tested < 15; ++trial) {
    const auto problem = test_util::random_problem(rng, 4, false);
    if (problem.guest_count() < 2) continue;

    const int guest = uniform_below(rng, problem.guest_count());
    const auto allowed = problem.allowed_seats(guest);
    const int seat = allowed[uniform_below(rng, static_cast<int>(allowed.size()))];

    auto fixed_problem = problem;
    fixed_problem.fixed_assignments[guest] = seat;
    const auto free_compiled = compile_cfn(problem);
    const auto fixed_compiled = compile_cfn(fixed_problem);

    double space = 1.0;
    for (int i = 0; i < fixed_compiled.cfn.node_count(); ++i)
      space *= fixed_compiled.cfn.choice_count(i);
    if (space > 2000) continue;

    const int fixed_node = free_compiled.map.guest_to_node[guest];
    const int forced_choice = static_cast<int>(
        std::find(allowed.begin(), allowed.end(), seat) - allowed.begin());

    test_util::for_all_assignments(fixed_compiled.cfn, [&](const Assignment& sub) {
      Assignment full(free_compiled.cfn.node_count());
      int cursor = 0;
      for (int node = 0; node < free_compiled.cfn.node_count(); ++node)
        full[node] = node == fixed_node ? forced_choice : sub[cursor++];
      CHECK(evaluate(fixed_compiled.cfn, sub) ==
            doctest::Approx(evaluate(free_compiled.cfn, full)).epsilon(1e-9));
    });
    ++tested;
  }
  CHECK(tested == 15);
}

TEST_CASE("constraint order does not change the compiled blocks") {
  auto rng = make_engine(205);
  for (int trial = 0; trial < 40; ++trial) {
    auto problem = test_util::random_problem(rng);
    if (problem.constraints.size() < 2) continue;
    auto reordered = problem;
    std::shuffle(reordered.constraints.begin(), reordered.constraints.end(), rng);
    const auto a = compile_cfn(problem).cfn;
    const auto b = compile_cfn(reordered).cfn;
    REQUIRE(a.blocks.size() == b.blocks.size());
    CHECK(a.constant_offset == doctest::Approx(b.constant_offset).epsilon(1e-12));
    for (std::size_t k = 0; k < a.blocks.size(); ++k) {
      CHECK(a.blocks[k].node_a == b.blocks[k].node_a);
      CHECK(a.blocks[k].node_b == b.blocks[k].node_b);
      REQUIRE(a.blocks[k].values.size() == b.blocks[k].values.size());
      for (std::size_t v = 0; v < a.blocks[k].values.size(); ++v)
        CHECK(a.blocks[k].values[v] == doctest::Approx(b.blocks[k].values[v]).epsilon(1e-12));
    }
  }
}

TEST_CASE("empty allowed seat set is a compile error") {
  auto problem = parse_problem(
      "[tables]\n"
      "round t cx=0 cy=0 radius=1 seats=2\n"
      "[guests]\n"
      "guest a\nguest b\n"
      "[restraints]\n"
      "restrict a seats t:0\n"
      "restrict a seats t:1\n");
  CHECK_THROWS_AS(compile_cfn(problem), CompileError);
}
