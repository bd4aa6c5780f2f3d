#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "seatcfn/cfn.hpp"
#include "seatcfn/compiler.hpp"
#include "seatcfn/problem_io.hpp"
#include "seatcfn/rng.hpp"
#include "test_util.hpp"

using namespace seatcfn;

namespace {

CfnProblem zero_problem(int nodes, int choices) {
  CfnProblem p;
  for (int i = 0; i < nodes; ++i) {
    std::vector<int> seats(choices);
    for (int c = 0; c < choices; ++c) seats[c] = c;
    p.choices.push_back(seats);
    p.one_node.emplace_back(choices, 0.0);
  }
  p.finalize();
  return p;
}

}  // namespace

TEST_CASE("evaluate of the zero function is zero") {
  const auto p = zero_problem(3, 2);
  CHECK(evaluate(p, {0, 1, 0}) == 0.0);
  CHECK(evaluate(p, {1, 1, 1}) == 0.0);
}

TEST_CASE("evaluate reads the pair block at the selected choices") {
  CfnProblem p;
  p.choices = {{0, 1}, {0, 1}};
  p.one_node = {{0, 0}, {0, 0}};
  p.blocks.push_back({0, 1, {1, 2, 3, 4}});
  p.finalize();
  CHECK(evaluate(p, {1, 0}) == 3.0);
  CHECK(evaluate(p, {0, 1}) == 2.0);
  CHECK(evaluate(p, {1, 1}) == 4.0);
}

TEST_CASE("prob1 with the published optimal seating scores -15") {
  const auto compiled = compile_cfn(builtin_problem(BuiltinProblem::kProb1));
  // avery, basil, dawson, charlie in ring order: basil and charlie opposite
  const Assignment a = {0, 1, 3, 2};
  CHECK(evaluate(compiled.cfn, a) == doctest::Approx(-15.0).epsilon(1e-12));
  CHECK(count_overlaps(compiled.cfn, a) == 0);
}

TEST_CASE("delta of a no-op move is zero") {
  auto rng = make_engine(101);
  const auto p = test_util::random_cfn(rng);
  const auto a = test_util::random_assignment(rng, p);
  for (int i = 0; i < p.node_count(); ++i) CHECK(delta_evaluate(p, a, i, a[i]) == 0.0);
}

TEST_CASE("delta matches full re-evaluation on random problems") {
  auto rng = make_engine(102);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = test_util::random_cfn(rng);
    Assignment a = test_util::random_assignment(rng, p);
    const int node = uniform_below(rng, p.node_count());
    const int choice = uniform_below(rng, p.choice_count(node));
    const double before = evaluate(p, a);
    const double delta = delta_evaluate(p, a, node, choice);
    Assignment b = a;
    b[node] = choice;
    CHECK(delta == doctest::Approx(evaluate(p, b) - before).epsilon(1e-9));
  }
}

TEST_CASE("chained deltas stay within 1e-6 over a thousand moves") {
  auto rng = make_engine(103);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = test_util::random_cfn(rng, 6, 5);
    Assignment a = test_util::random_assignment(rng, p);
    double running = evaluate(p, a);
    for (int move = 0; move < 1000; ++move) {
      const int node = uniform_below(rng, p.node_count());
      const int choice = uniform_below(rng, p.choice_count(node));
      running += delta_evaluate(p, a, node, choice);
      a[node] = choice;
    }
    CHECK(std::abs(running - evaluate(p, a)) < 1e-6);
  }
}

TEST_CASE("overlap counting is pairwise") {
  auto p = zero_problem(3, 3);
  p.overlap_penalty = 7.0;
  p.finalize();
  CHECK(count_overlaps(p, {0, 1, 2}) == 0);
  CHECK(count_overlaps(p, {0, 0, 0}) == 3);  // C(3,2) colliding pairs
  CHECK(count_overlaps(p, {0, 0, 2}) == 1);
  CHECK(evaluate(p, {0, 0, 0}) == doctest::Approx(21.0));
}

TEST_CASE("evaluate is invariant under block storage order") {
  auto rng = make_engine(104);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = test_util::random_cfn(rng);
    auto shuffled = p;
    std::shuffle(shuffled.blocks.begin(), shuffled.blocks.end(), rng);
    shuffled.finalize();
    for (int reps = 0; reps < 10; ++reps) {
      const auto a = test_util::random_assignment(rng, p);
      CHECK(evaluate(p, a) == doctest::Approx(evaluate(shuffled, a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("each colliding pair contributes exactly the overlap penalty") {
  auto rng = make_engine(105);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = test_util::random_cfn(rng);
    if (p.overlap_penalty == 0.0) p.overlap_penalty = 25.0;
    auto no_overlap = p;
    no_overlap.overlap_penalty = 0.0;
    const auto a = test_util::random_assignment(rng, p);
    const int m = count_overlaps(p, a);
    CHECK(evaluate(p, a) ==
          doctest::Approx(evaluate(no_overlap, a) + m * p.overlap_penalty).epsilon(1e-9));
  }
}

TEST_CASE("effective pair block merges explicit and implicit terms") {
  CfnProblem p;
  p.choices = {{0, 1}, {1, 2}};
  p.one_node = {{0, 0}, {0, 0}};
  p.blocks.push_back({0, 1, {1, 2, 3, 4}});
  p.overlap_penalty = 100.0;
  p.finalize();
  const auto block = effective_pair_block(p, 0, 1);
  // choice (1, 0) puts both nodes on seat 1
  CHECK(block == std::vector<double>{1, 2, 103, 4});
  CHECK(pair_interacts(p, 0, 1));
}

TEST_CASE("finalize validates shapes") {
  CfnProblem p;
  p.choices = {{0}, {0, 1}};
  p.one_node = {{0.0}, {0.0, 0.0}};
  p.blocks.push_back({0, 1, {1.0}});  // wrong size
  CHECK_THROWS_AS(p.finalize(), std::invalid_argument);

  CfnProblem q;
  q.choices = {{0}};
  q.one_node = {{0.0, 0.0}};  // wrong length
  CHECK_THROWS_AS(q.finalize(), std::invalid_argument);
}
