#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "seatcfn/compiler.hpp"
#include "seatcfn/problem_io.hpp"
#include "seatcfn/rng.hpp"
#include "test_util.hpp"

using namespace seatcfn;

TEST_CASE("minimal file parses with defaults applied") {
  const auto p = parse_problem(
      "[tables]\n"
      "round t1 cx=0 cy=0 radius=1 seats=2\n"
      "[guests]\n"
      "guest a\n"
      "guest b\n");
  CHECK(p.seat_count() == 2);
  CHECK(p.guest_count() == 2);
  CHECK(p.constraints.empty());
  CHECK(p.overlap_penalty == 100.0);
}

TEST_CASE("comments, blank lines and inline comments are ignored") {
  const auto p = parse_problem(
      "# header comment\n"
      "\n"
      "[tables]\n"
      "round t1 cx=0 cy=0 radius=1 seats=3  # three chairs\n"
      "\n"
      "[guests]\n"
      "guest a\n");
  CHECK(p.seat_count() == 3);
}

TEST_CASE("parse errors carry the offending line number") {
  const char* unknown_guest =
      "[tables]\n"
      "round t1 cx=0 cy=0 radius=1 seats=4\n"
      "[guests]\n"
      "guest a\n"
      "guest b\n"
      "[constraints]\n"
      "adjacent a zed -5\n";
  try {
    parse_problem(unknown_guest);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
    CHECK(std::string(e.what()).find("zed") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_problem("[tables]\nround t cx=0 cy=0 radius=1 seats=1\n"
                                "[guests]\nguest a\nguest a\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_problem("[tables]\nround t cx=0 cy=0 radius=1 seats=1\n"
                                "[guests]\nguest a\nguest b\n"),
                  ParseError);  // more guests than seats
  CHECK_THROWS_AS(parse_problem("[tables]\nround t cx=0 cy=0 radius=1 seats=4\n"
                                "[guests]\nguest a\nguest b\n[assignments]\n"
                                "assign a t:0\nassign b t:0\n"),
                  ParseError);  // two guests on one seat
  CHECK_THROWS_AS(parse_problem("[tables]\nround t cx=0 cy=0 radius=1 seats=2\n"
                                "[guests]\nguest a\n[assignments]\nassign a t:9\n"),
                  ParseError);  // seat index out of range
  CHECK_THROWS_AS(parse_problem("stray tokens\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[nonsense]\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[tables]\nround t cx=0 cy=0 radius=1\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[tables]\nround t cx=0 cy=0 radius=1 seats=2 seats=2\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_problem("[tables]\nround t cx=0 cy=0 radius=1 seats=2\n"
                                "[guests]\nguest a\nguest b\n[constraints]\n"
                                "proximity a b p=1 lambda=0\n"),
                  ParseError);  // lambda must be positive
  CHECK_THROWS_AS(parse_problem("[tables]\nround t cx=0 cy=0 radius=1 seats=2\n"
                                "[guests]\nguest a\n[constraints]\noverlap_penalty -3\n"),
                  ParseError);
}

TEST_CASE("restraints accept table and seat lists, repeated lines intersect") {
  const auto p = parse_problem(
      "[tables]\n"
      "round t1 cx=0 cy=0 radius=1 seats=2\n"
      "round t2 cx=4 cy=0 radius=1 seats=2\n"
      "[guests]\n"
      "guest a\nguest b\n"
      "[restraints]\n"
      "restrict a tables t2\n"
      "restrict b seats t1:0,t2:1\n"
      "restrict b seats t2:1\n");
  CHECK(p.allowed_seats(0) == std::vector<int>{2, 3});
  CHECK(p.allowed_seats(1) == std::vector<int>{3});
}

TEST_CASE("the shipped prob1 matches its published structure") {
  const auto p = builtin_problem(BuiltinProblem::kProb1);
  CHECK(p.guest_count() == 4);
  CHECK(p.tables.size() == 1);
  CHECK(p.tables[0].seat_count == 4);
  int bonuses = 0;
  int penalties = 0;
  for (const auto& c : p.constraints) {
    REQUIRE(c.kind == ConstraintKind::kAdjacent);
    (c.penalty < 0 ? bonuses : penalties) += 1;
  }
  CHECK(bonuses == 3);
  CHECK(penalties == 1);
}

TEST_CASE("builtin roster sizes match their stories") {
  CHECK(builtin_problem(BuiltinProblem::kProb1).guest_count() == 4);
  CHECK(builtin_problem(BuiltinProblem::kProb1).seat_count() == 4);
  const auto p2 = builtin_problem(BuiltinProblem::kProb2);
  CHECK(p2.guest_count() == 5);
  CHECK(p2.seat_count() == 5);
  CHECK(p2.tables.size() == 2);
  CHECK(builtin_problem(BuiltinProblem::kProb3).guest_count() == 17);
  const auto p4 = builtin_problem(BuiltinProblem::kProb4);
  CHECK(p4.guest_count() == 25);
  CHECK(p4.seat_count() == 26);
  CHECK(p4.tables.size() == 5);
  CHECK(builtin_problem(BuiltinProblem::kProb5).guest_count() == 37);
  CHECK(builtin_problem(BuiltinProblem::kProb5s).guest_count() == 37);
}

TEST_CASE("every builtin parses and compiles") {
  for (const std::string& name : builtin_names()) {
    const auto which = builtin_by_name(name);
    REQUIRE(which.has_value());
    const auto problem = builtin_problem(*which);
    const auto compiled = compile_cfn(problem);
    CHECK(compiled.cfn.node_count() > 0);
  }
  CHECK(!builtin_by_name("prob9").has_value());
}

TEST_CASE("serialize then parse reproduces the compiled CFN") {
  auto rng = make_engine(301);
  for (int trial = 0; trial < 60; ++trial) {
    const auto problem = test_util::random_problem(rng);
    const auto round_trip = parse_problem(serialize_problem(problem));
    const auto a = compile_cfn(problem).cfn;
    const auto b = compile_cfn(round_trip).cfn;

    REQUIRE(a.node_count() == b.node_count());
    CHECK(a.choices == b.choices);
    CHECK(a.overlap_penalty == b.overlap_penalty);
    CHECK(a.constant_offset == doctest::Approx(b.constant_offset).epsilon(1e-12));
    REQUIRE(a.blocks.size() == b.blocks.size());
    for (std::size_t k = 0; k < a.blocks.size(); ++k) {
      CHECK(a.blocks[k].node_a == b.blocks[k].node_a);
      CHECK(a.blocks[k].node_b == b.blocks[k].node_b);
      REQUIRE(a.blocks[k].values.size() == b.blocks[k].values.size());
      for (std::size_t v = 0; v < a.blocks[k].values.size(); ++v) {
        const double x = a.blocks[k].values[v];
        const double y = b.blocks[k].values[v];
        CHECK(std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(x)));
      }
    }
    for (int i = 0; i < a.node_count(); ++i)
      for (std::size_t c = 0; c < a.one_node[i].size(); ++c)
        CHECK(a.one_node[i][c] == doctest::Approx(b.one_node[i][c]).epsilon(1e-12));
  }
}

TEST_CASE("builtin text matches the shipped data files") {
  // builtin_problem_text is generated from data/, so a direct parse of the
  // embedded text must agree with the enum route.
  for (const std::string& name : builtin_names()) {
    const auto which = builtin_by_name(name);
    const auto text = builtin_problem_text(*which);
    CHECK(parse_problem(text).guest_count() == builtin_problem(*which).guest_count());
  }
}
