#pragma once

#include <string>
#include <utility>
#include <vector>

namespace seatcfn {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Vec2& a, const Vec2& b);

enum class TableKind { kRound, kRow };

// A table is either a ring of seats (kRound) or a straight run of seats
// (kRow). A one-seat round table models a solo seat. Round seats start at
// angle 0 (east) and proceed counterclockwise; row seats march from the
// start point along the run direction.
struct Table {
  std::string id;
  TableKind kind = TableKind::kRound;
  Vec2 origin;           // round: center, row: first seat
  double radius = 0.0;   // round only, > 0
  double spacing = 0.0;  // row only, > 0
  double angle_deg = 0.0;  // row only, direction of the run in degrees
  int seat_count = 0;

  static Table round(std::string id, Vec2 center, double radius, int seat_count);
  static Table row(std::string id, Vec2 start, double spacing, double angle_deg, int seat_count);
};

struct Seat {
  int global_index = -1;
  std::string table_id;
  int index_in_table = -1;
  Vec2 position;
};

// Unordered seat pair, stored with first < second.
using SeatPair = std::pair<int, int>;

std::vector<Vec2> layout_coordinates(const Table& table);

double seat_distance(const Seat& a, const Seat& b);

// Consecutive-seat pairs within one table, as local seat indices. Round
// tables wrap (n >= 3 gives n pairs, n == 2 gives one, n == 1 none); rows
// do not wrap.
std::vector<SeatPair> adjacency_pairs(const Table& table);

// All C(n, 2) local seat pairs of one table.
std::vector<SeatPair> same_table_pairs(const Table& table);

}  // namespace seatcfn
