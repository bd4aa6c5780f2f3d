#include "seatcfn/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seatcfn {

double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Table Table::round(std::string id, Vec2 center, double radius, int seat_count) {
  if (seat_count < 1) throw std::invalid_argument("table '" + id + "': seats must be >= 1");
  if (!(radius > 0.0)) throw std::invalid_argument("table '" + id + "': radius must be > 0");
  Table t;
  t.id = std::move(id);
  t.kind = TableKind::kRound;
  t.origin = center;
  t.radius = radius;
  t.seat_count = seat_count;
  return t;
}

Table Table::row(std::string id, Vec2 start, double spacing, double angle_deg, int seat_count) {
  if (seat_count < 1) throw std::invalid_argument("table '" + id + "': seats must be >= 1");
  if (!(spacing > 0.0)) throw std::invalid_argument("table '" + id + "': spacing must be > 0");
  Table t;
  t.id = std::move(id);
  t.kind = TableKind::kRow;
  t.origin = start;
  t.spacing = spacing;
  t.angle_deg = angle_deg;
  t.seat_count = seat_count;
  return t;
}

std::vector<Vec2> layout_coordinates(const Table& table) {
  std::vector<Vec2> result;
  result.reserve(static_cast<std::size_t>(table.seat_count));
  if (table.kind == TableKind::kRound) {
    for (int k = 0; k < table.seat_count; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / table.seat_count;
      result.push_back({table.origin.x + table.radius * std::cos(theta),
                        table.origin.y + table.radius * std::sin(theta)});
    }
  } else {
    const double theta = table.angle_deg * std::numbers::pi / 180.0;
    const double dx = table.spacing * std::cos(theta);
    const double dy = table.spacing * std::sin(theta);
    for (int k = 0; k < table.seat_count; ++k) {
      result.push_back({table.origin.x + k * dx, table.origin.y + k * dy});
    }
  }
  return result;
}

double seat_distance(const Seat& a, const Seat& b) {
  return distance(a.position, b.position);
}

std::vector<SeatPair> adjacency_pairs(const Table& table) {
  std::vector<SeatPair> pairs;
  const int n = table.seat_count;
  if (n < 2) return pairs;
  for (int k = 0; k + 1 < n; ++k) pairs.emplace_back(k, k + 1);
  // Round tables wrap; two seats across a tiny round table are already
  // covered by the consecutive pair.
  if (table.kind == TableKind::kRound && n >= 3) pairs.emplace_back(0, n - 1);
  return pairs;
}

std::vector<SeatPair> same_table_pairs(const Table& table) {
  std::vector<SeatPair> pairs;
  const int n = table.seat_count;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return pairs;
}

}  // namespace seatcfn
