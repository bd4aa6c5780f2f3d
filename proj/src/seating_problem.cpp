#include "seatcfn/seating_problem.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace seatcfn {

namespace {

std::vector<SeatPair> globalize(const std::vector<Table>& tables,
                                std::vector<SeatPair> (*local_pairs)(const Table&)) {
  std::vector<SeatPair> out;
  int base = 0;
  for (const Table& t : tables) {
    for (const auto& [a, b] : local_pairs(t)) out.emplace_back(base + a, base + b);
    base += t.seat_count;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int SeatingProblem::table_index(const std::string& id) const {
  for (std::size_t i = 0; i < tables.size(); ++i)
    if (tables[i].id == id) return static_cast<int>(i);
  return -1;
}

int SeatingProblem::guest_index(const std::string& id) const {
  for (std::size_t i = 0; i < guests.size(); ++i)
    if (guests[i].id == id) return static_cast<int>(i);
  return -1;
}

std::vector<int> SeatingProblem::allowed_seats(int guest) const {
  if (auto it = restraints.find(guest); it != restraints.end())
    return {it->second.begin(), it->second.end()};
  std::vector<int> all(seats.size());
  for (std::size_t s = 0; s < seats.size(); ++s) all[s] = static_cast<int>(s);
  return all;
}

std::vector<SeatPair> SeatingProblem::adjacent_seat_pairs() const {
  return globalize(tables, &adjacency_pairs);
}

std::vector<SeatPair> SeatingProblem::same_table_seat_pairs() const {
  return globalize(tables, &same_table_pairs);
}

SeatingProblem SeatingProblem::build(std::vector<Table> tables,
                                     std::vector<std::string> guest_ids,
                                     std::map<int, int> fixed_assignments,
                                     std::map<int, std::set<int>> restraints,
                                     std::vector<PairConstraint> constraints,
                                     double overlap_penalty) {
  SeatingProblem p;
  p.tables = std::move(tables);
  p.overlap_penalty = overlap_penalty;
  if (!(p.overlap_penalty > 0.0))
    throw std::invalid_argument("overlap penalty must be > 0");

  std::unordered_set<std::string> table_ids;
  for (const Table& t : p.tables)
    if (!table_ids.insert(t.id).second)
      throw std::invalid_argument("duplicate table id '" + t.id + "'");

  int global = 0;
  for (const Table& t : p.tables) {
    const auto coords = layout_coordinates(t);
    for (int k = 0; k < t.seat_count; ++k)
      p.seats.push_back({global++, t.id, k, coords[static_cast<std::size_t>(k)]});
  }

  std::unordered_set<std::string> guest_set;
  for (auto& id : guest_ids) {
    if (!guest_set.insert(id).second)
      throw std::invalid_argument("duplicate guest id '" + id + "'");
    p.guests.push_back({std::move(id), static_cast<int>(p.guests.size())});
  }

  if (p.guest_count() > p.seat_count())
    throw std::invalid_argument("more guests (" + std::to_string(p.guest_count()) +
                                ") than seats (" + std::to_string(p.seat_count()) + ")");

  auto check_guest = [&](int g) {
    if (g < 0 || g >= p.guest_count())
      throw std::invalid_argument("guest index out of range");
  };
  auto check_seat = [&](int s) {
    if (s < 0 || s >= p.seat_count())
      throw std::invalid_argument("seat index out of range");
  };

  std::unordered_set<int> taken;
  for (const auto& [g, s] : fixed_assignments) {
    check_guest(g);
    check_seat(s);
    if (!taken.insert(s).second)
      throw std::invalid_argument("two guests fixed to seat " + std::to_string(s));
  }
  p.fixed_assignments = std::move(fixed_assignments);

  for (const auto& [g, seats] : restraints) {
    check_guest(g);
    for (int s : seats) check_seat(s);
  }
  p.restraints = std::move(restraints);

  for (const PairConstraint& c : constraints) {
    check_guest(c.guest0);
    check_guest(c.guest1);
    if (c.guest0 == c.guest1)
      throw std::invalid_argument("pair constraint needs two distinct guests");
    if (c.kind == ConstraintKind::kProximity && !(c.lambda > 0.0))
      throw std::invalid_argument("proximity lambda must be > 0");
  }
  p.constraints = std::move(constraints);

  return p;
}

}  // namespace seatcfn
