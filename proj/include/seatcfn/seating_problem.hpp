#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "seatcfn/geometry.hpp"

namespace seatcfn {

struct Guest {
  std::string id;
  int node_index = -1;
};

enum class ConstraintKind { kAdjacent, kSameTable, kProximity };

// One user-declared pair constraint. Negative penalties are bonuses.
struct PairConstraint {
  ConstraintKind kind = ConstraintKind::kAdjacent;
  int guest0 = -1;
  int guest1 = -1;
  double penalty = 0.0;
  double lambda = 0.0;  // proximity breadth, > 0 for kProximity
};

inline constexpr double kDefaultOverlapPenalty = 100.0;

// A fully validated seating problem: tables with derived seat coordinates,
// guests, optional fixed assignments and seat restraints, and the pair
// constraint list. Immutable after build(); safe to share across threads.
struct SeatingProblem {
  std::vector<Table> tables;
  std::vector<Seat> seats;   // global_index contiguous from 0
  std::vector<Guest> guests; // node_index contiguous from 0
  std::map<int, int> fixed_assignments;     // guest index -> global seat
  std::map<int, std::set<int>> restraints;  // guest index -> allowed seats
  std::vector<PairConstraint> constraints;
  double overlap_penalty = kDefaultOverlapPenalty;

  int guest_count() const { return static_cast<int>(guests.size()); }
  int seat_count() const { return static_cast<int>(seats.size()); }

  int table_index(const std::string& id) const;  // -1 if unknown
  int guest_index(const std::string& id) const;  // -1 if unknown

  // Global seat ids the guest may occupy, sorted ascending. Guests without
  // a restraint may sit anywhere.
  std::vector<int> allowed_seats(int guest) const;

  // Union over tables, as global seat ids, sorted.
  std::vector<SeatPair> adjacent_seat_pairs() const;
  std::vector<SeatPair> same_table_seat_pairs() const;

  // Derives seats from the table layouts and checks every invariant:
  // guest ids unique, N <= D, fixed assignments injective and in range,
  // restraint seats in range, constraint guests distinct and known.
  static SeatingProblem build(std::vector<Table> tables,
                              std::vector<std::string> guest_ids,
                              std::map<int, int> fixed_assignments,
                              std::map<int, std::set<int>> restraints,
                              std::vector<PairConstraint> constraints,
                              double overlap_penalty = kDefaultOverlapPenalty);
};

}  // namespace seatcfn
