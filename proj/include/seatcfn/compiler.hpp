#pragma once

#include <stdexcept>
#include <vector>

#include "seatcfn/cfn.hpp"
#include "seatcfn/seating_problem.hpp"

namespace seatcfn {

class CompileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Guest <-> free-node correspondence produced by compilation. Fixed guests
// do not get nodes; their constraint terms are folded into one-node tables
// and the constant offset.
struct NodeChoiceMap {
  std::vector<int> guest_to_node;  // -1 for fixed guests
  std::vector<int> node_to_guest;
  std::vector<int> fixed_seat;     // per guest, -1 unless fixed

  int node_count() const { return static_cast<int>(node_to_guest.size()); }
};

// Gaussian pair score normalized so the value at distance 1 is exactly
// p_prox: G(d) = p_prox * exp(1/lambda^2 - (d/lambda)^2).
double gaussian_penalty(double distance, double p_prox, double lambda);

// Dense blocks over two nodes' allowed-seat lists, row-major.
std::vector<double> build_overlap_block(double p_overlap,
                                        const std::vector<int>& seats_a,
                                        const std::vector<int>& seats_b);
std::vector<double> build_pair_block(const std::vector<SeatPair>& sigma, double p,
                                     const std::vector<int>& seats_a,
                                     const std::vector<int>& seats_b);
std::vector<double> build_proximity_block(double p_prox, double lambda,
                                          const std::vector<Seat>& seats,
                                          const std::vector<int>& seats_a,
                                          const std::vector<int>& seats_b);

struct CompiledProblem {
  CfnProblem cfn;
  NodeChoiceMap map;
};

// Materializes the pair constraints into CFN blocks over free guests,
// collapses terms against fixed guests into one-node tables, and terms
// between two fixed guests into the constant offset. Throws CompileError
// when a free guest ends up with no allowed seat.
CompiledProblem compile_cfn(const SeatingProblem& problem);

}  // namespace seatcfn
