#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "critlink/qubo.hpp"

namespace critlink {

enum class SolveMethod { brute, topk, anneal_penalty, anneal_swap };

std::string to_string(SolveMethod method);
SolveMethod parse_method(const std::string& name);

// Geometric cooling schedule. Non-positive temperatures mean "derive from
// the problem": T0 = max|c|, Tf = 1e-3 * max(1, max|c|).
struct AnnealSchedule {
  double initial_temperature = 0.0;
  double final_temperature = 0.0;
  int sweeps = 2000;
  int restarts = 10;
};

struct SolveResult {
  DisruptionVector bits;
  double energy = 0.0;
  double ndi = 0.0;       // absolute NDI, filled in by attach_ndi
  double ndi_gain = 0.0;  // NDI minus the undisrupted baseline
  bool has_ndi = false;
  bool feasible = false;
  SolveMethod method = SolveMethod::brute;
  int restarts_used = 0;
  int sweeps_used = 0;
  double wall_time_s = 0.0;
  std::uint64_t seed = 0;
};

// Exhaustive enumeration of all cardinality-k subsets. Ties are broken by
// the lexicographically smallest bit vector (element-wise over bit 0..L-1).
// Refuses instances with more than 10^7 feasible subsets.
SolveResult solve_brute_force(const QuboProblem& problem);

// Exact for problems without pair terms: picks the k largest linear
// coefficients, ties by link index.
SolveResult solve_topk_additive(const QuboProblem& problem);

// Link indices of the k largest values, ties by index; returned sorted
// ascending by index.
std::vector<int> top_k_indices(std::span<const double> values, int k);

// Simulated annealing. Swap mode keeps every visited state feasible by
// exchanging one selected link against one unselected link, starting from
// the top-k warm start. Penalty mode does single bit flips on the
// penalty-folded energy starting from the empty set, with a greedy repair
// if the best state found is infeasible. Deterministic for a given seed;
// restart r uses the stream seed ^ r.
SolveResult solve_annealing(const QuboProblem& problem, const AnnealSchedule& schedule,
                            std::uint64_t seed, SolveMethod mode = SolveMethod::anneal_swap);

// Restores cardinality: drops selected links with the smallest coefficients
// or adds unselected links with the largest, ties by index.
DisruptionVector repair(const DisruptionVector& bits, int k, std::span<const double> coefficients);

// Recomputes absolute NDI and gain for a solved vector via the oracle.
void attach_ndi(SolveResult& result, const NdiOracle& oracle, int time_step);

SolveResult solve(const QuboProblem& problem, SolveMethod method, const AnnealSchedule& schedule,
                  std::uint64_t seed);

}  // namespace critlink
