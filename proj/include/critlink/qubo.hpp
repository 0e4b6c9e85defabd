#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "critlink/delay.hpp"

namespace critlink {

// How pairwise interaction terms are obtained when building a problem.
enum class PairMode {
  auto_detect,    // skip for additive oracles, exact otherwise
  skip_additive,  // emit no pair terms (valid when the oracle is additive)
  exact,          // all unordered pairs
  top_m,          // pairs among the m links with the largest single-link coefficients
  sampled,        // a random sample of unordered pairs
};

struct PairTerm {
  int s = 0;
  int r = 0;  // s < r
  double value = 0.0;
};

// Single-link and pairwise NDI responses at one time step. Pair terms are
// stored once per unordered pair, no diagonal.
struct CoefficientSet {
  int time_step = 0;
  std::vector<double> linear;       // marginal NDI increase per link, minutes
  std::vector<PairTerm> quadratic;  // second-difference interaction terms
  double gamma = 0.0;
  std::string provenance;  // "skipped-additive", "exact", "top-m", "sampled"

  int link_count() const { return static_cast<int>(linear.size()); }
  double max_abs_linear() const;
};

struct ExtractionConfig {
  PairMode mode = PairMode::auto_detect;
  int top_m = 32;                  // PairMode::top_m
  long long sample_count = 10000;  // PairMode::sampled
  std::uint64_t seed = 0;          // PairMode::sampled
};

// Marginal NDI increase when only link s is disrupted.
double single_link_coefficient(int s, int time_step, const NdiOracle& oracle);

// Second difference of the NDI over the joint disruption of two links.
// Positive values mean the failures exacerbate each other, negative values
// substitutability, zero a purely additive relationship.
double interaction_coefficient(int s, int r, int time_step, const NdiOracle& oracle);

CoefficientSet extract_coefficients(const NdiOracle& oracle, int time_step,
                                    const ExtractionConfig& config = {});

struct PenaltyCalibration {
  double lambda = 0.0;
  bool degenerate = false;  // all-zero coefficients, floor applied
};

// safety_factor * max(sum |c|, sum |beta|), with a floor of 1 on the max so
// the penalty never vanishes.
PenaltyCalibration calibrate_penalty(const CoefficientSet& coefficients,
                                     double safety_factor = 100.0);

// Minimization problem over bit vectors u:
//   H(u) = -sum_s c_s u_s - sum_{s<r} beta_sr u_s u_r + lambda (sum u - k)^2
// Minimizing H maximizes the delay gain subject to the cardinality penalty.
struct QuboProblem {
  int time_step = 0;
  int k = 0;
  double lambda = 0.0;
  double gamma = 0.0;
  bool degenerate_penalty = false;
  std::vector<double> linear;       // raw positive coefficients, sign applied in energy()
  std::vector<PairTerm> quadratic;  // s < r, stored once
  std::string provenance;

  int size() const { return static_cast<int>(linear.size()); }
  double energy(std::span<const std::uint8_t> u) const;
  // The objective part alone: sum of selected linear terms plus pair terms
  // with both ends selected. Equals -energy(u) for feasible u.
  double objective_gain(std::span<const std::uint8_t> u) const;
};

struct PenaltyConfig {
  double safety_factor = 100.0;
  ExtractionConfig extraction;
};

QuboProblem make_problem(const CoefficientSet& coefficients, int k, double safety_factor);
QuboProblem build_qubo(int time_step, int k, const NdiOracle& oracle,
                       const PenaltyConfig& config = {});

// Penalty folded into per-term coefficients: linear lambda(1-2k) on every
// variable, 2*lambda on every unordered pair, constant lambda k^2.
struct ExpandedQubo {
  std::vector<double> linear;
  double pair_base = 0.0;
  std::vector<PairTerm> pair_extra;  // -beta_sr on pairs that have a term
  double constant = 0.0;

  double energy(std::span<const std::uint8_t> u) const;
};

ExpandedQubo expand_penalty(const QuboProblem& problem);

// Text interchange format: a header line "L k lambda time_step gamma",
// then one "i c_i" line per linear term and one "i j q_ij" line per pair
// term. '#' starts a comment.
void write_qubo(std::ostream& out, const QuboProblem& problem);
QuboProblem read_qubo(std::istream& in);

}  // namespace critlink
