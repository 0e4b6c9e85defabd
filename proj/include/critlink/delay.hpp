#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "critlink/ingest.hpp"

namespace critlink {

// Per-link free-flow travel time: the lower envelope of a speed-based
// estimate (length over the fastest observed speed) and the minimum observed
// travel time. Both ingredients are kept for diagnostics.
struct FreeFlowTable {
  std::vector<double> t0;        // minutes, min(t0_speed, t0_time)
  std::vector<double> t0_speed;  // minutes, length / v_free
  std::vector<double> t0_time;   // minutes, min over steps of observed time
  std::vector<double> v_free;    // km/h, max over steps of observed speed

  int link_count() const { return static_cast<int>(t0.size()); }
};

FreeFlowTable free_flow_times(const SnapshotSeries& series, const NetworkTopology& topology);

// Binary link-disruption vector with a target cardinality k.
struct DisruptionVector {
  std::vector<std::uint8_t> bits;
  int k = 0;

  int popcount() const;
  bool feasible() const { return popcount() == k; }
  std::vector<int> selected() const;

  static DisruptionVector zeros(int link_count, int k);
  static DisruptionVector from_selection(std::span<const int> links, int link_count, int k);
};

// Travel time of one link under its disruption state: gamma > 1 inflates the
// observed time when the link is disrupted.
double disrupted_travel_time(double t_obs, bool disrupted, double gamma);

// Delay relative to free flow, conditional on the disruption state.
double link_delay(double t_obs, bool disrupted, double gamma, double t0);

// Evaluator mapping (disruption vector, time step) to a network delay index
// in minutes. The additive implementation below is the one that ships;
// rerouting-aware oracles can be plugged in behind this interface.
class NdiOracle {
 public:
  virtual ~NdiOracle() = default;
  virtual double evaluate(std::span<const std::uint8_t> bits, int time_step) const = 0;
  virtual int link_count() const = 0;
  virtual const std::vector<int>& time_steps() const = 0;
  virtual bool additive() const { return false; }
  virtual double gamma() const;  // NaN when the oracle has no such notion

  // NDI of the undisrupted network
  double baseline(int time_step) const;
};

// Sum over all links of the disruption-conditional delay. Evaluation walks
// every link so that the oracle is the literal definition, not a shortcut.
class AdditiveNdiOracle final : public NdiOracle {
 public:
  AdditiveNdiOracle(const SnapshotSeries& series, const FreeFlowTable& free_flow, double gamma);

  double evaluate(std::span<const std::uint8_t> bits, int time_step) const override;
  int link_count() const override;
  const std::vector<int>& time_steps() const override { return series_->time_steps; }
  bool additive() const override { return true; }
  double gamma() const override { return gamma_; }

  const SnapshotSeries& series() const { return *series_; }
  const FreeFlowTable& free_flow() const { return *free_flow_; }

 private:
  const SnapshotSeries* series_;
  const FreeFlowTable* free_flow_;
  double gamma_;
};

double network_delay_index(const DisruptionVector& u, int time_step, const SnapshotSeries& series,
                           const FreeFlowTable& free_flow, double gamma);

}  // namespace critlink
