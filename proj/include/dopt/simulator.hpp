#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <vector>

#include "dopt/dynamics.hpp"
#include "dopt/graph.hpp"
#include "dopt/problem.hpp"
#include "dopt/scattering.hpp"

namespace dopt {

enum class AlgorithmKind { GradientConsensus, PiConsensus, Constrained };
enum class ChannelMode { Direct, NaiveDelay, Scattering };

// Transport delays of one undirected edge, split by direction between the
// canonical endpoints (lo < hi).
struct EdgeDelays {
  double lo_to_hi = 0.0;
  double hi_to_lo = 0.0;
};

struct SimConfig {
  double h = 1e-3;
  double t_end = 10.0;
  double alpha = 1.0;
  double eta = 1.0;
  AlgorithmKind algorithm = AlgorithmKind::PiConsensus;
  ChannelMode channel = ChannelMode::Direct;
  // Per-edge wave impedance; empty means the global eta everywhere.
  std::vector<double> eta_per_edge;
  // Aligned with graph.edges(); empty means zero delay everywhere.
  std::vector<EdgeDelays> delays;
  std::uint64_t seed = 0;
  double blowup_threshold = 1e9;
  // Positive-definiteness floor for the packed 2x2 block declared by the
  // problem (localization demo). 0 disables the guard.
  double q_mineig_floor = 1e-6;
  int record_stride = 1;
  double rho_tol = 1e-12;
  // Test hook for the dissipation negative control: feeds -s_in into every
  // decode, which silently injects energy instead of preserving it.
  bool corrupt_decode_sign = false;
};

// Fixed-width ring buffer transporting one signal in one direction.
// Usage is lockstep with the step grid: push exactly once per step, then
// read() returns the sample pushed delay_steps pushes ago. Reads past the
// beginning of history return the prefill value (zero for wave lines).
class DelayLine {
 public:
  DelayLine(int delay_steps, int width);
  DelayLine(int delay_steps, int width, Eigen::VectorXd prefill);

  void push(const Eigen::VectorXd& s);
  const Eigen::VectorXd& read() const;
  int delay_steps() const { return delay_steps_; }

 private:
  int delay_steps_;
  std::vector<Eigen::VectorXd> buf_;
  Eigen::VectorXd prefill_;
  long pushes_ = 0;
};

struct RunMetadata {
  AlgorithmKind algorithm = AlgorithmKind::PiConsensus;
  ChannelMode channel = ChannelMode::Direct;
  double h = 0.0;
  double alpha = 0.0;
  double eta = 0.0;
  std::vector<double> eta_per_edge;
  int record_stride = 1;
  bool diverged = false;
  double divergence_time = -1.0;
  long steps_completed = 0;
  // Smallest eigenvalue of any agent's packed 2x2 block seen across all
  // accepted (sub)steps; +inf when the guard never ran.
  double min_q_eig = std::numeric_limits<double>::infinity();
  // Per directed channel (2 per edge: index 2k for lo->hi, 2k+1 for hi->lo).
  std::vector<double> requested_delays;
  std::vector<int> delay_steps;
  std::vector<double> quantized_delays;
  double max_delay_quantization_error = 0.0;
};

// Trajectory record. One row per sample; channel blocks are laid out as
// consecutive 2N-column groups indexed by directed channel.
struct Telemetry {
  std::vector<double> times;
  Eigen::MatrixXd x;         // samples x nN
  Eigen::MatrixXd xi;        // samples x nN
  Eigen::MatrixXd rho;       // samples x m
  Eigen::MatrixXd waves;     // samples x (2E * 2N); scattering runs only
  Eigen::MatrixXd received;  // samples x (2E * 2N); delayed runs only
  RunMetadata meta;
  int n = 0;
  int N = 0;
  int edge_count = 0;

  int sample_count() const { return static_cast<int>(times.size()); }
  double sample_dt() const { return meta.h * meta.record_stride; }
  // Directed channel index; dest_is_hi selects the lo->hi direction.
  static int channel_index(int edge, bool dest_is_hi) {
    return 2 * edge + (dest_is_hi ? 0 : 1);
  }
};

// Single-run engine. Construction wires the channels; each step() advances
// one grid step (exchange, record, integrate). Typical use is run() below.
class Simulator {
 public:
  Simulator(const ProblemInstance& p, const NetworkGraph& g, SimConfig cfg,
            SwarmState init);

  // Advance one step; returns false when the horizon is reached or the run
  // has diverged.
  bool step();
  const SwarmState& state() const { return state_; }
  bool diverged() const { return meta_.diverged; }
  double time() const { return state_.t; }

  // Record the terminal sample and move the telemetry out. The simulator
  // must not be stepped afterwards.
  Telemetry take_telemetry();

 private:
  void exchange();                       // send + receive on all channels
  void record_if_due();
  bool advance_substeps(int substeps);   // integrate one grid step; false if PD floor hit
  void integrate();
  void check_blowup();
  int channel_of(int edge, int dest) const;
  std::vector<NeighborSignal> signals_for(int i) const;

  const ProblemInstance& p_;
  const NetworkGraph& g_;
  SimConfig cfg_;
  SwarmState state_;
  int N_;
  int n_;
  long k_ = 0;      // current grid step
  long steps_total_ = 0;
  bool guard_active_ = false;

  std::vector<ScatteringLink> links_;    // one per edge (scattering mode)
  std::vector<DelayLine> lines_;         // one per directed channel
  std::vector<Eigen::VectorXd> r_state_; // held signal, per directed channel
  Eigen::VectorXd wave_row_;             // scratch: waves pushed this step
  RunMetadata meta_;
  Telemetry tel_;
  long rows_written_ = 0;
};

// One-shot convenience wrapper around Simulator.
Telemetry run(const ProblemInstance& p, const NetworkGraph& g, const SimConfig& cfg,
              const SwarmState& init);

// Smallest eigenvalue of the symmetric 2x2 block (m11, m12, m22).
double sym2_min_eig(double m11, double m12, double m22);

}  // namespace dopt
