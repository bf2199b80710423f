#pragma once

#include <Eigen/Dense>

#include "dopt/errors.hpp"

namespace dopt {

// Which wave form an endpoint uses. The endpoint with the higher id sends
// s = (-v + eta*r)/sqrt(2 eta); the lower one sends s = (v - eta*r)/sqrt(2 eta).
// Exactly one endpoint of every edge takes each role, fixed by id order.
enum class WaveRole { HighId, LowId };

struct WaveMessage {
  Eigen::VectorXd s;  // length 2N
  int sender = -1;
  int receiver = -1;
  double send_time = 0.0;
};

// Wave-variable codec for one edge {lo, hi}. The coupling map
// E = [[a I, -b I], [b I, 0]] acts blockwise, so every matrix here is a
// 2x2 scalar block applied to the (head, tail) halves of a 2N vector;
// the lifted 2N x 2N inverses are never formed.
//
// Port relations, with X = [x; xi] the endpoint state and v = E (r - X):
//   high id:  s_out = (-v + eta r)/sqrt(2 eta),  s_in = (-v - eta r)/sqrt(2 eta)
//   low  id:  s_out = ( v - eta r)/sqrt(2 eta),  s_in = ( v + eta r)/sqrt(2 eta)
// decode() solves the s_in relation for r:
//   high id:  r = (E + eta I)^{-1} (E X - sqrt(2 eta) s_in)
//   low  id:  r = (E + eta I)^{-1} (E X + sqrt(2 eta) s_in)
// Both inverses reduce to the same 2x2 block, cached at construction.
class ScatteringLink {
 public:
  ScatteringLink(int lo, int hi, double a, double b, double eta,
                 double delay_lo_to_hi, double delay_hi_to_lo, int N);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  double eta() const { return eta_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double delay_lo_to_hi() const { return delay_lo_to_hi_; }
  double delay_hi_to_lo() const { return delay_hi_to_lo_; }

  WaveRole role_of(int agent) const;
  int peer_of(int agent) const;

  // Outgoing wave for this endpoint's current controller output v and held
  // signal r.
  WaveMessage encode(int sender, const Eigen::VectorXd& v, const Eigen::VectorXd& r,
                     double send_time) const;

  // Recover r from the incoming (delayed) wave and the endpoint's own state.
  Eigen::VectorXd decode(int receiver, const Eigen::VectorXd& s_in,
                         const Eigen::VectorXd& x, const Eigen::VectorXd& xi) const;

 private:
  int lo_, hi_;
  double a_, b_, eta_;
  double delay_lo_to_hi_, delay_hi_to_lo_;
  int N_;
  double sqrt2eta_;
  // (E + eta I)^{-1} as a 2x2 scalar block.
  double k11_, k12_, k21_, k22_;
};

// Passivity residual of one port at one instant:
//   1/2 (||s_out||^2 - ||s_in||^2) + v' r
// Zero to roundoff for any consistently wired port, either role.
double power_balance(const Eigen::VectorXd& s_out, const Eigen::VectorXd& s_in,
                     const Eigen::VectorXd& v, const Eigen::VectorXd& r);

// Spectral radius of Ebar^2 with Ebar = (E + eta I)^{-1} (E - eta I).
// Strictly below 1 for every positive (a, b, eta); this is what makes the
// wave reflections across the delay loop contract. Block structure makes
// the value independent of N.
double ebar_spectral_radius(double a, double b, double eta, int N = 1);

}  // namespace dopt
