#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dopt/errors.hpp"

namespace dopt {

// One undirected edge with its two coupling weights: `a` drives the
// proportional (P) Laplacian, `b` the integral (I) Laplacian.
struct Edge {
  int u = 0;  // lower endpoint after normalization
  int v = 0;  // higher endpoint
  double a = 1.0;
  double b = 1.0;
};

enum class WeightKind { P, I };

// Undirected, connected, weighted communication graph. Immutable after
// construction; construction validates connectivity and weight positivity.
// Agent ids are 0-based. A single isolated node (n=1, no edges) is accepted
// as the degenerate single-agent case.
class NetworkGraph {
 public:
  NetworkGraph(int node_count, std::vector<Edge> edges);

  int node_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbor ids of agent i, ascending.
  const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }

  bool adjacent(int i, int j) const;

  // Weight of edge {i, j}; zero when not adjacent.
  double weight(WeightKind kind, int i, int j) const;

  // Index into edges() for the pair {i, j}; -1 when not adjacent.
  int edge_index(int i, int j) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> edge_lookup_;  // n x n -> edge index or -1
};

struct LaplacianMatrix {
  Eigen::MatrixXd entries;
  WeightKind kind = WeightKind::P;
};

// L[i][i] = sum_j w_ij, L[i][j] = -w_ij. Symmetric PSD with a simple zero
// eigenvalue (eigenvector all-ones) on connected graphs.
LaplacianMatrix laplacian(const NetworkGraph& g, WeightKind kind);

// Kronecker lift M (x) I_N: each scalar entry becomes an N x N diagonal block.
Eigen::MatrixXd kron_lift(const Eigen::MatrixXd& m, int block_dim);

// Convenience builders used by scenario presets.
NetworkGraph ring_graph(int n, double a, double b);
NetworkGraph path_graph(int n, double a, double b);
NetworkGraph complete_graph(int n, double a, double b);

}  // namespace dopt
