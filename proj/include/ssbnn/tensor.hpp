#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ssbnn/rng.hpp"

namespace ssbnn {

// Dense row-major f64 array. Plain value type; gradients live here only for
// leaves that were registered on a tape and read back after backprop.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> values;
  bool requires_grad = false;
  std::vector<double> grad;  // empty unless populated by a tape

  Tensor() = default;
  Tensor(std::vector<std::size_t> s, std::vector<double> v);
  explicit Tensor(double scalar) : shape{1}, values{scalar} {}

  static Tensor zeros(std::vector<std::size_t> shape);
  static Tensor full(std::vector<std::size_t> shape, double value);
  static Tensor randn(std::vector<std::size_t> shape, RngStream& rng,
                      double stddev = 1.0);

  std::size_t numel() const { return values.size(); }
  std::size_t rows() const { return shape.empty() ? 0 : shape[0]; }
  std::size_t cols() const { return shape.size() < 2 ? 1 : shape[1]; }
  bool is_scalar() const { return values.size() == 1; }
  double scalar() const;

  double& at(std::size_t i, std::size_t j) { return values[i * cols() + j]; }
  double at(std::size_t i, std::size_t j) const {
    return values[i * cols() + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * cols(), cols()};
  }

  bool all_finite() const;
  bool same_shape(const Tensor& other) const { return shape == other.shape; }
};

using NodeId = std::size_t;

enum class Reduction { Mean, Sum };

// Recorded computation: append-only list of nodes, each produced by exactly
// one operation whose inputs precede it. Reverse iteration is therefore a
// valid reverse topological order for backprop. A tape is owned by a single
// training step and never shared.
class Tape {
 public:
  // Leaves.
  NodeId constant(Tensor value);
  NodeId param(const Tensor& value);  // tracked leaf; gradient retrievable

  // Elementwise, same shape.
  NodeId add(NodeId a, NodeId b);
  NodeId sub(NodeId a, NodeId b);
  NodeId mul(NodeId a, NodeId b);
  // Elementwise with constants.
  NodeId scale(NodeId a, double c);
  NodeId add_scalar(NodeId a, double c);
  // Broadcast a 1-element node over a tensor: out = a * s.
  NodeId scale_by(NodeId a, NodeId s);
  NodeId exp(NodeId a);
  NodeId log(NodeId a);
  NodeId relu(NodeId a);

  // Linear algebra.
  NodeId matmul(NodeId a, NodeId b);     // [n,k] x [k,m]
  NodeId matmul_nt(NodeId a, NodeId b);  // [n,k] x [m,k]^T
  NodeId add_row_vector(NodeId a, NodeId v);

  // Reductions to scalars.
  NodeId sum(NodeId a);
  NodeId mean(NodeId a);

  // Row-structured ops.
  NodeId l2_normalize_rows(NodeId a, double epsilon);
  // [2m, p] -> [m, p]; row i is the mean of rows 2i and 2i+1.
  NodeId pair_mean_rows(NodeId a);

  // -log softmax(logits_r)[labels_r], reduced over rows. Uses the
  // log-sum-exp shift, so extreme logits stay finite.
  NodeId cross_entropy(NodeId logits, std::vector<int> labels,
                       Reduction reduction);

  const Tensor& value(NodeId id) const;
  std::size_t size() const { return nodes_.size(); }

  // Reverse sweep from a scalar loss. Parameters not reachable from the loss
  // end up with zero gradients. Throws on a non-scalar loss.
  void backward(NodeId loss);

  // Gradient of the last backward() with respect to a node (usually a
  // param). Valid until the tape is destroyed.
  const std::vector<double>& gradient(NodeId id) const;

 private:
  enum class Op {
    Constant,
    Param,
    Add,
    Sub,
    Mul,
    Scale,
    AddScalar,
    ScaleBy,
    Exp,
    Log,
    Relu,
    MatmulNN,
    MatmulNT,
    AddRowVector,
    Sum,
    Mean,
    L2NormalizeRows,
    PairMeanRows,
    CrossEntropy,
  };

  struct Node {
    Op op;
    NodeId in0 = 0, in1 = 0;
    Tensor value;
    std::vector<double> grad;     // dLoss/dnode, lazily allocated
    std::vector<double> saved;    // op-specific intermediates
    std::vector<int> labels;      // cross-entropy only
    double cval = 0.0;            // constant for Scale/AddScalar/epsilon
    Reduction reduction = Reduction::Mean;
  };

  NodeId push(Node node);
  std::vector<double>& grad_buffer(NodeId id);
  void backward_node(NodeId id);

  std::vector<Node> nodes_;
};

// Standalone numeric helpers shared by the tape and the inference paths.

// -log softmax(logits)[label] with the log-sum-exp shift. Throws when the
// label is out of range or a logit is non-finite.
double softmax_cross_entropy(std::span<const double> logits, int label);

// Row-wise x / max(||x||_2, epsilon). Rows with norm below epsilon are
// divided by epsilon instead, so zero stays zero instead of NaN.
Tensor l2_normalize(const Tensor& v, double epsilon = 1e-12);

// softmax of one row, stable under extreme logits.
void softmax_row(std::span<const double> logits, std::span<double> out);
std::vector<double> softmax(std::span<const double> logits);

}  // namespace ssbnn
