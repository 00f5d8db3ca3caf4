#pragma once

#include <Eigen/Core>

#include <vector>

namespace egpo::nn {

using Matrix = Eigen::MatrixXd;

/// Handle to a node of a Tape. Only valid for the tape that produced it.
struct Value {
  int id = -1;
  bool valid() const { return id >= 0; }
};

/// Reverse-mode automatic differentiation over dense matrix expressions.
///
/// A Tape records one computation graph. Nodes are appended in topological
/// order by construction, so backward() is a single reverse sweep. A tape is
/// single-use: after backward() it only serves gradient reads.
class Tape {
 public:
  Tape();

  /// Node with no gradient tracking (inputs, sampled noise, batch data).
  Value constant(Matrix v);

  /// Differentiable leaf (parameters). Gradient is accumulated here.
  Value leaf(const Matrix& v);

  Value matmul(Value a, Value b);
  Value add(Value a, Value b);
  /// a: B x D, row: 1 x D broadcast-added to every row of a.
  Value add_rowwise(Value a, Value row);
  Value sub(Value a, Value b);
  Value mul(Value a, Value b);  // elementwise
  Value scale(Value a, double s);
  Value add_scalar(Value a, double s);
  Value tanh(Value a);
  Value relu(Value a);
  Value exp(Value a);
  Value softplus(Value a);
  Value square(Value a);
  /// Hard clamp; gradient passes where lo <= x <= hi, zero outside.
  Value clamp(Value a, double lo, double hi);
  Value min(Value a, Value b);  // elementwise, ties go to a
  Value rowsum(Value a);        // B x D -> B x 1
  Value sum_all(Value a);       // -> 1 x 1
  Value mean_all(Value a);      // -> 1 x 1
  Value concat_cols(Value a, Value b);

  /// Reverse sweep from a scalar (1x1) loss node. A tape can only be
  /// differentiated once; a second call is rejected.
  void backward(Value loss);

  const Matrix& value(Value v) const;

  /// Gradient of the last backward() loss w.r.t. node v (zeros if untouched).
  Matrix grad(Value v) const;

  std::size_t size() const { return nodes_.size(); }
  bool consumed() const { return consumed_; }

 private:
  enum class Op : std::uint8_t {
    kConst, kLeaf, kMatmul, kAdd, kAddRow, kSub, kMul, kScale, kAddScalar,
    kTanh, kRelu, kExp, kSoftplus, kSquare, kClamp, kMin, kRowSum, kSumAll,
    kMeanAll, kConcatCols,
  };

  struct Node {
    Op op;
    int a = -1;
    int b = -1;
    double s0 = 0.0;
    double s1 = 0.0;
    Matrix value;
    Matrix grad;  // lazily allocated during backward
    bool needs_grad = false;
  };

  int push(Node n);
  Matrix& grad_of(int id);
  void check(Value v) const;
  bool tracked(int id) const { return nodes_[id].needs_grad; }

  std::vector<Node> nodes_;
  bool consumed_ = false;
};

}  // namespace egpo::nn
