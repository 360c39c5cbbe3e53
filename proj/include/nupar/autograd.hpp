#pragma once

#include <vector>

#include "nupar/tensor.hpp"

namespace nupar {

// Tape-based reverse-mode differentiation over vector-valued nodes. A Graph
// is built per sentence, backward() runs once, clear() recycles it.
// Parameter and Lookup leaves read values in place and accumulate gradients
// directly into their Parameter, so building a graph never copies weights.
class Graph {
 public:
  using VarId = int;

  VarId input(std::vector<double> v);          // constant leaf, no gradient
  VarId zeros(size_t n);
  VarId param(Parameter& p);                   // whole tensor as one vector
  VarId lookup(Parameter& table, size_t row);  // one row of an embedding table

  VarId add(VarId a, VarId b);
  VarId cmult(VarId a, VarId b);
  VarId tanh_v(VarId a);
  VarId sigmoid_v(VarId a);
  VarId concat(const std::vector<VarId>& xs);
  VarId slice(VarId a, size_t offset, size_t len);
  // b + W x, with W a (rows x cols) Param/matrix node and x of length cols
  VarId affine(VarId b, VarId w, size_t rows, size_t cols, VarId x);
  VarId matvec(VarId w, size_t rows, size_t cols, VarId x);
  VarId sum(const std::vector<VarId>& scalars);
  VarId scale(VarId a, double k);
  // -log softmax(scores)[gold] restricted to entries with mask != 0.
  // Masked-out entries receive no probability mass and no gradient.
  VarId masked_nll(VarId scores, const std::vector<char>& mask, int gold);

  std::vector<double> value(VarId id) const;  // copy of the node's values
  size_t dim(VarId id) const;
  // Softmax over a value vector (no graph node); used at decode time.
  static std::vector<double> softmax(const std::vector<double>& v);

  void backward(VarId loss);
  void clear();
  size_t size() const { return nodes_.size(); }

 private:
  enum class Op {
    Input, Param, Lookup, Add, CMult, Tanh, Sigmoid, Concat, Slice,
    Affine, MatVec, Sum, Scale, MaskedNll
  };
  struct Node {
    Op op;
    std::vector<int> args;
    std::vector<double> v, g;
    Parameter* p = nullptr;
    size_t row = 0;        // Lookup row / Slice offset
    size_t rows = 0, cols = 0;
    int pick = -1;         // MaskedNll gold index
    double k = 1.0;        // Scale factor
    std::vector<char> mask;
    std::vector<double> cache;  // MaskedNll probabilities
  };

  const double* val_ptr(int id) const;
  double* grad_ptr(int id);
  size_t len(int id) const;
  int push(Node n);
  void check_dim(VarId a, VarId b, const char* op) const;

  std::vector<Node> nodes_;
};

}  // namespace nupar
