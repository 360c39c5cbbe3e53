#pragma once

#include <deque>
#include <string>
#include <vector>

#include "nupar/util.hpp"

namespace nupar {

// Dense 64-bit float array with a gradient slot of the same shape.
struct Tensor {
  std::vector<size_t> shape;
  std::vector<double> v;
  std::vector<double> g;

  size_t size() const { return v.size(); }
  static Tensor zeros(std::vector<size_t> shape);
};

// Named trainable tensor plus Adam moments. Matrices are row-major
// (rows x cols); vectors use cols = 1... rows = length. Embedding tables
// are matrices whose rows are looked up individually.
struct Parameter {
  std::string name;
  size_t rows = 0, cols = 1;
  Tensor t;
  std::vector<double> m, u;  // first/second moment

  size_t size() const { return t.size(); }
  double* data() { return t.v.data(); }
  const double* data() const { return t.v.data(); }
  double* grad() { return t.g.data(); }
};

// Owns all parameters of a model; deque keeps references stable.
class ParamStore {
 public:
  Parameter& add(const std::string& name, size_t rows, size_t cols = 1);
  Parameter* find(const std::string& name);
  void zero_grad();
  size_t total_size() const;
  // L2 norm of all gradients, accumulated serially in registration order.
  double grad_norm() const;
  void scale_grad(double factor);

  std::deque<Parameter>& all() { return params_; }
  const std::deque<Parameter>& all() const { return params_; }

 private:
  std::deque<Parameter> params_;
};

// Seed-controlled initializers.
void init_xavier(Parameter& p, Rng& rng);            // U(+-sqrt(6/(rows+cols)))
void init_uniform(Parameter& p, Rng& rng, double a);  // U(-a, a)

}  // namespace nupar
