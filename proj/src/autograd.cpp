#include "nupar/autograd.hpp"

#include <cmath>

#include "nupar/kernels.hpp"

namespace nupar {

Tensor Tensor::zeros(std::vector<size_t> shape) {
  size_t n = 1;
  for (size_t d : shape) n *= d;
  Tensor t;
  t.shape = std::move(shape);
  t.v.assign(n, 0.0);
  t.g.assign(n, 0.0);
  return t;
}

Parameter& ParamStore::add(const std::string& name, size_t rows, size_t cols) {
  for (auto& p : params_)
    if (p.name == name) throw ContractViolation("duplicate parameter name: " + name);
  Parameter p;
  p.name = name;
  p.rows = rows;
  p.cols = cols;
  p.t = Tensor::zeros({rows, cols});
  p.m.assign(rows * cols, 0.0);
  p.u.assign(rows * cols, 0.0);
  params_.push_back(std::move(p));
  return params_.back();
}

Parameter* ParamStore::find(const std::string& name) {
  for (auto& p : params_)
    if (p.name == name) return &p;
  return nullptr;
}

void ParamStore::zero_grad() {
  for (auto& p : params_) std::fill(p.t.g.begin(), p.t.g.end(), 0.0);
}

size_t ParamStore::total_size() const {
  size_t n = 0;
  for (const auto& p : params_) n += p.size();
  return n;
}

double ParamStore::grad_norm() const {
  double acc = 0.0;
  for (const auto& p : params_)
    for (double g : p.t.g) acc += g * g;
  return std::sqrt(acc);
}

void ParamStore::scale_grad(double factor) {
  for (auto& p : params_)
    for (double& g : p.t.g) g *= factor;
}

void init_xavier(Parameter& p, Rng& rng) {
  const double a = std::sqrt(6.0 / static_cast<double>(p.rows + p.cols));
  for (double& v : p.t.v) v = rng.next_uniform(-a, a);
}

void init_uniform(Parameter& p, Rng& rng, double a) {
  for (double& v : p.t.v) v = rng.next_uniform(-a, a);
}

namespace {
inline double sigmoid_scalar(double x) {
  if (x >= 0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}
}  // namespace

int Graph::push(Node n) {
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

const double* Graph::val_ptr(int id) const {
  const Node& n = nodes_[id];
  if (n.op == Op::Param) return n.p->data();
  if (n.op == Op::Lookup) return n.p->data() + n.row * n.p->cols;
  return n.v.data();
}

double* Graph::grad_ptr(int id) {
  Node& n = nodes_[id];
  if (n.op == Op::Param) return n.p->grad();
  if (n.op == Op::Lookup) return n.p->grad() + n.row * n.p->cols;
  return n.g.data();
}

size_t Graph::len(int id) const {
  const Node& n = nodes_[id];
  if (n.op == Op::Param) return n.p->size();
  if (n.op == Op::Lookup) return n.p->cols;
  return n.v.size();
}

std::vector<double> Graph::value(VarId id) const {
  const double* p = val_ptr(id);
  return std::vector<double>(p, p + len(id));
}

size_t Graph::dim(VarId id) const { return len(id); }

void Graph::check_dim(VarId a, VarId b, const char* op) const {
  if (len(a) != len(b))
    throw ContractViolation(std::string(op) + ": dimension mismatch (" +
                            std::to_string(len(a)) + " vs " + std::to_string(len(b)) + ")");
}

Graph::VarId Graph::input(std::vector<double> v) {
  Node n;
  n.op = Op::Input;
  n.v = std::move(v);
  return push(std::move(n));
}

Graph::VarId Graph::zeros(size_t n) { return input(std::vector<double>(n, 0.0)); }

Graph::VarId Graph::param(Parameter& p) {
  Node n;
  n.op = Op::Param;
  n.p = &p;
  return push(std::move(n));
}

Graph::VarId Graph::lookup(Parameter& table, size_t row) {
  if (row >= table.rows) throw ContractViolation("lookup row out of range");
  Node n;
  n.op = Op::Lookup;
  n.p = &table;
  n.row = row;
  return push(std::move(n));
}

Graph::VarId Graph::add(VarId a, VarId b) {
  check_dim(a, b, "add");
  Node n;
  n.op = Op::Add;
  n.args = {a, b};
  const size_t d = len(a);
  n.v.resize(d);
  n.g.assign(d, 0.0);
  const double* pa = val_ptr(a);
  const double* pb = val_ptr(b);
  for (size_t i = 0; i < d; ++i) n.v[i] = pa[i] + pb[i];
  return push(std::move(n));
}

Graph::VarId Graph::cmult(VarId a, VarId b) {
  check_dim(a, b, "cmult");
  Node n;
  n.op = Op::CMult;
  n.args = {a, b};
  const size_t d = len(a);
  n.v.resize(d);
  n.g.assign(d, 0.0);
  const double* pa = val_ptr(a);
  const double* pb = val_ptr(b);
  for (size_t i = 0; i < d; ++i) n.v[i] = pa[i] * pb[i];
  return push(std::move(n));
}

Graph::VarId Graph::tanh_v(VarId a) {
  Node n;
  n.op = Op::Tanh;
  n.args = {a};
  const size_t d = len(a);
  n.v.resize(d);
  n.g.assign(d, 0.0);
  const double* pa = val_ptr(a);
  for (size_t i = 0; i < d; ++i) n.v[i] = std::tanh(pa[i]);
  return push(std::move(n));
}

Graph::VarId Graph::sigmoid_v(VarId a) {
  Node n;
  n.op = Op::Sigmoid;
  n.args = {a};
  const size_t d = len(a);
  n.v.resize(d);
  n.g.assign(d, 0.0);
  const double* pa = val_ptr(a);
  for (size_t i = 0; i < d; ++i) n.v[i] = sigmoid_scalar(pa[i]);
  return push(std::move(n));
}

Graph::VarId Graph::concat(const std::vector<VarId>& xs) {
  if (xs.empty()) throw ContractViolation("concat of nothing");
  Node n;
  n.op = Op::Concat;
  n.args = xs;
  size_t d = 0;
  for (VarId x : xs) d += len(x);
  n.v.resize(d);
  n.g.assign(d, 0.0);
  size_t off = 0;
  for (VarId x : xs) {
    const double* px = val_ptr(x);
    const size_t dx = len(x);
    std::copy(px, px + dx, n.v.begin() + off);
    off += dx;
  }
  return push(std::move(n));
}

Graph::VarId Graph::slice(VarId a, size_t offset, size_t length) {
  if (offset + length > len(a)) throw ContractViolation("slice out of range");
  Node n;
  n.op = Op::Slice;
  n.args = {a};
  n.row = offset;
  n.v.assign(val_ptr(a) + offset, val_ptr(a) + offset + length);
  n.g.assign(length, 0.0);
  return push(std::move(n));
}

Graph::VarId Graph::affine(VarId b, VarId w, size_t rows, size_t cols, VarId x) {
  if (len(w) != rows * cols) throw ContractViolation("affine: W size mismatch");
  if (len(x) != cols) throw ContractViolation("affine: x size mismatch");
  if (len(b) != rows) throw ContractViolation("affine: bias size mismatch");
  Node n;
  n.op = Op::Affine;
  n.args = {b, w, x};
  n.rows = rows;
  n.cols = cols;
  n.v.resize(rows);
  n.g.assign(rows, 0.0);
  kernels::matvec(val_ptr(w), val_ptr(x), n.v.data(), rows, cols);
  const double* pb = val_ptr(b);
  for (size_t i = 0; i < rows; ++i) n.v[i] += pb[i];
  return push(std::move(n));
}

Graph::VarId Graph::matvec(VarId w, size_t rows, size_t cols, VarId x) {
  if (len(w) != rows * cols) throw ContractViolation("matvec: W size mismatch");
  if (len(x) != cols) throw ContractViolation("matvec: x size mismatch");
  Node n;
  n.op = Op::MatVec;
  n.args = {w, x};
  n.rows = rows;
  n.cols = cols;
  n.v.resize(rows);
  n.g.assign(rows, 0.0);
  kernels::matvec(val_ptr(w), val_ptr(x), n.v.data(), rows, cols);
  return push(std::move(n));
}

Graph::VarId Graph::sum(const std::vector<VarId>& scalars) {
  if (scalars.empty()) throw ContractViolation("sum of nothing");
  Node n;
  n.op = Op::Sum;
  n.args = scalars;
  double acc = 0.0;
  for (VarId s : scalars) {
    if (len(s) != 1) throw ContractViolation("sum: non-scalar argument");
    acc += val_ptr(s)[0];
  }
  n.v = {acc};
  n.g = {0.0};
  return push(std::move(n));
}

Graph::VarId Graph::scale(VarId a, double k) {
  Node n;
  n.op = Op::Scale;
  n.args = {a};
  n.k = k;
  const size_t d = len(a);
  n.v.resize(d);
  n.g.assign(d, 0.0);
  const double* pa = val_ptr(a);
  for (size_t i = 0; i < d; ++i) n.v[i] = k * pa[i];
  return push(std::move(n));
}

Graph::VarId Graph::masked_nll(VarId scores, const std::vector<char>& mask, int gold) {
  const size_t d = len(scores);
  if (mask.size() != d) throw ContractViolation("masked_nll: mask size mismatch");
  if (gold < 0 || static_cast<size_t>(gold) >= d || !mask[gold])
    throw ContractViolation("masked_nll: gold index not in the legal set");
  const double* ps = val_ptr(scores);
  double mx = -1e300;
  for (size_t i = 0; i < d; ++i)
    if (mask[i] && ps[i] > mx) mx = ps[i];
  double z = 0.0;
  for (size_t i = 0; i < d; ++i)
    if (mask[i]) z += std::exp(ps[i] - mx);
  Node n;
  n.op = Op::MaskedNll;
  n.args = {scores};
  n.pick = gold;
  n.mask = mask;
  n.cache.resize(d);
  for (size_t i = 0; i < d; ++i) n.cache[i] = mask[i] ? std::exp(ps[i] - mx) / z : 0.0;
  n.v = {mx + std::log(z) - ps[gold]};
  n.g = {0.0};
  return push(std::move(n));
}

std::vector<double> Graph::softmax(const std::vector<double>& v) {
  double mx = -1e300;
  for (double x : v) mx = std::max(mx, x);
  std::vector<double> out(v.size());
  double z = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = std::exp(v[i] - mx);
    z += out[i];
  }
  for (double& x : out) x /= z;
  return out;
}

void Graph::backward(VarId loss) {
  if (len(loss) != 1) throw ContractViolation("backward: loss must be scalar");
  *grad_ptr(loss) = 1.0;
  for (int id = static_cast<int>(nodes_.size()) - 1; id >= 0; --id) {
    Node& n = nodes_[id];
    switch (n.op) {
      case Op::Input:
      case Op::Param:
      case Op::Lookup:
        break;
      case Op::Add: {
        const size_t d = n.v.size();
        kernels::serial::axpy(1.0, n.g.data(), grad_ptr(n.args[0]), d);
        kernels::serial::axpy(1.0, n.g.data(), grad_ptr(n.args[1]), d);
        break;
      }
      case Op::CMult: {
        const size_t d = n.v.size();
        double* ga = grad_ptr(n.args[0]);
        double* gb = grad_ptr(n.args[1]);
        const double* pa = val_ptr(n.args[0]);
        const double* pb = val_ptr(n.args[1]);
        for (size_t i = 0; i < d; ++i) {
          ga[i] += n.g[i] * pb[i];
          gb[i] += n.g[i] * pa[i];
        }
        break;
      }
      case Op::Tanh: {
        double* ga = grad_ptr(n.args[0]);
        for (size_t i = 0; i < n.v.size(); ++i) ga[i] += n.g[i] * (1.0 - n.v[i] * n.v[i]);
        break;
      }
      case Op::Sigmoid: {
        double* ga = grad_ptr(n.args[0]);
        for (size_t i = 0; i < n.v.size(); ++i) ga[i] += n.g[i] * n.v[i] * (1.0 - n.v[i]);
        break;
      }
      case Op::Concat: {
        size_t off = 0;
        for (VarId a : n.args) {
          kernels::serial::axpy(1.0, n.g.data() + off, grad_ptr(a), len(a));
          off += len(a);
        }
        break;
      }
      case Op::Slice: {
        kernels::serial::axpy(1.0, n.g.data(), grad_ptr(n.args[0]) + n.row, n.v.size());
        break;
      }
      case Op::Affine: {
        kernels::serial::axpy(1.0, n.g.data(), grad_ptr(n.args[0]), n.rows);
        kernels::rank1_acc(grad_ptr(n.args[1]), n.g.data(), val_ptr(n.args[2]), n.rows, n.cols);
        kernels::matvec_t_acc(val_ptr(n.args[1]), n.g.data(), grad_ptr(n.args[2]), n.rows,
                              n.cols);
        break;
      }
      case Op::MatVec: {
        kernels::rank1_acc(grad_ptr(n.args[0]), n.g.data(), val_ptr(n.args[1]), n.rows, n.cols);
        kernels::matvec_t_acc(val_ptr(n.args[0]), n.g.data(), grad_ptr(n.args[1]), n.rows,
                              n.cols);
        break;
      }
      case Op::Sum: {
        for (VarId a : n.args) *grad_ptr(a) += n.g[0];
        break;
      }
      case Op::Scale: {
        kernels::serial::axpy(n.k, n.g.data(), grad_ptr(n.args[0]), n.v.size());
        break;
      }
      case Op::MaskedNll: {
        double* gs = grad_ptr(n.args[0]);
        const double go = n.g[0];
        for (size_t i = 0; i < n.cache.size(); ++i) {
          if (!n.mask[i]) continue;
          gs[i] += go * (n.cache[i] - (static_cast<int>(i) == n.pick ? 1.0 : 0.0));
        }
        break;
      }
    }
  }
}

void Graph::clear() { nodes_.clear(); }

}  // namespace nupar
