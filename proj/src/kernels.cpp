#include "nupar/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace nupar::kernels {

namespace serial {

void matvec(const double* w, const double* x, double* y, size_t rows, size_t cols) {
  for (size_t i = 0; i < rows; ++i) {
    const double* wi = w + i * cols;
    double acc = 0.0;
    for (size_t j = 0; j < cols; ++j) acc += wi[j] * x[j];
    y[i] = acc;
  }
}

void matvec_t_acc(const double* w, const double* gy, double* gx, size_t rows, size_t cols) {
  for (size_t i = 0; i < rows; ++i) {
    const double* wi = w + i * cols;
    const double g = gy[i];
    for (size_t j = 0; j < cols; ++j) gx[j] += wi[j] * g;
  }
}

void rank1_acc(double* gw, const double* gy, const double* x, size_t rows, size_t cols) {
  for (size_t i = 0; i < rows; ++i) {
    double* gwi = gw + i * cols;
    const double g = gy[i];
    for (size_t j = 0; j < cols; ++j) gwi[j] += g * x[j];
  }
}

void axpy(double a, const double* x, double* y, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void adam_step(double* w, const double* g, double* m, double* v, size_t n, double lr,
               double beta1, double beta2, double eps, double b1t, double b2t) {
  for (size_t i = 0; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    const double mhat = m[i] / (1.0 - b1t);
    const double vhat = v[i] / (1.0 - b2t);
    w[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

}  // namespace serial

void matvec(const double* w, const double* x, double* y, size_t rows, size_t cols) {
  const int64_t r = static_cast<int64_t>(rows);
#pragma omp parallel for schedule(static) if (rows * cols >= kParallelCutoff)
  for (int64_t i = 0; i < r; ++i) {
    const double* wi = w + static_cast<size_t>(i) * cols;
    double acc = 0.0;
    for (size_t j = 0; j < cols; ++j) acc += wi[j] * x[j];
    y[i] = acc;
  }
}

void matvec_t_acc(const double* w, const double* gy, double* gx, size_t rows, size_t cols) {
  if (rows * cols < kParallelCutoff) {
    serial::matvec_t_acc(w, gy, gx, rows, cols);
    return;
  }
  // Threads own disjoint j-blocks; within a block the i-order matches the
  // serial reference, so every gx[j] sees the same summation order.
#pragma omp parallel
  {
#if defined(_OPENMP)
    const int nt = omp_get_num_threads();
    const int tid = omp_get_thread_num();
#else
    const int nt = 1, tid = 0;
#endif
    const size_t chunk = (cols + nt - 1) / nt;
    const size_t j0 = std::min(cols, static_cast<size_t>(tid) * chunk);
    const size_t j1 = std::min(cols, j0 + chunk);
    if (j0 < j1) {
      for (size_t i = 0; i < rows; ++i) {
        const double* wi = w + i * cols;
        const double g = gy[i];
        for (size_t j = j0; j < j1; ++j) gx[j] += wi[j] * g;
      }
    }
  }
}

void rank1_acc(double* gw, const double* gy, const double* x, size_t rows, size_t cols) {
  const int64_t r = static_cast<int64_t>(rows);
#pragma omp parallel for schedule(static) if (rows * cols >= kParallelCutoff)
  for (int64_t i = 0; i < r; ++i) {
    double* gwi = gw + static_cast<size_t>(i) * cols;
    const double g = gy[i];
    for (size_t j = 0; j < cols; ++j) gwi[j] += g * x[j];
  }
}

void axpy(double a, const double* x, double* y, size_t n) {
  const int64_t nn = static_cast<int64_t>(n);
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (int64_t i = 0; i < nn; ++i) y[i] += a * x[i];
}

void adam_step(double* w, const double* g, double* m, double* v, size_t n, double lr,
               double beta1, double beta2, double eps, double b1t, double b2t) {
  const int64_t nn = static_cast<int64_t>(n);
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (int64_t i = 0; i < nn; ++i) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    const double mhat = m[i] / (1.0 - b1t);
    const double vhat = v[i] / (1.0 - b2t);
    w[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

}  // namespace nupar::kernels
