#pragma once

#include <cstddef>

namespace nupar::kernels {

// Dense inner loops of the numeric layer. Each parallel kernel assigns one
// output element to exactly one thread and keeps the inner summation order
// fixed, so results are bitwise identical to the serial reference for any
// thread count. W is row-major (rows x cols).

// y = W x
void matvec(const double* w, const double* x, double* y, size_t rows, size_t cols);
// gx += W^T gy
void matvec_t_acc(const double* w, const double* gy, double* gx, size_t rows, size_t cols);
// GW += gy x^T
void rank1_acc(double* gw, const double* gy, const double* x, size_t rows, size_t cols);
// y += a x
void axpy(double a, const double* x, double* y, size_t n);
// one Adam update over a flat parameter array; b1t/b2t are beta^t powers
void adam_step(double* w, const double* g, double* m, double* v, size_t n, double lr,
               double beta1, double beta2, double eps, double b1t, double b2t);

// Work below this many multiply-adds stays serial; the cutoff changes
// scheduling only, never values.
inline constexpr size_t kParallelCutoff = 16384;

namespace serial {
void matvec(const double* w, const double* x, double* y, size_t rows, size_t cols);
void matvec_t_acc(const double* w, const double* gy, double* gx, size_t rows, size_t cols);
void rank1_acc(double* gw, const double* gy, const double* x, size_t rows, size_t cols);
void axpy(double a, const double* x, double* y, size_t n);
void adam_step(double* w, const double* g, double* m, double* v, size_t n, double lr,
               double beta1, double beta2, double eps, double b1t, double b2t);
}  // namespace serial

}  // namespace nupar::kernels
