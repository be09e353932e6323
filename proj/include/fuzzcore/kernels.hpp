#pragma once

#include <cstdint>

// Dense numeric kernels backing the tensor ops. The default entry points are
// OpenMP-parallel over independent output elements; each output element is
// accumulated serially in a fixed index order, so results are identical for
// any thread count. kernels::serial holds naive reference implementations
// used by the tests and the benchmark tool.
namespace fuzzcore::kernels {

// exp(x) via range reduction + rational approximation, ~4x faster than libm.
double fexp(double x);

// C[n,m] = op_a(A) * op_b(B), op = optional transpose. A is [n,k] (or [k,n]
// when trans_a), B is [k,m] (or [m,k] when trans_b). accumulate adds into C.
void matmul(const double* A, const double* B, double* C, int64_t n, int64_t k,
            int64_t m, bool trans_a, bool trans_b, bool accumulate);

// C[i,j] = ||x_i - y_j||^2 for one batch element; X [n,d], Y [m,d].
void pairwise_sqdist(const double* X, const double* Y, double* C, int64_t n,
                     int64_t m, int64_t d);
void pairwise_sqdist_batch(const double* X, const double* Y, double* C,
                           int64_t B, int64_t n, int64_t m, int64_t d);
// dX += sum_j dC_ij * 2(x_i - y_j), dY += sum_i dC_ij * 2(y_j - x_i).
void pairwise_sqdist_backward(const double* X, const double* Y,
                              const double* dC, double* dX, double* dY,
                              int64_t B, int64_t n, int64_t m, int64_t d);

// K = exp(-(C - mean(C)) / eps), mean and eps per batch element.
// mean_out[b] receives mean(C_b) (needed by the backward pass).
void gibbs(const double* C, const double* eps, double* K, double* mean_out,
           int64_t B, int64_t nm);
void gibbs_backward(const double* C, const double* eps, const double* K,
                    const double* mean, const double* dK, double* dC,
                    double* deps, int64_t B, int64_t nm);

// out[b,i] = sum_j K[b,i,j] v[b,j]        (bmatvec)
// out[b,j] = sum_i K[b,i,j] u[b,i]        (bmatvec_t)
void bmatvec(const double* K, const double* v, double* out, int64_t B,
             int64_t n, int64_t m);
void bmatvec_t(const double* K, const double* u, double* out, int64_t B,
               int64_t n, int64_t m);

// cost[b] = sum_ij u[b,i] K[b,i,j] v[b,j] C[b,i,j]
void sharp_cost(const double* u, const double* K, const double* v,
                const double* C, double* cost, int64_t B, int64_t n,
                int64_t m);
void sharp_cost_backward(const double* u, const double* K, const double* v,
                         const double* C, const double* dcost, double* du,
                         double* dK, double* dv, double* dC, int64_t B,
                         int64_t n, int64_t m);

// out[b,i] = log sum_j exp(A[b,i,j] + bias[b,j]); bias may be null.
void lse_rows(const double* A, const double* bias, double* out, int64_t B,
              int64_t n, int64_t m);
// out[b,j] = log sum_i exp(A[b,i,j] + bias[b,i]); bias may be null.
void lse_cols(const double* A, const double* bias, double* out, int64_t B,
              int64_t n, int64_t m);
void lse_rows_backward(const double* A, const double* bias, const double* out,
                       const double* dout, double* dA, double* dbias,
                       int64_t B, int64_t n, int64_t m);
void lse_cols_backward(const double* A, const double* bias, const double* out,
                       const double* dout, double* dA, double* dbias,
                       int64_t B, int64_t n, int64_t m);

// Row-wise softmax over the last axis; X and Y are [rows, cols].
void softmax_rows(const double* X, double* Y, int64_t rows, int64_t cols);
void softmax_rows_backward(const double* Y, const double* dY, double* dX,
                           int64_t rows, int64_t cols);

// Row-wise layer norm with learnable gain/bias; saves mean and 1/std per row.
void layer_norm_rows(const double* X, const double* gain, const double* bias,
                     double* Y, double* mu, double* rstd, int64_t rows,
                     int64_t cols);
void layer_norm_rows_backward(const double* X, const double* gain,
                              const double* mu, const double* rstd,
                              const double* dY, double* dX, double* dgain,
                              double* dbias, int64_t rows, int64_t cols);

// Elementwise maps.
void vexp(const double* x, double* y, int64_t n);
void velu1(const double* x, double* y, int64_t n);  // x>0 ? x+1 : exp(x)

// Naive single-thread reference implementations.
namespace serial {
void matmul(const double* A, const double* B, double* C, int64_t n, int64_t k,
            int64_t m, bool trans_a, bool trans_b, bool accumulate);
void pairwise_sqdist(const double* X, const double* Y, double* C, int64_t n,
                     int64_t m, int64_t d);
void softmax_rows(const double* X, double* Y, int64_t rows, int64_t cols);
void lse_rows(const double* A, const double* bias, double* out, int64_t B,
              int64_t n, int64_t m);
void layer_norm_rows(const double* X, const double* gain, const double* bias,
                     double* Y, double* mu, double* rstd, int64_t rows,
                     int64_t cols);
void gibbs(const double* C, const double* eps, double* K, double* mean_out,
           int64_t B, int64_t nm);
void bmatvec(const double* K, const double* v, double* out, int64_t B,
             int64_t n, int64_t m);
void vexp(const double* x, double* y, int64_t n);
}  // namespace serial

}  // namespace fuzzcore::kernels
