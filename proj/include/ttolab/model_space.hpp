#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>

#include "ttolab/blaschke.hpp"

namespace ttolab {

// Samples of a function on the equispaced unit-circle grid z_t = exp(2 pi i t/M).
// M must be a power of two; oracle-grade use requires M >= 256.
struct FunctionSamples {
    Eigen::VectorXcd values;

    int size() const { return static_cast<int>(values.size()); }
};

constexpr int kDefaultGridSize = 4096;

bool is_valid_grid_size(int M);

// The grid points themselves.
Eigen::VectorXcd unit_circle_grid(int M);

FunctionSamples sample_function(const std::function<Complex(Complex)>& f,
                                int M = kDefaultGridSize);

// (1/M) sum f(z_t) conj(g(z_t)); exact for trigonometric polynomials of
// degree < M/2. Throws GridMismatch on unequal sizes.
Complex quadrature_inner(const FunctionSamples& f, const FunctionSamples& g);

// The reproducing-kernel basis {k_1, ..., k_N} of K^2_B at distinct zeros,
// with the closed-form Gram matrix G[i][j] = <k_j, k_i> = 1/(1 - conj(a_j) a_i)
// and the derivative values B'(a_j) cached at construction.
class KernelBasis {
public:
    explicit KernelBasis(FiniteBlaschke blaschke);

    int dim() const noexcept { return static_cast<int>(bprime_.size()); }
    const FiniteBlaschke& blaschke() const noexcept { return blaschke_; }
    const Eigen::MatrixXcd& gram() const noexcept { return gram_; }
    const Eigen::VectorXcd& bprime() const noexcept { return bprime_; }
    Complex zero(int j) const { return blaschke_.zero(j); }

    // Samples of k_j on the grid.
    FunctionSamples kernel_samples(int j, int M = kDefaultGridSize) const;
    // Samples of C_B k_j = B(z)/(z - a_j) on the grid.
    FunctionSamples conj_kernel_samples(int j, int M = kDefaultGridSize) const;

private:
    FiniteBlaschke blaschke_;
    Eigen::MatrixXcd gram_;
    Eigen::VectorXcd bprime_;
};

Eigen::MatrixXcd gram(const KernelBasis& basis);

// The kernel k^B_w(z) = (1 - conj(B(w)) B(z))/(1 - conj(w) z) at a general
// point w, not necessarily a zero of B.
struct GeneralKernel {
    UnitDiskPoint w;
    FiniteBlaschke blaschke;

    Complex operator()(Complex z) const;
    double squared_norm() const;
};

// <C_n k_j, k_m> where C_n is the conjugation of the sub-space of the first n
// zeros. Indices are 0-based: requires j < n <= N and m < N. Closed form:
// 0 for m < n, m != j; B_n'(a_j) for m = j; B_n(a_m)/(a_m - a_j) for m >= n.
Complex conj_pairing(const KernelBasis& basis, int n, int j, int m);

// Coefficients d (length n) with P_n k_m = sum_j d_j k_j, for m >= n:
// d_j = conj(B_n(a_m)) / (conj(B_n'(a_j)) (conj(a_m) - conj(a_j))).
Eigen::VectorXcd project_kernel(const KernelBasis& basis, int n, int m);

// Kernel-basis coefficients of f via c_j = <f, C_B k_j> / conj(B'(a_j)).
// Throws NotInModelSpace when the re-synthesized expansion misses f by more
// than tol in the grid L^2 norm.
Eigen::VectorXcd expand(const KernelBasis& basis, const FunctionSamples& f,
                        double tol = 1e-8);

// Pointwise theta(z) conj(z f(z)) on the grid: the canonical conjugation of
// K^2_theta extended to the sampled circle.
FunctionSamples conj_apply(const FiniteBlaschke& theta, const FunctionSamples& f);

// Residuals of the two partial-product ratio identities at level n (1-based
// count, 2 <= n <= N):
//   B_{n-1}(a_n) / B_n'(a_n) = 1 - |a_n|^2
//   B_{n-1}'(a_j) / B_n'(a_j) = (1 - conj(a_n) a_j)/(a_j - a_n), j < n.
// Returns the max absolute residual of each.
std::pair<double, double> ratio_identities(const KernelBasis& basis, int n);

}  // namespace ttolab
