#pragma once

#include <map>
#include <vector>

#include "ttolab/model_space.hpp"

namespace ttolab {

enum class BasisTag {
    // reproducing kernels k_j at the distinct zeros of B
    Kernel,
    // {1, z, ..., z^{N-1}} for B = z^N
    Monomial,
    // {1, z, z^2 k_w / ||k_w||} for B = z^2 (w - z)/(1 - conj(w) z)
    Example3,
};

// Which space an operator matrix lives on and in which coordinates.
struct BasisDescriptor {
    FiniteBlaschke blaschke;
    BasisTag tag = BasisTag::Kernel;

    static BasisDescriptor kernel(FiniteBlaschke B);
    static BasisDescriptor monomial(int n);
    static BasisDescriptor example3(UnitDiskPoint w);

    // For Example3, the parameter w (the last zero).
    Complex example3_w() const;
};

// Matrix of an operator A with columns indexed by the basis: entry (i, j) is
// the coefficient of basis element i in A applied to basis element j.
struct OperatorMatrix {
    Eigen::MatrixXcd entries;
    BasisDescriptor basis;

    int dim() const { return static_cast<int>(entries.rows()); }
};

// A TTO symbol phi = psi + conj(chi) with psi, chi in the model space,
// expanded in kernel coefficients; or a trigonometric polynomial
// sum c_k z^k (monomial and example3 bases).
struct SymbolSpec {
    enum class Form { KernelCoeffs, Trig };

    Form form = Form::KernelCoeffs;
    Eigen::VectorXcd psi;
    Eigen::VectorXcd chi;
    std::map<int, Complex> trig;

    static SymbolSpec kernel_coeffs(Eigen::VectorXcd psi, Eigen::VectorXcd chi);
    static SymbolSpec trig_poly(std::map<int, Complex> coeffs);
};

// Builds the matrix of the truncated Toeplitz operator A_phi f = P_B(phi f).
// Kernel basis: entries by circle quadrature of <phi k_j, C_B k_i>/conj(B'(a_i)).
// Monomial basis: the classical Toeplitz truncation (entry (i,j) = c_{i-j}).
// Example3 basis: quadrature of <phi e_j, e_i> in the orthonormal basis.
OperatorMatrix tto_matrix(const BasisDescriptor& basis, const SymbolSpec& symbol,
                          int grid_size = kDefaultGridSize);

// Closed-form kernel-basis construction through the residues of B:
//   b_{i,j} = sum_m psi(a_m) G(m,i) G(m,j) / (B'(a_m) conj(B'(a_i)))
//             + delta_{ij} conj(chi(a_j)).
// Quadrature-free, so it stays accurate for zeros close to the boundary.
OperatorMatrix tto_matrix_exact(const KernelBasis& basis, const SymbolSpec& symbol);

// Matrix of the adjoint in the same basis. Kernel basis solves
// G adj = M^H G; refuses Gram condition numbers above 1e12.
OperatorMatrix adjoint(const OperatorMatrix& M);

// C-symmetry test. Kernel basis checks
// conj(B'(a_j)) b_{j,i} = conj(B'(a_i)) b_{i,j}; monomial basis checks
// persymmetry; example3 checks J conj(A) conj(J) = A^H against the
// quadrature-computed conjugation matrix J. The residual is max-entry,
// normalized by max(1, max|entry|).
std::pair<bool, double> is_c_symmetric(const OperatorMatrix& M, double tol);

// Compression one level down the zero chain: the matrix of
// P_{n-1} A restricted to the sub-model-space without the last zero.
// Monomial basis: leading principal block.
OperatorMatrix compress(const OperatorMatrix& M);

// One-shot compression to sub-degree n via the tail-sum formula
//   b^{(n)}_{i,j} = b_{i,j}
//     + sum_{m>n} conj(B_n(a_m)) b_{m,j} / (conj(B_n'(a_i)) (conj(a_m)-conj(a_i))).
OperatorMatrix compress_from_tail(const OperatorMatrix& M, int n);

// TTO-membership test. Kernel basis: the rank-style entry criterion
//   b_{i,j} = (conj B'(a_r)/conj B'(a_i)) *
//             (b_{r,i}(conj a_r - conj a_i) + b_{r,j}(conj a_j - conj a_r))
//             / (conj a_j - conj a_i)
// at anchor r. Monomial: constant diagonals. Example3: the four linear
// entry equations of that space.
std::pair<bool, double> is_tto(const OperatorMatrix& M, double tol, int anchor = 0);

// Trace residuals against the rank-two test operators: for all k, l >= 0 with
// k + l + 1 <= n, |A(k,0) - A(k+l,l)| and |A(0,k) - A(l,k+l)|.
std::vector<double> brown_halmos_residuals(const OperatorMatrix& M);

// Samples of U_{b_a} applied to the polynomial with the given monomial
// coefficients: U f = sqrt(1-|a|^2)/(1 - conj(a) z) * f(b_a(z)).
FunctionSamples crespo_apply(UnitDiskPoint a, const Eigen::VectorXcd& monomial_coeffs,
                             int grid_size = kDefaultGridSize);

// Samples of the transported basis element e_k = U z^k of K^2_{b_a^n}.
FunctionSamples tm_basis_samples(UnitDiskPoint a, int k,
                                 int grid_size = kDefaultGridSize);

// Matrix of U_{b_a}: columns are U z^q paired against the transported basis,
// all by quadrature. Identity in exact arithmetic; its unitarity deficit
// measures the discretization error of the transport.
OperatorMatrix crespo_transform(UnitDiskPoint a, int n,
                                int grid_size = kDefaultGridSize);

// Matrix J of an antilinear conjugation C in an orthonormal basis, in the
// convention C x = J conj(x): J(p,k) = <C e_k, e_p> by quadrature.
Eigen::MatrixXcd conjugation_matrix_tm(UnitDiskPoint a, int n,
                                       int grid_size = kDefaultGridSize);
Eigen::MatrixXcd conjugation_matrix_example3(UnitDiskPoint w,
                                             int grid_size = kDefaultGridSize);

// ||J conj(A) conj(J) - A^H||_max / max(1, ||A||_max) for an orthonormal-basis
// matrix A and conjugation matrix J.
double csym_residual_against(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& J);

// Least-squares recovery of a symbol that reproduces M. The symbol is not
// unique; the constant ambiguity is pinned by forcing the first kernel
// coefficient of chi to zero (kernel basis). Throws NotTTO when M fails
// is_tto or the round-trip residual exceeds tol.
SymbolSpec recover_symbol(const OperatorMatrix& M, double tol = 1e-8);

// The closed-form 3x3 matrix of the example3 TTO with trig symbol
// coefficients c_{-2}..c_2, as displayed for that space.
Eigen::MatrixXcd example3_display_matrix(Complex w, const SymbolSpec& symbol);

// Residuals of the four linear entry equations tying a 3x3 example3 matrix
// to the TTO space (max over the four, normalized by max(1, ||A||_max)).
double example3_equation_residual(Complex w, const Eigen::MatrixXcd& A);

}  // namespace ttolab
