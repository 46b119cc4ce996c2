#include "ttolab/model_space.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ttolab {

bool is_valid_grid_size(int M) {
    return M >= 256 && (M & (M - 1)) == 0;
}

namespace {

void require_grid(int M) {
    if (!is_valid_grid_size(M)) {
        throw InvalidArgument("grid size " + std::to_string(M) +
                              " must be a power of two, at least 256");
    }
}

}  // namespace

Eigen::VectorXcd unit_circle_grid(int M) {
    require_grid(M);
    Eigen::VectorXcd z(M);
    for (int t = 0; t < M; ++t) {
        const double angle = 2.0 * std::numbers::pi * t / M;
        z[t] = Complex(std::cos(angle), std::sin(angle));
    }
    return z;
}

FunctionSamples sample_function(const std::function<Complex(Complex)>& f, int M) {
    const Eigen::VectorXcd z = unit_circle_grid(M);
    FunctionSamples out;
    out.values.resize(M);
    for (int t = 0; t < M; ++t) out.values[t] = f(z[t]);
    return out;
}

Complex quadrature_inner(const FunctionSamples& f, const FunctionSamples& g) {
    if (f.size() != g.size()) {
        throw GridMismatch("inner product of samples on grids of sizes " +
                           std::to_string(f.size()) + " and " + std::to_string(g.size()));
    }
    require_grid(f.size());
    return g.values.dot(f.values) / static_cast<double>(f.size());
}

KernelBasis::KernelBasis(FiniteBlaschke blaschke) : blaschke_(std::move(blaschke)) {
    if (!blaschke_.zeros_distinct()) {
        throw DuplicateZeros("kernel basis requires pairwise distinct zeros");
    }
    const int n = blaschke_.degree();
    if (n < 1) throw InvalidArgument("kernel basis requires at least one zero");
    gram_.resize(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            gram_(i, j) = 1.0 / (1.0 - std::conj(blaschke_.zero(j)) * blaschke_.zero(i));
        }
    }
    bprime_.resize(n);
    for (int j = 0; j < n; ++j) bprime_[j] = derivative(blaschke_, blaschke_.zero(j));
}

FunctionSamples KernelBasis::kernel_samples(int j, int M) const {
    const Complex a = blaschke_.zero(j);
    return sample_function([a](Complex z) { return 1.0 / (1.0 - std::conj(a) * z); }, M);
}

FunctionSamples KernelBasis::conj_kernel_samples(int j, int M) const {
    const Complex a = blaschke_.zero(j);
    const FiniteBlaschke& B = blaschke_;
    return sample_function([&B, a](Complex z) { return eval(B, z) / (z - a); }, M);
}

Eigen::MatrixXcd gram(const KernelBasis& basis) { return basis.gram(); }

Complex GeneralKernel::operator()(Complex z) const {
    return (1.0 - std::conj(eval(blaschke, w.value())) * eval(blaschke, z)) /
           (1.0 - std::conj(w.value()) * z);
}

double GeneralKernel::squared_norm() const {
    const double bw = std::abs(eval(blaschke, w.value()));
    return (1.0 - bw * bw) / (1.0 - std::norm(w.value()));
}

Complex conj_pairing(const KernelBasis& basis, int n, int j, int m) {
    const int N = basis.dim();
    if (n < 1 || n > N || j < 0 || j >= n || m < 0 || m >= N) {
        throw IndexOutOfRange("conj_pairing indices (n=" + std::to_string(n) +
                              ", j=" + std::to_string(j) + ", m=" + std::to_string(m) +
                              ") out of range for dimension " + std::to_string(N));
    }
    const FiniteBlaschke Bn = partial_product(basis.blaschke(), n).first;
    if (m == j) return derivative(Bn, basis.zero(j));
    if (m < n) return Complex(0.0, 0.0);
    return eval(Bn, basis.zero(m)) / (basis.zero(m) - basis.zero(j));
}

Eigen::VectorXcd project_kernel(const KernelBasis& basis, int n, int m) {
    const int N = basis.dim();
    if (n < 1 || n >= N || m < n || m >= N) {
        throw IndexOutOfRange("project_kernel needs 1 <= n < N and n <= m < N");
    }
    const FiniteBlaschke Bn = partial_product(basis.blaschke(), n).first;
    const Complex Bnam = eval(Bn, basis.zero(m));
    Eigen::VectorXcd d(n);
    for (int j = 0; j < n; ++j) {
        const Complex bp = derivative(Bn, basis.zero(j));
        d[j] = std::conj(Bnam) /
               (std::conj(bp) * (std::conj(basis.zero(m)) - std::conj(basis.zero(j))));
    }
    return d;
}

Eigen::VectorXcd expand(const KernelBasis& basis, const FunctionSamples& f, double tol) {
    const int N = basis.dim();
    const int M = f.size();
    Eigen::VectorXcd c(N);
    for (int j = 0; j < N; ++j) {
        c[j] = quadrature_inner(f, basis.conj_kernel_samples(j, M)) /
               std::conj(basis.bprime()[j]);
    }
    Eigen::VectorXcd synth = Eigen::VectorXcd::Zero(M);
    for (int j = 0; j < N; ++j) synth += c[j] * basis.kernel_samples(j, M).values;
    const double residual =
        std::sqrt((synth - f.values).squaredNorm() / static_cast<double>(M));
    const double scale = std::max(1.0, std::sqrt(f.values.squaredNorm() / M));
    if (residual / scale > tol) {
        throw NotInModelSpace("expansion residual " + std::to_string(residual / scale) +
                              " exceeds tolerance");
    }
    return c;
}

FunctionSamples conj_apply(const FiniteBlaschke& theta, const FunctionSamples& f) {
    const int M = f.size();
    require_grid(M);
    const Eigen::VectorXcd z = unit_circle_grid(M);
    FunctionSamples out;
    out.values.resize(M);
    for (int t = 0; t < M; ++t) {
        out.values[t] = eval(theta, z[t]) * std::conj(z[t] * f.values[t]);
    }
    return out;
}

std::pair<double, double> ratio_identities(const KernelBasis& basis, int n) {
    const int N = basis.dim();
    if (n < 2 || n > N) throw IndexOutOfRange("ratio identities need 2 <= n <= N");
    const FiniteBlaschke Bn = partial_product(basis.blaschke(), n).first;
    const FiniteBlaschke Bn1 = partial_product(basis.blaschke(), n - 1).first;
    const Complex an = basis.zero(n - 1);

    const double first = std::abs(eval(Bn1, an) / derivative(Bn, an) -
                                  (1.0 - std::norm(an)));
    double second = 0.0;
    for (int j = 0; j < n - 1; ++j) {
        const Complex aj = basis.zero(j);
        const Complex lhs = derivative(Bn1, aj) / derivative(Bn, aj);
        const Complex rhs = (1.0 - std::conj(an) * aj) / (aj - an);
        second = std::max(second, std::abs(lhs - rhs));
    }
    return {first, second};
}

}  // namespace ttolab
