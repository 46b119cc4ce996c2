#include "ttolab/operators.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <string>

namespace ttolab {

namespace {

double matrix_scale(const Eigen::MatrixXcd& A) {
    return std::max(1.0, A.cwiseAbs().maxCoeff());
}

double knorm(Complex w) {
    // ||k_w|| = (1 - |w|^2)^{-1/2}
    return 1.0 / std::sqrt(1.0 - std::norm(w));
}

void require_square(const OperatorMatrix& M) {
    if (M.entries.rows() != M.entries.cols()) {
        throw DimensionMismatch("operator matrix must be square");
    }
    const int expected = M.basis.blaschke.degree();
    if (M.dim() != expected) {
        throw DimensionMismatch("matrix dimension " + std::to_string(M.dim()) +
                                " does not match space dimension " +
                                std::to_string(expected));
    }
}

// Samples of the example3 orthonormal basis {1, z, z^2 k_w / ||k_w||}.
std::vector<FunctionSamples> example3_basis_samples(Complex w, int M) {
    const Eigen::VectorXcd z = unit_circle_grid(M);
    std::vector<FunctionSamples> e(3);
    e[0].values = Eigen::VectorXcd::Ones(M);
    e[1].values = z;
    e[2].values.resize(M);
    const double nk = knorm(w);
    for (int t = 0; t < M; ++t) {
        e[2].values[t] = z[t] * z[t] / ((1.0 - std::conj(w) * z[t]) * nk);
    }
    return e;
}

// phi = sum_k c_k s_k with s_k = z^k for |k| <= 1 replaced by the example3
// convention: s_2 = z^2 k_w/||k_w||, s_{-2} = conj(s_2).
FunctionSamples example3_symbol_samples(Complex w, const std::map<int, Complex>& c, int M) {
    const auto e = example3_basis_samples(w, M);
    const Eigen::VectorXcd z = unit_circle_grid(M);
    FunctionSamples phi;
    phi.values = Eigen::VectorXcd::Zero(M);
    for (const auto& [k, ck] : c) {
        switch (k) {
            case -2: phi.values += ck * e[2].values.conjugate(); break;
            case -1: phi.values += ck * z.conjugate(); break;
            case 0: phi.values += ck * Eigen::VectorXcd::Ones(M); break;
            case 1: phi.values += ck * z; break;
            case 2: phi.values += ck * e[2].values; break;
            default:
                throw DimensionMismatch("example3 symbol index " + std::to_string(k) +
                                        " outside -2..2");
        }
    }
    return phi;
}

Complex trig_coeff(const std::map<int, Complex>& c, int k) {
    const auto it = c.find(k);
    return it == c.end() ? Complex(0.0, 0.0) : it->second;
}

Eigen::VectorXcd kernel_coeff_or_zero(const Eigen::VectorXcd& v, int n,
                                      const char* which) {
    if (v.size() == 0) return Eigen::VectorXcd::Zero(n);
    if (v.size() != n) {
        throw DimensionMismatch(std::string(which) + " coefficient vector has length " +
                                std::to_string(v.size()) + ", space dimension is " +
                                std::to_string(n));
    }
    return v;
}

}  // namespace

BasisDescriptor BasisDescriptor::kernel(FiniteBlaschke B) {
    if (!B.zeros_distinct()) {
        throw DuplicateZeros("kernel basis requires pairwise distinct zeros");
    }
    return BasisDescriptor{std::move(B), BasisTag::Kernel};
}

BasisDescriptor BasisDescriptor::monomial(int n) {
    return BasisDescriptor{FiniteBlaschke::power_of_z(n), BasisTag::Monomial};
}

BasisDescriptor BasisDescriptor::example3(UnitDiskPoint w) {
    if (std::abs(w.value()) < 1e-10) {
        throw InvalidArgument("example3 basis needs w != 0");
    }
    std::vector<UnitDiskPoint> zeros{UnitDiskPoint(Complex(0.0, 0.0)),
                                     UnitDiskPoint(Complex(0.0, 0.0)), w};
    // B(z) = z^2 (w - z)/(1 - conj(w) z), front constant -1 in plain form
    return BasisDescriptor{FiniteBlaschke(std::move(zeros), Complex(-1.0, 0.0)),
                           BasisTag::Example3};
}

Complex BasisDescriptor::example3_w() const {
    if (tag != BasisTag::Example3) {
        throw BasisMismatch("example3_w requested on a non-example3 basis");
    }
    return blaschke.zero(2);
}

SymbolSpec SymbolSpec::kernel_coeffs(Eigen::VectorXcd psi, Eigen::VectorXcd chi) {
    SymbolSpec s;
    s.form = Form::KernelCoeffs;
    s.psi = std::move(psi);
    s.chi = std::move(chi);
    return s;
}

SymbolSpec SymbolSpec::trig_poly(std::map<int, Complex> coeffs) {
    SymbolSpec s;
    s.form = Form::Trig;
    s.trig = std::move(coeffs);
    return s;
}

OperatorMatrix tto_matrix(const BasisDescriptor& basis, const SymbolSpec& symbol,
                          int grid_size) {
    const int N = basis.blaschke.degree();
    switch (basis.tag) {
        case BasisTag::Kernel: {
            if (symbol.form != SymbolSpec::Form::KernelCoeffs) {
                throw DimensionMismatch("kernel basis expects a kernel-coefficient symbol");
            }
            KernelBasis kb(basis.blaschke);
            const Eigen::VectorXcd p = kernel_coeff_or_zero(symbol.psi, N, "psi");
            const Eigen::VectorXcd q = kernel_coeff_or_zero(symbol.chi, N, "chi");

            FunctionSamples phi;
            phi.values = Eigen::VectorXcd::Zero(grid_size);
            for (int j = 0; j < N; ++j) {
                const Eigen::VectorXcd kj = kb.kernel_samples(j, grid_size).values;
                phi.values += p[j] * kj + std::conj(q[j]) * kj.conjugate();
            }

            std::vector<FunctionSamples> k(N), ck(N);
            for (int j = 0; j < N; ++j) {
                k[j] = kb.kernel_samples(j, grid_size);
                ck[j] = kb.conj_kernel_samples(j, grid_size);
            }
            Eigen::MatrixXcd b(N, N);
            for (int j = 0; j < N; ++j) {
                FunctionSamples fj;
                fj.values = phi.values.cwiseProduct(k[j].values);
                for (int i = 0; i < N; ++i) {
                    b(i, j) = quadrature_inner(fj, ck[i]) / std::conj(kb.bprime()[i]);
                }
            }
            return OperatorMatrix{std::move(b), basis};
        }
        case BasisTag::Monomial: {
            if (symbol.form != SymbolSpec::Form::Trig) {
                throw DimensionMismatch("monomial basis expects a trig-polynomial symbol");
            }
            for (const auto& [key, unused] : symbol.trig) {
                if (key <= -N || key >= N) {
                    throw DimensionMismatch("trig index " + std::to_string(key) +
                                            " outside the band for degree " +
                                            std::to_string(N));
                }
            }
            Eigen::MatrixXcd b(N, N);
            for (int i = 0; i < N; ++i) {
                for (int j = 0; j < N; ++j) b(i, j) = trig_coeff(symbol.trig, i - j);
            }
            return OperatorMatrix{std::move(b), basis};
        }
        case BasisTag::Example3: {
            if (symbol.form != SymbolSpec::Form::Trig) {
                throw DimensionMismatch("example3 basis expects a trig symbol c_{-2}..c_2");
            }
            const Complex w = basis.example3_w();
            const auto e = example3_basis_samples(w, grid_size);
            const FunctionSamples phi = example3_symbol_samples(w, symbol.trig, grid_size);
            Eigen::MatrixXcd b(3, 3);
            for (int j = 0; j < 3; ++j) {
                FunctionSamples fj;
                fj.values = phi.values.cwiseProduct(e[j].values);
                for (int i = 0; i < 3; ++i) b(i, j) = quadrature_inner(fj, e[i]);
            }
            return OperatorMatrix{std::move(b), basis};
        }
    }
    throw BasisMismatch("unknown basis tag");
}

OperatorMatrix tto_matrix_exact(const KernelBasis& basis, const SymbolSpec& symbol) {
    if (symbol.form != SymbolSpec::Form::KernelCoeffs) {
        throw DimensionMismatch("exact construction expects kernel coefficients");
    }
    const int N = basis.dim();
    const Eigen::VectorXcd p = kernel_coeff_or_zero(symbol.psi, N, "psi");
    const Eigen::VectorXcd q = kernel_coeff_or_zero(symbol.chi, N, "chi");
    const Eigen::MatrixXcd& G = basis.gram();
    const Eigen::VectorXcd psi_vals = G * p;
    const Eigen::VectorXcd chi_vals = G * q;
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            Complex sum(0.0, 0.0);
            for (int m = 0; m < N; ++m) {
                sum += psi_vals[m] * G(m, i) * G(m, j) / basis.bprime()[m];
            }
            b(i, j) = sum / std::conj(basis.bprime()[i]);
        }
        b(i, i) += std::conj(chi_vals[i]);
    }
    return OperatorMatrix{std::move(b), BasisDescriptor::kernel(basis.blaschke())};
}

OperatorMatrix adjoint(const OperatorMatrix& M) {
    require_square(M);
    if (M.basis.tag != BasisTag::Kernel) {
        return OperatorMatrix{M.entries.adjoint(), M.basis};
    }
    KernelBasis kb(M.basis.blaschke);
    const Eigen::MatrixXcd& G = kb.gram();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
    const double lmin = es.eigenvalues().minCoeff();
    const double lmax = es.eigenvalues().maxCoeff();
    if (!(lmin > 0.0) || lmax / lmin > 1e12) {
        throw IllConditionedGram("Gram condition number exceeds 1e12");
    }
    const Eigen::MatrixXcd rhs = M.entries.adjoint() * G;
    return OperatorMatrix{G.llt().solve(rhs), M.basis};
}

std::pair<bool, double> is_c_symmetric(const OperatorMatrix& M, double tol) {
    require_square(M);
    const int N = M.dim();
    double residual = 0.0;
    switch (M.basis.tag) {
        case BasisTag::Kernel: {
            KernelBasis kb(M.basis.blaschke);
            for (int i = 0; i < N; ++i) {
                for (int j = 0; j < N; ++j) {
                    const Complex lhs = std::conj(kb.bprime()[j]) * M.entries(j, i);
                    const Complex rhs = std::conj(kb.bprime()[i]) * M.entries(i, j);
                    residual = std::max(residual, std::abs(lhs - rhs));
                }
            }
            break;
        }
        case BasisTag::Monomial: {
            for (int i = 0; i < N; ++i) {
                for (int j = 0; j < N; ++j) {
                    residual = std::max(residual, std::abs(M.entries(i, j) -
                                                           M.entries(N - 1 - j, N - 1 - i)));
                }
            }
            break;
        }
        case BasisTag::Example3: {
            const Eigen::MatrixXcd J = conjugation_matrix_example3(
                UnitDiskPoint(M.basis.example3_w()));
            const double r = csym_residual_against(M.entries, J);
            return {r <= tol, r};
        }
    }
    residual /= matrix_scale(M.entries);
    return {residual <= tol, residual};
}

OperatorMatrix compress(const OperatorMatrix& M) {
    require_square(M);
    const int n = M.dim();
    if (n < 2) throw IndexOutOfRange("cannot compress a 1-dimensional space");
    switch (M.basis.tag) {
        case BasisTag::Monomial:
            return OperatorMatrix{M.entries.topLeftCorner(n - 1, n - 1),
                                  BasisDescriptor::monomial(n - 1)};
        case BasisTag::Example3:
            throw BasisMismatch(
                "example3 carries a divisor lattice, not a zero chain; "
                "compress applies to kernel or monomial bases");
        case BasisTag::Kernel:
            break;
    }
    const FiniteBlaschke Bn1 = partial_product(M.basis.blaschke, n - 1).first;
    const Complex an = M.basis.blaschke.zero(n - 1);
    const Complex Bn1_an = eval(Bn1, an);
    Eigen::MatrixXcd out(n - 1, n - 1);
    for (int i = 0; i < n - 1; ++i) {
        const Complex bp_i = derivative(Bn1, M.basis.blaschke.zero(i));
        const Complex denom = std::conj(bp_i) *
                              (std::conj(an) - std::conj(M.basis.blaschke.zero(i)));
        for (int j = 0; j < n - 1; ++j) {
            out(i, j) = M.entries(i, j) +
                        std::conj(Bn1_an) * M.entries(n - 1, j) / denom;
        }
    }
    return OperatorMatrix{std::move(out), BasisDescriptor::kernel(Bn1)};
}

OperatorMatrix compress_from_tail(const OperatorMatrix& M, int n) {
    require_square(M);
    const int N = M.dim();
    if (n < 1 || n > N) {
        throw IndexOutOfRange("target degree " + std::to_string(n) +
                              " outside 1.." + std::to_string(N));
    }
    if (n == N) return M;
    if (M.basis.tag == BasisTag::Monomial) {
        return OperatorMatrix{M.entries.topLeftCorner(n, n), BasisDescriptor::monomial(n)};
    }
    if (M.basis.tag != BasisTag::Kernel) {
        throw BasisMismatch("tail compression applies to kernel or monomial bases");
    }
    const FiniteBlaschke Bn = partial_product(M.basis.blaschke, n).first;
    Eigen::MatrixXcd out(n, n);
    for (int i = 0; i < n; ++i) {
        const Complex bp_i = derivative(Bn, M.basis.blaschke.zero(i));
        for (int j = 0; j < n; ++j) {
            Complex sum = M.entries(i, j);
            for (int m = n; m < N; ++m) {
                const Complex am = M.basis.blaschke.zero(m);
                sum += std::conj(eval(Bn, am)) * M.entries(m, j) /
                       (std::conj(bp_i) * (std::conj(am) - std::conj(M.basis.blaschke.zero(i))));
            }
            out(i, j) = sum;
        }
    }
    return OperatorMatrix{std::move(out), BasisDescriptor::kernel(Bn)};
}

std::pair<bool, double> is_tto(const OperatorMatrix& M, double tol, int anchor) {
    require_square(M);
    const int N = M.dim();
    double residual = 0.0;
    switch (M.basis.tag) {
        case BasisTag::Kernel: {
            if (!M.basis.blaschke.zeros_distinct()) {
                throw DuplicateZeros("entry criterion needs distinct zeros");
            }
            if (anchor < 0 || anchor >= N) {
                throw IndexOutOfRange("anchor index out of range");
            }
            KernelBasis kb(M.basis.blaschke);
            const int r = anchor;
            const Complex bpr = std::conj(kb.bprime()[r]);
            for (int i = 0; i < N; ++i) {
                const Complex ai = std::conj(kb.zero(i));
                const Complex ratio = bpr / std::conj(kb.bprime()[i]);
                for (int j = 0; j < N; ++j) {
                    if (i == j) continue;
                    const Complex aj = std::conj(kb.zero(j));
                    const Complex ar = std::conj(kb.zero(r));
                    const Complex predicted =
                        ratio * (M.entries(r, i) * (ar - ai) + M.entries(r, j) * (aj - ar)) /
                        (aj - ai);
                    residual = std::max(residual, std::abs(M.entries(i, j) - predicted));
                }
            }
            break;
        }
        case BasisTag::Monomial: {
            for (int i = 0; i + 1 < N; ++i) {
                for (int j = 0; j + 1 < N; ++j) {
                    residual = std::max(residual,
                                        std::abs(M.entries(i, j) - M.entries(i + 1, j + 1)));
                }
            }
            break;
        }
        case BasisTag::Example3: {
            const double r = example3_equation_residual(M.basis.example3_w(), M.entries);
            return {r <= tol, r};
        }
    }
    residual /= matrix_scale(M.entries);
    return {residual <= tol, residual};
}

std::vector<double> brown_halmos_residuals(const OperatorMatrix& M) {
    require_square(M);
    if (M.basis.tag != BasisTag::Monomial) {
        throw BasisMismatch("rank-two trace residuals are defined on the monomial basis");
    }
    const int n = M.dim();
    std::vector<double> out;
    for (int k = 0; k < n; ++k) {
        for (int l = 0; k + l + 1 <= n; ++l) {
            // tr(A (u tensor v)) = <A u, v>
            out.push_back(std::abs(M.entries(k, 0) - M.entries(k + l, l)));
            out.push_back(std::abs(M.entries(0, k) - M.entries(l, k + l)));
        }
    }
    return out;
}

FunctionSamples crespo_apply(UnitDiskPoint a, const Eigen::VectorXcd& monomial_coeffs,
                             int grid_size) {
    const Complex av = a.value();
    const double scale = std::sqrt(1.0 - std::norm(av));
    const Eigen::VectorXcd z = unit_circle_grid(grid_size);
    FunctionSamples out;
    out.values.resize(grid_size);
    for (int t = 0; t < grid_size; ++t) {
        const Complex ba = (z[t] - av) / (1.0 - std::conj(av) * z[t]);
        Complex f(0.0, 0.0);
        Complex power(1.0, 0.0);
        for (int q = 0; q < monomial_coeffs.size(); ++q) {
            f += monomial_coeffs[q] * power;
            power *= ba;
        }
        out.values[t] = scale / (1.0 - std::conj(av) * z[t]) * f;
    }
    return out;
}

FunctionSamples tm_basis_samples(UnitDiskPoint a, int k, int grid_size) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(k + 1);
    e[k] = Complex(1.0, 0.0);
    return crespo_apply(a, e, grid_size);
}

OperatorMatrix crespo_transform(UnitDiskPoint a, int n, int grid_size) {
    if (n < 1) throw InvalidArgument("transform degree must be positive");
    std::vector<FunctionSamples> u(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) u[static_cast<size_t>(k)] = tm_basis_samples(a, k, grid_size);
    Eigen::MatrixXcd W(n, n);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            W(p, q) = quadrature_inner(u[static_cast<size_t>(q)], u[static_cast<size_t>(p)]);
        }
    }
    return OperatorMatrix{std::move(W), BasisDescriptor::monomial(n)};
}

namespace {

Eigen::MatrixXcd conjugation_matrix_from_samples(const FiniteBlaschke& theta,
                                                 const std::vector<FunctionSamples>& e) {
    const int n = static_cast<int>(e.size());
    Eigen::MatrixXcd J(n, n);
    for (int k = 0; k < n; ++k) {
        const FunctionSamples ce = conj_apply(theta, e[static_cast<size_t>(k)]);
        for (int p = 0; p < n; ++p) {
            J(p, k) = quadrature_inner(ce, e[static_cast<size_t>(p)]);
        }
    }
    return J;
}

}  // namespace

Eigen::MatrixXcd conjugation_matrix_tm(UnitDiskPoint a, int n, int grid_size) {
    std::vector<FunctionSamples> e(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) e[static_cast<size_t>(k)] = tm_basis_samples(a, k, grid_size);
    return conjugation_matrix_from_samples(FiniteBlaschke::repeated_zero(a, n), e);
}

Eigen::MatrixXcd conjugation_matrix_example3(UnitDiskPoint w, int grid_size) {
    const BasisDescriptor basis = BasisDescriptor::example3(w);
    return conjugation_matrix_from_samples(
        basis.blaschke, example3_basis_samples(w.value(), grid_size));
}

double csym_residual_against(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& J) {
    if (A.rows() != J.rows() || A.cols() != J.cols()) {
        throw DimensionMismatch("conjugation matrix size does not match the operator");
    }
    const Eigen::MatrixXcd lhs = J * A.conjugate() * J.conjugate();
    return (lhs - A.adjoint()).cwiseAbs().maxCoeff() / matrix_scale(A);
}

SymbolSpec recover_symbol(const OperatorMatrix& M, double tol) {
    require_square(M);
    const auto [ok, res] = is_tto(M, tol);
    if (!ok) {
        throw NotTTO("entry criterion residual " + std::to_string(res) +
                     " exceeds tolerance");
    }
    const int N = M.dim();
    switch (M.basis.tag) {
        case BasisTag::Monomial: {
            std::map<int, Complex> c;
            for (int k = -(N - 1); k <= N - 1; ++k) {
                Complex sum(0.0, 0.0);
                int count = 0;
                for (int i = 0; i < N; ++i) {
                    const int j = i - k;
                    if (j < 0 || j >= N) continue;
                    sum += M.entries(i, j);
                    ++count;
                }
                c[k] = sum / static_cast<double>(count);
            }
            return SymbolSpec::trig_poly(std::move(c));
        }
        case BasisTag::Example3: {
            const Complex w = M.basis.example3_w();
            const double nk = knorm(w);
            // Unknowns (c_{-2}, c_{-1}, c_0, c_1, c_2); rows are the nine
            // entries of the displayed matrix.
            Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(9, 5);
            Eigen::VectorXcd rhs(9);
            auto row = [&](int i, int j) { return 3 * i + j; };
            A(row(0, 0), 2) = 1.0;
            A(row(0, 1), 1) = 1.0;
            A(row(0, 2), 0) = 1.0;
            A(row(1, 0), 3) = 1.0;
            A(row(1, 1), 2) = 1.0;
            A(row(1, 2), 0) = std::conj(w);
            A(row(1, 2), 1) = 1.0 / nk;
            A(row(2, 0), 4) = 1.0;
            A(row(2, 1), 3) = 1.0 / nk;
            A(row(2, 1), 4) = w;
            A(row(2, 2), 0) = std::conj(w) * std::conj(w) * nk;
            A(row(2, 2), 1) = std::conj(w);
            A(row(2, 2), 2) = 1.0;
            A(row(2, 2), 3) = w;
            A(row(2, 2), 4) = w * w * nk;
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) rhs[row(i, j)] = M.entries(i, j);
            }
            const Eigen::VectorXcd c = A.colPivHouseholderQr().solve(rhs);
            std::map<int, Complex> out;
            for (int k = -2; k <= 2; ++k) out[k] = c[k + 2];
            SymbolSpec sym = SymbolSpec::trig_poly(std::move(out));
            const Eigen::MatrixXcd rebuilt = example3_display_matrix(w, sym);
            if ((rebuilt - M.entries).cwiseAbs().maxCoeff() / matrix_scale(M.entries) > tol) {
                throw NotTTO("no example3 symbol reproduces the matrix within tolerance");
            }
            return sym;
        }
        case BasisTag::Kernel:
            break;
    }

    KernelBasis kb(M.basis.blaschke);
    const Eigen::MatrixXcd& G = kb.gram();
    // Unknown x = [p; conj(q)]: entries are linear in p and in conj(q).
    // One extra row pins q_0 = 0 (the symbol pair is unique only up to the
    // kernel-at-zero direction).
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(N * N + 1, 2 * N);
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(N * N + 1);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            const int r = i * N + j;
            for (int l = 0; l < N; ++l) {
                Complex coeff(0.0, 0.0);
                for (int m = 0; m < N; ++m) {
                    coeff += G(m, l) * G(m, i) * G(m, j) / kb.bprime()[m];
                }
                A(r, l) = coeff / std::conj(kb.bprime()[i]);
            }
            if (i == j) {
                for (int l = 0; l < N; ++l) A(r, N + l) = std::conj(G(j, l));
            }
            rhs[r] = M.entries(i, j);
        }
    }
    A(N * N, N) = 1.0;
    const Eigen::VectorXcd x = A.colPivHouseholderQr().solve(rhs);
    SymbolSpec sym = SymbolSpec::kernel_coeffs(x.head(N), x.tail(N).conjugate());
    const OperatorMatrix rebuilt = tto_matrix_exact(kb, sym);
    if ((rebuilt.entries - M.entries).cwiseAbs().maxCoeff() / matrix_scale(M.entries) > tol) {
        throw NotTTO("no symbol reproduces the matrix within tolerance");
    }
    return sym;
}

Eigen::MatrixXcd example3_display_matrix(Complex w, const SymbolSpec& symbol) {
    if (symbol.form != SymbolSpec::Form::Trig) {
        throw DimensionMismatch("example3 display needs a trig symbol");
    }
    const double nk = knorm(w);
    const Complex cm2 = trig_coeff(symbol.trig, -2);
    const Complex cm1 = trig_coeff(symbol.trig, -1);
    const Complex c0 = trig_coeff(symbol.trig, 0);
    const Complex c1 = trig_coeff(symbol.trig, 1);
    const Complex c2 = trig_coeff(symbol.trig, 2);
    const Complex wb = std::conj(w);
    Eigen::MatrixXcd b(3, 3);
    b << c0, cm1, cm2,
         c1, c0, cm2 * wb + cm1 / nk,
         c2, c1 / nk + c2 * w, cm2 * wb * wb * nk + cm1 * wb + c0 + c1 * w + c2 * w * w * nk;
    return b;
}

double example3_equation_residual(Complex w, const Eigen::MatrixXcd& A) {
    if (A.rows() != 3 || A.cols() != 3) {
        throw DimensionMismatch("example3 equations apply to 3x3 matrices");
    }
    const double nk = knorm(w);
    const Complex wb = std::conj(w);
    double r = std::abs(A(1, 1) - A(0, 0));
    r = std::max(r, std::abs(A(1, 2) - (wb * A(0, 2) + A(0, 1) / nk)));
    r = std::max(r, std::abs(A(2, 1) - (A(1, 0) / nk + w * A(2, 0))));
    r = std::max(r, std::abs(A(2, 2) - (A(0, 0) + wb * nk * A(1, 2) + w * nk * A(2, 1))));
    return r / matrix_scale(A);
}

}  // namespace ttolab
