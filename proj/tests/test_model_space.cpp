#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ttolab/model_space.hpp"

using namespace ttolab;

namespace {

std::vector<UnitDiskPoint> pts(std::initializer_list<Complex> zs) {
    std::vector<UnitDiskPoint> out;
    for (auto z : zs) out.emplace_back(z);
    return out;
}

KernelBasis basis_05() { return KernelBasis(FiniteBlaschke(pts({0.0, 0.5}))); }

std::vector<UnitDiskPoint> random_zeros(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-0.75, 0.75);
    std::vector<UnitDiskPoint> zs;
    while (static_cast<int>(zs.size()) < n) {
        const Complex c(u(rng), u(rng));
        if (std::abs(c) > 0.8) continue;
        bool ok = true;
        for (const auto& z : zs) {
            if (std::abs(z.value() - c) < 0.15) ok = false;
        }
        if (ok) zs.emplace_back(c);
    }
    return zs;
}

}  // namespace

TEST_CASE("grid sizes must be powers of two of at least 256") {
    CHECK(is_valid_grid_size(256));
    CHECK(is_valid_grid_size(4096));
    CHECK_FALSE(is_valid_grid_size(255));
    CHECK_FALSE(is_valid_grid_size(0));
}

TEST_CASE("quadrature inner product on trigonometric monomials") {
    const auto one = sample_function([](Complex) { return Complex(1.0, 0.0); }, 1024);
    const auto z = sample_function([](Complex w) { return w; }, 1024);
    CHECK(std::abs(quadrature_inner(one, one) - Complex(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(quadrature_inner(z, one)) < 1e-14);
    CHECK(std::abs(quadrature_inner(z, z) - Complex(1.0, 0.0)) < 1e-14);

    const auto k = sample_function(
        [](Complex w) { return 1.0 / (1.0 - 0.5 * w); }, 1024);
    CHECK(std::abs(quadrature_inner(k, k) - Complex(4.0 / 3.0, 0.0)) < 1e-12);

    const auto short_one = sample_function([](Complex) { return Complex(1.0, 0.0); }, 256);
    CHECK_THROWS_AS(quadrature_inner(one, short_one), GridMismatch);
}

TEST_CASE("kernel basis closed forms at {0, 1/2}") {
    const KernelBasis basis = basis_05();
    REQUIRE(basis.dim() == 2);

    const auto& G = basis.gram();
    CHECK(std::abs(G(0, 0) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(G(0, 1) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(G(1, 0) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(G(1, 1) - Complex(4.0 / 3.0, 0.0)) < 1e-15);

    CHECK(std::abs(basis.bprime()(0) - Complex(-0.5, 0.0)) < 1e-14);
    CHECK(std::abs(basis.bprime()(1) - Complex(2.0 / 3.0, 0.0)) < 1e-14);
}

TEST_CASE("kernel basis requires distinct zeros") {
    CHECK_THROWS_AS(KernelBasis(FiniteBlaschke(pts({0.3, 0.3}))), DuplicateZeros);
    CHECK_THROWS_AS(KernelBasis(FiniteBlaschke::power_of_z(3)), DuplicateZeros);
}

TEST_CASE("gram matrix agrees with quadrature and is positive definite") {
    std::mt19937_64 rng(11);
    const KernelBasis basis(FiniteBlaschke(random_zeros(rng, 4)));
    const auto& G = basis.gram();
    CHECK((G - G.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
    for (int i = 0; i < basis.dim(); ++i) {
        for (int j = 0; j < basis.dim(); ++j) {
            const Complex quad =
                quadrature_inner(basis.kernel_samples(j), basis.kernel_samples(i));
            CHECK(std::abs(quad - G(i, j)) < 1e-9);
        }
    }
}

TEST_CASE("conjugation acts as theta(z) conj(z f(z))") {
    const FiniteBlaschke z3 = FiniteBlaschke::power_of_z(3);
    // C maps z^k to z^{2-k} inside K^2_{z^3}
    for (int k = 0; k < 3; ++k) {
        const auto f = sample_function([k](Complex w) { return std::pow(w, k); }, 512);
        const auto g = conj_apply(z3, f);
        const auto expected =
            sample_function([k](Complex w) { return std::pow(w, 2 - k); }, 512);
        CHECK((g.values - expected.values).cwiseAbs().maxCoeff() < 1e-12);
    }

    const FiniteBlaschke B(pts({Complex(0.3, 0.2), Complex(-0.4, 0.1), Complex(0.0, -0.5)}));
    const auto f = sample_function(
        [](Complex w) { return 1.0 / (1.0 - 0.4 * w) + 0.3 * w; }, 512);
    const auto g = sample_function(
        [](Complex w) { return w * w - Complex(0.0, 0.2); }, 512);
    const auto cf = conj_apply(B, f);
    const auto cg = conj_apply(B, g);
    // involution
    CHECK((conj_apply(B, cf).values - f.values).cwiseAbs().maxCoeff() < 1e-12);
    // antiunitarity: <Cf, Cg> = <g, f>
    CHECK(std::abs(quadrature_inner(cf, cg) - quadrature_inner(g, f)) < 1e-12);
}

TEST_CASE("conjugated kernels are biorthogonal to the kernels") {
    std::mt19937_64 rng(23);
    const KernelBasis basis(FiniteBlaschke(random_zeros(rng, 3)));
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
            const Complex quad =
                quadrature_inner(basis.conj_kernel_samples(j), basis.kernel_samples(i));
            const Complex expected = (i == j) ? Complex(basis.bprime()(j)) : Complex(0.0, 0.0);
            CHECK(std::abs(quad - expected) < 1e-10);
        }
    }
}

TEST_CASE("conjugation pairing closed form") {
    const KernelBasis basis = basis_05();
    // n = 1, j = 0, m = 1: B_1(a_1)/(a_1 - a_0) = 0.5/0.5
    CHECK(std::abs(conj_pairing(basis, 1, 0, 1) - Complex(1.0, 0.0)) < 1e-14);
    // m = j: B_1'(a_0) = 1
    CHECK(std::abs(conj_pairing(basis, 1, 0, 0) - Complex(1.0, 0.0)) < 1e-14);

    std::mt19937_64 rng(37);
    const KernelBasis big(FiniteBlaschke(random_zeros(rng, 5)));
    const auto [B3, l3] = partial_product(big.blaschke(), 3);
    for (int j = 0; j < 3; ++j) {
        const Complex aj = big.zero(j);
        const auto cnk = sample_function(
            [&](Complex w) { return eval(B3, w) / (w - aj); }, kDefaultGridSize);
        for (int m = 0; m < 5; ++m) {
            const Complex quad = quadrature_inner(cnk, big.kernel_samples(m));
            CHECK(std::abs(quad - conj_pairing(big, 3, j, m)) < 1e-9);
        }
    }
    CHECK_THROWS_AS(conj_pairing(basis, 3, 0, 1), IndexOutOfRange);
    CHECK_THROWS_AS(conj_pairing(basis, 1, 1, 0), IndexOutOfRange);
}

TEST_CASE("kernel projection coefficients") {
    const KernelBasis basis = basis_05();
    const Eigen::VectorXcd d = project_kernel(basis, 1, 1);
    REQUIRE(d.size() == 1);
    CHECK(std::abs(d(0) - Complex(1.0, 0.0)) < 1e-14);

    // residual of the projection is Gram-orthogonal to the first n kernels
    std::mt19937_64 rng(41);
    const KernelBasis big(FiniteBlaschke(random_zeros(rng, 6)));
    const auto& G = big.gram();
    for (int n = 1; n < 6; ++n) {
        for (int m = n; m < 6; ++m) {
            const Eigen::VectorXcd dn = project_kernel(big, n, m);
            Eigen::VectorXcd r = Eigen::VectorXcd::Zero(6);
            r(m) = Complex(1.0, 0.0);
            r.head(n) -= dn;
            const Eigen::VectorXcd Gr = G * r;
            CHECK(Gr.head(n).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
    CHECK_THROWS_AS(project_kernel(basis, 2, 1), IndexOutOfRange);
}

TEST_CASE("expansion in the kernel basis") {
    const KernelBasis basis = basis_05();
    const auto f = sample_function(
        [](Complex w) { return 2.0 - 1.0 / (1.0 - 0.5 * w); }, kDefaultGridSize);
    const Eigen::VectorXcd c = expand(basis, f);
    REQUIRE(c.size() == 2);
    CHECK(std::abs(c(0) - Complex(2.0, 0.0)) < 1e-9);
    CHECK(std::abs(c(1) - Complex(-1.0, 0.0)) < 1e-9);

    const FiniteBlaschke& B = basis.blaschke();
    const auto outside = sample_function(
        [&](Complex w) { return eval(B, w) * (1.0 + w); }, kDefaultGridSize);
    CHECK_THROWS_AS(expand(basis, outside), NotInModelSpace);
}

TEST_CASE("partial product ratio identities") {
    const KernelBasis basis = basis_05();
    const auto [r1, r2] = ratio_identities(basis, 2);
    CHECK(r1 < 1e-14);
    CHECK(r2 < 1e-14);

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const KernelBasis b(FiniteBlaschke(random_zeros(rng, n)));
        for (int level = 2; level <= n; ++level) {
            const auto [s1, s2] = ratio_identities(b, level);
            CHECK(s1 < 1e-11);
            CHECK(s2 < 1e-11);
        }
    }
    CHECK_THROWS_AS(ratio_identities(basis, 1), IndexOutOfRange);
    CHECK_THROWS_AS(ratio_identities(basis, 3), IndexOutOfRange);
}

TEST_CASE("general kernel matches its quadrature norm") {
    const GeneralKernel kw{UnitDiskPoint(Complex(0.3, 0.1)),
                           FiniteBlaschke(pts({0.0, 0.5}))};
    const auto samples = sample_function([&](Complex z) { return kw(z); }, kDefaultGridSize);
    const Complex quad = quadrature_inner(samples, samples);
    CHECK(std::abs(quad - Complex(kw.squared_norm(), 0.0)) < 1e-9);
    // reproducing property at w itself
    CHECK(std::abs(kw(Complex(0.3, 0.1)) - Complex(kw.squared_norm(), 0.0)) < 1e-12);
}
