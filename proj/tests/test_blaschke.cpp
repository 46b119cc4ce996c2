#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ttolab/blaschke.hpp"

using namespace ttolab;

namespace {

std::vector<UnitDiskPoint> pts(std::initializer_list<Complex> zs) {
    std::vector<UnitDiskPoint> out;
    for (auto z : zs) out.emplace_back(z);
    return out;
}

}  // namespace

TEST_CASE("unit disk point rejects moduli at the conditioning edge") {
    CHECK_NOTHROW(UnitDiskPoint(Complex(0.999, 0.0)));
    CHECK_THROWS_AS(UnitDiskPoint(Complex(1.0, 0.0)), InvalidArgument);
    CHECK_THROWS_AS(UnitDiskPoint(Complex(0.0, 1.0)), InvalidArgument);
    CHECK_THROWS_AS(UnitDiskPoint(Complex(1.0 - 1e-13, 0.0)), InvalidArgument);
    CHECK_NOTHROW(UnitDiskPoint(Complex(1.0 - 1e-11, 0.0)));
}

TEST_CASE("front constant must be unimodular") {
    CHECK_THROWS_AS(FiniteBlaschke(pts({0.5}), Complex(0.5, 0.0)), InvalidArgument);
    CHECK_NOTHROW(FiniteBlaschke(pts({0.5}), std::polar(1.0, 2.1)));
}

TEST_CASE("evaluation of simple products") {
    const FiniteBlaschke bz = FiniteBlaschke::power_of_z(1);
    CHECK(std::abs(eval(bz, Complex(0.3, 0.0)) - Complex(0.3, 0.0)) < 1e-15);

    const FiniteBlaschke B(pts({0.0, 0.5}));
    CHECK(std::abs(eval(B, Complex(0.5, 0.0))) < 1e-15);
    CHECK(std::abs(eval(B, Complex(0.2, 0.0)) - Complex(-1.0 / 15.0, 0.0)) < 1e-15);
}

TEST_CASE("blaschke products are inner on the circle") {
    const FiniteBlaschke B(pts({Complex(0.3, 0.1), Complex(-0.5, 0.2), Complex(0.0, -0.7)}),
                           std::polar(1.0, 0.4));
    for (int t = 0; t < 64; ++t) {
        const Complex z = std::polar(1.0, 2.0 * M_PI * t / 64.0);
        CHECK(std::abs(std::abs(eval(B, z)) - 1.0) < 1e-12);
    }
}

TEST_CASE("normalized mode multiplies each factor by its positivity constant") {
    const std::vector<UnitDiskPoint> zs = pts({Complex(0.4, 0.2), Complex(-0.3, 0.5)});
    const FiniteBlaschke plain(zs);
    const FiniteBlaschke norm(zs, Complex(1.0, 0.0), NormalizationMode::Normalized);
    Complex lambda(1.0, 0.0);
    for (const auto& a : zs) lambda *= -std::conj(a.value()) / std::abs(a.value());
    for (int t = 0; t < 16; ++t) {
        const Complex z = 0.8 * std::polar(1.0, 2.0 * M_PI * t / 16.0);
        CHECK(std::abs(eval(norm, z) - lambda * eval(plain, z)) < 1e-13);
    }
    // each normalized factor is positive at the origin
    CHECK(eval(norm, Complex(0.0, 0.0)).real() > 0.0);
    CHECK(std::abs(eval(norm, Complex(0.0, 0.0)).imag()) < 1e-15);
}

TEST_CASE("derivative against frozen values and finite differences") {
    const FiniteBlaschke B(pts({0.0, 0.5}));
    CHECK(std::abs(derivative(B, Complex(0.0, 0.0)) - Complex(-0.5, 0.0)) < 1e-13);
    CHECK(std::abs(derivative(B, Complex(0.5, 0.0)) - Complex(2.0 / 3.0, 0.0)) < 1e-13);

    const FiniteBlaschke C(pts({Complex(0.3, 0.1), Complex(-0.2, -0.4), Complex(0.6, 0.0)}),
                           std::polar(1.0, 1.2));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    const double h = 1e-6;
    for (int t = 0; t < 20; ++t) {
        const Complex z(u(rng), u(rng));
        const Complex fd = (eval(C, z + h) - eval(C, z - h)) / (2.0 * h);
        CHECK(std::abs(derivative(C, z) - fd) < 1e-7 * std::max(1.0, std::abs(fd)));
    }
}

TEST_CASE("pole proximity is detected") {
    const FiniteBlaschke B(pts({0.5}));
    CHECK_THROWS_AS(eval(B, Complex(2.0, 0.0)), PoleProximity);
    CHECK_THROWS_AS(derivative(B, Complex(2.0, 0.0)), PoleProximity);
}

TEST_CASE("partial products and lambda bookkeeping") {
    const FiniteBlaschke B(pts({0.0, 0.5}));
    const auto [B1, l1] = partial_product(B, 1);
    CHECK(B1.degree() == 1);
    CHECK(std::abs(l1 - Complex(-1.0, 0.0)) < 1e-15);
    const auto [B2, l2] = partial_product(B, 2);
    CHECK(B2.degree() == 2);
    CHECK(std::abs(l2 - Complex(1.0, 0.0)) < 1e-15);

    // lambda_n times the plain partial product equals the normalized one
    const std::vector<UnitDiskPoint> zs = pts({Complex(0.4, 0.2), Complex(-0.3, 0.5), Complex(0.1, -0.6)});
    const FiniteBlaschke P(zs);
    const FiniteBlaschke Pn(zs, Complex(1.0, 0.0), NormalizationMode::Normalized);
    const auto [head, lam] = partial_product(P, 3);
    for (int t = 0; t < 8; ++t) {
        const Complex z = 0.7 * std::polar(1.0, 2.0 * M_PI * t / 8.0);
        CHECK(std::abs(lam * eval(head, z) - eval(Pn, z)) < 1e-13);
    }

    CHECK_THROWS_AS(partial_product(B, 3), IndexOutOfRange);
    CHECK_THROWS_AS(partial_product(B, 0), IndexOutOfRange);
}

TEST_CASE("geometric prefix lambda is real for positive zeros") {
    const auto spec = InfiniteBlaschkeSpec::geometric(3);
    CHECK(spec.prefix.size() == 3);
    CHECK(std::abs(spec.prefix[0].value() - Complex(0.5, 0.0)) < 1e-15);
    const auto [B3, l3] = partial_product(spec, 3);
    CHECK(B3.degree() == 3);
    CHECK(std::abs(l3 - Complex(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("divisors select zero subsets") {
    const FiniteBlaschke B(pts({0.0, 0.5, Complex(0.0, -0.3)}), std::polar(1.0, 0.7));
    const FiniteBlaschke d = divisor(B, {1});
    CHECK(d.degree() == 1);
    CHECK(std::abs(d.zero(0) - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(d.front_constant() - Complex(1.0, 0.0)) < 1e-15);

    // complement factorization: B = front * divisor * complement pointwise
    const FiniteBlaschke c = divisor(B, {0, 2});
    for (int t = 0; t < 16; ++t) {
        const Complex z = 0.9 * std::polar(1.0, 2.0 * M_PI * t / 16.0);
        CHECK(std::abs(eval(B, z) - B.front_constant() * eval(d, z) * eval(c, z)) < 1e-12);
    }

    CHECK_THROWS_AS(divisor(B, {}), EmptySubset);
    CHECK_THROWS_AS(divisor(B, {3}), IndexOutOfRange);
    CHECK_THROWS_AS(divisor(B, {1, 1}), InvalidArgument);
}

TEST_CASE("separation delta") {
    CHECK(separation_delta(pts({0.0, 0.5})) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(separation_delta(pts({0.3})), InvalidArgument);
    CHECK_THROWS_AS(separation_delta(pts({0.3, 0.3})), DuplicateZeros);

    // frozen values for the geometric sequence
    CHECK(separation_delta(InfiniteBlaschkeSpec::geometric(10).prefix) ==
          doctest::Approx(0.019135243301794246).epsilon(1e-10));
    CHECK(separation_delta(InfiniteBlaschkeSpec::geometric(12).prefix) ==
          doctest::Approx(0.016886832666488140).epsilon(1e-10));
    CHECK(separation_delta(InfiniteBlaschkeSpec::geometric(12).prefix) >= 0.01);
}

TEST_CASE("zeros_distinct and repeated-zero builders") {
    CHECK(FiniteBlaschke::power_of_z(4).degree() == 4);
    CHECK_FALSE(FiniteBlaschke::power_of_z(4).zeros_distinct());
    const auto b = FiniteBlaschke::repeated_zero(UnitDiskPoint(Complex(0.5, 0.0)), 3);
    CHECK(b.degree() == 3);
    CHECK_FALSE(b.zeros_distinct());
    CHECK(FiniteBlaschke(pts({0.0, 0.5})).zeros_distinct());
}
