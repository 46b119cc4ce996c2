#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "ttolab/errors.hpp"

namespace ttolab {

using Complex = std::complex<double>;

// A point strictly inside the unit disk. Moduli at or above 1 - 1e-12 are
// rejected: the kernel Gram matrix conditioning degrades like 1/(1 - |a|^2).
class UnitDiskPoint {
public:
    explicit UnitDiskPoint(Complex value);

    Complex value() const noexcept { return value_; }

    static constexpr double kMaxModulus = 1.0 - 1e-12;

private:
    Complex value_;
};

enum class NormalizationMode {
    // e^{i gamma} * prod (z - a_j)/(1 - conj(a_j) z)
    Plain,
    // each factor additionally multiplied by -conj(a_j)/|a_j| (by -1 when a_j = 0),
    // so the factor is positive at z = 0
    Normalized,
};

// A finite Blaschke product: ordered zeros plus a unimodular front constant.
// Zeros may repeat (z^N and b_a^N live here); the kernel-basis machinery
// separately requires distinct zeros.
class FiniteBlaschke {
public:
    explicit FiniteBlaschke(std::vector<UnitDiskPoint> zeros,
                            Complex front_constant = Complex(1.0, 0.0),
                            NormalizationMode mode = NormalizationMode::Plain);

    int degree() const noexcept { return static_cast<int>(zeros_.size()); }
    const std::vector<UnitDiskPoint>& zeros() const noexcept { return zeros_; }
    Complex zero(int j) const;
    Complex front_constant() const noexcept { return front_constant_; }
    NormalizationMode mode() const noexcept { return mode_; }

    bool zeros_distinct(double min_gap = 1e-10) const;

    // z^N
    static FiniteBlaschke power_of_z(int n);
    // b_a^n, one zero repeated n times
    static FiniteBlaschke repeated_zero(UnitDiskPoint a, int n);

private:
    std::vector<UnitDiskPoint> zeros_;
    Complex front_constant_;
    NormalizationMode mode_;
};

// A truncation prefix of an infinite Blaschke product together with the
// intended truncation order. Infinite products are always handled through
// finite partial products plus lambda_n bookkeeping; there is no symbolic tail.
struct InfiniteBlaschkeSpec {
    std::vector<UnitDiskPoint> prefix;
    int truncation_order = 0;

    // a_j = 1 - 2^-j for j = 1..order
    static InfiniteBlaschkeSpec geometric(int order);
};

// Evaluates B(z). Throws PoleProximity when z is numerically at a pole
// 1/conj(a_j), i.e. |1 - conj(a_j) z| < 1e-13.
Complex eval(const FiniteBlaschke& B, Complex z);

// Analytic derivative B'(z) via the product recursion
// B_n' = B_{n-1}' b_n + B_{n-1} (1 - |a_n|^2)/(1 - conj(a_n) z)^2.
Complex derivative(const FiniteBlaschke& B, Complex z);

// First n zeros as a plain-mode product B_n, and the unimodular constant
// lambda_n with lambda_n * B_n equal to the normalized-mode partial product.
std::pair<FiniteBlaschke, Complex> partial_product(const FiniteBlaschke& B, int n);
std::pair<FiniteBlaschke, Complex> partial_product(const InfiniteBlaschkeSpec& spec, int n);

// Sub-product over a subset of zero indices (0-based). Keeps the order of the
// selected zeros and drops the front constant (divisors carry gamma = 0).
FiniteBlaschke divisor(const FiniteBlaschke& B, const std::vector<int>& subset);

// inf over n of prod_{j != n} |(a_j - a_n)/(1 - conj(a_j) a_n)|.
// Throws DuplicateZeros when a pair coincides (the inf would be 0).
double separation_delta(const std::vector<UnitDiskPoint>& zeros);

}  // namespace ttolab
