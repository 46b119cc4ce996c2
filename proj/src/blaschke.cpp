#include "ttolab/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ttolab {

namespace {

constexpr double kPoleGuard = 1e-13;

Complex plain_factor(Complex a, Complex z) {
    const Complex denom = 1.0 - std::conj(a) * z;
    if (std::abs(denom) < kPoleGuard) {
        throw PoleProximity("evaluation point within 1e-13 of the pole of a Blaschke factor");
    }
    return (z - a) / denom;
}

// Constant turning the plain factor for a into the normalized one.
Complex normalizing_constant(Complex a) {
    const double r = std::abs(a);
    if (r == 0.0) return Complex(-1.0, 0.0);
    return -std::conj(a) / r;
}

}  // namespace

UnitDiskPoint::UnitDiskPoint(Complex value) : value_(value) {
    if (!(std::abs(value) < kMaxModulus)) {
        throw InvalidArgument("zero of modulus " + std::to_string(std::abs(value)) +
                              " is not strictly inside the unit disk");
    }
}

FiniteBlaschke::FiniteBlaschke(std::vector<UnitDiskPoint> zeros, Complex front_constant,
                               NormalizationMode mode)
    : zeros_(std::move(zeros)), front_constant_(front_constant), mode_(mode) {
    if (std::abs(std::abs(front_constant_) - 1.0) > 1e-14) {
        throw InvalidArgument("front constant must be unimodular");
    }
}

Complex FiniteBlaschke::zero(int j) const {
    if (j < 0 || j >= degree()) {
        throw IndexOutOfRange("zero index " + std::to_string(j) + " out of range");
    }
    return zeros_[static_cast<size_t>(j)].value();
}

bool FiniteBlaschke::zeros_distinct(double min_gap) const {
    for (size_t i = 0; i < zeros_.size(); ++i) {
        for (size_t j = i + 1; j < zeros_.size(); ++j) {
            if (std::abs(zeros_[i].value() - zeros_[j].value()) <= min_gap) return false;
        }
    }
    return true;
}

FiniteBlaschke FiniteBlaschke::power_of_z(int n) {
    return repeated_zero(UnitDiskPoint(Complex(0.0, 0.0)), n);
}

FiniteBlaschke FiniteBlaschke::repeated_zero(UnitDiskPoint a, int n) {
    if (n < 1) throw InvalidArgument("degree must be positive");
    return FiniteBlaschke(std::vector<UnitDiskPoint>(static_cast<size_t>(n), a));
}

InfiniteBlaschkeSpec InfiniteBlaschkeSpec::geometric(int order) {
    if (order < 1) throw InvalidArgument("truncation order must be positive");
    InfiniteBlaschkeSpec spec;
    spec.truncation_order = order;
    spec.prefix.reserve(static_cast<size_t>(order));
    for (int j = 1; j <= order; ++j) {
        spec.prefix.emplace_back(Complex(1.0 - std::ldexp(1.0, -j), 0.0));
    }
    return spec;
}

Complex eval(const FiniteBlaschke& B, Complex z) {
    Complex out = B.front_constant();
    for (const auto& a : B.zeros()) {
        out *= plain_factor(a.value(), z);
        if (B.mode() == NormalizationMode::Normalized) out *= normalizing_constant(a.value());
    }
    return out;
}

Complex derivative(const FiniteBlaschke& B, Complex z) {
    // Run the recursion on the plain product, then scale by the constants.
    Complex value = Complex(1.0, 0.0);
    Complex deriv = Complex(0.0, 0.0);
    for (const auto& zp : B.zeros()) {
        const Complex a = zp.value();
        const Complex denom = 1.0 - std::conj(a) * z;
        if (std::abs(denom) < kPoleGuard) {
            throw PoleProximity("derivative requested within 1e-13 of a pole");
        }
        const Complex factor = (z - a) / denom;
        const Complex factor_deriv = (1.0 - std::norm(a)) / (denom * denom);
        deriv = deriv * factor + value * factor_deriv;
        value *= factor;
    }
    Complex scale = B.front_constant();
    if (B.mode() == NormalizationMode::Normalized) {
        for (const auto& a : B.zeros()) scale *= normalizing_constant(a.value());
    }
    return scale * deriv;
}

namespace {

std::pair<FiniteBlaschke, Complex> partial_product_impl(const std::vector<UnitDiskPoint>& zeros,
                                                        int n) {
    if (n < 1 || n > static_cast<int>(zeros.size())) {
        throw IndexOutOfRange("partial product order " + std::to_string(n) +
                              " outside 1.." + std::to_string(zeros.size()));
    }
    std::vector<UnitDiskPoint> head(zeros.begin(), zeros.begin() + n);
    Complex lambda = Complex(1.0, 0.0);
    for (const auto& a : head) lambda *= normalizing_constant(a.value());
    return {FiniteBlaschke(std::move(head)), lambda};
}

}  // namespace

std::pair<FiniteBlaschke, Complex> partial_product(const FiniteBlaschke& B, int n) {
    return partial_product_impl(B.zeros(), n);
}

std::pair<FiniteBlaschke, Complex> partial_product(const InfiniteBlaschkeSpec& spec, int n) {
    return partial_product_impl(spec.prefix, n);
}

FiniteBlaschke divisor(const FiniteBlaschke& B, const std::vector<int>& subset) {
    if (subset.empty()) throw EmptySubset("divisor requires a nonempty zero subset");
    std::vector<UnitDiskPoint> selected;
    selected.reserve(subset.size());
    std::vector<bool> seen(static_cast<size_t>(B.degree()), false);
    for (int idx : subset) {
        if (idx < 0 || idx >= B.degree()) {
            throw IndexOutOfRange("divisor index " + std::to_string(idx) + " out of range");
        }
        if (seen[static_cast<size_t>(idx)]) {
            throw InvalidArgument("divisor subset repeats index " + std::to_string(idx));
        }
        seen[static_cast<size_t>(idx)] = true;
        selected.push_back(B.zeros()[static_cast<size_t>(idx)]);
    }
    return FiniteBlaschke(std::move(selected));
}

double separation_delta(const std::vector<UnitDiskPoint>& zeros) {
    const size_t n = zeros.size();
    if (n < 2) throw InvalidArgument("separation needs at least two zeros");
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (std::abs(zeros[i].value() - zeros[j].value()) <= 1e-10) {
                throw DuplicateZeros("coinciding zeros give separation 0");
            }
        }
    }
    double inf = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < n; ++k) {
        const Complex an = zeros[k].value();
        double prod = 1.0;
        for (size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            const Complex aj = zeros[j].value();
            prod *= std::abs((aj - an) / (1.0 - std::conj(aj) * an));
        }
        inf = std::min(inf, prod);
    }
    return inf;
}

}  // namespace ttolab
