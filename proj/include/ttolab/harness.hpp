#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ttolab/json_io.hpp"
#include "ttolab/operators.hpp"

namespace ttolab {

// Singular values below this count as zero when extracting constraint
// null spaces (rows are normalized to unit length first).
constexpr double kSingularValueThreshold = 1e-8;

struct TrialConfig {
    std::uint64_t seed = 0;
    int trials = 20;
    int degree_min = 2;
    int degree_max = 6;
    double zero_modulus_cap = 0.8;
    double tolerance_pass = 1e-8;
    double tolerance_fail = 1e-4;

    // Throws InvalidArgument unless trials >= 1, 1 <= degree_min <= degree_max,
    // 0 < zero_modulus_cap <= 0.9 and 0 < tolerance_pass < tolerance_fail.
    void validate() const;

    Json to_json() const;
};

enum class CheckSense {
    // A residual that must vanish: pass <= tolerance_pass, fail >= tolerance_fail.
    ExpectSmall,
    // A residual that must be genuinely large (a negative-direction witness):
    // pass >= fail_bound, fail <= pass_bound.
    ExpectLarge,
};

// One named residual with its classification band. Values inside the open
// band (pass_bound, fail_bound) are never classified; they come back
// "inconclusive" so a borderline run cannot flap between pass and fail.
struct ResidualCheck {
    std::string name;
    double value = 0.0;
    CheckSense sense = CheckSense::ExpectSmall;
    double pass_bound = 0.0;
    double fail_bound = 0.0;

    std::string verdict() const;
};

struct TrialResult {
    std::vector<ResidualCheck> checks;

    // fail if any check fails, else inconclusive if any is, else pass.
    std::string verdict() const;
};

struct Report {
    std::string name;
    TrialConfig config;
    // Extra run parameters echoed into the config object (a, w, truncation).
    Json config_extra = Json::object();
    std::vector<TrialResult> trials;
    Json witness = nullptr;

    std::string verdict() const;
    bool passed() const { return verdict() == "pass"; }
    Json to_json() const;
};

// Deterministic per-trial generator: the stream index separates trials so
// they could run concurrently and still merge into an identical report.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t stream);

Eigen::VectorXcd random_complex_vector(std::mt19937_64& rng, int n);

// Zeros drawn uniformly from |z| <= modulus_cap, rejection-sampled to keep
// pairwise Euclidean gaps of at least min_gap. Throws GenerationExhausted
// when the rejection budget runs out.
std::vector<UnitDiskPoint> random_separated_zeros(std::mt19937_64& rng, int count,
                                                  double modulus_cap,
                                                  double min_gap = 0.15);

// Stacked complex-linear rows R with R vec(A) = 0 exactly when every
// compression A_n of A (kernel coordinates, vec row-major) is C_n-symmetric.
// chain: levels n = 2..N; top: level N only.
Eigen::MatrixXcd chain_csym_constraint_rows(const KernelBasis& basis);
Eigen::MatrixXcd top_csym_constraint_rows(const KernelBasis& basis);

// Same for B = z^N in the monomial basis, where level-n C-symmetry is
// persymmetry of the leading n x n block.
Eigen::MatrixXcd persymmetry_chain_rows(int degree);
Eigen::MatrixXcd persymmetry_top_rows(int degree);

// The four entry equations of the degree-3 example space as rows over
// vec(A), A 3x3 in its orthonormal basis.
Eigen::MatrixXcd example3_equation_rows(Complex w);

// C-symmetry of the compressions to all nontrivial divisors of the degree-3
// example product, assembled by quadrature in the orthonormal basis.
Eigen::MatrixXcd example3_divisor_chain_rows(Complex w,
                                             int grid_size = kDefaultGridSize);

int nullspace_dimension(const Eigen::MatrixXcd& rows,
                        double sv_threshold = kSingularValueThreshold);
Eigen::MatrixXcd nullspace_basis(const Eigen::MatrixXcd& rows,
                                 double sv_threshold = kSingularValueThreshold);

// Random element of the column span, reshaped row-major to dim x dim and
// scaled to unit max-entry.
Eigen::MatrixXcd sample_matrix_from_nullspace(const Eigen::MatrixXcd& basis_cols,
                                              int dim, std::mt19937_64& rng);

// Max C-symmetry residual along the full compression chain of M
// (levels dim(M) down to 1).
double chain_csym_max_residual(const OperatorMatrix& M, double tol);

enum class GenKind { Tto, ChainCsym, TopCsymOnly, Toeplitz, Perturbed };

// Accepts "tto", "chain-csym", "top-csym-only", "toeplitz", "perturbed".
GenKind gen_kind_from_string(const std::string& text);
std::string to_string(GenKind kind);

// Seeded deterministic instance of degree cfg.degree_max. TopCsymOnly
// rejection-samples the top-level null space (at most 1000 draws) until some
// lower compression fails C-symmetry by at least tolerance_fail; at degree 2
// that always exhausts, because top-level C-symmetry already forces a TTO.
OperatorMatrix gen_instance(GenKind kind, const TrialConfig& cfg);

// Theorem verifications. Each runs cfg.trials independent trials and returns
// a structured report; seeds make reports byte-identical across runs.
Report verify_zn(const TrialConfig& cfg);
Report verify_toeplitz_h2(const TrialConfig& cfg);
Report verify_single_zero(const TrialConfig& cfg, UnitDiskPoint a);
Report verify_finite_blaschke(const TrialConfig& cfg);
// Default prefix: a_j = 1 - 2^-j up to cfg.degree_max. The explicit-prefix
// overload throws SeparationTooSmall below the 0.01 separation floor
// (duplicate zeros included).
Report verify_infinite_blaschke(const TrialConfig& cfg);
Report verify_infinite_blaschke(const TrialConfig& cfg,
                                const std::vector<UnitDiskPoint>& prefix);
Report verify_example_degree3(UnitDiskPoint w, const TrialConfig& cfg);

}  // namespace ttolab
