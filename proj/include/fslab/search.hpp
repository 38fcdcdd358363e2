#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fslab/members.hpp"

namespace fslab {

/// Budget of the numerical oracle. `threads == 0` means one worker per
/// hardware thread; the worker count never changes the result.
struct SearchBudget {
    std::uint64_t n_samples = 10000;
    unsigned n_refine = 3;
    std::size_t max_atoms = 3;
    std::uint64_t seed = 42;
    unsigned threads = 0;
};

struct SearchResult {
    double best_value = 0.0;
    ClassMember best_member;
    double bound = 0.0;
    double margin = 0.0;            ///< bound - best_value
    std::uint64_t evaluations = 0;
    std::vector<double> pass_best;  ///< best value before refinement, then after each pass
};

/// Relative slack allowed above a bound before a member counts as a violation.
double violation_tolerance(double bound);

/// Seed of the independent random stream for sample `index`.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

/// 1..max_atoms atoms, Dirichlet(1) weights, uniform angles on [0, 2pi).
HerglotzMeasure sample_measure(std::mt19937_64& rng, std::size_t max_atoms);

struct MeasurePair {
    HerglotzMeasure p;
    HerglotzMeasure q;
};

/// Extremal configurations seeded into every search, with their quarter-turn
/// rotations. The case-2 witness is included only for real mu in [mu1, mu2].
std::vector<MeasurePair> seed_configurations(const ClassParams& params, cplx mu);

/// Maximizes |a_3 - mu a_2^2| over members built from pairs of atomic
/// measures: seeded witnesses, n_samples random draws, then n_refine passes of
/// coordinate-wise golden-section moves on the best candidates. The bound is
/// bound_real for real mu and bound_complex otherwise.
SearchResult maximize_fs(const ClassParams& params, cplx mu, const SearchBudget& budget = {});

struct VerifyReport {
    cplx mu;
    double bound = 0.0;
    double best_value = 0.0;
    double margin = 0.0;
    bool attained = false;  ///< margin <= 1e-6 * bound
    std::uint64_t evaluations = 0;
    ClassMember best_member;
};

/// Runs maximize_fs and compares against the bound without throwing.
VerifyReport check_inequality(const ClassParams& params, cplx mu, const SearchBudget& budget = {});

/// best_value > bound + violation_tolerance(bound).
bool is_violation(const VerifyReport& report);

/// check_inequality, then throws ViolationError if best_value > bound + violation_tolerance(bound).
VerifyReport verify_inequality(const ClassParams& params, cplx mu, const SearchBudget& budget = {});

} // namespace fslab
