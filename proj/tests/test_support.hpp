#pragma once

// Generators and independent reference formulas shared by the test suites.
// Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "fslab/members.hpp"

namespace fstest {

using cplx = std::complex<double>;
using fslab::Atom;
using fslab::ClassParams;
using fslab::HerglotzMeasure;
constexpr double kPi = std::numbers::pi;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    ClassParams params() {
        const double lambda = uniform(0.0, 1.0);
        const double delta = uniform(0.0, lambda);
        return ClassParams(lambda, delta, uniform(0.0, 0.999), uniform(0.0, 0.999));
    }

    HerglotzMeasure measure(int max_atoms = 3) {
        const int n = integer(1, max_atoms);
        std::vector<Atom> atoms(static_cast<std::size_t>(n));
        double total = 0.0;
        for (auto& a : atoms) {
            a.weight = uniform(0.01, 1.0);
            a.angle = uniform(0.0, 2.0 * kPi);
            total += a.weight;
        }
        for (auto& a : atoms)
            a.weight /= total;
        return HerglotzMeasure(std::move(atoms));
    }

    std::vector<cplx> series(std::size_t order, double max_abs) {
        std::vector<cplx> c(order + 1);
        for (auto& x : c)
            x = std::polar(uniform(0.0, max_abs), uniform(0.0, 2.0 * kPi));
        return c;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// First two Caratheodory coefficients summed directly from the atoms.
inline std::pair<cplx, cplx> direct_c1_c2(const HerglotzMeasure& m) {
    cplx c1{}, c2{};
    for (const auto& a : m.atoms()) {
        c1 += 2.0 * a.weight * cplx(std::cos(a.angle), std::sin(a.angle));
        c2 += 2.0 * a.weight * cplx(std::cos(2 * a.angle), std::sin(2 * a.angle));
    }
    return {c1, c2};
}

struct A23 {
    cplx a2;
    cplx a3;
};

/// a_2, a_3 from the coefficient-matching identities
///   2 tau a_2 = b_2 + (1 - alpha) c_1
///   3 sigma a_3 = b_3 + (1 - alpha) b_2 c_1 + (1 - alpha) c_2
/// with b_2 = (1-beta) q_1, b_3 = (1-beta)(q_1 b_2 + q_2)/2, written out by hand.
inline A23 oracle_a2_a3(double lambda, double delta, double alpha, double beta, cplx c1, cplx c2, cplx q1,
                        cplx q2) {
    const double tau = 1 + lambda - delta + 2 * lambda * delta;
    const double sigma = 1 + 2 * lambda - 2 * delta + 6 * lambda * delta;
    const cplx b2 = (1 - beta) * q1;
    const cplx b3 = (1 - beta) * (q1 * b2 + q2) / 2.0;
    return {(b2 + (1 - alpha) * c1) / (2 * tau), (b3 + (1 - alpha) * b2 * c1 + (1 - alpha) * c2) / (3 * sigma)};
}

/// Darus-Thomas piecewise bound on 3|A_3 - rho A_2^2| for C(alpha, beta),
/// middle branch with the continuity-consistent "+" sign.
inline double darus_thomas_scaled(double a, double b, double rho) {
    const double r1 = 2 * (1 - b) / (3 * (2 - a - b));
    const double r3 = 2 * (2 - b) * (3 - 2 * a - b) / (3 * (2 - a - b) * (2 - a - b));
    if (rho <= r1)
        return (3 - 2 * b) * (3 - 2 * a - b) - 3 * rho * (2 - a - b) * (2 - a - b);
    if (rho <= 2.0 / 3.0)
        return 1 - 2 * a + b * (3 - 2 * b) + 4.0 / (3 * rho) * (1 - b) * (1 - b);
    if (rho <= r3)
        return 3 - 2 * a - b;
    return (2 * b - 3) * (3 - 2 * a - b) + 3 * rho * (2 - a - b) * (2 - a - b);
}

/// Keogh-Merkes bound for the Kaplan class (corrected middle branch).
inline double keogh_merkes(double mu) {
    if (mu <= 1.0 / 3.0)
        return 3 - 4 * mu;
    if (mu <= 2.0 / 3.0)
        return 1.0 / 3.0 + 4.0 / (9.0 * mu);
    if (mu <= 1.0)
        return 1.0;
    return 4 * mu - 3;
}

/// Brute-force max of |a_3 - mu a_2^2| over p = {(w, 0), (1-w, pi)} (w on a
/// grid) and q = single atom at 0, for all-zero parameters.
inline double brute_force_kaplan_real_atoms(double mu, int steps) {
    double best = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const double w = static_cast<double>(i) / steps;
        const cplx c1 = 2.0 * (2 * w - 1);
        const cplx c2 = 2.0;
        const auto r = oracle_a2_a3(0, 0, 0, 0, c1, c2, 2.0, 2.0);
        best = std::max(best, std::abs(r.a3 - mu * r.a2 * r.a2));
    }
    return best;
}


} // namespace fstest
