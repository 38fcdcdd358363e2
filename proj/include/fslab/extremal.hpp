#pragma once

#include <vector>

#include "fslab/bounds.hpp"
#include "fslab/members.hpp"

namespace fslab {

/// Coefficients of F(z) = (1 - lambda + delta) f + (lambda - delta) z f' + lambda delta z^2 f''.
/// A_k = (D_k / k) a_k, so A_2 = tau a_2 and A_3 = sigma a_3.
struct LiberaTransform {
    std::vector<cplx> A;
};

LiberaTransform libera_transform(const ClassMember& member);

/// Checks Re(zF'/g) > alpha on a circle: F lies in C(alpha, beta) with the
/// member's g as the starlike companion.
bool close_to_convex_spotcheck(const LiberaTransform& transform, const ClassMember& member,
                               double radius, std::size_t grid);

/// Measures realizing equality in one branch of the sharp real-mu bound.
///   case 1: p, q single atoms at 0
///   case 2: q single atom at 0, p = {(w, 0), (1-w, pi)}, w = (2 + c1)/4
///   case 3: p, q = {(1/2, 0), (1/2, pi)}
///   case 4: p, q single atoms at pi/2
struct ExtremalConfig {
    int case_id;
    HerglotzMeasure p_measure;
    HerglotzMeasure q_measure;
};

/// c1 = 2(1-b)(2 tau^2 - 3 sigma mu) / (3 (1-a) sigma mu), the case-2 value
/// of the first Caratheodory coefficient. Throws DomainError at mu == 0.
double case2_c1(const ClassParams& params, double mu);

/// Throws CaseRangeError for case 2 when c1 leaves [0, 2] (mu outside
/// [mu1, mu2]), DomainError for an unknown case id.
ExtremalConfig extremal_config(const ClassParams& params, double mu, int case_id);

ClassMember extremal_member(const ClassParams& params, double mu, int case_id,
                            std::size_t n = kDefaultOrder);

struct SharpnessReport {
    int case_id;
    double bound;
    double attained_value;
    double residual; ///< bound - attained_value
};

inline constexpr double kSharpnessTolerance = 1e-8;

/// Builds the witness for the branch containing mu and compares it with the bound.
SharpnessReport sharpness_report(const ClassParams& params, double mu);

/// bound_real(params, mu).value - |phi_mu(witness)|.
double sharpness_residual(const ClassParams& params, double mu);

} // namespace fslab
