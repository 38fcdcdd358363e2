#include "fslab/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fslab/errors.hpp"

namespace fslab {

namespace {

constexpr double kPi = std::numbers::pi;
// slack on c1 in [0, 2] before a case-2 request is rejected
constexpr double kCaseRangeSlack = 1e-12;

HerglotzMeasure antipodal_pair(double w) {
    if (w >= 1.0)
        return HerglotzMeasure::point(0.0);
    if (w <= 0.0)
        return HerglotzMeasure::point(kPi);
    return HerglotzMeasure({{w, 0.0}, {1.0 - w, kPi}});
}

} // namespace

LiberaTransform libera_transform(const ClassMember& member) {
    LiberaTransform t;
    t.A.resize(member.a.size());
    for (std::size_t k = 0; k < member.a.size(); ++k)
        t.A[k] = member.params.libera_factor(k) * member.a[k];
    if (t.A.size() > 1)
        t.A[1] = 1.0;
    return t;
}

bool close_to_convex_spotcheck(const LiberaTransform& transform, const ClassMember& member,
                               double radius, std::size_t grid) {
    const PowerSeries zF_prime = ps_z_derivative(PowerSeries(transform.A));
    return ratio_spotcheck(zF_prime.coeffs(), member.b, member.params.alpha(), radius, grid);
}

double case2_c1(const ClassParams& params, double mu) {
    if (mu == 0.0)
        throw DomainError("case-2 witness is undefined at mu = 0");
    const double tau2 = params.tau() * params.tau();
    const double sigma = params.sigma();
    return 2.0 * (1.0 - params.beta()) * (2.0 * tau2 - 3.0 * sigma * mu) /
           (3.0 * (1.0 - params.alpha()) * sigma * mu);
}

ExtremalConfig extremal_config(const ClassParams& params, double mu, int case_id) {
    switch (case_id) {
    case 1:
        return {1, HerglotzMeasure::point(0.0), HerglotzMeasure::point(0.0)};
    case 2: {
        if (!(mu > 0.0))
            throw CaseRangeError("case-2 witness requires mu in [mu1, mu2]");
        double c1 = case2_c1(params, mu);
        if (c1 < -kCaseRangeSlack || c1 > 2.0 + kCaseRangeSlack)
            throw CaseRangeError("case-2 witness requires mu in [mu1, mu2]");
        c1 = std::clamp(c1, 0.0, 2.0);
        return {2, antipodal_pair((2.0 + c1) / 4.0), HerglotzMeasure::point(0.0)};
    }
    case 3:
        return {3, antipodal_pair(0.5), antipodal_pair(0.5)};
    case 4:
        return {4, HerglotzMeasure::point(kPi / 2.0), HerglotzMeasure::point(kPi / 2.0)};
    default:
        throw DomainError("case id must be in 1..4");
    }
}

ClassMember extremal_member(const ClassParams& params, double mu, int case_id, std::size_t n) {
    const ExtremalConfig cfg = extremal_config(params, mu, case_id);
    return member_from_pq(params, cfg.p_measure, cfg.q_measure, n);
}

SharpnessReport sharpness_report(const ClassParams& params, double mu) {
    const BoundReport bound = bound_real(params, mu);
    const ClassMember witness = extremal_member(params, mu, bound.case_id);
    const double attained = std::abs(fs_functional(witness, mu));
    return {bound.case_id, bound.value, attained, bound.value - attained};
}

double sharpness_residual(const ClassParams& params, double mu) {
    return sharpness_report(params, mu).residual;
}

} // namespace fslab
