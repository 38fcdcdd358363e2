#include "fslab/members.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fslab/errors.hpp"

namespace fslab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kWeightSumTolerance = 1e-9;

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0)
        t += kTwoPi;
    if (t >= kTwoPi)
        t = 0.0;
    return t;
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

ClassParams::ClassParams(double lambda, double delta, double alpha, double beta)
    : lambda_(lambda), delta_(delta), alpha_(alpha), beta_(beta) {
    if (!finite(lambda) || !finite(delta) || !finite(alpha) || !finite(beta))
        throw DomainError("class parameters must be finite");
    if (!(0.0 <= delta && delta <= lambda && lambda <= 1.0))
        throw DomainError("need 0 <= delta <= lambda <= 1");
    if (!(0.0 <= alpha && alpha < 1.0))
        throw DomainError("need 0 <= alpha < 1");
    if (!(0.0 <= beta && beta < 1.0))
        throw DomainError("need 0 <= beta < 1");
    tau_ = 1.0 + lambda - delta + 2.0 * lambda * delta;
    sigma_ = 1.0 + 2.0 * lambda - 2.0 * delta + 6.0 * lambda * delta;
}

double ClassParams::libera_factor(std::size_t k) const noexcept {
    const double kk = static_cast<double>(k);
    return (1.0 - lambda_ + delta_) + kk * (lambda_ - delta_) + kk * (kk - 1.0) * lambda_ * delta_;
}

double ClassParams::denominator(std::size_t k) const noexcept {
    return static_cast<double>(k) * libera_factor(k);
}

HerglotzMeasure::HerglotzMeasure(std::vector<Atom> atoms, std::size_t max_atoms)
    : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        throw DomainError("Herglotz measure needs at least one atom");
    if (atoms_.size() > max_atoms)
        throw DomainError("Herglotz measure has " + std::to_string(atoms_.size()) +
                          " atoms, limit is " + std::to_string(max_atoms));
    double total = 0.0;
    for (const auto& atom : atoms_) {
        if (!finite(atom.weight) || !finite(atom.angle))
            throw DomainError("atom weight and angle must be finite");
        if (atom.weight <= 0.0)
            throw DomainError("atom weights must be positive");
        total += atom.weight;
    }
    if (std::abs(total - 1.0) >= kWeightSumTolerance)
        throw DomainError("atom weights must sum to 1");
    for (auto& atom : atoms_) {
        atom.weight /= total;
        atom.angle = wrap_angle(atom.angle);
    }
}

HerglotzMeasure HerglotzMeasure::point(double angle) {
    return HerglotzMeasure({{1.0, angle}});
}

HerglotzMeasure HerglotzMeasure::rotated(double theta) const {
    std::vector<Atom> shifted(atoms_.begin(), atoms_.end());
    for (auto& atom : shifted)
        atom.angle += theta;
    const std::size_t count = shifted.size();
    return HerglotzMeasure(std::move(shifted), count);
}

std::vector<cplx> herglotz_coeffs(const HerglotzMeasure& m, std::size_t n) {
    std::vector<cplx> c(n + 1, cplx{0.0, 0.0});
    c[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        cplx acc{0.0, 0.0};
        for (const auto& atom : m.atoms())
            acc += atom.weight * std::polar(1.0, static_cast<double>(k) * atom.angle);
        c[k] = 2.0 * acc;
    }
    return c;
}

std::vector<cplx> starlike_from_q(std::span<const cplx> q, double beta, std::size_t n) {
    if (q.empty())
        throw DomainError("q coefficients are empty");
    const std::size_t order = std::min(n, q.size() - 1);
    std::vector<cplx> b(std::max<std::size_t>(order, 1) + 1, cplx{0.0, 0.0});
    b[1] = 1.0;
    for (std::size_t k = 2; k <= order; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t j = 1; j < k; ++j)
            acc += q[j] * b[k - j];
        b[k] = (1.0 - beta) * acc / static_cast<double>(k - 1);
    }
    b.resize(order + 1);
    return b;
}

ClassMember member_from_coeffs(const ClassParams& params, std::span<const cplx> c,
                               std::span<const cplx> qk, std::size_t n) {
    if (n < 3)
        throw DomainError("member order must be at least 3");
    if (c.size() < n + 1 || qk.size() < n + 1)
        throw DomainError("coefficient sequences shorter than requested order");

    ClassMember m;
    m.params = params;
    m.c.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n + 1));
    m.qk.assign(qk.begin(), qk.begin() + static_cast<std::ptrdiff_t>(n + 1));
    m.b = starlike_from_q(m.qk, params.beta(), n);

    const double alpha = params.alpha();
    const PowerSeries g(m.b);
    const PowerSeries p(m.c);
    PowerSeries one(n);
    one[0] = 1.0;
    const PowerSeries rhs = ps_mul(g, ps_linear(alpha, one, 1.0 - alpha, p));

    m.a.assign(n + 1, cplx{0.0, 0.0});
    m.d.assign(n + 1, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        m.d[k] = params.denominator(k);
        m.a[k] = rhs[k] / m.d[k];
    }
    return m;
}

ClassMember member_from_pq(const ClassParams& params, const HerglotzMeasure& p,
                           const HerglotzMeasure& q, std::size_t n) {
    ClassMember m = member_from_coeffs(params, herglotz_coeffs(p, n), herglotz_coeffs(q, n), n);
    m.p_measure = p;
    m.q_measure = q;
    return m;
}

cplx fs_functional(std::span<const cplx> a, cplx mu) {
    if (a.size() < 4)
        throw DomainError("fs_functional needs a_2 and a_3");
    return a[3] - mu * a[2] * a[2];
}

cplx fs_functional(const ClassMember& member, cplx mu) {
    return fs_functional(member.a, mu);
}

std::vector<cplx> rotate(std::span<const cplx> a, double theta) {
    std::vector<cplx> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] = a[k] * std::polar(1.0, (static_cast<double>(k) - 1.0) * theta);
    return out;
}

bool ratio_spotcheck(std::span<const cplx> numerator, std::span<const cplx> g, double alpha,
                     double radius, std::size_t grid) {
    if (!(radius > 0.0 && radius <= 0.5))
        throw DomainError("spot-check radius must lie in (0, 0.5]");
    if (grid == 0)
        throw DomainError("spot-check grid must be positive");
    const PowerSeries num_over_z = ps_strip_z(PowerSeries(std::vector<cplx>(numerator.begin(), numerator.end())));
    const PowerSeries g_over_z = ps_strip_z(PowerSeries(std::vector<cplx>(g.begin(), g.end())));
    const PowerSeries ratio = ps_div(num_over_z, g_over_z);
    for (std::size_t j = 0; j < grid; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(grid);
        if (ratio.evaluate(std::polar(radius, t)).real() <= alpha - kMemberTolerance)
            return false;
    }
    return true;
}

bool membership_spotcheck(const ClassMember& member, double radius, std::size_t grid) {
    std::vector<cplx> numerator(member.a.size());
    for (std::size_t k = 0; k < member.a.size(); ++k)
        numerator[k] = member.d[k] * member.a[k];
    return ratio_spotcheck(numerator, member.b, member.params.alpha(), radius, grid);
}

} // namespace fslab
