#include "fslab/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "fslab/errors.hpp"

namespace fslab {

FunctionalParams FunctionalParams::for_class(const ClassParams& params, cplx mu, cplx nu) {
    FunctionalParams fp{mu, nu, std::nullopt};
    if (mu.imag() == 0.0)
        fp.rho = mu.real() * params.sigma() / (params.tau() * params.tau());
    return fp;
}

Breakpoints breakpoints(const ClassParams& params) {
    const double a = params.alpha();
    const double b = params.beta();
    const double ratio = params.tau() * params.tau() / params.sigma();
    const double s = 2.0 - a - b;
    return {
        2.0 * (1.0 - b) * ratio / (3.0 * s),
        2.0 * ratio / 3.0,
        2.0 * (2.0 - b) * (3.0 - 2.0 * a - b) * ratio / (3.0 * s * s),
    };
}

int select_case(const ClassParams& params, double mu) {
    const Breakpoints bp = breakpoints(params);
    if (mu <= bp.mu1)
        return 1;
    if (mu <= bp.mu2)
        return 2;
    if (mu <= bp.mu3)
        return 3;
    return 4;
}

double branch_scaled_value(const ClassParams& params, double mu, int case_id) {
    const double a = params.alpha();
    const double b = params.beta();
    const double tau2 = params.tau() * params.tau();
    const double sigma = params.sigma();
    const double s = 2.0 - a - b;
    // slope of the outer branches in mu
    const double slope = 3.0 * s * s * sigma / tau2;
    switch (case_id) {
    case 1:
        return (3.0 - 2.0 * b) * (3.0 - 2.0 * a - b) - mu * slope;
    case 2:
        if (mu == 0.0)
            throw DomainError("case-2 branch is undefined at mu = 0");
        return 1.0 - 2.0 * a + b * (3.0 - 2.0 * b) +
               4.0 * (1.0 - b) * (1.0 - b) * tau2 / (3.0 * sigma * mu);
    case 3:
        return 3.0 - 2.0 * a - b;
    case 4:
        return (2.0 * b - 3.0) * (3.0 - 2.0 * a - b) + mu * slope;
    default:
        throw DomainError("case id must be in 1..4");
    }
}

BoundReport bound_real(const ClassParams& params, double mu) {
    if (!std::isfinite(mu))
        throw DomainError("mu must be finite");
    BoundReport r;
    r.mu = mu;
    r.breakpoints = breakpoints(params);
    r.case_id = select_case(params, mu);
    r.scaled_value = branch_scaled_value(params, mu, r.case_id);
    r.value = r.scaled_value / (3.0 * params.sigma());
    r.psi_beta = psi(params, params.beta());
    r.psi_alpha = psi(params, params.alpha());
    r.psi_zero = psi(params, 0.0);
    return r;
}

BoundReport bound_real(const ClassParams& params, cplx mu) {
    if (mu.imag() != 0.0)
        throw DomainError("the sharp bound is defined for real mu only; use bound_complex");
    return bound_real(params, mu.real());
}

double psi(const ClassParams& params, double s) {
    if (!(0.0 <= s && s < 1.0))
        throw DomainError("psi argument must lie in [0, 1)");
    return 3.0 * params.sigma() * (1.0 - s) / (params.tau() * params.tau());
}

double bound_complex_scaled(const ClassParams& params, cplx mu) {
    if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag()))
        throw DomainError("mu must be finite");
    const double a = params.alpha();
    const double b = params.beta();
    const double starlike_term =
        (1.0 - b) * std::max(1.0, std::abs(3.0 - 2.0 * b - mu * psi(params, b)));
    const double caratheodory_term =
        2.0 * (1.0 - a) * std::max(1.0, std::abs(1.0 - mu * psi(params, a) / 2.0));
    const double cross_term = 4.0 * (1.0 - a) * (1.0 - b) * std::abs(1.0 - mu * psi(params, 0.0) / 2.0);
    return starlike_term + caratheodory_term + cross_term;
}

double bound_complex(const ClassParams& params, cplx mu) {
    return bound_complex_scaled(params, mu) / (3.0 * params.sigma());
}

CoeffBounds coeff_bounds(const ClassParams& params) {
    const double a = params.alpha();
    const double b = params.beta();
    return {
        (2.0 - a - b) / params.tau(),
        (3.0 - 2.0 * a - b) * (3.0 - 2.0 * b) / (3.0 * params.sigma()),
    };
}

double caratheodory_bound(cplx nu) {
    return 2.0 * std::max(1.0, std::abs(2.0 * nu - 1.0));
}

double starlike_fs_bound(double beta, double mu) {
    if (!(0.0 <= beta && beta < 1.0))
        throw DomainError("need 0 <= beta < 1");
    return (1.0 - beta) * std::max(1.0, std::abs(3.0 - 2.0 * beta - 4.0 * mu * (1.0 - beta)));
}

std::optional<Preset> preset_from_name(std::string_view name) {
    if (name == "keogh-merkes")
        return Preset::KeoghMerkes;
    if (name == "darus-thomas")
        return Preset::DarusThomas;
    if (name == "al-abbadi-darus")
        return Preset::AlAbbadiDarus;
    if (name == "ad2")
        return Preset::Ad2;
    return std::nullopt;
}

std::string_view preset_name(Preset preset) {
    switch (preset) {
    case Preset::KeoghMerkes:
        return "keogh-merkes";
    case Preset::DarusThomas:
        return "darus-thomas";
    case Preset::AlAbbadiDarus:
        return "al-abbadi-darus";
    case Preset::Ad2:
        return "ad2";
    }
    return "";
}

ClassParams preset_params(Preset preset, double lambda, double alpha, double beta) {
    auto require_zero = [&](double v, const char* name) {
        if (v != 0.0)
            throw DomainError(std::string("preset ") + std::string(preset_name(preset)) +
                              " fixes " + name + " = 0");
    };
    switch (preset) {
    case Preset::KeoghMerkes:
        require_zero(lambda, "lambda");
        require_zero(alpha, "alpha");
        require_zero(beta, "beta");
        return ClassParams(0.0, 0.0, 0.0, 0.0);
    case Preset::DarusThomas:
        require_zero(lambda, "lambda");
        return ClassParams(0.0, 0.0, alpha, beta);
    case Preset::AlAbbadiDarus:
        require_zero(alpha, "alpha");
        return ClassParams(lambda, 0.0, 0.0, beta);
    case Preset::Ad2:
        return ClassParams(lambda, 0.0, alpha, beta);
    }
    throw DomainError("unknown preset");
}

double reduction_bound(Preset preset, double lambda, double alpha, double beta, double mu) {
    return bound_real(preset_params(preset, lambda, alpha, beta), mu).value;
}

double classical_s_bound(double mu) {
    if (!std::isfinite(mu))
        throw DomainError("mu must be finite");
    if (mu <= 0.0)
        return 3.0 - 4.0 * mu;
    if (mu < 1.0)
        return 1.0 + 2.0 * std::exp(-2.0 * mu / (1.0 - mu));
    return 4.0 * mu - 3.0;
}

} // namespace fslab
