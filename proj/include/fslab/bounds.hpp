#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>

#include "fslab/members.hpp"

namespace fslab {

/// The Fekete-Szego parameter mu, the Caratheodory parameter nu, and
/// the substitution rho = mu sigma / tau^2 (set only when mu is real and a
/// class is attached).
struct FunctionalParams {
    cplx mu{0.0, 0.0};
    cplx nu{0.0, 0.0};
    std::optional<double> rho;

    static FunctionalParams for_class(const ClassParams& params, cplx mu, cplx nu = {});
};

struct Breakpoints {
    double mu1;
    double mu2;
    double mu3;
};

/// Sharp real-mu bound on 3 sigma |a_3 - mu a_2^2| for K_{lambda,delta}(alpha,beta).
struct BoundReport {
    double mu = 0.0;
    int case_id = 1;          ///< 1..4, ties at a breakpoint go to the lower case
    Breakpoints breakpoints{};
    double scaled_value = 0.0; ///< bound on 3 sigma |phi_mu|
    double value = 0.0;        ///< scaled_value / (3 sigma)
    double psi_beta = 0.0;
    double psi_alpha = 0.0;
    double psi_zero = 0.0;
};

/// mu1 = 2(1-b) tau^2 / (3(2-a-b) sigma), mu2 = 2 tau^2 / (3 sigma),
/// mu3 = 2(2-b)(3-2a-b) tau^2 / (3 (2-a-b)^2 sigma).
Breakpoints breakpoints(const ClassParams& params);

/// Which branch of the piecewise bound applies at mu.
int select_case(const ClassParams& params, double mu);

/// Scaled value of a single branch formula, evaluated at any mu (used to check
/// continuity across breakpoints). Throws DomainError for case_id outside 1..4
/// and for the case-2 formula at mu == 0.
double branch_scaled_value(const ClassParams& params, double mu, int case_id);

BoundReport bound_real(const ClassParams& params, double mu);

/// Complex mu is accepted only with a zero imaginary part; otherwise DomainError.
BoundReport bound_real(const ClassParams& params, cplx mu);

/// Triangle-inequality bound for complex mu, divided by 3 sigma.
double bound_complex(const ClassParams& params, cplx mu);

/// Same bound before division by 3 sigma.
double bound_complex_scaled(const ClassParams& params, cplx mu);

/// Psi(s) = 3 sigma (1 - s) / tau^2. Requires 0 <= s < 1.
double psi(const ClassParams& params, double s);

struct CoeffBounds {
    double a2_max;
    double a3_max;
};

/// a2_max = (2-a-b)/tau, a3_max = (3-2a-b)(3-2b)/(3 sigma).
CoeffBounds coeff_bounds(const ClassParams& params);

/// 2 max{1, |2 nu - 1|}: bound on |c_2 - nu c_1^2| over the Caratheodory class.
double caratheodory_bound(cplx nu);

/// (1-beta) max{1, |3 - 2 beta - 4 mu (1-beta)|}: Fekete-Szego bound for S*(beta).
double starlike_fs_bound(double beta, double mu);

enum class Preset {
    KeoghMerkes,     ///< lambda = delta = alpha = beta = 0
    DarusThomas,     ///< lambda = delta = 0
    AlAbbadiDarus,   ///< delta = alpha = 0
    Ad2,             ///< delta = 0
};

std::optional<Preset> preset_from_name(std::string_view name);
std::string_view preset_name(Preset preset);

/// The class parameters a preset pins. Arguments the preset forces to zero
/// must be zero; otherwise DomainError.
ClassParams preset_params(Preset preset, double lambda, double alpha, double beta);

/// bound_real(...).value for the preset's specialization.
double reduction_bound(Preset preset, double lambda, double alpha, double beta, double mu);

/// Classical bound for the full univalent class S. Reference only.
double classical_s_bound(double mu);

} // namespace fslab
