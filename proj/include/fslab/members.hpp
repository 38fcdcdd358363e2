#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fslab/series.hpp"

namespace fslab {

/// The parameters (lambda, delta, alpha, beta) identifying the class
/// K_{lambda,delta}(alpha, beta), together with the derived
///   tau   = 1 + lambda - delta + 2 lambda delta
///   sigma = 1 + 2 lambda - 2 delta + 6 lambda delta.
///
/// Admissible values: 0 <= delta <= lambda <= 1, 0 <= alpha < 1, 0 <= beta < 1.
class ClassParams {
public:
    /// All-zero parameters: the Kaplan close-to-convex class.
    ClassParams() : ClassParams(0.0, 0.0, 0.0, 0.0) {}

    /// Throws DomainError for non-admissible values.
    ClassParams(double lambda, double delta, double alpha, double beta);

    double lambda() const noexcept { return lambda_; }
    double delta() const noexcept { return delta_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double tau() const noexcept { return tau_; }
    double sigma() const noexcept { return sigma_; }

    /// D_k = k[(1 - lambda + delta) + k(lambda - delta) + k(k-1) lambda delta],
    /// the factor multiplying a_k in zf' + (lambda-delta+2 lambda delta) z^2 f'' + lambda delta z^3 f'''.
    /// D_1 = 1, D_2 = 2 tau, D_3 = 3 sigma.
    double denominator(std::size_t k) const noexcept;

    /// D_k / k, the factor multiplying a_k in the Libera-type transform.
    double libera_factor(std::size_t k) const noexcept;

    friend bool operator==(const ClassParams&, const ClassParams&) = default;

private:
    double lambda_;
    double delta_;
    double alpha_;
    double beta_;
    double tau_;
    double sigma_;
};

struct Atom {
    double weight;
    double angle; ///< radians, stored in [0, 2pi)

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

inline constexpr std::size_t kDefaultMaxAtoms = 4;

/// Finite atomic probability measure on the unit circle. The Caratheodory
/// function it generates is
///   p(z) = sum_i w_i (1 + e^{i theta_i} z) / (1 - e^{i theta_i} z),
/// so p(0) = 1 and Re p > 0 on the disk.
class HerglotzMeasure {
public:
    /// Weights must be positive and sum to 1 within 1e-9 (they are then
    /// renormalized); angles are wrapped into [0, 2pi). Throws DomainError.
    explicit HerglotzMeasure(std::vector<Atom> atoms, std::size_t max_atoms = kDefaultMaxAtoms);

    /// Single unit atom at the given angle.
    static HerglotzMeasure point(double angle);

    std::span<const Atom> atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }

    /// Same measure rotated by theta (every angle shifted).
    HerglotzMeasure rotated(double theta) const;

    friend auto operator<=>(const HerglotzMeasure&, const HerglotzMeasure&) = default;

private:
    std::vector<Atom> atoms_;
};

/// c_0 = 1, c_k = 2 sum_i w_i e^{i k theta_i} for 1 <= k <= n.
std::vector<cplx> herglotz_coeffs(const HerglotzMeasure& m, std::size_t n);

/// Coefficients of g with zg'/g = beta + (1 - beta) q, given q's coefficients
/// (q[0] = 1). Result has b[0] = 0, b[1] = 1 and
///   (k-1) b_k = (1 - beta) sum_{j=1}^{k-1} q_j b_{k-j}.
/// Uses min(n, q.size()-1) as the order.
std::vector<cplx> starlike_from_q(std::span<const cplx> q, double beta, std::size_t n);

/// A concrete f in K_{lambda,delta}(alpha,beta) and the data it was built from.
/// All sequences are indexed by the power of z (index 0 .. order).
struct ClassMember {
    ClassParams params;
    HerglotzMeasure p_measure = HerglotzMeasure::point(0.0);
    HerglotzMeasure q_measure = HerglotzMeasure::point(0.0);
    std::vector<cplx> c;      ///< coefficients of p, c[0] = 1
    std::vector<cplx> qk;     ///< coefficients of q, qk[0] = 1
    std::vector<cplx> b;      ///< coefficients of g, b[1] = 1
    std::vector<cplx> a;      ///< coefficients of f, a[1] = 1
    std::vector<double> d;    ///< D_k, d[0] = 0

    std::size_t order() const noexcept { return a.size() - 1; }
};

/// Solves g (alpha + (1 - alpha) p) = sum_k D_k a_k z^k for a, with g derived
/// from q. Throws DomainError if n < 3.
ClassMember member_from_pq(const ClassParams& params, const HerglotzMeasure& p,
                           const HerglotzMeasure& q, std::size_t n = kDefaultOrder);

/// Same recurrences driven by raw coefficient sequences. No membership is
/// implied when c or qk do not come from a Herglotz measure; the stored
/// measures are then placeholders.
ClassMember member_from_coeffs(const ClassParams& params, std::span<const cplx> c,
                               std::span<const cplx> qk, std::size_t n = kDefaultOrder);

/// phi_mu(f) = a_3 - mu a_2^2.
cplx fs_functional(std::span<const cplx> a, cplx mu);
cplx fs_functional(const ClassMember& member, cplx mu);

/// Coefficients of e^{-i theta} f(e^{i theta} z): a_k e^{i(k-1) theta}.
std::vector<cplx> rotate(std::span<const cplx> a, double theta);

/// Tolerance below alpha tolerated by the spot checks.
inline constexpr double kMemberTolerance = 1e-6;

/// Samples Re(numerator / g) on the circle |z| = radius at `grid` equally
/// spaced points, where numerator has coefficients num_k (num_0 = 0).
/// True iff every sample exceeds alpha - kMemberTolerance.
/// Throws DomainError unless 0 < radius <= 0.5 and grid >= 1.
bool ratio_spotcheck(std::span<const cplx> numerator, std::span<const cplx> g, double alpha,
                     double radius, std::size_t grid);

/// Checks Re[(zf' + (lambda-delta+2 lambda delta) z^2 f'' + lambda delta z^3 f''') / g] > alpha
/// on a circle using the truncated series.
bool membership_spotcheck(const ClassMember& member, double radius, std::size_t grid);

} // namespace fslab
