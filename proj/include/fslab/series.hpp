#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fslab {

using cplx = std::complex<double>;

/// Default truncation order for constructed series.
inline constexpr std::size_t kDefaultOrder = 8;

/// Default threshold on |b[0]| below which ps_div refuses to divide.
inline constexpr double kDivTolerance = 1e-12;

/// Truncated complex power series c_0 + c_1 z + ... + c_N z^N.
///
/// Always holds exactly order()+1 finite coefficients. Binary operations
/// truncate to the smaller of the two orders.
class PowerSeries {
public:
    /// Zero series of the given order.
    explicit PowerSeries(std::size_t order = 0);

    /// Throws DomainError if coeffs is empty or holds a non-finite value.
    explicit PowerSeries(std::vector<cplx> coeffs);

    PowerSeries(std::initializer_list<cplx> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    const cplx& operator[](std::size_t k) const { return coeffs_[k]; }
    cplx& operator[](std::size_t k) { return coeffs_[k]; }

    std::span<const cplx> coeffs() const noexcept { return coeffs_; }
    const std::vector<cplx>& vector() const noexcept { return coeffs_; }

    /// Horner evaluation of the truncated polynomial.
    cplx evaluate(cplx z) const noexcept;

private:
    std::vector<cplx> coeffs_;
};

/// Cauchy product, truncated to min(a.order(), b.order()).
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);

/// s*a + t*b, truncated to the smaller order.
PowerSeries ps_linear(cplx s, const PowerSeries& a, cplx t, const PowerSeries& b);

/// d/dz; the result has order one less (order 0 maps to the zero series of order 0).
PowerSeries ps_derivative(const PowerSeries& a);

/// z d/dz, i.e. k*a[k]; order is preserved.
PowerSeries ps_z_derivative(const PowerSeries& a);

/// Divides out a common factor z: [a1, a2, ..., aN]. Requires a[0] == 0.
PowerSeries ps_strip_z(const PowerSeries& a);

/// Quotient c with b*c = a up to truncation order.
/// Throws NearSingular if |b[0]| <= tol.
PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b, double tol = kDivTolerance);

} // namespace fslab
