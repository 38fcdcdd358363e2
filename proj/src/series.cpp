#include "fslab/series.hpp"

#include <algorithm>
#include <cmath>

#include "fslab/errors.hpp"

namespace fslab {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, cplx{0.0, 0.0}) {}

PowerSeries::PowerSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw DomainError("power series needs at least one coefficient");
    for (const auto& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw DomainError("power series coefficient is not finite");
    }
}

PowerSeries::PowerSeries(std::initializer_list<cplx> coeffs)
    : PowerSeries(std::vector<cplx>(coeffs)) {}

cplx PowerSeries::evaluate(cplx z) const noexcept {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t k = 0; k <= n; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t j = 0; j <= k; ++j)
            acc += a[j] * b[k - j];
        out[k] = acc;
    }
    return out;
}

PowerSeries ps_linear(cplx s, const PowerSeries& a, cplx t, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t k = 0; k <= n; ++k)
        out[k] = s * a[k] + t * b[k];
    return out;
}

PowerSeries ps_derivative(const PowerSeries& a) {
    if (a.order() == 0)
        return PowerSeries(0);
    PowerSeries out(a.order() - 1);
    for (std::size_t k = 0; k < a.order(); ++k)
        out[k] = static_cast<double>(k + 1) * a[k + 1];
    return out;
}

PowerSeries ps_z_derivative(const PowerSeries& a) {
    PowerSeries out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k)
        out[k] = static_cast<double>(k) * a[k];
    return out;
}

PowerSeries ps_strip_z(const PowerSeries& a) {
    if (a[0] != cplx{0.0, 0.0})
        throw DomainError("cannot strip z: constant term is nonzero");
    if (a.order() == 0)
        return PowerSeries(0);
    PowerSeries out(a.order() - 1);
    for (std::size_t k = 0; k < a.order(); ++k)
        out[k] = a[k + 1];
    return out;
}

PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b, double tol) {
    if (std::abs(b[0]) <= tol)
        throw NearSingular("series division: |b[0]| is below tolerance");
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t k = 0; k <= n; ++k) {
        cplx acc = a[k];
        for (std::size_t j = 1; j <= k; ++j)
            acc -= b[j] * out[k - j];
        out[k] = acc / b[0];
    }
    return out;
}

} // namespace fslab
