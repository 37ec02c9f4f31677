#include "discosc/affine.hpp"

#include <cmath>
#include <stdexcept>

#include "discosc/errors.hpp"
#include "discosc/quadrature.hpp"
#include "discosc/special.hpp"

namespace discosc {

AffinePoint::AffinePoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y > 0.0)) throw std::domain_error("AffinePoint: y must be positive");
}

AffinePoint affine_compose(const AffinePoint& g1, const AffinePoint& g2) {
    return AffinePoint(g1.x + g1.y * g2.x, g1.y * g2.y);
}

cplx affine_action(const AffinePoint& point, const std::function<cplx(double)>& phi,
                   double omega, double r) {
    if (!(r > 0.0)) throw std::domain_error("affine_action: r must be positive");
    return std::pow(point.y, 0.25) *
           std::exp(cplx(0.0, -0.5 * point.x * omega * r * r)) *
           phi(std::sqrt(point.y) * r);
}

cplx cs_group(const AffinePoint& point, const OscillatorParams& params, int n,
              double r) {
    if (n < 0) throw std::domain_error("cs_group: level must be nonnegative");
    if (!(r > 0.0)) throw std::domain_error("cs_group: r must be positive");
    const double beta = params.beta();
    const double omega = params.omega;
    const double y = point.y;
    const double ln_mag = 0.5 * (std::log(2.0) + ln_gamma(n + 1.0) - ln_gamma(n + beta)) +
                          0.5 * beta * std::log(omega) +
                          (0.5 * beta - 0.25) * std::log(y) +
                          (params.ell + 1.0) * std::log(r) - 0.5 * omega * y * r * r;
    return std::exp(ln_mag) * std::exp(cplx(0.0, -0.5 * omega * point.x * r * r)) *
           laguerre(n, params.ell + 0.5, y * omega * r * r);
}

AffinePoint inverse_cayley(const DiscPoint& disc) {
    const double denom = std::norm(1.0 - disc.z);
    if (denom < 1e-28)
        throw std::domain_error("inverse_cayley: z at the boundary point 1");
    return AffinePoint(-2.0 * disc.z.imag() / denom, (1.0 - disc.xi()) / denom);
}

cplx forward_cayley(const AffinePoint& point) {
    const cplx w(point.x, point.y);
    return (w - cplx(0.0, 1.0)) / (w + cplx(0.0, 1.0));
}

cplx cs_disc(const DiscPoint& disc, const OscillatorParams& params, int n, double r) {
    if (n < 0) throw std::domain_error("cs_disc: level must be nonnegative");
    if (!(r > 0.0)) throw std::domain_error("cs_disc: r must be positive");
    const double beta = params.beta();
    const double omega = params.omega;
    const cplx zb = std::conj(disc.z);
    const double xi = disc.xi();
    const cplx one_m_zb = 1.0 - zb;
    const double ln_pref = 0.5 * (std::log(2.0 * std::sqrt(omega)) + ln_gamma(n + 1.0) -
                                  ln_gamma(n + beta));
    const double lag_arg = omega * (1.0 - xi) / std::norm(1.0 - disc.z) * r * r;
    return std::exp(ln_pref + (params.ell + 1.0) * std::log(std::sqrt(omega) * r)) *
           std::pow(1.0 - xi, 0.5 * beta) * std::pow(one_m_zb, -beta) *
           std::exp(-0.5 * omega * r * r * (1.0 + zb) / one_m_zb) *
           laguerre(n, params.ell + 0.5, lag_arg);
}

double admissibility_constant(const OscillatorParams& params, int n) {
    if (n < 0) throw std::domain_error("admissibility_constant: level must be nonnegative");
    const cplx val = integrate_halfline(
        [&](double r) -> cplx {
            const double f = eigenfunction_f(n, params, r);
            return f * f / (r * r);
        },
        params.omega, 4 * n + 2 * params.ell + 8);
    return 2.0 * M_PI * val.real();
}

double admissibility_closed_form(const OscillatorParams& params) {
    return 2.0 * M_PI * params.omega / (params.ell + 0.5);
}

}  // namespace discosc
