#include "discosc/landau.hpp"

#include <cmath>
#include <stdexcept>

#include "discosc/errors.hpp"
#include "discosc/quadrature.hpp"
#include "discosc/special.hpp"

namespace discosc {

LandauParams::LandauParams(double B_, int n_) : B(B_), n(n_) {
    if (!(B > 0.5)) throw std::domain_error("LandauParams: requires B > 1/2");
    if (n < 0 || n > static_cast<int>(std::floor(B - 0.5)))
        throw std::domain_error("LandauParams: level exceeds floor(B - 1/2)");
    if (!(2.0 * (B - n) - 1.0 > 0.0))
        throw std::domain_error("LandauParams: requires 2(B - n) - 1 > 0");
}

double landau_eigenvalue(const LandauParams& lp) {
    return (lp.B - lp.n) * (1.0 - lp.B + lp.n);
}

cplx phi_landau(const LandauParams& lp, int j, cplx z) {
    if (j > lp.n) throw std::domain_error("phi_landau: requires j <= n");
    const double xi = std::norm(z);
    if (!(xi < 1.0)) throw std::domain_error("phi_landau: requires |z| < 1");
    const int aj = std::abs(j);
    const double a1 = -lp.n + 0.5 * (j + aj);
    const double a2 = 2.0 * lp.B - lp.n + 0.5 * (aj - j);
    const cplx angular = (j <= 0) ? ipow(z, aj) : ipow(std::conj(z), aj);
    return angular * std::pow(1.0 - xi, lp.B - lp.n) *
           hyp_terminating(HypKind::f21, {a1, a2}, 1.0 + aj, xi);
}

cplx phi_landau_jacobi(const LandauParams& lp, int j, cplx z) {
    if (j > lp.n) throw std::domain_error("phi_landau_jacobi: requires j <= n");
    const double xi = std::norm(z);
    const int s = lp.n - j;
    const double b = 2.0 * (lp.B - lp.n) - 1.0;
    const double edge = std::pow(1.0 - xi, lp.B - lp.n);
    if (j <= 0) {
        const double ratio = std::exp(ln_gamma(lp.n + 1.0) - ln_gamma(s + 1.0) +
                                      ln_gamma(s - lp.n + 1.0));
        return edge * ratio * ipow(z, s - lp.n) *
               jacobi_poly(lp.n, s - lp.n, b, 1.0 - 2.0 * xi);
    }
    const double ratio = std::exp(ln_gamma(s + 1.0) - ln_gamma(lp.n + 1.0) +
                                  ln_gamma(lp.n - s + 1.0));
    return edge * ratio * ipow(std::conj(z), lp.n - s) *
           jacobi_poly(s, lp.n - s, b, 1.0 - 2.0 * xi);
}

double phi_norm_sq(const LandauParams& lp, int j) {
    if (j > lp.n) throw std::domain_error("phi_norm_sq: requires j <= n");
    const int aj = std::abs(j);
    const double jp = 0.5 * (aj + j);   // max(j, 0)
    const double jm = 0.5 * (aj - j);   // max(-j, 0)
    const double ln_val = 2.0 * ln_gamma(aj + 1.0) +
                          ln_gamma(lp.n - jp + 1.0) - ln_gamma(lp.n + jm + 1.0) +
                          ln_gamma(2.0 * lp.B - lp.n - jp) -
                          ln_gamma(2.0 * lp.B - lp.n + jm);
    return std::exp(ln_val) / (2.0 * (lp.B - lp.n) - 1.0);
}

double phi_norm_sq_quadrature(const LandauParams& lp, int j) {
    const cplx val = integrate_disc(
        [&](cplx z) -> cplx { return std::norm(phi_landau(lp, j, z)); }, -2.0);
    return val.real();
}

cplx apply_delta_B(const std::function<cplx(cplx)>& F, double B, cplx z, double h) {
    const double az = std::abs(z);
    if (h == 0.0) h = std::min(1e-3, (1.0 - az) / 10.0);
    if (!(h > 0.0) || az + h >= 1.0)
        throw step_error("apply_delta_B: stencil leaves the disc");

    const double x = z.real(), y = z.imag();
    const cplx fc = F(z);
    auto sample = [&](double dx, double dy) { return F(cplx(x + dx, y + dy)); };
    auto derivs = [&](double step) {
        const cplx fxp = sample(step, 0.0), fxm = sample(-step, 0.0);
        const cplx fyp = sample(0.0, step), fym = sample(0.0, -step);
        struct D {
            cplx lap, dx, dy;
        };
        return D{(fxp + fxm + fyp + fym - 4.0 * fc) / (step * step),
                 (fxp - fxm) / (2.0 * step), (fyp - fym) / (2.0 * step)};
    };
    const auto d1 = derivs(h);
    const auto d2 = derivs(0.5 * h);
    const cplx lap = (4.0 * d2.lap - d1.lap) / 3.0;
    const cplx fx = (4.0 * d2.dx - d1.dx) / 3.0;
    const cplx fy = (4.0 * d2.dy - d1.dy) / 3.0;

    const double one_m_xi = 1.0 - std::norm(z);
    // z d/dz - z* d/dz* = i (Im z * d/dx - Re z * d/dy)
    const cplx tangential = cplx(0.0, 1.0) * (y * fx - x * fy);
    return -(one_m_xi * one_m_xi * 0.25 * lap + B * one_m_xi * tangential +
             B * B * one_m_xi * fc);
}

cplx kappa_state(const AffinePoint& point, const LandauParams& lp,
                 const OscillatorParams& params, double r) {
    if (!(r > 0.0)) throw std::domain_error("kappa_state: r must be positive");
    if (std::abs(2.0 * lp.B - params.beta() - 2.0 * lp.n) > 1e-12)
        throw std::domain_error("kappa_state: requires 2B = beta + 2n");
    const double bn = lp.B - lp.n;
    const double omega = params.omega;
    const double ln_mag = 0.5 * (ln_gamma(lp.n + 1.0) - ln_gamma(2.0 * lp.B - lp.n)) +
                          bn * std::log(omega) + bn * std::log(point.y * r) -
                          0.5 * omega * point.y * r;
    return std::exp(ln_mag) * std::exp(cplx(0.0, -0.5 * omega * point.x * r)) *
           laguerre(lp.n, 2.0 * bn - 1.0, point.y * omega * r);
}

cplx cs_transform(const std::function<cplx(double)>& phi, const LandauParams& lp,
                  const OscillatorParams& params, const AffinePoint& point) {
    const double omega = params.omega;
    const double c_bn = std::sqrt(2.0 * (lp.B - lp.n) - 1.0);
    // kernel conj(kappa) phi / r ~ r^{2(B-n)-1} poly(r) e^{-omega(1+y)r/2}
    // (times a bounded oscillation); linear substitution onto a matched
    // Gauss-Laguerre rule, validated by node doubling
    const double alpha = 2.0 * (lp.B - lp.n) - 1.0;
    const double scale = 0.5 * omega * (1.0 + point.y);
    // integral kernel(r) dr = (1/scale) sum_i (w_i e^{t_i}) kernel(t_i/scale) t_i^{-alpha},
    // since kernel carries its own t^alpha e^{-t} behavior
    auto eval = [&](int nodes) {
        const GaussLaguerreRule& rule = gauss_laguerre(nodes, alpha);
        cplx acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double t = rule.nodes[i];
            const double r = t / scale;
            const cplx kernel = std::conj(kappa_state(point, lp, params, r)) * phi(r) / r;
            acc += rule.weights_scaled[i] * kernel * std::exp(-alpha * std::log(t)) / scale;
        }
        return acc;
    };
    const cplx i1 = eval(256);
    const cplx i2 = eval(512);
    if (std::abs(i2 - i1) > 1e-10 * std::max(1.0, std::abs(i2)))
        throw accuracy_error("cs_transform: quadrature not stable under node doubling");
    return c_bn * i2;
}

cplx apply_half_plane_operator(const std::function<cplx(double, double)>& F, double B,
                               double x, double y, double h) {
    if (!(y > 0.0)) throw std::domain_error("apply_half_plane_operator: y must be positive");
    const double step = h * std::min(1.0, 0.5 * y);
    const cplx fc = F(x, y);
    auto derivs = [&](double s) {
        const cplx fxp = F(x + s, y), fxm = F(x - s, y);
        const cplx fyp = F(x, y + s), fym = F(x, y - s);
        struct D {
            cplx lap, dx;
        };
        return D{(fxp + fxm + fyp + fym - 4.0 * fc) / (s * s), (fxp - fxm) / (2.0 * s)};
    };
    const auto d1 = derivs(step);
    const auto d2 = derivs(0.5 * step);
    const cplx lap = (4.0 * d2.lap - d1.lap) / 3.0;
    const cplx fx = (4.0 * d2.dx - d1.dx) / 3.0;
    return y * y * lap - cplx(0.0, 2.0 * B) * y * fx;
}

double landau_identity_residual(const LandauParams& lp, int s, const DiscPoint& disc) {
    if (s < 0) throw std::domain_error("landau_identity_residual: s must be nonnegative");
    const int j = lp.n - s;
    const double beta = 2.0 * (lp.B - lp.n);
    const cplx lhs = phi_landau(lp, j, disc.z) / std::sqrt(phi_norm_sq(lp, j));
    const cplx rhs = std::sqrt(2.0 * (lp.B - lp.n) - 1.0) *
                     eta_coefficient_beta(s, lp.n, beta, disc.z);
    return std::abs(lhs - rhs);
}

}  // namespace discosc
