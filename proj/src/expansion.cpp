#include "discosc/expansion.hpp"

#include <cmath>
#include <stdexcept>

#include "discosc/errors.hpp"
#include "discosc/special.hpp"

namespace discosc {

DiscPoint::DiscPoint(cplx z_) : z(z_) {
    if (!(std::norm(z) < 1.0))
        throw std::domain_error("DiscPoint: requires |z| < 1 strictly");
}

DiscPoint disc_from_frakz(const OscillatorParams& params, const FrakZ& frakz) {
    const double d = std::norm(frakz.value) + 2.0 * params.beta() * params.omega;
    return DiscPoint(frakz.value / std::sqrt(d));
}

FrakZ frakz_from_disc(const OscillatorParams& params, const DiscPoint& disc) {
    const double xi = disc.xi();
    return FrakZ{disc.z * std::sqrt(2.0 * params.beta() * params.omega / (1.0 - xi))};
}

cplx meixner_chain_P(int n, int m, const OscillatorParams& params, const FrakZ& frakz) {
    if (n < 0 || m < 0)
        throw std::domain_error("meixner_chain_P: indices must be nonnegative");
    if (n == 0) return 1.0;
    const double beta = params.beta();
    const cplx fz = frakz.value;
    if (fz == cplx(0.0)) {
        // limit along real frakz -> 0: the value scales like xi^{(n-2m)/2}
        if (n > 2 * m) return 0.0;
        throw std::domain_error(
            "meixner_chain_P: no finite frakz = 0 limit for this (n, m); the "
            "weighted coefficient gamma carries the delta limit");
    }
    const double d = std::norm(fz) + 2.0 * beta * params.omega;
    const double xi = std::norm(fz) / d;
    // closed form with the recurrence-consistent (hypergeometric) Meixner
    // normalization; the double-binomial sum carries an extra (beta)_n/n!
    const double pref = std::sqrt(std::tgamma(n + 1.0) / pochhammer(beta, n));
    const cplx phase_pow = ipow(std::conj(fz) / std::sqrt(d), n);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * pref * phase_pow * meixner(n, m, beta, xi);
}

double meixner_weight(int m, const OscillatorParams& params, const FrakZ& frakz) {
    if (m < 0) throw std::domain_error("meixner_weight: m must be nonnegative");
    const double beta = params.beta();
    const double d = std::norm(frakz.value) + 2.0 * beta * params.omega;
    const double xi = std::norm(frakz.value) / d;
    return pochhammer(beta, m) / std::tgamma(m + 1.0) * ipow(xi, m) *
           std::pow(1.0 - xi, beta);
}

namespace {

// (-1)^n sqrt((beta)_s (beta)_n / (s! n!)) P_{s,n}^{beta-1}(z, z*)
cplx scaled_disc_poly(int s, int n, double beta, cplx z) {
    const double ln_pref = 0.5 * (ln_gamma(s + beta) + ln_gamma(n + beta) -
                                  2.0 * ln_gamma(beta) - ln_gamma(s + 1.0) -
                                  ln_gamma(n + 1.0));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(ln_pref) * zernike(s, n, beta - 1.0, z, ZernikePath::jacobi);
}

}  // namespace

cplx coefficient_C(int n, int s, const OscillatorParams& params, const DiscPoint& disc) {
    if (n < 0 || s < 0)
        throw std::domain_error("coefficient_C: indices must be nonnegative");
    const double beta = params.beta();
    return pochhammer(beta, n) / std::tgamma(n + 1.0) *
           scaled_disc_poly(s, n, beta, disc.z);
}

cplx eta_coefficient_beta(int s, int n, double beta, cplx z) {
    if (n < 0 || s < 0)
        throw std::domain_error("eta_coefficient: indices must be nonnegative");
    const double xi = std::norm(z);
    return std::pow(1.0 - xi, 0.5 * beta) * scaled_disc_poly(s, n, beta, z);
}

cplx eta_coefficient(int s, int n, const OscillatorParams& params,
                     const DiscPoint& disc) {
    return eta_coefficient_beta(s, n, params.beta(), disc.z);
}

cplx gamma_coefficient(int n, int m, const OscillatorParams& params,
                       const FrakZ& frakz) {
    if (frakz.value == cplx(0.0)) return (n == m) ? 1.0 : 0.0;
    return std::sqrt(meixner_weight(m, params, frakz)) *
           meixner_chain_P(n, m, params, frakz);
}

ExpansionCoefficients eta_matrix(const OscillatorParams& params, const DiscPoint& disc,
                                 int rows, int cols) {
    ExpansionCoefficients mat;
    mat.rows = rows;
    mat.cols = cols;
    mat.values.resize(static_cast<std::size_t>(rows) * cols);
    for (int n = 0; n < rows; ++n)
        for (int s = 0; s < cols; ++s)
            mat.values[static_cast<std::size_t>(n) * cols + s] =
                eta_coefficient(s, n, params, disc);
    return mat;
}

cplx phi_series(int n, const OscillatorParams& params, const DiscPoint& disc, double r,
                double tail_tol) {
    if (!(r > 0.0)) throw std::domain_error("phi_series: r must be positive");
    const double beta = params.beta();
    const double az = std::abs(disc.z);
    const double cutoff = tail_tol / 10.0;

    // spec'd geometric floor for the truncation index
    int s_min = n;
    {
        double bound = 1.0;  // sqrt((beta)_s / s!) |z|^s at s = 0
        int s = 0;
        while (bound >= cutoff && s < 600) {
            ++s;
            bound *= std::sqrt((beta + s - 1.0) / s) * az;
        }
        s_min = std::max(s_min, s);
    }

    constexpr int cap = 600;
    constexpr int quiet_needed = 5;
    cplx acc = 0.0;
    int quiet = 0;
    for (int s = 0; s < cap; ++s) {
        const cplx coef = std::conj(eta_coefficient(s, n, params, disc));
        const double fs = eigenfunction_f(s, params, r);
        acc += coef * fs;
        if (s >= s_min && std::abs(coef) * std::max(std::abs(fs), 1.0) < cutoff) {
            if (++quiet >= quiet_needed) return acc;
        } else {
            quiet = 0;
        }
    }
    throw truncation_error("phi_series: tail bound not reached within term cap");
}

cplx phi_closed_form(int n, const OscillatorParams& params, const DiscPoint& disc,
                     double r) {
    if (!(r > 0.0)) throw std::domain_error("phi_closed_form: r must be positive");
    const double beta = params.beta();
    const double omega = params.omega;
    const cplx z = disc.z;
    const cplx zb = std::conj(z);
    const double xi = disc.xi();
    const cplx one_m_zb = 1.0 - zb;
    const double ln_pref = 0.5 * (std::log(2.0) + 0.5 * std::log(omega) +
                                  ln_gamma(n + 1.0) - ln_gamma(n + beta));
    const double lag_arg = omega * r * r * (1.0 - xi) / std::norm(1.0 - z);
    return std::exp(ln_pref + (params.ell + 1.0) * std::log(std::sqrt(omega) * r)) *
           ipow((1.0 - z) / one_m_zb, n) * std::pow(1.0 - xi, 0.5 * beta) *
           std::pow(one_m_zb, -beta) *
           std::exp(-0.5 * omega * r * r * (1.0 + zb) / one_m_zb) *
           laguerre(n, beta - 1.0, lag_arg);
}

}  // namespace discosc
