#pragma once

#include <vector>

#include "discosc/oscillator.hpp"

namespace discosc {

/// Coherence label in the open unit disc, |z| < 1 strictly.
struct DiscPoint {
    cplx z;

    explicit DiscPoint(cplx z_);
    double xi() const { return std::norm(z); }  // |z|^2
};

/// z = frakz / sqrt(|frakz|^2 + 2 beta omega) and its inverse.
DiscPoint disc_from_frakz(const OscillatorParams& params, const FrakZ& frakz);
FrakZ frakz_from_disc(const OscillatorParams& params, const DiscPoint& disc);

/// Recurrence polynomial of the relabeled tridiagonal representation at the
/// discrete eigenvalue 2 omega m, in closed Meixner form.  Satisfies the
/// operator three-term recurrence (checked against it for real frakz).
/// frakz = 0 yields the limit along real frakz where it exists.
cplx meixner_chain_P(int n, int m, const OscillatorParams& params, const FrakZ& frakz);

/// Discrete orthogonality weight w_m = ((beta)_m / m!) xi^m (1-xi)^beta with
/// xi = |frakz|^2/(|frakz|^2 + 2 beta omega); the squared root-density that
/// makes {sqrt(w_m) P_n(eps_m)} orthonormal over m.
double meixner_weight(int m, const OscillatorParams& params, const FrakZ& frakz);

/// Zernike-form expansion coefficient
///   C_{n,s} = (-1)^n sqrt((beta)_s (beta)_n / (s! n!)) z^{s-n}
///             P_n^{(beta-1, s-n)}(2|z|^2 - 1),
/// evaluated through the disc polynomial so the s < n case stays finite.
cplx coefficient_C(int n, int s, const OscillatorParams& params, const DiscPoint& disc);

/// Normalized expansion coefficient of phi_n over the eigenbasis:
///   eta_{s,n}(z) = (-1)^n sqrt((beta)_s (beta)_n/(s! n!)) (1-|z|^2)^{beta/2}
///                  P_{s,n}^{beta-1}(z, z*).
/// eta_{s,n}(0) = delta_{s,n}; rows and columns of |eta|^2 sum to 1.
cplx eta_coefficient(int s, int n, const OscillatorParams& params,
                     const DiscPoint& disc);

/// Same, parametrized directly by beta (used by the disc Landau chain where
/// beta = 2(B - n) need not come from an integer ell).
cplx eta_coefficient_beta(int s, int n, double beta, cplx z);

/// Expansion coefficient gamma_{n,m} of the eigenfunction f_m over the
/// relabeled basis, f_m = sum_n gamma_{n,m} phi_n: gamma = sqrt(w_m) P_n.
cplx gamma_coefficient(int n, int m, const OscillatorParams& params,
                       const FrakZ& frakz);

/// Rectangular coefficient table (rows n, columns s), identity at z = 0.
struct ExpansionCoefficients {
    int rows = 0, cols = 0;
    std::vector<cplx> values;  // row-major

    cplx at(int n, int s) const { return values[static_cast<std::size_t>(n) * cols + s]; }
};
ExpansionCoefficients eta_matrix(const OscillatorParams& params, const DiscPoint& disc,
                                 int rows, int cols);

/// phi_n^{(z)}(r) summed over the eigenbasis, sum_s conj(eta_{s,n}) f_s(r),
/// truncated once the coefficient tail (geometric in |z|) falls below
/// tail_tol.  Throws truncation_error if the cap is hit first.
cplx phi_series(int n, const OscillatorParams& params, const DiscPoint& disc, double r,
                double tail_tol = 1e-12);

/// Closed form of the same wavefunction:
///   phi_n^{(z)}(r) = sqrt(2 sqrt(omega) n! / ((beta)_n Gamma(beta)))
///     (sqrt(omega) r)^{ell+1} ((1-z)/(1-z*))^n (1-|z|^2)^{beta/2}
///     (1-z*)^{-beta} exp(-omega r^2 (1+z*)/(2(1-z*)))
///     L_n^{(beta-1)}(omega r^2 (1-|z|^2)/|1-z|^2).
/// The sign-alternating Pochhammer pair of the raw derivation is folded
/// into sqrt(n!/(beta)_n) analytically, so nothing is evaluated at negative
/// arguments.
cplx phi_closed_form(int n, const OscillatorParams& params, const DiscPoint& disc,
                     double r);

}  // namespace discosc
