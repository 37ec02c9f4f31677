#include "discosc/oscillator.hpp"

#include <cmath>
#include <stdexcept>

#include "discosc/errors.hpp"
#include "discosc/special.hpp"

namespace discosc {

OscillatorParams::OscillatorParams(int ell_, double omega_) : ell(ell_), omega(omega_) {
    if (ell < 0) throw std::domain_error("OscillatorParams: ell must be nonnegative");
    if (!(omega > 0.0)) throw std::domain_error("OscillatorParams: omega must be positive");
}

BasisScale::BasisScale(double lambda_) : lambda(lambda_) {
    if (!(lambda > 0.0)) throw std::domain_error("BasisScale: lambda must be positive");
}

double rho_eigenvalue(int s, const OscillatorParams& params) {
    if (s < 0) throw std::domain_error("rho_eigenvalue: level must be nonnegative");
    return 2.0 * params.omega * s;
}

double eigenfunction_f(int s, const OscillatorParams& params, double r) {
    return basis_phi(s, params, BasisScale(std::sqrt(params.omega)), r);
}

double basis_phi(int n, const OscillatorParams& params, const BasisScale& scale,
                 double r) {
    if (n < 0) throw std::domain_error("basis_phi: index must be nonnegative");
    if (!(r > 0.0)) throw std::domain_error("basis_phi: r must be positive");
    const double beta = params.beta();
    const double lam = scale.lambda;
    const double u = lam * lam * r * r;
    const double ln_norm =
        0.5 * (std::log(2.0 * lam) + ln_gamma(n + 1.0) - ln_gamma(n + beta));
    const double ln_mag = ln_norm + (params.ell + 1.0) * std::log(lam * r) - 0.5 * u;
    return std::exp(ln_mag) * laguerre(n, params.ell + 0.5, u);
}

namespace {

template <typename Scalar>
Scalar hamiltonian_fd(const std::function<Scalar(double)>& f,
                      const OscillatorParams& params, double r) {
    if (!(r > 1e-8))
        throw step_error("apply_hamiltonian: r below finite-difference step support");
    const double h = 5e-4 * std::min(1.0, 1.0 / std::sqrt(params.omega)) * std::min(1.0, r);
    const Scalar fc = f(r);
    auto second = [&](double step) {
        return (f(r + step) - 2.0 * fc + f(r - step)) / (step * step);
    };
    const Scalar d2_h = second(h);
    const Scalar d2_h2 = second(0.5 * h);
    const Scalar d2 = (4.0 * d2_h2 - d2_h) / 3.0;
    const double beta = params.beta();
    const double potential = params.ell * (params.ell + 1.0) / (2.0 * r * r) +
                             0.5 * params.omega * params.omega * r * r -
                             beta * params.omega;
    return -0.5 * d2 + potential * fc;
}

}  // namespace

double apply_hamiltonian(const std::function<double(double)>& f,
                         const OscillatorParams& params, double r) {
    return hamiltonian_fd<double>(f, params, r);
}

cplx apply_hamiltonian(const std::function<cplx(double)>& f,
                       const OscillatorParams& params, double r) {
    return hamiltonian_fd<cplx>(f, params, r);
}

FrakZ frakz_from_scale(const OscillatorParams& params, const BasisScale& scale) {
    const double lam = scale.lambda;
    return FrakZ{std::sqrt(params.beta() / 2.0) * (lam - params.omega / lam)};
}

BasisScale scale_from_frakz(const OscillatorParams& params, const FrakZ& frakz) {
    if (std::abs(frakz.value.imag()) > 1e-14 * std::max(1.0, std::abs(frakz.value)))
        throw std::domain_error("scale_from_frakz: a positive scale exists only for real frakz");
    // lambda^2 - frakz sqrt(2/beta) lambda - omega = 0, positive root
    const double t = frakz.value.real() * std::sqrt(2.0 / params.beta());
    return BasisScale(0.5 * (t + std::sqrt(t * t + 4.0 * params.omega)));
}

TridiagonalRep tridiag_coefficients(const OscillatorParams& params, const FrakZ& frakz,
                                    int n_len) {
    if (n_len < 1) throw std::domain_error("tridiag_coefficients: need length >= 1");
    const double beta = params.beta();
    const double zz = std::norm(frakz.value);
    const double omega = params.omega;
    TridiagonalRep rep;
    rep.a.resize(n_len);
    rep.b.resize(n_len - 1);
    for (int n = 0; n < n_len; ++n)
        rep.a[n] = 2.0 * n * (omega + zz / beta) + zz;
    for (int n = 0; n + 1 < n_len; ++n)
        rep.b[n] = frakz.value *
                   std::sqrt((n + 1.0) * (2.0 * omega + zz / beta) * (n / beta + 1.0));
    return rep;
}

}  // namespace discosc
