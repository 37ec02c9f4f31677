#pragma once

#include <functional>

#include "discosc/jmatrix.hpp"
#include "discosc/numeric.hpp"

namespace discosc {

/// Physical parameters of the half-line oscillator: angular momentum ell and
/// frequency omega.  beta = ell + 3/2 is derived, never stored.
struct OscillatorParams {
    int ell;
    double omega;

    OscillatorParams(int ell_, double omega_);
    double beta() const { return ell + 1.5; }
};

/// Free positive scale of the oscillator basis.
struct BasisScale {
    double lambda;
    explicit BasisScale(double lambda_);
};

/// Complex relabeling of the basis scale.
struct FrakZ {
    cplx value{0.0};
};

/// Discrete eigenvalue: 2 omega s (ground energy shifted to zero).
double rho_eigenvalue(int s, const OscillatorParams& params);

/// Normalized eigenfunction f_s(r), r > 0 (Dirichlet at the origin).
double eigenfunction_f(int s, const OscillatorParams& params, double r);

/// Orthonormal basis function phi_n^{(lambda)}(r).  Reduces to f_n when
/// lambda^2 = omega.
double basis_phi(int n, const OscillatorParams& params, const BasisScale& scale,
                 double r);

/// Action of the oscillator Hamiltonian
///   H = -(1/2) d^2/dr^2 + ell(ell+1)/(2 r^2) + (1/2) omega^2 r^2 - beta omega
/// on an arbitrary wavefunction, with the second derivative taken by
/// Richardson-extrapolated central differences (step scaled to r and omega).
/// Kept free of any polynomial identities so it can act as an independent
/// oracle for them.
double apply_hamiltonian(const std::function<double(double)>& f,
                         const OscillatorParams& params, double r);

cplx apply_hamiltonian(const std::function<cplx(double)>& f,
                       const OscillatorParams& params, double r);

/// Scale relabeling: frakz = sqrt(beta/2) (lambda - omega/lambda), and the
/// positive-lambda branch of the inverse.
FrakZ frakz_from_scale(const OscillatorParams& params, const BasisScale& scale);
BasisScale scale_from_frakz(const OscillatorParams& params, const FrakZ& frakz);

/// Tridiagonal coefficients of H in the relabeled basis:
///   a_n = 2n (omega + |frakz|^2/beta) + |frakz|^2
///   b_n = frakz sqrt((n+1) (2 omega + |frakz|^2/beta) (n/beta + 1)).
/// The off-diagonal carries the shifted index n+1 (the ladder product
/// c_n d_{n+1}); the quadrature suite pins this convention down.
TridiagonalRep tridiag_coefficients(const OscillatorParams& params, const FrakZ& frakz,
                                    int n_len);

}  // namespace discosc
