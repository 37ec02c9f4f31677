#pragma once

#include <functional>

#include "discosc/expansion.hpp"
#include "discosc/oscillator.hpp"

namespace discosc {

/// Point of the ax+b group R x R_+ with law (x,y)(x',y') = (x + y x', y y').
struct AffinePoint {
    double x;
    double y;

    AffinePoint(double x_, double y_);
};

AffinePoint affine_compose(const AffinePoint& g1, const AffinePoint& g2);

/// Unitary action on the half-line,
///   (T(x,y) phi)(r) = y^{1/4} exp(-i x omega r^2 / 2) phi(sqrt(y) r).
cplx affine_action(const AffinePoint& point, const std::function<cplx(double)>& phi,
                   double omega, double r);

/// Coherent-state wavefunction obtained by displacing the level-n
/// eigenfunction, in closed form (equals affine_action applied to f_n).
cplx cs_group(const AffinePoint& point, const OscillatorParams& params, int n,
              double r);

/// Mobius bijection between the upper half-plane and the disc:
/// forward w -> (w - i)/(w + i), inverse
/// z -> (-2 Im z / |1-z|^2, (1-|z|^2)/|1-z|^2).
AffinePoint inverse_cayley(const DiscPoint& disc);
cplx forward_cayley(const AffinePoint& point);

/// Disc-labeled coherent state: ((1-z)/(1-z*))^{beta/2} times the group
/// state at the inverse Cayley image.  Differs from phi_closed_form by an
/// r-independent unit-modulus phase.
cplx cs_disc(const DiscPoint& disc, const OscillatorParams& params, int n, double r);

/// Admissibility constant of the representation with fiducial vector f_n,
/// by half-line quadrature of 2 pi |f_n(r)|^2 r^{-2}.  Independent of n.
double admissibility_constant(const OscillatorParams& params, int n);

/// Closed form 2 pi omega / (ell + 1/2).
double admissibility_closed_form(const OscillatorParams& params);

}  // namespace discosc
