#pragma once

#include <functional>
#include <vector>

#include "discosc/numeric.hpp"

namespace discosc {

/// Eigenvalues of a symmetric tridiagonal matrix (QL with implicit shifts),
/// ascending.  diag has n entries, offdiag n-1.
std::vector<double> tridiag_eigenvalues(std::vector<double> diag,
                                        std::vector<double> offdiag);

/// Generalized Gauss-Laguerre rule for the weight t^alpha e^{-t} on (0,inf).
/// Nodes are ascending; weights are returned e^{t}-scaled (w_i * e^{t_i}) so
/// the rule applies directly to integrands written with their own decay:
///   integral t^alpha g(t) dt  ~=  sum_i w_scaled_i * t_i^{-...} ... i.e.
///   integral h(t) t^alpha e^{-t} dt = sum_i (w_scaled_i e^{-t_i}) h(t_i).
/// The scaling avoids underflow of the raw weights at large node counts.
struct GaussLaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights_scaled;  // w_i * e^{t_i}
};
const GaussLaguerreRule& gauss_laguerre(int n, double alpha);

/// Gauss-Jacobi rule on (0,1) for the weight (1-x)^a x^b.
struct GaussJacobiRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussJacobiRule& gauss_jacobi01(int n, double a, double b);

/// Half-line rule specialized to integrands with Gaussian decay
/// e^{-decay_scale * r^2} (times algebraic growth): the substitution
/// t = decay_scale * r^2 maps onto a Gauss-Laguerre rule with exponent -1/2.
struct HalfLineRule {
    std::vector<double> nodes;    // r_i, strictly increasing, positive
    std::vector<double> weights;  // positive; integral f ~= sum w_i f(r_i)
    double decay_scale;

    static HalfLineRule build(double decay_scale, int n);
};

/// Integral of f over (0, inf) for integrands decaying like
/// e^{-decay_scale r^2}.  The node count starts from degree_hint and the
/// result must be stable to 1e-12 relative under node doubling, otherwise
/// an accuracy_error is thrown.
cplx integrate_halfline(const std::function<cplx(double)>& f, double decay_scale,
                        int degree_hint = 40);

/// Tensor polar rule on the unit disc: trapezoid in the angle (exact for
/// trigonometric polynomials below the node count), Gauss-Jacobi in
/// xi = |z|^2 carrying the boundary weight.
struct DiscRule {
    std::vector<double> xi_nodes;    // on (0,1)
    std::vector<double> xi_weights;
    int angular_count;
    double rule_exponent;  // (1-xi)^rule_exponent carried by the radial rule
    double fold_exponent;  // remaining (1-xi)^fold_exponent applied to f

    static DiscRule build(double weight_exponent, int n_radial, int n_angular);
};

/// integral over D of f(z) (1-|z|^2)^{weight_exponent} dnu(z)/pi, where dnu
/// is the Lebesgue measure (so the constant 1 with exponent 0 integrates
/// to 1).  For weight_exponent <= -1 the integrand must vanish fast enough
/// at the boundary; a non-convergent (divergent) combination surfaces as an
/// accuracy_error from the node-doubling check.
cplx integrate_disc(const std::function<cplx(cplx)>& f, double weight_exponent);

}  // namespace discosc
