#pragma once

#include <vector>

#include "discosc/numeric.hpp"

namespace discosc {

/// Generalized Laguerre polynomial L_n^{(alpha)}(x), alpha > -1, by forward
/// three-term recurrence in the degree.
double laguerre(int n, double alpha, double x);

/// Jacobi polynomial P_n^{(a,b)}(x) by forward three-term recurrence.  The
/// parameters are not restricted to the orthogonality range a, b > -1; if a
/// recurrence denominator degenerates (a+b a negative integer in range) the
/// evaluation falls back to the terminating hypergeometric sum.
double jacobi_poly(int n, double a, double b, double x);

/// Meixner polynomial in the double-binomial form
///   M_n(x, tau; c) = (-1)^n sum_k C(x,k) C(-x-tau, n-k) c^{-k},
/// computed exactly as the finite sum.  Binomials with real upper argument
/// are falling factorials over k!.  Requires 0 < c < 1.
///
/// Note this normalization carries an extra (tau)_n / n! against the
/// standard hypergeometric Meixner polynomial; see meixner_standard.
double meixner(int n, double x, double tau, double c);

/// Standard (hypergeometric) Meixner polynomial
///   M_n(x; tau, c) = 2F1(-n, -x; tau; 1 - 1/c) = n!/(tau)_n * meixner(...).
/// This is the normalization that satisfies the classical three-term
/// recurrence with M_0 = 1.
double meixner_standard(int n, double x, double tau, double c);

enum class ZernikePath { jacobi, series };

/// Disc (generalized Zernike) polynomial P_{s,n}^{alpha}(z, z*), alpha > -1,
/// |z| <= 1.  Two independent evaluation routes:
///  - jacobi: single Jacobi polynomial times a power of z (the conjugate
///    representation is used for s < n so only nonnegative powers appear);
///  - series: the explicit double-index finite sum.
cplx zernike(int s, int n, double alpha, cplx z, ZernikePath path);

enum class HypKind { f11, f21 };

/// Terminating hypergeometric series 1F1(a; b; x) or 2F1(a1, a2; b; x).
/// At least one numerator parameter must be a nonpositive integer.  Throws
/// pole_error if the denominator parameter hits a nonpositive integer before
/// the series terminates.
cplx hyp_terminating(HypKind kind, const std::vector<double>& numerators,
                     double denominator, cplx x);

/// Capped hypergeometric sum for non-terminating parameter sets: terms are
/// accumulated by ratio recursion until the running tail estimate drops
/// below tail_tol relative to the partial sum, or term_cap is exhausted
/// (truncation_error).
cplx hyp_capped(HypKind kind, const std::vector<double>& numerators,
                double denominator, cplx x, double tail_tol = 1e-16,
                int term_cap = 600);

}  // namespace discosc
