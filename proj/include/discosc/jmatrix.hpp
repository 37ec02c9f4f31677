#pragma once

#include <vector>

#include "discosc/numeric.hpp"

namespace discosc {

/// Hermitian tridiagonal operator data: real diagonal a_n and complex
/// off-diagonal b_n (entry (n, n+1); the (n+1, n) entry is conj(b_n)).
struct TridiagonalRep {
    std::vector<double> a;  // length N
    std::vector<cplx> b;    // length N-1

    int length() const { return static_cast<int>(a.size()); }
};

/// Values p_0..p_N of the recurrence polynomials of a tridiagonal operator
/// at a fixed energy, p_0 = 1.  The weight symbols (|f_0(E)|^2 and discrete
/// weights) are metadata slots filled by the operator instance that owns the
/// spectral measure.
struct RecurrencePolynomialTable {
    double energy = 0.0;
    std::vector<cplx> p;                    // p[0] == 1
    double weight_symbol = 0.0;             // |f_0(E)|^2 when known
    std::vector<double> discrete_weights;   // discrete spectral weights when known
};

/// Forward/backward-shift factorization coefficients of H = A^dag A:
/// A phi_n = c_n phi_n + d_n phi_{n-1}, with d_0 = 0.
struct LadderCoefficients {
    std::vector<cplx> c;  // length N (last entry completed from the diagonal)
    std::vector<cplx> d;  // length N, d[0] = 0
};

/// p_0 = 1, p_1 = (E - a_0)/b_0, then the three-term recursion
///   E p_n = b_{n-1} p_{n-1} + a_n p_n + b_n p_{n+1}
/// solved forward for p_{n+1}, n+1 <= N.  Throws irreducibility_error on a
/// vanishing off-diagonal entry.
RecurrencePolynomialTable recurrence_polynomials(const TridiagonalRep& rep,
                                                 double energy, int n_max);

/// Ladder factorization from the recurrence polynomials at zero energy:
///   |c_n|^2 = -b_n p_{n+1}(0)/p_n(0),  |d_{n+1}|^2 = -b_n p_n(0)/p_{n+1}(0),
/// phases fixed so that c_n carries the phase of b_n and d_n is real
/// nonnegative (then b_n = c_n conj(d_{n+1}) holds).  Throws
/// factorization_error if a squared modulus comes out negative or a
/// polynomial value vanishes.
LadderCoefficients ladder_factorize(const TridiagonalRep& rep,
                                    const RecurrencePolynomialTable& p_at_zero);

/// Rebuild (a_n, b_n) from ladder coefficients: a_n = |c_n|^2 + |d_n|^2,
/// b_n = c_n conj(d_{n+1}).
TridiagonalRep reconstruct(const LadderCoefficients& ladder);

}  // namespace discosc
