#include "discosc/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "discosc/errors.hpp"

namespace discosc {

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Terminating hypergeometric form of the Jacobi polynomial,
//   P_n^{(a,b)}(x) = ((a+1)_n / n!) 2F1(-n, n+a+b+1; a+1; (1-x)/2).
// Valid for any b; needs a+1 off the nonpositive integers.
double jacobi_hyp(int n, double a, double b, double x) {
    if (is_nonpositive_integer(a + 1.0))
        throw std::domain_error("jacobi_poly: parameter a+1 is a nonpositive integer");
    const double w = 0.5 * (1.0 - x);
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (-n + k) * (n + a + b + 1.0 + k) / ((a + 1.0 + k) * (k + 1.0)) * w;
        sum += term;
    }
    return pochhammer(a + 1.0, n) / std::tgamma(n + 1.0) * sum;
}

}  // namespace

double laguerre(int n, double alpha, double x) {
    if (n < 0) throw std::domain_error("laguerre: degree must be nonnegative");
    if (alpha <= -1.0) throw std::domain_error("laguerre: requires alpha > -1");
    if (n == 0) return 1.0;
    double lm = 1.0;
    double l = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double lp = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm) / (k + 1.0);
        lm = l;
        l = lp;
    }
    return l;
}

double jacobi_poly(int n, double a, double b, double x) {
    if (n < 0) throw std::domain_error("jacobi_poly: degree must be nonnegative");
    if (n == 0) return 1.0;
    double pm = 1.0;
    double p = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    for (int m = 2; m <= n; ++m) {
        const double den = 2.0 * m * (m + a + b) * (2.0 * m + a + b - 2.0);
        if (std::abs(den) < 1e-12) return jacobi_hyp(n, a, b, x);
        const double c1 = (2.0 * m + a + b - 1.0) *
                          ((2.0 * m + a + b) * (2.0 * m + a + b - 2.0) * x + a * a - b * b);
        const double c2 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * (2.0 * m + a + b);
        const double pp = (c1 * p - c2 * pm) / den;
        pm = p;
        p = pp;
    }
    return p;
}

double meixner(int n, double x, double tau, double c) {
    if (n < 0) throw std::domain_error("meixner: degree must be nonnegative");
    if (!(c > 0.0 && c < 1.0))
        throw std::domain_error("meixner: requires 0 < c < 1");
    double sum = 0.0;
    double cinv_pow = 1.0;  // c^{-k}
    for (int k = 0; k <= n; ++k) {
        sum += binomial_real(x, k) * binomial_real(-x - tau, n - k) * cinv_pow;
        cinv_pow /= c;
    }
    return (n % 2 == 0 ? sum : -sum);
}

double meixner_standard(int n, double x, double tau, double c) {
    return std::tgamma(n + 1.0) / pochhammer(tau, n) * meixner(n, x, tau, c);
}

cplx zernike(int s, int n, double alpha, cplx z, ZernikePath path) {
    if (s < 0 || n < 0) throw std::domain_error("zernike: degrees must be nonnegative");
    if (alpha <= -1.0) throw std::domain_error("zernike: requires alpha > -1");
    const double xi = std::norm(z);
    if (xi > 1.0 + 1e-14) throw std::domain_error("zernike: requires |z| <= 1");

    if (path == ZernikePath::series) {
        // sum_{k=0}^{s^n} (-1)^k s! n! G(a+1) / (k!(s-k)!(n-k)! G(k+a+1))
        //                 (1-|z|^2)^k z^{s-k} (z*)^{n-k}
        const cplx zb = std::conj(z);
        cplx sum = 0.0;
        const int kmax = std::min(s, n);
        for (int k = 0; k <= kmax; ++k) {
            double coef = binomial_real(s, k) * binomial_real(n, k) *
                          std::tgamma(k + 1.0) / pochhammer(alpha + 1.0, k);
            if (k % 2 != 0) coef = -coef;
            sum += coef * ipow(1.0 - xi, k) * ipow(z, s - k) * ipow(zb, n - k);
        }
        return sum;
    }

    // Jacobi route; pick the representation with a nonnegative power so the
    // value stays finite at z = 0.
    if (s >= n) {
        const double pref = std::exp(ln_gamma(n + 1.0) + ln_gamma(alpha + 1.0) -
                                     ln_gamma(n + alpha + 1.0));
        return pref * ipow(z, s - n) * jacobi_poly(n, alpha, s - n, 2.0 * xi - 1.0);
    }
    const double pref = std::exp(ln_gamma(s + 1.0) + ln_gamma(alpha + 1.0) -
                                 ln_gamma(s + alpha + 1.0));
    return pref * ipow(std::conj(z), n - s) * jacobi_poly(s, alpha, n - s, 2.0 * xi - 1.0);
}

cplx hyp_terminating(HypKind kind, const std::vector<double>& numerators,
                     double denominator, cplx x) {
    const std::size_t want = (kind == HypKind::f11) ? 1 : 2;
    if (numerators.size() != want)
        throw std::domain_error("hyp_terminating: wrong numerator count for kind");

    int nterm = -1;
    for (double a : numerators) {
        if (is_nonpositive_integer(a)) {
            const int t = static_cast<int>(-a);
            if (nterm < 0 || t < nterm) nterm = t;
        }
    }
    if (nterm < 0)
        throw std::domain_error("hyp_terminating: no nonpositive-integer numerator; series does not terminate");

    cplx term = 1.0, sum = 1.0;
    for (int k = 0; k < nterm; ++k) {
        const double den = denominator + k;
        if (den == 0.0)
            throw pole_error("hyp_terminating: denominator parameter pole before termination");
        cplx ratio = (numerators[0] + k) / (den * (k + 1.0)) * x;
        if (kind == HypKind::f21) ratio *= numerators[1] + k;
        term *= ratio;
        sum += term;
    }
    return sum;
}

cplx hyp_capped(HypKind kind, const std::vector<double>& numerators,
                double denominator, cplx x, double tail_tol, int term_cap) {
    const std::size_t want = (kind == HypKind::f11) ? 1 : 2;
    if (numerators.size() != want)
        throw std::domain_error("hyp_capped: wrong numerator count for kind");

    cplx term = 1.0, sum = 1.0;
    int small_run = 0;
    for (int k = 0; k < term_cap; ++k) {
        const double den = denominator + k;
        if (den == 0.0)
            throw pole_error("hyp_capped: denominator parameter pole");
        cplx ratio = (numerators[0] + k) / (den * (k + 1.0)) * x;
        if (kind == HypKind::f21) ratio *= numerators[1] + k;
        if (ratio == cplx(0.0)) return sum;  // terminated
        term *= ratio;
        sum += term;
        // demand a run of small terms: the 1F1 terms first grow near k ~ |x|
        if (std::abs(term) <= tail_tol * std::max(1.0, std::abs(sum)) &&
            std::abs(ratio) < 0.9) {
            if (++small_run >= 3) return sum;
        } else {
            small_run = 0;
        }
    }
    throw truncation_error("hyp_capped: tail bound not reached within term cap");
}

}  // namespace discosc
