#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace discosc {

using cplx = std::complex<double>;

// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1), exact product form.
inline double pochhammer(double a, int n) {
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= a + k;
    return r;
}

// Binomial coefficient with real upper argument, as a falling factorial
// over k!.  Continuous in x and exact at negative integers (no gamma poles).
inline double binomial_real(double x, int k) {
    double num = 1.0;
    for (int i = 0; i < k; ++i) num *= x - i;
    double den = 1.0;
    for (int i = 2; i <= k; ++i) den *= i;
    return num / den;
}

// Integer power of a complex number by repeated multiplication; keeps exact
// signs for negative real bases (std::pow would go through the principal
// branch).  Requires k >= 0.
inline cplx ipow(cplx z, int k) {
    cplx r = 1.0;
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

inline double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

// ln Gamma(x), x > 0.
inline double ln_gamma(double x) { return std::lgamma(x); }

// Deterministic 64-bit generator (splitmix64).  Used for seeded sample
// points in the verification suites; identical output on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace discosc
