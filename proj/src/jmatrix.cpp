#include "discosc/jmatrix.hpp"

#include <cmath>
#include <stdexcept>

#include "discosc/errors.hpp"

namespace discosc {

RecurrencePolynomialTable recurrence_polynomials(const TridiagonalRep& rep,
                                                 double energy, int n_max) {
    if (n_max < 0) throw std::domain_error("recurrence_polynomials: n_max must be >= 0");
    if (n_max > rep.length())
        throw std::domain_error("recurrence_polynomials: n_max exceeds representation length");

    RecurrencePolynomialTable table;
    table.energy = energy;
    table.p.resize(n_max + 1);
    table.p[0] = 1.0;
    if (n_max == 0) return table;

    if (rep.b.empty() || rep.b[0] == cplx(0.0))
        throw irreducibility_error("recurrence_polynomials: b_0 vanishes");
    table.p[1] = (energy - rep.a[0]) / rep.b[0];

    for (int n = 1; n < n_max; ++n) {
        if (static_cast<std::size_t>(n) >= rep.b.size() || rep.b[n] == cplx(0.0))
            throw irreducibility_error("recurrence_polynomials: off-diagonal entry vanishes");
        table.p[n + 1] =
            ((energy - rep.a[n]) * table.p[n] - rep.b[n - 1] * table.p[n - 1]) / rep.b[n];
    }
    return table;
}

LadderCoefficients ladder_factorize(const TridiagonalRep& rep,
                                    const RecurrencePolynomialTable& p0) {
    const int n_rep = rep.length();
    if (static_cast<int>(p0.p.size()) < n_rep)
        throw std::domain_error("ladder_factorize: polynomial table too short");

    LadderCoefficients ladder;
    ladder.c.assign(n_rep, 0.0);
    ladder.d.assign(n_rep, 0.0);

    auto real_nonneg = [](cplx q, const char* what) {
        const double mag = std::abs(q);
        if (mag > 0.0 && std::abs(q.imag()) > 1e-10 * mag)
            throw factorization_error(std::string(what) + ": value not real");
        if (q.real() < -1e-12 * std::max(mag, 1.0))
            throw factorization_error(std::string(what) +
                                      ": negative squared modulus (not positive semi-definite)");
        return std::max(q.real(), 0.0);
    };

    for (int n = 0; n + 1 < n_rep; ++n) {
        if (p0.p[n] == cplx(0.0) || p0.p[n + 1] == cplx(0.0))
            throw factorization_error("ladder_factorize: recurrence polynomial vanishes at zero energy");
        const cplx b = rep.b[n];
        const double c_sq = real_nonneg(-b * p0.p[n + 1] / p0.p[n], "ladder_factorize c_n");
        const double d_sq = real_nonneg(-b * p0.p[n] / p0.p[n + 1], "ladder_factorize d_n+1");
        const double phase = std::arg(b);
        ladder.c[n] = std::polar(std::sqrt(c_sq), phase);
        ladder.d[n + 1] = std::sqrt(d_sq);
    }

    // last column has no off-diagonal partner; complete it from the diagonal
    if (n_rep >= 1) {
        const int n = n_rep - 1;
        const double c_sq = rep.a[n] - std::norm(ladder.d[n]);
        if (c_sq < -1e-12 * std::max(std::abs(rep.a[n]), 1.0))
            throw factorization_error("ladder_factorize: trailing diagonal not factorizable");
        const double phase = n_rep >= 2 ? std::arg(rep.b[n - 1]) : 0.0;
        ladder.c[n] = std::polar(std::sqrt(std::max(c_sq, 0.0)), phase);
    }
    return ladder;
}

TridiagonalRep reconstruct(const LadderCoefficients& ladder) {
    const int n_rep = static_cast<int>(ladder.c.size());
    TridiagonalRep rep;
    rep.a.resize(n_rep);
    rep.b.resize(n_rep > 0 ? n_rep - 1 : 0);
    for (int n = 0; n < n_rep; ++n)
        rep.a[n] = std::norm(ladder.c[n]) + std::norm(ladder.d[n]);
    for (int n = 0; n + 1 < n_rep; ++n)
        rep.b[n] = ladder.c[n] * std::conj(ladder.d[n + 1]);
    return rep;
}

}  // namespace discosc
