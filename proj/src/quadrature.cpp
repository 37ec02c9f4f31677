#include "discosc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

#include "discosc/errors.hpp"

namespace discosc {

std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    if (static_cast<int>(e.size()) != n - 1 && n > 0 && !e.empty())
        e.resize(n - 1);
    e.push_back(0.0);
    const double eps = std::numeric_limits<double>::epsilon();

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw std::runtime_error("tridiag_eigenvalues: too many QL iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

std::int64_t key_bits(double x) {
    std::int64_t k;
    std::memcpy(&k, &x, sizeof k);
    return k;
}

// Orthonormal-recurrence evaluation of the weight-scaled Laguerre sequence
// q_k(t) = p_k(t) t^{alpha/2} e^{-t/2} together with u_k = p_k'(t) * sqrt(W).
// The scaling keeps every intermediate in normal double range for node
// counts into the thousands.
struct LaguerreEval {
    double q_n, u_n, sum_q2;  // sum over k = 0..n-1 of q_k^2
};

LaguerreEval laguerre_scaled_eval(int n, double alpha, double t) {
    const double ln_q0 = 0.5 * (alpha * std::log(t) - t - std::lgamma(alpha + 1.0));
    double qm = 0.0, q = std::exp(ln_q0);
    double um = 0.0, u = 0.0;
    double sum = q * q;
    for (int k = 0; k < n; ++k) {
        const double a_k = 2.0 * k + alpha + 1.0;
        const double b_k = (k == 0) ? 0.0 : std::sqrt(k * (k + alpha));
        const double b_k1 = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
        const double qp = ((t - a_k) * q - b_k * qm) / b_k1;
        const double up = ((t - a_k) * u + q - b_k * um) / b_k1;
        qm = q;
        q = qp;
        um = u;
        u = up;
        if (k + 1 < n) sum += q * q;
    }
    return {q, u, sum};
}

GaussLaguerreRule build_gauss_laguerre(int n, double alpha) {
    if (n < 1) throw std::domain_error("gauss_laguerre: need n >= 1");
    if (alpha <= -1.0) throw std::domain_error("gauss_laguerre: requires alpha > -1");

    std::vector<double> d(n), e(n - 1);
    for (int k = 0; k < n; ++k) d[k] = 2.0 * k + alpha + 1.0;
    for (int k = 0; k + 1 < n; ++k) e[k] = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
    std::vector<double> t = tridiag_eigenvalues(d, e);

    GaussLaguerreRule rule;
    rule.nodes.resize(n);
    rule.weights_scaled.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = t[i];
        for (int it = 0; it < 100; ++it) {
            const LaguerreEval ev = laguerre_scaled_eval(n, alpha, x);
            if (ev.u_n == 0.0) break;
            const double delta = ev.q_n / ev.u_n;
            x -= delta;
            if (x <= 0.0) x = 0.5 * (x + delta);  // keep inside the domain
            if (std::abs(delta) <= 1e-15 * std::max(1.0, std::abs(x))) break;
        }
        const LaguerreEval ev = laguerre_scaled_eval(n, alpha, x);
        rule.nodes[i] = x;
        // w_i e^{t_i} = t_i^alpha / sum_k q_k(t_i)^2
        rule.weights_scaled[i] = std::exp(alpha * std::log(x)) / ev.sum_q2;
    }
    return rule;
}

struct JacobiEval {
    double p_n, dp_n, sum_p2;
};

// Orthonormal Jacobi polynomials for the weight (1-x)^a (1+x)^b on [-1,1].
JacobiEval jacobi_ortho_eval(int n, double a, double b, double mu0, double x,
                             const std::vector<double>& alpha_coef,
                             const std::vector<double>& sqrt_beta) {
    double pm = 0.0, p = 1.0 / std::sqrt(mu0);
    double dpm = 0.0, dp = 0.0;
    double sum = p * p;
    for (int k = 0; k < n; ++k) {
        const double bk = (k == 0) ? 0.0 : sqrt_beta[k];
        const double bk1 = sqrt_beta[k + 1];
        const double pp = ((x - alpha_coef[k]) * p - bk * pm) / bk1;
        const double dpp = ((x - alpha_coef[k]) * dp + p - bk * dpm) / bk1;
        pm = p;
        p = pp;
        dpm = dp;
        dp = dpp;
        if (k + 1 < n) sum += p * p;
    }
    return {p, dp, sum};
}

GaussJacobiRule build_gauss_jacobi01(int n, double a, double b) {
    if (n < 1) throw std::domain_error("gauss_jacobi01: need n >= 1");
    if (a <= -1.0 || b <= -1.0)
        throw std::domain_error("gauss_jacobi01: requires a, b > -1");

    // monic recurrence coefficients for (1-x)^a (1+x)^b on [-1,1]
    const double mu0 = std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                                std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
    std::vector<double> al(n + 1), be(n + 1);
    al[0] = (b - a) / (a + b + 2.0);
    be[0] = mu0;
    for (int k = 1; k <= n; ++k) {
        const double s = 2.0 * k + a + b;
        al[k] = (b * b - a * a) / (s * (s + 2.0));
        if (k == 1)
            be[k] = 4.0 * (a + 1.0) * (b + 1.0) /
                    ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
        else
            be[k] = 4.0 * k * (k + a) * (k + b) * (k + a + b) /
                    (s * s * (s + 1.0) * (s - 1.0));
    }
    std::vector<double> sqrt_beta(n + 1);
    sqrt_beta[0] = 0.0;
    for (int k = 1; k <= n; ++k) sqrt_beta[k] = std::sqrt(be[k]);

    std::vector<double> d(al.begin(), al.begin() + n);
    std::vector<double> e(sqrt_beta.begin() + 1, sqrt_beta.begin() + n);
    std::vector<double> x = tridiag_eigenvalues(d, e);

    GaussJacobiRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double map_scale = std::exp(-(a + b + 1.0) * std::log(2.0));
    for (int i = 0; i < n; ++i) {
        double xi = x[i];
        for (int it = 0; it < 100; ++it) {
            const JacobiEval ev = jacobi_ortho_eval(n, a, b, mu0, xi, al, sqrt_beta);
            if (ev.dp_n == 0.0) break;
            const double delta = ev.p_n / ev.dp_n;
            xi -= delta;
            if (std::abs(delta) <= 1e-15) break;
        }
        const JacobiEval ev = jacobi_ortho_eval(n, a, b, mu0, xi, al, sqrt_beta);
        rule.nodes[i] = 0.5 * (1.0 + xi);
        rule.weights[i] = map_scale / ev.sum_p2;
    }
    return rule;
}

std::mutex g_cache_mutex;

}  // namespace

const GaussLaguerreRule& gauss_laguerre(int n, double alpha) {
    static std::map<std::pair<int, std::int64_t>, GaussLaguerreRule> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto key = std::make_pair(n, key_bits(alpha));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_gauss_laguerre(n, alpha)).first;
    return it->second;
}

const GaussJacobiRule& gauss_jacobi01(int n, double a, double b) {
    static std::map<std::tuple<int, std::int64_t, std::int64_t>, GaussJacobiRule> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto key = std::make_tuple(n, key_bits(a), key_bits(b));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_gauss_jacobi01(n, a, b)).first;
    return it->second;
}

HalfLineRule HalfLineRule::build(double decay_scale, int n) {
    if (decay_scale <= 0.0)
        throw std::domain_error("HalfLineRule: decay_scale must be positive");
    const GaussLaguerreRule& gl = gauss_laguerre(n, -0.5);
    HalfLineRule rule;
    rule.decay_scale = decay_scale;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double jac = 0.5 / std::sqrt(decay_scale);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = std::sqrt(gl.nodes[i] / decay_scale);
        rule.weights[i] = jac * gl.weights_scaled[i];
    }
    return rule;
}

namespace {

cplx halfline_sum(const HalfLineRule& rule, const std::function<cplx(double)>& f,
                  double* l1_out) {
    cplx acc = 0.0;
    double l1 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const cplx v = rule.weights[i] * f(rule.nodes[i]);
        acc += v;
        l1 += std::abs(v);
    }
    if (l1_out) *l1_out = l1;
    return acc;
}

}  // namespace

cplx integrate_halfline(const std::function<cplx(double)>& f, double decay_scale,
                        int degree_hint) {
    int n = 128;
    while (2 * n - 1 < degree_hint) n *= 2;
    const HalfLineRule coarse = HalfLineRule::build(decay_scale, n);
    const HalfLineRule fine = HalfLineRule::build(decay_scale, 2 * n);
    double l1 = 0.0;
    const cplx i1 = halfline_sum(coarse, f, nullptr);
    const cplx i2 = halfline_sum(fine, f, &l1);
    const double scale = std::max(std::abs(i2), 1e-2 * l1);
    if (std::abs(i2 - i1) > 1e-12 * scale)
        throw accuracy_error("integrate_halfline: not stable under node doubling");
    return i2;
}

DiscRule DiscRule::build(double weight_exponent, int n_radial, int n_angular) {
    DiscRule rule;
    if (weight_exponent > -1.0) {
        rule.rule_exponent = weight_exponent;
        rule.fold_exponent = 0.0;
    } else {
        // boundary exponent folded so the rule keeps an integrable weight;
        // -1/2 keeps half-integer net exponents exactly representable
        rule.rule_exponent = -0.5;
        rule.fold_exponent = weight_exponent + 0.5;
    }
    const GaussJacobiRule& gj = gauss_jacobi01(n_radial, rule.rule_exponent, 0.0);
    rule.xi_nodes = gj.nodes;
    rule.xi_weights = gj.weights;
    rule.angular_count = n_angular;
    return rule;
}

namespace {

cplx disc_sum(const DiscRule& rule, const std::function<cplx(cplx)>& f, double* l1_out) {
    cplx acc = 0.0;
    double l1 = 0.0;
    const int m = rule.angular_count;
    const double ang_w = 1.0 / m;
    for (std::size_t i = 0; i < rule.xi_nodes.size(); ++i) {
        const double xi = rule.xi_nodes[i];
        const double rho = std::sqrt(xi);
        const double fold =
            rule.fold_exponent == 0.0 ? 1.0 : std::pow(1.0 - xi, rule.fold_exponent);
        const double wr = rule.xi_weights[i] * fold;
        cplx ring = 0.0;
        for (int k = 0; k < m; ++k) {
            const double th = 2.0 * M_PI * k / m;
            ring += f(cplx(rho * std::cos(th), rho * std::sin(th)));
        }
        const cplx v = wr * ang_w * ring;
        acc += v;
        l1 += std::abs(v);
    }
    if (l1_out) *l1_out = l1;
    return acc;
}

}  // namespace

cplx integrate_disc(const std::function<cplx(cplx)>& f, double weight_exponent) {
    const DiscRule coarse = DiscRule::build(weight_exponent, 128, 64);
    const DiscRule fine = DiscRule::build(weight_exponent, 256, 128);
    double l1 = 0.0;
    const cplx i1 = disc_sum(coarse, f, nullptr);
    const cplx i2 = disc_sum(fine, f, &l1);
    const double scale = std::max(std::abs(i2), 1e-2 * l1);
    if (std::abs(i2 - i1) > 1e-12 * scale) {
        if (weight_exponent <= -1.0)
            throw accuracy_error(
                "integrate_disc: divergent or non-smooth boundary behavior under "
                "weight exponent <= -1");
        throw accuracy_error("integrate_disc: not stable under node doubling");
    }
    return i2;
}

}  // namespace discosc
