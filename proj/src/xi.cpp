#include "lik/xi.hpp"

#include "lik/exact.hpp"
#include "lik/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace lik {

namespace {

// omega(x) at precision p via q = e^(-pi x), q^(k^2) by two multiplies per k.
// tail <= q^((K+1)^2) / (1 - q^(2K+3)) <= 2 q^((K+1)^2) for x >= 1/4.
Real omega_at(const Real& x, Prec p, long target_exp2, long* k_used, Real* tail_out) {
    Real q = exp(-Real::pi(p) * x);
    Real q2 = q * q;
    Real acc(p);
    Real power = q;       // q^(k^2)
    Real odd_step = q;    // q^(2k-1)
    long k = 1;
    for (;; ++k) {
        acc += power;
        odd_step *= q2;               // q^(2k+1)
        power = power * odd_step;     // q^((k+1)^2)
        if (power.is_zero() || power.exp2() < target_exp2) break;
        if (k > 100000) throw std::runtime_error("theta_omega: no convergence");
    }
    if (k_used) *k_used = k;
    if (tail_out) *tail_out = err_from(power) * 2;
    return acc;
}

}  // namespace

ThetaSum theta_omega(const Real& x, const PrecisionContext& ctx) {
    if (!(x > 0)) throw domain_error("theta_omega: x must be positive");
    Prec p{ctx.work_bits + 32};
    long tgt = ctx.target_abs_err.is_zero() ? -(ctx.work_bits + 16) : ctx.target_abs_err.exp2() - 1;
    ThetaSum t;
    t.x = x.to_prec(p);
    t.value = omega_at(t.x, p, tgt, &t.k_used, &t.err);
    t.err += ulp_of(t.value) * t.k_used;
    return t;
}

namespace {

// One node sweep accumulates I(j, s) = INT_1^X omega(x) log^j(sqrt x) (sqrt x + s) / x dx
// for j = 0..jmax and s = +-1; everything downstream is assembled from these.
struct ThetaIntegrals {
    long jmax;
    std::vector<Real> plus;   // I(j, +1)
    std::vector<Real> minus;  // I(j, -1)
    std::vector<Real> err_plus, err_minus;
};

ThetaIntegrals theta_integral_family(long jmax, const PrecisionContext& ctx) {
    long P = ctx.work_bits + 96;
    Prec p{P};
    // cutoff: beyond the peak of log^j(sqrt x) e^(-pi x) the integrand falls
    // faster than e^(-pi x / 2)
    double need = (static_cast<double>(ctx.work_bits) + 56.0) * 0.6931471805599453;
    double Xd = 8;
    while (3.141592653589793 * Xd - jmax * std::log(std::max(1.001, 0.5 * std::log(Xd))) < need ||
           jmax / (Xd * std::log(Xd)) > 1.0)
        Xd += 8;
    Real X(Xd, p);

    long ncomp = 2 * (jmax + 1);
    auto f = [&](const Real& x, std::vector<Real>& v) {
        Real w = omega_at(x, p, -(P + 8), nullptr, nullptr);
        Real u = w / x;
        Real rt = sqrt(x);
        Real lg = log(x) / 2;
        Real pw(1, p);
        for (long j = 0; j <= jmax; ++j) {
            if (j > 0) pw *= lg;
            Real core = u * pw;
            v[2 * j] = core * (rt + 1);
            v[2 * j + 1] = core * (rt - 1);
        }
    };
    Real abs_target = ctx.target_abs_err * Real::pow2(-8, Prec{kErrPrec});
    Real rel_target = Real::pow2(-(ctx.work_bits + 40), Prec{kErrPrec});
    QuadResult q = integrate_batch(f, Real(1, p), X, ncomp, P, abs_target, rel_target, 12);

    // tail bound: omega(x) <= 2 e^(-pi x); integrand <= 4 e^(-pi x) log^j(sqrt x)
    Real lgX = (log(X) / 2).to_prec(Prec{64});
    Real tail = (exp(-Real::pi(Prec{64}) * X.to_prec(Prec{64})) * 4).to_prec(Prec{64});
    ThetaIntegrals t;
    t.jmax = jmax;
    for (long j = 0; j <= jmax; ++j) {
        if (j > 0) tail = tail * lgX;
        t.plus.push_back(q.values[2 * j]);
        t.minus.push_back(q.values[2 * j + 1]);
        t.err_plus.push_back(q.errs[2 * j] + err_from(tail));
        t.err_minus.push_back(q.errs[2 * j + 1] + err_from(tail));
    }
    return t;
}

Real beta0_closed(Prec p) {
    // 1 + gamma/2 - log(2 sqrt(pi))
    return Real(1, p) + Real::euler(p) / 2 - log(sqrt(Real::pi(p)) * 2);
}

// rounding bound for the closed form: intermediates sit near magnitude 1, so
// the ulp that matters is the one at exponent 1, not at the small result
Real beta0_err(Prec p) { return Real::pow2(-(p.bits - 5), Prec{kErrPrec}); }

}  // namespace

Approx keiper_beta(long n, const PrecisionContext& ctx) {
    if (n < -1) throw std::invalid_argument("keiper_beta: n must be >= -1");
    if (n == -1) return {Real(ctx.prec()), err_zero()};
    if (n == 0) {
        Prec p{ctx.work_bits + 32};
        return {beta0_closed(p), beta0_err(p)};
    }
    ThetaIntegrals t = theta_integral_family(n, ctx);
    Int nf = factorial(static_cast<unsigned long>(n));
    Real v = (n % 2 == 0 ? t.plus[static_cast<size_t>(n)] : t.minus[static_cast<size_t>(n)]) / nf;
    Real e = (n % 2 == 0 ? t.err_plus[static_cast<size_t>(n)] : t.err_minus[static_cast<size_t>(n)]) /
             Real(nf, Prec{kErrPrec});
    return {v, e};
}

XiDerivSeq xi_deriv1(long n_max, const PrecisionContext& ctx) {
    if (n_max < 1) throw std::invalid_argument("xi_deriv1: n_max must be >= 1");
    long jmax = n_max - 1;
    ThetaIntegrals t = theta_integral_family(jmax, ctx);
    Prec p{ctx.work_bits + 32};

    XiDerivSeq s;
    s.n_max = n_max;
    // beta_n: closed form at n = 0, integrals for n >= 1
    s.beta.push_back(beta0_closed(p));
    std::vector<Real> beta_err = {beta0_err(p)};
    for (long n = 1; n <= n_max - 1; ++n) {
        Int nf = factorial(static_cast<unsigned long>(n));
        s.beta.push_back((n % 2 == 0 ? t.plus[static_cast<size_t>(n)] : t.minus[static_cast<size_t>(n)]) / nf);
        beta_err.push_back((n % 2 == 0 ? t.err_plus[static_cast<size_t>(n)] : t.err_minus[static_cast<size_t>(n)]) /
                           Real(nf, Prec{kErrPrec}));
    }

    // alpha_n = beta_{n-2} + beta_{n-1} (beta_{-1} = 0), alpha_0 = 1
    s.alpha.push_back(Real(1, p));
    std::vector<Real> alpha_err = {err_zero()};
    for (long n = 1; n <= n_max; ++n) {
        Real a = s.beta[static_cast<size_t>(n - 1)];
        Real e = beta_err[static_cast<size_t>(n - 1)];
        if (n >= 2) {
            a += s.beta[static_cast<size_t>(n - 2)];
            e += beta_err[static_cast<size_t>(n - 2)];
        }
        s.alpha.push_back(a);
        alpha_err.push_back(e);
    }

    // xi^(n)(1) = alpha_n n!/2, with the exact factorial applied last
    for (long n = 0; n <= n_max; ++n) {
        Int nf = factorial(static_cast<unsigned long>(n));
        s.xi1.push_back(s.alpha[static_cast<size_t>(n)] * nf / 2);
        s.err.push_back(alpha_err[static_cast<size_t>(n)] * Real(nf, Prec{kErrPrec}) / 2);
    }

    // direct-integral route for n >= 2:
    // xi^(n)(1) = (n/2) [ (n-1) I(n-2, (-1)^n) + I(n-1, -(-1)^n) ]
    s.xi1_integral.assign(static_cast<size_t>(n_max) + 1, Real(p));
    for (long n = 2; n <= n_max; ++n) {
        bool even = n % 2 == 0;
        const Real& a = even ? t.plus[static_cast<size_t>(n - 2)] : t.minus[static_cast<size_t>(n - 2)];
        const Real& b = even ? t.minus[static_cast<size_t>(n - 1)] : t.plus[static_cast<size_t>(n - 1)];
        Real ea = even ? t.err_plus[static_cast<size_t>(n - 2)] : t.err_minus[static_cast<size_t>(n - 2)];
        Real eb = even ? t.err_minus[static_cast<size_t>(n - 1)] : t.err_plus[static_cast<size_t>(n - 1)];
        Real v = (a * (n - 1) + b) * n / 2;
        Real e = (ea * Real(n - 1, Prec{kErrPrec}) + eb) * Real(n, Prec{kErrPrec}) / 2;
        s.xi1_integral[static_cast<size_t>(n)] = v;
        Real resid = err_from(v - s.xi1[static_cast<size_t>(n)]);
        Real budget = (e + s.err[static_cast<size_t>(n)]) * 4 + ulp_of(v) * 16;
        if (resid > budget)
            throw std::runtime_error("xi_deriv1: derivative routes disagree at n = " + std::to_string(n) +
                                     " (residual 2^" + std::to_string(resid.exp2()) + ", budget 2^" +
                                     std::to_string(budget.exp2()) + "); quadrature defect");
        s.err[static_cast<size_t>(n)] = max(s.err[static_cast<size_t>(n)], resid);
    }
    return s;
}

PowerSeries xi_taylor(long n_max, const PrecisionContext& ctx) {
    PowerSeries ps;
    ps.center = Real(1, ctx.prec());
    if (n_max == 0) {
        ps.coeffs = {Real(1, ctx.prec())};
        return ps;
    }
    XiDerivSeq s = xi_deriv1(std::max<long>(1, n_max), ctx);
    for (long n = 0; n <= n_max; ++n) ps.coeffs.push_back(s.alpha[static_cast<size_t>(n)]);
    return ps;
}

}  // namespace lik
