#include "lik/zeta.hpp"

#include "lik/exact.hpp"
#include "lik/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace lik {

namespace {

// B_{2k}/(2k)! as an exact rational, converted at precision p.
Real em_coeff(unsigned long k, Prec p) {
    Rat c = bernoulli(2 * k) / Rat(factorial(2 * k));
    return Real(c, p);
}

}  // namespace

Approx zeta_real(const Real& s, const PrecisionContext& ctx) {
    if (s == 1) throw domain_error("zeta_real: pole at s = 1");
    if (!(s > -1)) throw domain_error("zeta_real: defined for real s > -1");
    long P = ctx.work_bits + 48;
    Prec p{P};
    Real target = ctx.target_abs_err / 8;
    Real sw = s.to_prec(p);

    bool s_is_int = mpfr_integer_p(sw.raw()) != 0;
    long s_int = s_is_int ? static_cast<long>(mpfr_get_si(sw.raw(), MPFR_RNDN)) : 0;

    long N = std::max<long>(24, static_cast<long>(0.34 * P));
    for (int attempt = 0; attempt < 6; ++attempt, N *= 2) {
        Real sum(p);
        for (long n = 1; n < N; ++n)
            sum += s_is_int ? pow_si(Real(n, p), -s_int) : pow(Real(n, p), -sw);
        Real Npow = pow(Real(N, p), -sw);  // N^{-s}
        Real acc = sum + Npow / 2 + Npow * N / (sw - 1);

        // Euler-Maclaurin tail: sum_k B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
        Real poch = sw;                      // (s)_1
        Real npw = Npow / N;                 // N^{-s-1}
        Real inv_n2 = 1 / (Real(N, p) * N);  // N^{-2}
        Real last_mag = err_zero();
        bool converged = false;
        Real err = err_zero();
        for (unsigned long k = 1; k <= 512; ++k) {
            Real term = em_coeff(k, p) * poch * npw;
            Real mag = err_from(term);
            if (k > 2 && !last_mag.is_zero() && mag > last_mag) {
                err = last_mag;  // divergent tail reached before target
                break;
            }
            acc += term;
            last_mag = mag;
            if (mag < target) {
                err = mag;
                converged = true;
                break;
            }
            poch = poch * (sw + (2 * k - 1)) * (sw + (2 * k));
            npw *= inv_n2;
        }
        if (converged) {
            err += err_from(acc) * Real::pow2(-(P - 10), Prec{kErrPrec}) +
                   Real(N, Prec{kErrPrec}) * Real::pow2(-(P - 4), Prec{kErrPrec});
            return {acc.to_prec(ctx.prec()), err};
        }
    }
    throw std::runtime_error("zeta_real: Euler-Maclaurin tail failed to converge");
}

const Approx& ZetaTable::at(long m) const {
    if (m < 2 || m > n_max) throw std::out_of_range("ZetaTable::at: m outside [2, n_max]");
    return z[static_cast<size_t>(m)];
}

ZetaTable zeta_int_table(long n_max, const PrecisionContext& ctx) {
    PrecisionContext inner = PrecisionContext::with_bits(ctx.work_bits + 32);
    inner.target_abs_err = ctx.target_abs_err * Real::pow2(-16, Prec{kErrPrec});
    ZetaTable t;
    t.n_max = n_max;
    t.z.resize(static_cast<size_t>(n_max) + 1);
    for (long m = 2; m <= n_max; ++m) t.z[static_cast<size_t>(m)] = zeta_real(Real(m, inner.prec()), inner);
    return t;
}

namespace {

// |log(1+ix)| and its log-derivative, double precision, for cutoff selection.
double log_abs_w(double x) {
    double re = 0.5 * std::log1p(x * x);
    double im = std::atan(x);
    return 0.5 * std::log(re * re + im * im);
}

double choose_ap_cutoff(long n_max, long bits) {
    double need = -(static_cast<double>(bits) + 8.0) * 0.6931471805599453;
    double X = 4;
    for (;;) {
        double g = static_cast<double>(n_max) * log_abs_w(X) - 2 * 3.141592653589793 * X;
        double slope = static_cast<double>(n_max) * (log_abs_w(X + 0.5) - log_abs_w(X)) * 2.0;
        if (g < need && slope < 3.141592653589793) return X;
        X += 4;
        if (X > 4000) return X;
    }
}

}  // namespace

std::vector<ZetaDerivAt0> zeta_derivs0_abel_plana(long n_max, const PrecisionContext& ctx) {
    if (n_max < 0) throw std::invalid_argument("zeta_derivs0: n_max must be nonnegative");
    long outP = ctx.work_bits + 32;
    std::vector<ZetaDerivAt0> out(static_cast<size_t>(n_max) + 1);
    out[0] = {0, Real(-1, Prec{outP}) / 2, Real(1, Prec{outP}) / 2, err_zero(), DerivMethod::abel_plana};
    if (n_max == 0) return out;

    long P = ctx.work_bits + 96 + (n_max > 40 ? 64 : 0);
    Prec p{P};
    double Xd = choose_ap_cutoff(n_max, ctx.work_bits + 48);
    Real X(Xd, p);
    Real two_pi = Real::pi(p) * 2;

    auto f = [&](const Real& x, std::vector<Real>& v) {
        Real wre = log1p(x * x) / 2;
        Real wim = atan(x);
        Real d = expm1(two_pi * x);
        Real re(1, p), im(p);
        for (long n = 1; n <= n_max; ++n) {
            Real nre = re * wre - im * wim;
            im = re * wim + im * wre;
            re = nre;
            v[n - 1] = im / d;
        }
    };
    Real abs_target = ctx.target_abs_err * Real::pow2(-8, Prec{kErrPrec});
    Real rel_target = Real::pow2(-(ctx.work_bits + 40), Prec{kErrPrec});
    QuadResult q = integrate_batch(f, Real(p), X, n_max, P, abs_target, rel_target, 12);

    // truncation: integrand beyond X is dominated by |w(X)|^n e^{-2 pi x}
    Real wX = sqrt(pow_si(log1p(X * X) / 2, 2) + pow_si(atan(X), 2)).to_prec(Prec{64});
    Real tail = (exp(-two_pi * X) * 2).to_prec(Prec{64});
    for (long n = 1; n <= n_max; ++n) {
        tail = tail * wX;
        Real delta = (q.values[n - 1] * -2).to_prec(Prec{outP});
        Real err = (q.errs[n - 1] + err_from(tail)) * 2;
        Real value = Real(factorial(static_cast<unsigned long>(n)), Prec{outP});
        value = (n % 2 == 0) ? delta - value : -(delta + value);  // (-1)^n delta - n!
        out[static_cast<size_t>(n)] = {n, value, delta, err, DerivMethod::abel_plana};
    }
    return out;
}

ZetaDerivAt0 zeta_deriv0_abel_plana(long n, const PrecisionContext& ctx) {
    return zeta_derivs0_abel_plana(n, ctx).back();
}

namespace {

// Derivative coefficient tables for f(x) = log^n(x) x^(-e), e in {0,1}:
// f^(r)(x) = x^(-r-e) sum_j c_{r,j} log^j x, with exact integer c.
struct LogPowDeriv {
    long n;
    int e;
    std::vector<Int> c;  // current row, index j = 0..n
    long r = 0;
    void step() {  // advance r -> r+1
        std::vector<Int> nx(static_cast<size_t>(n) + 1);
        for (long j = 0; j <= n; ++j) {
            Int t = c[static_cast<size_t>(j)] * (-(r + e));
            if (j + 1 <= n) t += c[static_cast<size_t>(j) + 1] * (j + 1);
            nx[static_cast<size_t>(j)] = t;
        }
        c.swap(nx);
        ++r;
    }
    Real eval(const std::vector<Real>& logpow, const Real& inv_x_pow) const {
        // logpow[j] = log^j x; caller supplies x^(-r-e) as inv_x_pow
        Real acc(Prec{logpow[0].prec()});
        for (long j = 0; j <= n; ++j)
            if (c[static_cast<size_t>(j)] != 0) acc += logpow[static_cast<size_t>(j)] * c[static_cast<size_t>(j)];
        return acc * inv_x_pow;
    }
    static LogPowDeriv start(long n, int e) {
        LogPowDeriv d;
        d.n = n;
        d.e = e;
        d.c.assign(static_cast<size_t>(n) + 1, Int(0));
        d.c[static_cast<size_t>(n)] = 1;
        return d;
    }
};

// sum_{j>=1} B_{2j}/(2j)! f^(2j-1)(m), adaptive truncation. Returns the
// correction and a bound on the first omitted / last term.
Real em_log_tail(long n, int e, long m, const std::vector<Real>& logpow, Prec p, const Real& target,
                 Real& err_out) {
    LogPowDeriv d = LogPowDeriv::start(n, e);
    Real inv_m = 1 / Real(m, p);
    Real inv_pow = e == 1 ? inv_m * inv_m : inv_m;  // m^-(1+e) for r = 1
    Real acc(p);
    Real last_mag = err_zero();
    err_out = err_zero();
    for (unsigned long j = 1; j <= 2048; ++j) {
        while (d.r < static_cast<long>(2 * j - 1)) d.step();
        Real term = em_coeff(j, p) * d.eval(logpow, inv_pow);
        Real mag = err_from(term);
        if (j > 2 && !last_mag.is_zero() && mag > last_mag) {
            err_out = last_mag;
            return acc;
        }
        acc += term;
        last_mag = mag;
        if (mag < target) {
            err_out = mag;
            return acc;
        }
        inv_pow = inv_pow * inv_m * inv_m;
    }
    err_out = last_mag;
    return acc;
}

long limit_guard_bits(long n, long m) {
    double lg = std::log2(std::log(static_cast<double>(m)));
    return static_cast<long>((n + 1) * std::max(0.0, lg) + std::log2(static_cast<double>(m))) + 96;
}

}  // namespace

ZetaDerivAt0 zeta_deriv0_limit(long n, long m_cutoff, const PrecisionContext& ctx) {
    if (n < 0 || m_cutoff < 8) throw std::invalid_argument("zeta_deriv0_limit: bad arguments");
    long m = m_cutoff;
    long P = ctx.work_bits + limit_guard_bits(n, m);
    Prec p{P};

    // partial sum sum_{k=1}^m log^n k (log^0 1 = 1)
    Real S(p);
    if (n == 0) S = Real(m, p);
    else
        for (long k = 2; k <= m; ++k) S += pow_si(log(Real(k, p)), n);

    Real L = log(Real(m, p));
    std::vector<Real> logpow(static_cast<size_t>(n) + 1, Real(1, p));
    for (long j = 1; j <= n; ++j) logpow[static_cast<size_t>(j)] = logpow[static_cast<size_t>(j) - 1] * L;

    // INT_1^m log^n x dx = m sum_j (-1)^(n-j) (n!/j!) log^j m - (-1)^n n!
    Real integral(p);
    for (long j = 0; j <= n; ++j) {
        Int c = factorial(static_cast<unsigned long>(n)) / factorial(static_cast<unsigned long>(j));
        Real t = logpow[static_cast<size_t>(j)] * c;
        if ((n - j) % 2 == 1) integral -= t;
        else integral += t;
    }
    integral = integral * m;
    Real nf(factorial(static_cast<unsigned long>(n)), p);
    if (n % 2 == 1) integral += nf;
    else integral -= nf;

    Real A = S - integral - logpow[static_cast<size_t>(n)] / 2;
    Real target = ctx.target_abs_err * Real::pow2(-8, Prec{kErrPrec});
    Real em_err(Prec{kErrPrec});
    Real corr = em_log_tail(n, 0, m, logpow, p, target, em_err);
    Real delta = A - corr;

    Real err = em_err + max(err_from(S), err_from(integral)) * Real::pow2(-(P - 12), Prec{kErrPrec});
    long outP = ctx.work_bits + 32;
    Real value(factorial(static_cast<unsigned long>(n)), Prec{outP});
    value = (n % 2 == 0) ? delta.to_prec(Prec{outP}) - value : -(delta.to_prec(Prec{outP}) + value);
    return {n, value, delta.to_prec(Prec{outP}), err, DerivMethod::limit_formula};
}

StieltjesSeq stieltjes(long n_max, const PrecisionContext& ctx) {
    if (n_max < 0) throw std::invalid_argument("stieltjes: n_max must be nonnegative");
    long m = n_max <= 40 ? 256 : 512;
    long P = ctx.work_bits + limit_guard_bits(n_max, m);
    Prec p{P};
    Real target = ctx.target_abs_err * Real::pow2(-8, Prec{kErrPrec});

    std::vector<Real> lg(static_cast<size_t>(m) + 1, Real(p));
    for (long k = 2; k <= m; ++k) lg[static_cast<size_t>(k)] = log(Real(k, p));
    std::vector<Real> pw(static_cast<size_t>(m) + 1, Real(1, p));  // log^n k, n = 0 initially
    Real L = lg[static_cast<size_t>(m)];

    StieltjesSeq out;
    out.route = "limit_em";
    for (long n = 0; n <= n_max; ++n) {
        Real S(p);
        for (long k = 1; k <= m; ++k) S += pw[static_cast<size_t>(k)] / k;
        std::vector<Real> logpow(static_cast<size_t>(n) + 1, Real(1, p));
        for (long j = 1; j <= n; ++j) logpow[static_cast<size_t>(j)] = logpow[static_cast<size_t>(j) - 1] * L;
        Real A = S - logpow[static_cast<size_t>(n)] * L / (n + 1) - logpow[static_cast<size_t>(n)] / (2 * m);
        Real em_err(Prec{kErrPrec});
        Real corr = em_log_tail(n, 1, m, logpow, p, target, em_err);
        Real g = A - corr;
        Real rounded = g.to_prec(ctx.prec());
        Real err = em_err + err_from(S) * Real::pow2(-(P - 12), Prec{kErrPrec}) + ulp_of(rounded) * 2;
        out.values.push_back(rounded);
        out.err.push_back(err);
        if (!(err <= ctx.target_abs_err)) out.reached_target = false;
        // advance log powers for the next n
        pw[1] = Real(p);  // log 1 = 0 kills k = 1 for n >= 1
        for (long k = 2; k <= m; ++k) pw[static_cast<size_t>(k)] *= lg[static_cast<size_t>(k)];
    }
    return out;
}

StieltjesSeq stieltjes_hasse(long n_max, const PrecisionContext& ctx, long i_max) {
    if (n_max < 0 || i_max < 8) throw std::invalid_argument("stieltjes_hasse: bad arguments");
    long P = ctx.work_bits + i_max + 32;
    Prec p{P};
    std::vector<Real> lg(static_cast<size_t>(i_max) + 1, Real(p));
    for (long j = 1; j <= i_max; ++j) lg[static_cast<size_t>(j)] = log(Real(1 + j, p));
    std::vector<Real> pw = lg;  // log^(n+1)(1+j), n = 0 initially

    StieltjesSeq out;
    out.route = "hasse";
    Real bar = ctx.target_abs_err / 8;
    for (long n = 0; n <= n_max; ++n) {
        Real acc(p);
        Real t0 = err_zero(), t1 = err_zero(), t2 = err_zero();
        std::vector<Int> row = {Int(1)};  // C(i, .)
        long i = 0;
        for (; i <= i_max; ++i) {
            Real inner(p);
            for (long j = 1; j <= i; ++j) {
                Real t = pw[static_cast<size_t>(j)] * row[static_cast<size_t>(j)];
                if (j % 2 == 1) inner -= t;
                else inner += t;
            }
            Real term = inner / (i + 1);
            acc += term;
            t2 = t1;
            t1 = t0;
            t0 = err_from(term);
            if (i > 4 && t0 < bar && t1 < bar && t2 < bar) break;
            // next Pascal row, in place
            row.push_back(Int(1));
            for (long j = i; j >= 1; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j) - 1];
        }
        Real g = -acc / (n + 1);
        // polynomial tail model: sum_{i>I} ~ |T_I| * I
        Real tail = max(t0, max(t1, t2)) * Real(std::min(i, i_max) + 2, Prec{kErrPrec});
        Real err = tail / (n + 1) + err_from(acc) * Real::pow2(-(P - i_max - 8), Prec{kErrPrec});
        out.values.push_back(g.to_prec(ctx.prec()));
        out.err.push_back(err);
        if (!(err <= ctx.target_abs_err)) out.reached_target = false;
        for (long j = 1; j <= i_max; ++j) pw[static_cast<size_t>(j)] *= lg[static_cast<size_t>(j)];
    }
    return out;
}

DeltaSeq delta_seq(const std::vector<ZetaDerivAt0>& derivs, long n_max) {
    if (static_cast<long>(derivs.size()) <= n_max) throw std::invalid_argument("delta_seq: not enough derivatives");
    DeltaSeq d;
    for (long n = 0; n <= n_max; ++n) {
        d.values.push_back(derivs[static_cast<size_t>(n)].delta);
        d.err.push_back(derivs[static_cast<size_t>(n)].err);
    }
    return d;
}

DeltaSeq delta_from_gamma(const StieltjesSeq& g, long n_max) {
    long K = static_cast<long>(g.values.size()) - 1;
    if (K < n_max) throw std::invalid_argument("delta_from_gamma: gamma table too short");
    DeltaSeq d;
    for (long n = 0; n <= n_max; ++n) {
        long terms = K - n;
        Real acc(Prec{g.values[0].prec()});
        Real err(Prec{kErrPrec});
        for (long pidx = 0; pidx <= terms; ++pidx) {
            Int pf = factorial(static_cast<unsigned long>(pidx));
            acc += g.values[static_cast<size_t>(n + pidx)] / pf;
            err += g.err[static_cast<size_t>(n + pidx)] / Real(pf, Prec{kErrPrec});
        }
        // tail estimate: two more terms at the last magnitude
        Real tail = err_from(g.values[static_cast<size_t>(K)] / factorial(static_cast<unsigned long>(terms))) * 4;
        d.values.push_back(acc);
        d.err.push_back(err + tail);
    }
    return d;
}

}  // namespace lik
