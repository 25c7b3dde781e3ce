#include "lik/sequences.hpp"

#include "lik/bell.hpp"
#include "lik/series.hpp"

#include <stdexcept>

namespace lik {

const char* route_name(Route r) {
    switch (r) {
        case Route::sigma_binomial: return "sigma_binomial";
        case Route::lehmer_route: return "lehmer_route";
        case Route::eta_route: return "eta_route";
        case Route::bell_xi_route: return "bell_xi_route";
        case Route::lehmer_relation: return "lehmer_relation";
        case Route::eta_sigma: return "eta_sigma";
        case Route::gamma_log_series: return "gamma_log_series";
        case Route::b_log_series: return "b_log_series";
    }
    return "?";
}

const char* family_name(Family f) {
    switch (f) {
        case Family::eta: return "eta";
        case Family::lehmer_b: return "b";
        case Family::sigma: return "sigma";
        case Family::lambda: return "lambda";
        case Family::s1: return "s1";
        case Family::s2: return "s2";
    }
    return "?";
}

const Real& ConstSeq::at(long n) const {
    long i = n - start_index;
    if (i < 0 || i >= static_cast<long>(values.size()))
        throw std::out_of_range(std::string(family_name(family)) + ": index " + std::to_string(n) + " not computed");
    return values[static_cast<size_t>(i)];
}

const Real& ConstSeq::err_at(long n) const {
    long i = n - start_index;
    if (i < 0 || i >= static_cast<long>(err.size()))
        throw std::out_of_range("ConstSeq: err index out of range");
    return err[static_cast<size_t>(i)];
}

ConstSeq eta_from_gamma(long n_max, const StieltjesSeq& gammas) {
    if (n_max < 1) throw std::invalid_argument("eta_from_gamma: n_max must be >= 1");
    if (static_cast<long>(gammas.values.size()) < n_max)
        throw std::invalid_argument("eta_from_gamma: need gamma_0..gamma_{n_max-1}");
    long p = gammas.values[0].prec();
    // (s-1) zeta(s) = 1 + sum_{k>=1} (-1)^(k-1) gamma_{k-1} (s-1)^k / (k-1)!
    std::vector<Real> a = {Real(1, Prec{p})};
    std::vector<Real> aerr = {err_zero()};
    for (long k = 1; k <= n_max; ++k) {
        Int f = factorial(static_cast<unsigned long>(k - 1));
        Real c = gammas.values[static_cast<size_t>(k - 1)] / f;
        if (k % 2 == 0) c = -c;
        a.push_back(c);
        aerr.push_back(gammas.err[static_cast<size_t>(k - 1)] / Real(f, Prec{kErrPrec}));
    }
    auto [b0, bs] = series_log(a);
    auto berr = series_log_err(a, aerr, bs);
    (void)b0;  // log of unit leading coefficient
    ConstSeq s;
    s.family = Family::eta;
    s.start_index = 0;
    s.route = Route::gamma_log_series;
    for (long k = 1; k <= n_max; ++k) {
        s.values.push_back(-bs[static_cast<size_t>(k - 1)]);  // eta_{k-1} = -k * (coeff at (s-1)^k)
        s.err.push_back(berr[static_cast<size_t>(k - 1)]);
    }
    return s;
}

ConstSeq eta_from_sigma(long n_max, const ConstSeq& sigmas, const ZetaTable& zt,
                        const PrecisionContext& ctx) {
    if (sigmas.last_index() < n_max + 1)
        throw std::invalid_argument("eta_from_sigma: need sigma_1..sigma_{n_max+1}");
    Prec p{ctx.work_bits + 32};
    ConstSeq s;
    s.family = Family::eta;
    s.start_index = 0;
    s.route = Route::eta_sigma;
    s.values.push_back(-Real::euler(p));
    s.err.push_back(ulp_of(s.values[0]) * 2);
    for (long n = 1; n <= n_max; ++n) {
        const Approx& z = zt.at(n + 1);
        Real w = 1 - Real::pow2(-(n + 1), p);
        GuardedSum g(p);
        g.add(sigmas.at(n + 1));
        g.add(w * z.value);
        g.add(Real(-1, p));
        Real v = g.finalize(ctx.work_bits, "eta_from_sigma");
        if (n % 2 == 0) v = -v;  // (-1)^(n+1)
        s.values.push_back(v);
        s.err.push_back(sigmas.err_at(n + 1) + z.err + ulp_of(v) * 4);
    }
    return s;
}

ConstSeq lehmer_b(long n_max, const std::vector<ZetaDerivAt0>& derivs) {
    if (static_cast<long>(derivs.size()) < n_max + 2)
        throw std::invalid_argument("lehmer_b: need zeta derivatives through n_max + 1");
    long p = derivs[0].value.prec();
    // Taylor of 2(s-1) zeta(s) at 0: a_0 = 1, a_m = 2 (-1)^(m-1) [m d_{m-1} + d_m]/m!
    std::vector<Real> a = {Real(1, Prec{p})};
    std::vector<Real> aerr = {err_zero()};
    for (long m = 1; m <= n_max + 1; ++m) {
        Real num = derivs[static_cast<size_t>(m - 1)].delta * m + derivs[static_cast<size_t>(m)].delta;
        Real nerr = derivs[static_cast<size_t>(m - 1)].err * Real(m, Prec{kErrPrec}) + derivs[static_cast<size_t>(m)].err;
        Int f = factorial(static_cast<unsigned long>(m));
        Real c = num * 2 / f;
        if (m % 2 == 0) c = -c;
        a.push_back(c);
        aerr.push_back(nerr * 2 / Real(f, Prec{kErrPrec}));
    }
    auto [b0, bs] = series_log(a);
    auto berr = series_log_err(a, aerr, bs);
    (void)b0;
    ConstSeq s;
    s.family = Family::lehmer_b;
    s.start_index = 0;
    s.route = Route::b_log_series;
    for (long j = 0; j <= n_max; ++j) {
        s.values.push_back(bs[static_cast<size_t>(j)]);  // b_{j} = (j+1) * (coeff at s^(j+1))
        s.err.push_back(berr[static_cast<size_t>(j)]);
    }
    return s;
}

ConstSeq sigma_seq(long n_max, const ConstSeq& bs, const ZetaTable& zt, const PrecisionContext& ctx) {
    if (bs.last_index() < n_max - 1) throw std::invalid_argument("sigma_seq: need b_0..b_{n_max-1}");
    Prec p{ctx.work_bits + 32};
    ConstSeq s;
    s.family = Family::sigma;
    s.start_index = 1;
    s.route = Route::lehmer_relation;
    Real sigma1 = Real::euler(p) / 2 - log(Real::pi(p)) / 2 + 1 - Real::log2c(p);
    s.values.push_back(sigma1);
    s.err.push_back(ulp_of(sigma1) * 8);
    for (long m = 2; m <= n_max; ++m) {
        const Approx& z = zt.at(m);
        Real t = Real::pow2(-m, p) * z.value;
        Real v = (m % 2 == 1) ? t - bs.at(m - 1) : -t - bs.at(m - 1);
        s.values.push_back(v);
        s.err.push_back(z.err * Real::pow2(-m, Prec{kErrPrec}) + bs.err_at(m - 1) + ulp_of(v) * 2);
    }
    return s;
}

Approx s1_value(long n, const ZetaTable& zt, const PrecisionContext& ctx) {
    Prec p{ctx.work_bits + 32};
    GuardedSum g(p);
    Real err(Prec{kErrPrec});
    for (long m = 2; m <= n; ++m) {
        const Approx& z = zt.at(m);
        Real t = (1 - Real::pow2(-m, p)) * z.value * binomial(n, m);
        g.add(m % 2 == 0 ? t : -t);
        err += z.err * Real(binomial(n, m), Prec{kErrPrec});
    }
    Real v = g.finalize(ctx.work_bits, "s1");
    return {v, err + ulp_of(v) * (n + 16)};
}

Approx s2_value(long n, const ConstSeq& etas, const PrecisionContext& ctx) {
    if (etas.last_index() < n - 1) throw std::invalid_argument("s2: need eta_0..eta_{n-1}");
    Prec p{ctx.work_bits + 32};
    GuardedSum g(p);
    Real err(Prec{kErrPrec});
    for (long m = 1; m <= n; ++m) {
        g.add(-(etas.at(m - 1) * binomial(n, m)).to_prec(p));
        err += etas.err_at(m - 1) * Real(binomial(n, m), Prec{kErrPrec});
    }
    Real v = g.finalize(ctx.work_bits, "s2");
    return {v, err + ulp_of(v) * (n + 16)};
}

namespace {

// shared by li_lambda (eta route) and maslanka_decompose so the decomposition
// reproduces the route bit for bit
std::pair<Approx, Approx> lambda_c_parts(long n, const ConstSeq& etas, const ZetaTable& zt,
                                         const PrecisionContext& ctx) {
    Prec p{ctx.work_bits + 32};
    Real K = log(Real::pi(p)) + Real::euler(p) + Real::log2c(p) * 2;
    Approx s1 = s1_value(n, zt, ctx);
    Real trend = 1 - Real(n, p) * K / 2 + s1.value;
    Approx osc = s2_value(n, etas, ctx);
    return {{trend, s1.err + ulp_of(trend) * 16}, {osc.value, osc.err}};
}

}  // namespace

std::pair<ConstSeq, ConstSeq> maslanka_decompose(long n_max, const ConstSeq& etas,
                                                 const ZetaTable& zt, const PrecisionContext& ctx) {
    ConstSeq trend, osc;
    trend.family = Family::s1;
    trend.start_index = 1;
    trend.route = Route::eta_route;
    osc.family = Family::s2;
    osc.start_index = 1;
    osc.route = Route::eta_route;
    for (long n = 1; n <= n_max; ++n) {
        auto [t, o] = lambda_c_parts(n, etas, zt, ctx);
        trend.values.push_back(t.value);
        trend.err.push_back(t.err);
        osc.values.push_back(o.value);
        osc.err.push_back(o.err);
    }
    return {trend, osc};
}

ConstSeq li_lambda(long n_max, Route route, const LambdaInputs& in, const PrecisionContext& ctx) {
    if (n_max < 1) throw std::invalid_argument("li_lambda: n_max must be >= 1");
    Prec p{ctx.work_bits + 32};
    ConstSeq s;
    s.family = Family::lambda;
    s.start_index = 1;
    s.route = route;

    switch (route) {
        case Route::sigma_binomial: {
            if (!in.sigmas || in.sigmas->last_index() < n_max)
                throw std::invalid_argument("li_lambda[A]: needs sigma_1..sigma_n_max");
            for (long n = 1; n <= n_max; ++n) {
                GuardedSum g(p);
                Real err(Prec{kErrPrec});
                for (long m = 1; m <= n; ++m) {
                    Int c = binomial(n, m);
                    Real t = in.sigmas->at(m) * c;
                    g.add(m % 2 == 1 ? t : -t);  // -(-1)^m
                    err += in.sigmas->err_at(m) * Real(c, Prec{kErrPrec});
                }
                Real v = g.finalize(ctx.work_bits, "lambda[sigma_binomial]");
                s.values.push_back(v);
                s.err.push_back(err + ulp_of(v) * (n + 24));
            }
            break;
        }
        case Route::lehmer_route: {
            if (!in.bs || !in.zetas || in.bs->last_index() < n_max - 1)
                throw std::invalid_argument("li_lambda[B]: needs b_0..b_{n_max-1} and integer zeta values");
            Real lambda1 = (2 + Real::euler(p) - log(Real::pi(p) * 4)) / 2;
            std::vector<Real> bracket(static_cast<size_t>(n_max) + 1, Real(p));
            std::vector<Real> bracket_err(static_cast<size_t>(n_max) + 1, err_zero());
            for (long m = 2; m <= n_max; ++m) {
                const Approx& z = in.zetas->at(m);
                Real t = Real::pow2(-m, p) * z.value;
                bracket[static_cast<size_t>(m)] = (m % 2 == 0) ? t + in.bs->at(m - 1) : t - in.bs->at(m - 1);
                bracket_err[static_cast<size_t>(m)] =
                    z.err * Real::pow2(-m, Prec{kErrPrec}) + in.bs->err_at(m - 1) + ulp_of(t) * 2;
            }
            for (long n = 1; n <= n_max; ++n) {
                GuardedSum g(p);
                Real err(Prec{kErrPrec});
                g.add(lambda1 * n);
                for (long m = 2; m <= n; ++m) {
                    Int c = binomial(n, m);
                    g.add(bracket[static_cast<size_t>(m)] * c);
                    err += bracket_err[static_cast<size_t>(m)] * Real(c, Prec{kErrPrec});
                }
                Real v = g.finalize(ctx.work_bits, "lambda[lehmer_route]");
                s.values.push_back(v);
                s.err.push_back(err + ulp_of(v) * (n + 24));
            }
            break;
        }
        case Route::eta_route: {
            if (!in.etas || !in.zetas || in.etas->last_index() < n_max - 1)
                throw std::invalid_argument("li_lambda[C]: needs eta_0..eta_{n_max-1} and integer zeta values");
            for (long n = 1; n <= n_max; ++n) {
                auto [t, o] = lambda_c_parts(n, *in.etas, *in.zetas, ctx);
                s.values.push_back(t.value + o.value);
                s.err.push_back(t.err + o.err);
            }
            break;
        }
        case Route::bell_xi_route: {
            if (!in.xi || in.xi->n_max < n_max)
                throw std::invalid_argument("li_lambda[D]: needs xi derivatives through n_max");
            std::vector<Real> xs, xerr;
            for (long j = 1; j <= n_max; ++j) {
                xs.push_back(in.xi->xi1[static_cast<size_t>(j)] * 2);
                xerr.push_back(in.xi->err[static_cast<size_t>(j)] * 2);
            }
            auto table = bell_partial_table(n_max, xs);
            auto terr = bell_partial_table_err(n_max, xs, xerr);
            std::vector<Real> L(static_cast<size_t>(n_max) + 1, Real(p));
            std::vector<Real> Lerr(static_cast<size_t>(n_max) + 1, err_zero());
            for (long m = 1; m <= n_max; ++m) {
                L[static_cast<size_t>(m)] = log_polynomial_from_table(m, table, xs[0]);
                Real e(Prec{kErrPrec});
                for (long k = 1; k <= m; ++k)
                    e += terr[static_cast<size_t>(m)][static_cast<size_t>(k)] *
                         Real(factorial(static_cast<unsigned long>(k - 1)), Prec{kErrPrec});
                Lerr[static_cast<size_t>(m)] = e;
            }
            for (long n = 1; n <= n_max; ++n) {
                GuardedSum g(p);
                Real err(Prec{kErrPrec});
                for (long m = 1; m <= n; ++m) {
                    Rat w(binomial(n, m));
                    w /= Rat(factorial(static_cast<unsigned long>(m - 1)));
                    g.add(L[static_cast<size_t>(m)] * w);
                    err += Lerr[static_cast<size_t>(m)] * Real(w, Prec{kErrPrec});
                }
                Real v = g.finalize(ctx.work_bits, "lambda[bell_xi_route]");
                s.values.push_back(v);
                s.err.push_back(err + ulp_of(v) * (n + 24));
            }
            break;
        }
        default:
            throw std::invalid_argument("li_lambda: not a lambda route");
    }
    return s;
}

}  // namespace lik
