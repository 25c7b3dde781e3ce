#include "lik/verifier.hpp"

#include "lik/bell.hpp"

#include <algorithm>

namespace lik {

namespace {

CheckResult mk_eq_tol(std::string id, const Real& lhs, const Real& rhs, const Real& tol,
                      std::string notes = "") {
    CheckResult c;
    c.check_id = std::move(id);
    c.kind = "eq";
    c.lhs = lhs;
    c.rhs = rhs;
    c.residual = lhs - rhs;
    c.tolerance = tol.to_prec(Prec{kErrPrec});
    c.passed = err_from(c.residual) <= c.tolerance;
    c.notes = std::move(notes);
    return c;
}

// equality default: tolerance = 4x propagated error
CheckResult mk_eq(std::string id, const Real& lhs, const Real& rhs, const Real& err,
                  std::string notes = "") {
    return mk_eq_tol(std::move(id), lhs, rhs, err * 4, std::move(notes));
}

// inequality lhs > rhs: margin must clear the combined error strictly
CheckResult mk_ineq(std::string id, const Real& lhs, const Real& rhs, const Real& err,
                    std::string notes = "") {
    CheckResult c;
    c.check_id = std::move(id);
    c.kind = "ineq";
    c.lhs = lhs;
    c.rhs = rhs;
    c.residual = lhs - rhs;
    c.tolerance = err.to_prec(Prec{kErrPrec});
    c.passed = c.residual > c.tolerance;
    c.notes = std::move(notes);
    return c;
}

std::string tag(const char* base, const char* idx, long n) {
    return std::string(base) + "_" + idx + std::to_string(n);
}

// x_j = sign * (j-1)! * seq(start + j - 1): factorial weighting of Bell
// arguments is applied here, at the call site.
void weighted_args(const ConstSeq& seq, long count, int sign, std::vector<Real>& xs,
                   std::vector<Real>& xerr) {
    xs.clear();
    xerr.clear();
    for (long j = 1; j <= count; ++j) {
        Int f = factorial(static_cast<unsigned long>(j - 1));
        Real v = seq.at(seq.start_index + j - 1) * f;
        xs.push_back(sign < 0 ? -v : v);
        xerr.push_back(seq.err_at(seq.start_index + j - 1) * Real(f, Prec{kErrPrec}));
    }
}

void append(std::vector<CheckResult>& to, std::vector<CheckResult> from) {
    for (auto& c : from) to.push_back(std::move(c));
}

}  // namespace

std::vector<CheckResult> check_bell_xi_sigma(long n_max, const ConstSeq& sigmas, const XiDerivSeq& xi) {
    std::vector<Real> xs, xerr;
    weighted_args(sigmas, n_max, -1, xs, xerr);
    auto y = bell_complete_all(n_max, xs);
    auto yerr = bell_complete_all_err(n_max, xs, xerr);
    std::vector<CheckResult> out;
    for (long n = 1; n <= n_max; ++n) {
        Real rhs = xi.xi1[static_cast<size_t>(n)] * 2;
        if (n % 2 == 1) rhs = -rhs;
        Real err = yerr[static_cast<size_t>(n)] + xi.err[static_cast<size_t>(n)] * 2;
        out.push_back(mk_eq(tag("bell_xi_sigma", "n", n), y[static_cast<size_t>(n)], rhs, err));
    }
    return out;
}

std::vector<CheckResult> check_bell_gamma_eta(long m_max, const StieltjesSeq& gammas, const ConstSeq& etas) {
    std::vector<Real> xs, xerr;
    weighted_args(etas, m_max, -1, xs, xerr);
    auto y = bell_complete_all(m_max, xs);
    auto yerr = bell_complete_all_err(m_max, xs, xerr);
    std::vector<CheckResult> out;
    for (long m = 1; m <= m_max; ++m) {
        Real rhs = gammas.values[static_cast<size_t>(m - 1)] * m;
        if (m % 2 == 0) rhs = -rhs;
        Real err = yerr[static_cast<size_t>(m)] + gammas.err[static_cast<size_t>(m - 1)] * Real(m, Prec{kErrPrec});
        out.push_back(mk_eq(tag("bell_gamma_eta", "m", m), y[static_cast<size_t>(m)], rhs, err));
    }
    return out;
}

std::vector<CheckResult> check_bell_b_zeta(long m_max, const ConstSeq& bs,
                                           const std::vector<ZetaDerivAt0>& derivs,
                                           const StieltjesSeq& gammas) {
    std::vector<Real> xs, xerr;
    weighted_args(bs, m_max, +1, xs, xerr);
    auto y = bell_complete_all(m_max, xs);
    auto yerr = bell_complete_all_err(m_max, xs, xerr);
    std::vector<CheckResult> out;
    long gk = static_cast<long>(gammas.values.size()) - 1;
    for (long m = 1; m <= m_max; ++m) {
        // 2[m zeta^(m-1)(0) - zeta^(m)(0)] = 2 (-1)^(m-1) [m delta_{m-1} + delta_m]
        Real comb = derivs[static_cast<size_t>(m - 1)].delta * m + derivs[static_cast<size_t>(m)].delta;
        Real rhs = comb * 2;
        if (m % 2 == 0) rhs = -rhs;
        Real rerr = (derivs[static_cast<size_t>(m - 1)].err * Real(m, Prec{kErrPrec}) +
                     derivs[static_cast<size_t>(m)].err) *
                    2;
        out.push_back(mk_eq(tag("bell_b_zeta", "m", m), y[static_cast<size_t>(m)], rhs,
                            yerr[static_cast<size_t>(m)] + rerr));

        // same left side against the truncated gamma series
        long terms = gk - m;
        Real acc(Prec{xs[0].prec()});
        Real gerr(Prec{kErrPrec});
        for (long q = 0; q <= terms; ++q) {
            Int pf = factorial(static_cast<unsigned long>(q));
            Real bracket =
                gammas.values[static_cast<size_t>(q + m - 1)] * m + gammas.values[static_cast<size_t>(q + m)];
            acc += bracket / pf;
            gerr += (gammas.err[static_cast<size_t>(q + m - 1)] * Real(m, Prec{kErrPrec}) +
                     gammas.err[static_cast<size_t>(q + m)]) /
                    Real(pf, Prec{kErrPrec});
        }
        Real rhs2 = acc * 2;
        if (m % 2 == 0) rhs2 = -rhs2;
        Real tail = err_from(gammas.values[static_cast<size_t>(gk)] * (m + 1) /
                             factorial(static_cast<unsigned long>(terms))) *
                    4;
        out.push_back(mk_eq(tag("bell_b_gamma_series", "m", m), y[static_cast<size_t>(m)], rhs2,
                            yerr[static_cast<size_t>(m)] + gerr + tail,
                            "gamma series truncated at p <= " + std::to_string(terms)));
    }
    return out;
}

std::vector<CheckResult> check_lambda_stirling(long n_max, const ConstSeq& sigmas, const ConstSeq& lambda_a) {
    std::vector<Real> xs, xerr;
    weighted_args(sigmas, n_max, -1, xs, xerr);
    auto table = bell_partial_table(n_max, xs);
    auto terr = bell_partial_table_err(n_max, xs, xerr);
    Prec p{xs[0].prec()};

    // T_l = sum_{k=1..l} (-1)^k (k-1)! S(l,k), exact. The alternating-sum
    // identity behind this collapse is sum_j C(k,j)(-1)^j j^l = (-1)^k k! S(l,k);
    // the sign on the right depends on k, not on l.
    std::vector<Int> T(static_cast<size_t>(n_max) + 1, Int(0));
    for (long l = 1; l <= n_max; ++l)
        for (long k = 1; k <= l; ++k) {
            Int t = factorial(static_cast<unsigned long>(k - 1)) *
                    stirling2(static_cast<unsigned long>(l), static_cast<unsigned long>(k));
            if (k % 2 == 1) T[static_cast<size_t>(l)] -= t;
            else T[static_cast<size_t>(l)] += t;
        }

    std::vector<Real> inner(static_cast<size_t>(n_max) + 1, Real(p));
    std::vector<Real> inner_err(static_cast<size_t>(n_max) + 1, err_zero());
    for (long m = 1; m <= n_max; ++m) {
        Real acc(p), e(Prec{kErrPrec});
        for (long l = 1; l <= m; ++l) {
            acc += table[static_cast<size_t>(m)][static_cast<size_t>(l)] * T[static_cast<size_t>(l)];
            Int ta = T[static_cast<size_t>(l)] < 0 ? Int(-T[static_cast<size_t>(l)]) : T[static_cast<size_t>(l)];
            e += terr[static_cast<size_t>(m)][static_cast<size_t>(l)] * Real(ta, Prec{kErrPrec});
        }
        inner[static_cast<size_t>(m)] = acc;
        inner_err[static_cast<size_t>(m)] = e;
    }

    std::vector<CheckResult> out;
    for (long n = 1; n <= n_max; ++n) {
        Real acc(p), e(Prec{kErrPrec});
        for (long m = 1; m <= n; ++m) {
            Rat w(binomial(n, m));
            w /= Rat(factorial(static_cast<unsigned long>(m - 1)));
            Real t = inner[static_cast<size_t>(m)] * w;
            if (m % 2 == 0) acc -= t;  // (-1)^(m+1)
            else acc += t;
            e += inner_err[static_cast<size_t>(m)] * Real(w, Prec{kErrPrec});
        }
        out.push_back(mk_eq(tag("lambda_stirling", "n", n), acc, lambda_a.at(n), e + lambda_a.err_at(n),
                            "Stirling-weighted partial-Bell route; the alternating Stirling sums vanish "
                            "identically for l >= 2"));
    }
    return out;
}

std::vector<CheckResult> check_s2_bell(long n_max, const ConstSeq& etas, const PrecisionContext& ctx) {
    std::vector<Real> ys, yerr, ysm, ysmerr;
    weighted_args(etas, n_max, +1, ys, yerr);
    for (size_t i = 0; i < ys.size(); ++i) {
        ysm.push_back(-ys[i]);
        ysmerr.push_back(yerr[i]);
    }
    auto Yp = bell_complete_all(n_max, ys);
    auto Yperr = bell_complete_all_err(n_max, ys, yerr);
    auto Ym = bell_complete_all(n_max, ysm);
    auto Ymerr = bell_complete_all_err(n_max, ysm, ysmerr);
    Prec p{ys[0].prec()};

    std::vector<CheckResult> out;
    for (long n = 1; n <= n_max; ++n) {
        Real acc(p), e(Prec{kErrPrec});
        for (long m = 1; m <= n; ++m) {
            Real ms(p), mse(Prec{kErrPrec});
            for (long j = 0; j <= m - 1; ++j) {
                Int c = binomial(m - 1, j);
                ms += Ym[static_cast<size_t>(m - j)] * Yp[static_cast<size_t>(j)] * c;
                mse += (Ymerr[static_cast<size_t>(m - j)] * err_from(Yp[static_cast<size_t>(j)]) +
                        err_from(Ym[static_cast<size_t>(m - j)]) * Yperr[static_cast<size_t>(j)]) *
                       Real(c, Prec{kErrPrec});
            }
            Rat w(binomial(n, m));
            w /= Rat(factorial(static_cast<unsigned long>(m - 1)));
            acc += ms * w;
            e += mse * Real(w, Prec{kErrPrec});
        }
        Approx plain = s2_value(n, etas, ctx);
        std::string notes = n == 1 ? "double-Bell orientation fixed to match the binomial form; "
                                     "the printed n=1 specialization has its product factors swapped"
                                   : "";
        out.push_back(mk_eq(tag("s2_bell", "n", n), acc, plain.value, e + plain.err, notes));
    }
    return out;
}

std::vector<CheckResult> check_inequalities(Pipeline& pl) {
    std::vector<CheckResult> out;
    long n_max = pl.n_max();
    const auto& xi = pl.xi();
    const auto& sig = pl.sigma();
    const auto& bs = pl.b();
    const auto& zt = pl.zetas();
    const auto& la = pl.lambda(Route::sigma_binomial);

    out.push_back(mk_ineq("ineq_xi2_gt_2xi1", xi.xi1[2], xi.xi1[1] * 2, xi.err[2] + xi.err[1] * 2));
    out.push_back(mk_ineq("ineq_xi2_gt_xi3", xi.xi1[2], xi.xi1[3], xi.err[2] + xi.err[3]));
    for (long m = 1; m <= 5; ++m)
        out.push_back(mk_ineq(tag("ineq_xi_even_gt_odd", "m", m), xi.xi1[static_cast<size_t>(2 * m + 2)],
                              xi.xi1[static_cast<size_t>(2 * m + 1)],
                              xi.err[static_cast<size_t>(2 * m + 2)] + xi.err[static_cast<size_t>(2 * m + 1)]));

    long K = std::min<long>(20, n_max);
    Prec p{pl.ctx().work_bits + 32};
    for (long n = 1; n <= K; ++n) {
        // sigma_{n+1} > 1 - (1 - 2^-(n+1)) zeta(n+1)
        const Approx& z = zt.at(n + 1);
        Real rhs = 1 - (1 - Real::pow2(-(n + 1), p)) * z.value;
        out.push_back(mk_ineq(tag("ineq_sigma_lower", "n", n), sig.at(n + 1), rhs, sig.err_at(n + 1) + z.err));
    }
    for (long n = 1; n <= K; ++n) {
        // zeta(n+1) - 1 - [1 + (-1)^(n+1)] zeta(n+1)/2^(n+1) > b_n
        const Approx& z = zt.at(n + 1);
        Real lhs = z.value - 1;
        if (n % 2 == 1) lhs -= z.value * Real::pow2(-n, p);  // [1 + (-1)^(n+1)] = 2 at odd n
        out.push_back(mk_ineq(tag("ineq_zeta_minus_one_gt_b", "n", n), lhs, bs.at(n), z.err * 2 + bs.err_at(n)));
    }

    // coefficient bound from |log 2(s-1)zeta(s)| on |s| = r, at r = 3/2:
    // mu_{m-1}/m < 2 (r+1) zeta(r) / r^m
    Approx z32 = zeta_real(Real(3, p) / 2, pl.ctx());
    Real r32 = Real(3, p) / 2;
    Real num = z32.value * 5;
    for (long m = 2; m <= std::min<long>(20, n_max + 1); ++m) {
        Real lhs = num / pow_si(r32, m);
        Real rhs = abs(bs.at(m - 1)) / m;
        out.push_back(mk_ineq(tag("ineq_cauchy_bound", "m", m), lhs, rhs, z32.err * 8 + bs.err_at(m - 1),
                              "coefficient bound at r = 3/2; holds but is far from sharp"));
    }

    out.push_back(mk_ineq("ineq_sigma2_negative", Real(0, p), sig.at(2), sig.err_at(2)));
    if (n_max >= 3) {
        out.push_back(mk_ineq("ineq_lambda2_gt_lambda1", la.at(2), la.at(1), la.err_at(2) + la.err_at(1)));
        out.push_back(mk_ineq("ineq_lambda3_gt_lambda2", la.at(3), la.at(2), la.err_at(3) + la.err_at(2)));
        out.push_back(
            mk_ineq("ineq_lambda2_gt_2lambda1", la.at(2), la.at(1) * 2, la.err_at(2) + la.err_at(1) * 2));
    }
    return out;
}

std::vector<CheckResult> sign_report(Pipeline& pl) {
    std::vector<CheckResult> out;
    const auto& bs = pl.b();
    const auto& eta = pl.eta();
    const auto& sig = pl.sigma();
    Prec p{pl.ctx().work_bits};

    Real worst(1, p);
    Real werr = err_zero();
    for (long m = 0; m <= bs.last_index(); ++m) {
        Real v = m % 2 == 0 ? bs.at(m) : -bs.at(m);
        if (v < worst) {
            worst = v;
            werr = bs.err_at(m);
        }
    }
    out.push_back(mk_ineq("sign_b_alternating", worst, Real(0, p), werr,
                          "min over the computed range of (-1)^m b_m"));

    worst = Real(1, p);
    werr = err_zero();
    for (long n = 0; n <= eta.last_index(); ++n) {
        Real v = n % 2 == 1 ? eta.at(n) : -eta.at(n);
        if (v < worst) {
            worst = v;
            werr = eta.err_at(n);
        }
    }
    out.push_back(mk_ineq("sign_eta_alternating", worst, Real(0, p), werr,
                          "min over the computed range of (-1)^(n+1) eta_n"));

    std::string pattern;
    for (long m = 1; m <= std::min<long>(26, sig.last_index()); ++m)
        pattern += sig.at(m) > 0 ? '+' : '-';
    Real m3 = sig.at(1);
    Real e3 = sig.err_at(1);
    if (sig.last_index() >= 3) {
        m3 = min(m3, min(-sig.at(2), -sig.at(3)));
        e3 = max(e3, max(sig.err_at(2), sig.err_at(3)));
    }
    out.push_back(mk_ineq("sign_sigma_pattern", m3, Real(0, p), e3,
                          "observed sigma signs from m=1: " + pattern));
    return out;
}

std::vector<CheckResult> check_identities(Pipeline& pl) {
    std::vector<CheckResult> out;
    long n_max = pl.n_max();
    const auto& ctx = pl.ctx();
    Prec p{ctx.work_bits + 32};
    const auto& derivs = pl.derivs0();
    const auto& gam = pl.gammas();

    for (long n = 0; n <= std::min<long>(6, n_max); ++n) {
        ZetaDerivAt0 lim = zeta_deriv0_limit(n, 256, ctx);
        out.push_back(mk_eq(tag("two_method_zeta_deriv", "n", n), derivs[static_cast<size_t>(n)].delta,
                            lim.delta, derivs[static_cast<size_t>(n)].err + lim.err,
                            "contour-integral route vs accelerated limit route"));
    }

    // (-1)^p gamma_p / p! = sum_{n>=p} C(n,p) (-1)^n delta_n / n!, truncated
    long N = n_max + 1;
    for (long q = 0; q <= std::min<long>(3, n_max); ++q) {
        Real lhs = gam.values[static_cast<size_t>(q)] / factorial(static_cast<unsigned long>(q));
        if (q % 2 == 1) lhs = -lhs;
        Real acc(p), err(Prec{kErrPrec}), last = err_zero();
        for (long n = q; n <= N; ++n) {
            Rat w(binomial(n, q));
            w /= Rat(factorial(static_cast<unsigned long>(n)));
            Real t = derivs[static_cast<size_t>(n)].delta * w;
            if (n % 2 == 1) t = -t;
            acc += t;
            err += derivs[static_cast<size_t>(n)].err * Real(w, Prec{kErrPrec});
            last = err_from(t);
        }
        out.push_back(mk_eq(tag("stieltjes_consistency", "p", q), lhs, acc,
                            err + gam.err[static_cast<size_t>(q)] + last * 8,
                            "series truncated at n = " + std::to_string(N) + "; tail at the last-term scale"));
    }

    {
        Real acc(p), err(Prec{kErrPrec}), last = err_zero();
        for (long n = 0; n <= N; ++n) {
            Real t = derivs[static_cast<size_t>(n)].delta / factorial(static_cast<unsigned long>(n));
            if (n % 2 == 1) t = -t;
            acc += t;
            err += derivs[static_cast<size_t>(n)].err;
            last = err_from(t);
        }
        out.push_back(mk_eq("gamma_sum_identity", Real::euler(p), acc, err + last * 8,
                            "zeta(s) - 1/(s-1) at s -> 1 recovered from the delta sequence"));
    }

    {
        Real lhs = derivs[1].value * 2 - derivs[2].value;
        Real rhs = -(derivs[1].delta * 2 + derivs[2].delta);
        out.push_back(mk_eq("delta_relation_m2", lhs, rhs,
                            derivs[1].err * 3 + derivs[2].err * 2 + ulp_of(lhs) * 8));
    }

    // first oscillations have known signs
    out.push_back(mk_ineq("sign_zeta_osc1_positive", derivs[1].delta * -1, Real(0, p), derivs[1].err,
                          "zeta'(0) + 1 > 0"));
    out.push_back(mk_ineq("sign_zeta_osc2_negative", derivs[2].delta * -1, Real(0, p), derivs[2].err,
                          "zeta''(0)/2! + 1 < 0"));

    // the alternating-binomial-lattice gamma route agrees within its own
    // (polynomially converging) error estimate
    {
        StieltjesSeq hasse = stieltjes_hasse(std::min<long>(1, n_max), ctx, 300);
        for (size_t q = 0; q < hasse.values.size(); ++q)
            out.push_back(mk_eq(tag("stieltjes_hasse_route", "p", static_cast<long>(q)),
                                hasse.values[q], gam.values[q], hasse.err[q] + gam.err[q],
                                hasse.reached_target
                                    ? "series truncation met the target"
                                    : "series truncated before target; err_est reflects the shortfall"));
    }

    {
        DeltaSeq cross = delta_from_gamma(gam, std::min<long>(12, n_max));
        const DeltaSeq& prim = pl.deltas();
        for (long n = 0; n <= std::min<long>(12, n_max); ++n)
            out.push_back(mk_eq(tag("delta_cross_route", "n", n), prim.values[static_cast<size_t>(n)],
                                cross.values[static_cast<size_t>(n)],
                                prim.err[static_cast<size_t>(n)] + cross.err[static_cast<size_t>(n)]));
    }

    {
        const auto& es = pl.eta();
        const auto& eg = pl.eta_gamma();
        for (long n = 1; n <= std::min<long>(15, std::min(es.last_index(), eg.last_index())); ++n)
            out.push_back(
                mk_eq(tag("eta_cross_route", "n", n), es.at(n), eg.at(n), es.err_at(n) + eg.err_at(n)));
    }

    {
        const ConstSeq* routes[4] = {&pl.lambda(Route::sigma_binomial), &pl.lambda(Route::lehmer_route),
                                     &pl.lambda(Route::eta_route), &pl.lambda(Route::bell_xi_route)};
        for (long n = 1; n <= n_max; ++n) {
            Real worst_res(p), worst_tol(1, Prec{kErrPrec});
            double worst_ratio = -1;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    Real res = err_from(routes[i]->at(n) - routes[j]->at(n));
                    Real tol = routes[i]->err_at(n) + routes[j]->err_at(n);
                    long d = res.is_zero() ? -4000 : (tol.is_zero() ? 4000 : res.exp2() - tol.exp2());
                    double ratio = static_cast<double>(d);
                    if (ratio > worst_ratio) {
                        worst_ratio = ratio;
                        worst_res = res;
                        worst_tol = tol;
                    }
                }
            out.push_back(mk_eq_tol(tag("lambda_cross_route", "n", n), worst_res, Real(0, p), worst_tol,
                                    "max-ratio pair among the four routes; tolerance is that pair's combined err"));
        }
        for (long n = 1; n <= n_max; ++n)
            out.push_back(
                mk_ineq(tag("lambda_positive", "n", n), routes[0]->at(n), Real(0, p), routes[0]->err_at(n)));
    }

    out.push_back(mk_eq("xi_sigma1_link", pl.xi().xi1[1] * 2, pl.sigma().at(1),
                        pl.xi().err[1] * 2 + pl.sigma().err_at(1)));

    {
        const auto& xi = pl.xi();
        for (long n = 2; n <= std::min<long>(12, xi.n_max); ++n)
            out.push_back(mk_eq(tag("xi_route_agreement", "n", n), xi.xi1[static_cast<size_t>(n)],
                                xi.xi1_integral[static_cast<size_t>(n)], xi.err[static_cast<size_t>(n)] * 2));
        for (long n = 1; n <= std::min<long>(12, xi.n_max); ++n)
            out.push_back(mk_ineq(tag("xi_positive", "n", n), xi.xi1[static_cast<size_t>(n)], Real(0, p),
                                  xi.err[static_cast<size_t>(n)]));
    }

    {
        auto [trend, osc] = maslanka_decompose(n_max, pl.eta_gamma(), pl.zetas(), ctx);
        const auto& lc = pl.lambda(Route::eta_route);
        for (long n = 1; n <= n_max; ++n)
            out.push_back(mk_eq_tol(tag("maslanka_split", "n", n), trend.at(n) + osc.at(n), lc.at(n),
                                    Real(Prec{kErrPrec}), "exact by construction: same summands, same order"));
        // the trend dips over m = 1..3 before settling into monotone growth;
        // the monotonicity claim is checked from the measured onset m = 4
        Real margin(1, p), merr = err_zero();
        for (long n = 4; n < n_max; ++n) {
            Real d = trend.at(n + 1) - trend.at(n);
            if (d < margin) {
                margin = d;
                merr = trend.err_at(n + 1) + trend.err_at(n);
            }
        }
        std::string tnote = "min forward difference for m >= 4; initial values";
        for (long n = 1; n <= std::min<long>(4, n_max); ++n) tnote += " " + format_sci(trend.at(n), 4);
        if (n_max >= 5)
            out.push_back(mk_ineq("maslanka_trend_increasing", margin, Real(0, p), merr, tnote));
    }

    {
        const auto& bs = pl.b();
        const auto& zt = pl.zetas();
        const auto& sig = pl.sigma();
        long M = n_max + 1;
        Real acc(p), err(Prec{kErrPrec}), last = err_zero();
        for (long m = 2; m <= M; ++m) {
            // (-1)^(m-1)[mu_{m-1} - zeta(m)/2^m] = b_{m-1} - (-1)^(m-1) zeta(m)/2^m
            Real zterm = Real::pow2(-m, p) * zt.at(m).value;
            Real term = m % 2 == 1 ? bs.at(m - 1) - zterm : bs.at(m - 1) + zterm;
            acc += term;
            err += bs.err_at(m - 1) + zt.at(m).err;
            last = err_from(term);
        }
        out.push_back(mk_eq("lehmer_sum_identity", acc, sig.at(1) * 2, err + sig.err_at(1) * 2 + last * 2,
                            "partial sum to m = " + std::to_string(M) + "; tail at the last-term scale"));
    }

    if (n_max >= 7) {
        const auto& sig = pl.sigma();
        Real margin(1, p), merr = err_zero();
        long used = 0;
        for (long m = 6; m < sig.last_index(); ++m) {
            if (!(err_from(sig.at(m + 1)) > sig.err_at(m + 1) * 16)) break;
            Real d = abs(sig.at(m)) - abs(sig.at(m + 1));
            if (d < margin) {
                margin = d;
                merr = sig.err_at(m) + sig.err_at(m + 1);
            }
            used = m + 1;
        }
        out.push_back(mk_ineq("sigma_abs_decreasing", margin, Real(0, p), merr,
                              "empirical decay check through m = " + std::to_string(used)));
    }

    {
        const auto& eta = pl.eta();
        Real margin(1, p), merr = err_zero();
        long used = 0;
        for (long k = 0; k < eta.last_index(); ++k) {
            if (!(err_from(eta.at(k + 1)) > eta.err_at(k + 1) * 16)) break;
            Real d = abs(eta.at(k)) - abs(eta.at(k + 1));
            if (d < margin) {
                margin = d;
                merr = eta.err_at(k) + eta.err_at(k + 1);
            }
            used = k + 1;
        }
        out.push_back(mk_ineq("eta_abs_decreasing", margin, Real(0, p), merr,
                              "empirical decay check through k = " + std::to_string(used)));
    }

    {
        const auto& la = pl.lambda(Route::sigma_binomial);
        const auto& sig = pl.sigma();
        std::vector<Real> lam(la.values.begin(), la.values.end());
        auto back = sign_binomial_transform(lam);
        Real worst_res(p), worst_tol(1, Prec{kErrPrec});
        long worst_d = -100000;
        for (long n = 1; n <= n_max; ++n) {
            Real res = err_from(back[static_cast<size_t>(n - 1)] - sig.at(n));
            Real tol(Prec{kErrPrec});
            for (long m = 1; m <= n; ++m) tol += la.err_at(m) * Real(binomial(n, m), Prec{kErrPrec});
            tol = (tol + sig.err_at(n)) * 2;
            long d = res.is_zero() ? -4000 : res.exp2() - tol.exp2();
            if (d > worst_d) {
                worst_d = d;
                worst_res = res;
                worst_tol = tol;
            }
        }
        out.push_back(mk_eq_tol("binomial_involution_replay", worst_res, Real(0, p), worst_tol,
                                "worst index of the lambda -> sigma inverse transform, 2x err budget"));
    }

    return out;
}

ConjectureScan conjecture_scan(Pipeline& pl, long k_max) {
    const auto& eta = pl.eta();
    const auto& zt = pl.zetas();
    Prec p{pl.ctx().work_bits};
    ConjectureScan s;
    s.k_min = 1;
    s.k_max = std::min(k_max, eta.last_index());
    s.best_alpha = Real(0, p);
    s.best_alpha_from2 = Real(0, p);
    Real third = Real(1, p) / 3;
    Real model = -third;       // (-1/3)^(k+1), k = 0
    Real scale3 = Real(3, p);  // 3^(k+1), k = 0
    for (long k = 1; k <= s.k_max; ++k) {
        model = model * (-third);
        scale3 = scale3 * 3;
        Real e = eta.at(k);
        s.eta.push_back(e);
        s.model.push_back(model);
        s.ratio.push_back(e / model);
        s.refined_ratio.push_back(e / (model * zt.at(k + 1).value));
        Real a = abs(e) * scale3;
        if (a > s.best_alpha) s.best_alpha = a;
        if (k >= 2 && a > s.best_alpha_from2) s.best_alpha_from2 = a;
        if (a > 1) s.violations.push_back(k);
    }
    s.clean_above_k = s.violations.empty() ? 0 : s.violations.back();

    Real c = Real::euler(p) + log(Real::pi(p)) - 1;
    Real one_m_alpha = 1 - s.best_alpha;
    Real pw(1, p);
    s.bound_positive_upto = 0;
    bool still_positive = true;
    for (long n = 1; n <= s.k_max; ++n) {
        pw = pw * 3 / 2;
        Real bound = Real(n, p) * c / 2 + one_m_alpha * (pw - 1);
        s.bound_values.push_back(bound);
        if (still_positive && bound > 0) s.bound_positive_upto = n;
        else still_positive = false;
    }
    return s;
}

Report run_verify(Pipeline& pl) {
    Report r;
    r.command = "verify";
    r.n_max = pl.n_max();
    r.precision_bits = pl.ctx().work_bits;

    long kb = std::min<long>(12, pl.n_max());
    long ks = std::min<long>(10, pl.n_max());
    append(r.results, check_bell_xi_sigma(kb, pl.sigma(), pl.xi()));
    append(r.results, check_bell_gamma_eta(kb, pl.gammas(), pl.eta()));
    append(r.results, check_bell_b_zeta(kb, pl.b(), pl.derivs0(), pl.gammas()));
    append(r.results, check_lambda_stirling(ks, pl.sigma(), pl.lambda(Route::sigma_binomial)));
    append(r.results, check_s2_bell(ks, pl.eta(), pl.ctx()));
    append(r.results, check_inequalities(pl));
    append(r.results, check_identities(pl));
    append(r.results, sign_report(pl));

    std::sort(r.results.begin(), r.results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
    for (const auto& c : r.results) (c.passed ? r.passed : r.failed)++;
    return r;
}

}  // namespace lik
