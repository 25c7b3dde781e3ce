#include "lik/zeta.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace lik;
using likt::close_abs;
using likt::lit;
using likt::shared_pipeline;

namespace {

// oracle: direct Dirichlet summation with a bracketing integral tail,
// valid for real s >= 2: sum_{k>K} k^-s lies in (tail_lo, tail_hi)
struct DirectZeta {
    Real lo, hi;
};
DirectZeta zeta_direct_oracle(long s, long K, Prec p) {
    Real sum(p);
    for (long k = 1; k <= K; ++k) sum += pow_si(Real(k, p), -s);
    // integral bounds: INT_{K+1}^inf < tail < INT_K^inf of x^-s
    Real hi = pow_si(Real(K, p), -(s - 1)) / (s - 1);
    Real lo = pow_si(Real(K + 1, p), -(s - 1)) / (s - 1);
    return {sum + lo, sum + hi};
}

}  // namespace

TEST_CASE("zeta on the real line: spot values and oracle bracket") {
    auto ctx = PrecisionContext::with_bits(256);
    Prec p = ctx.prec();

    auto z0 = zeta_real(Real(0, p), ctx);
    CHECK(close_abs(z0.value, Real(-1, p) / 2, lit("1e-60")));

    auto z2 = zeta_real(Real(2, p), ctx);
    auto br2 = zeta_direct_oracle(2, 4000, p);
    CHECK(z2.value > br2.lo);
    CHECK(z2.value < br2.hi);
    CHECK(close_abs(z2.value, Real::pi(p) * Real::pi(p) / 6, lit("1e-60")));

    auto z3 = zeta_real(Real(3, p), ctx);
    auto br3 = zeta_direct_oracle(3, 2000, p);
    CHECK(z3.value > br3.lo);
    CHECK(z3.value < br3.hi);

    auto zh = zeta_real(Real(3, p) / 2, ctx);  // s = 1.5 used by the coefficient bound
    CHECK(zh.value > Real(2, p));
    CHECK(zh.value < Real(3, p));

    CHECK_THROWS_AS(zeta_real(Real(1, p), ctx), domain_error);
    CHECK_THROWS_AS(zeta_real(Real(-3, p) / 2, ctx), domain_error);
}

TEST_CASE("zeta integer table bounds and range checks") {
    auto ctx = PrecisionContext::with_bits(192);
    auto t = zeta_int_table(12, ctx);
    CHECK_THROWS_AS(t.at(1), std::out_of_range);
    CHECK_THROWS_AS(t.at(13), std::out_of_range);
    for (long m = 2; m <= 12; ++m) {
        CHECK(t.at(m).value > 1);
        CHECK(t.at(m).err <= ctx.target_abs_err);
    }
    CHECK(t.at(12).value < t.at(2).value);
}

TEST_CASE("derivatives at zero: contour route spot values") {
    auto ctx = PrecisionContext::with_bits(256);
    Prec p = ctx.prec();
    auto d = zeta_derivs0_abel_plana(3, ctx);

    CHECK(d[0].value == Real(-1, p) / 2);
    CHECK(close_abs(d[1].value, -log(Real::pi(p) * 2) / 2, lit("1e-60")));
    CHECK(d[1].value + 1 > 0);  // first oscillation is positive
    CHECK(d[2].delta < 0);      // second is negative

    // second derivative against its closed form through gamma_1
    auto g = stieltjes(1, ctx);
    Real gam = Real::euler(p);
    Real closed = g.values[1] + gam * gam / 2 - Real::pi(p) * Real::pi(p) / 24 -
                  pow_si(log(Real::pi(p) * 2), 2) / 2;
    CHECK(close_abs(d[2].value, closed, (d[2].err + g.err[1]) * 8 + lit("1e-65")));
}

TEST_CASE("derivatives at zero: accelerated limit route and agreement") {
    auto ctx = PrecisionContext::with_bits(256);
    Prec p = ctx.prec();
    auto lim0 = zeta_deriv0_limit(0, 128, ctx);
    CHECK(close_abs(lim0.value, Real(-1, p) / 2, lit("1e-55")));
    CHECK(lim0.delta == Real(1, Prec{288}) / 2);

    auto d = zeta_derivs0_abel_plana(6, ctx);
    for (long n = 1; n <= 6; ++n) {
        auto lim = zeta_deriv0_limit(n, 256, ctx);
        CHECK(close_abs(lim.delta, d[static_cast<size_t>(n)].delta,
                        (lim.err + d[static_cast<size_t>(n)].err) * 2 + lit("1e-60")));
    }
}

TEST_CASE("stieltjes constants: production route") {
    auto ctx = PrecisionContext::with_bits(256);
    Prec p = ctx.prec();
    auto g = stieltjes(8, ctx);
    CHECK(g.route == "limit_em");
    CHECK(g.reached_target);

    // gamma_0 is Euler's constant (independent library value)
    CHECK(close_abs(g.values[0], Real::euler(p), lit("1e-65")));

    // gamma_1, frozen after cross-validation against the derivative chain
    CHECK(close_abs(g.values[1], lit("-0.0728158454836767248605863758749013191377363383"), lit("1e-40")));

    // independent route: gamma_p = (-1)^p p! sum_n C(n,p) (-1)^n delta_n / n!
    auto d = zeta_derivs0_abel_plana(40, ctx);
    for (long q = 0; q <= 3; ++q) {
        Real acc(p);
        for (long n = q; n <= 40; ++n) {
            Rat w(binomial(n, q));
            w /= Rat(factorial(static_cast<unsigned long>(n)));
            Real t = d[static_cast<size_t>(n)].delta * w;
            acc += (n % 2 == 1) ? -t : t;
        }
        acc = acc * factorial(static_cast<unsigned long>(q));
        if (q % 2 == 1) acc = -acc;
        CHECK(close_abs(g.values[static_cast<size_t>(q)], acc, lit("1e-40")));
    }
}

TEST_CASE("stieltjes gamma_1 against the brute-force limit oracle") {
    // partial sums of log k / k minus log^2 N / 2 at N, 2N, 4N, fitted with the
    // error model (c0 + c1 log N)/N
    auto a_of = [](long N) {
        double s = 0;
        for (long k = 2; k <= N; ++k) s += std::log(static_cast<double>(k)) / static_cast<double>(k);
        double L = std::log(static_cast<double>(N));
        return s - L * L / 2;
    };
    double N = 200000;
    double a1 = a_of(static_cast<long>(N)), a2 = a_of(static_cast<long>(2 * N)), a4 = a_of(static_cast<long>(4 * N));
    // solve a(N) = g + (c0 + c1 log N)/N for g
    double l1 = std::log(N), l2 = std::log(2 * N), l4 = std::log(4 * N);
    // 3x3 system in (g, c0, c1)
    double m[3][4] = {{1, 1 / N, l1 / N, a1}, {1, 1 / (2 * N), l2 / (2 * N), a2}, {1, 1 / (4 * N), l4 / (4 * N), a4}};
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
        std::swap(m[c], m[piv]);
        for (int r = 0; r < 3; ++r)
            if (r != c) {
                double f = m[r][c] / m[c][c];
                for (int cc = c; cc < 4; ++cc) m[r][cc] -= f * m[c][cc];
            }
    }
    double oracle = m[0][3] / m[0][0];
    auto g = stieltjes(1, PrecisionContext::with_bits(128));
    CHECK(std::fabs(g.values[1].to_double() - oracle) < 1e-8);
}

TEST_CASE("stieltjes via the alternating binomial series: honest shortfall") {
    auto ctx = PrecisionContext::with_bits(128);
    auto h = stieltjes_hasse(1, ctx, 220);
    CHECK(h.route == "hasse");
    CHECK_FALSE(h.reached_target);  // polynomial convergence cannot meet the target
    auto g = stieltjes(1, ctx);
    for (size_t i = 0; i < h.values.size(); ++i) {
        CHECK(abs(h.values[i] - g.values[i]) <= h.err[i]);  // err_est is honest
        CHECK(h.err[i] > ctx.target_abs_err);
    }
}

TEST_CASE("delta sequence and its gamma-series cross route") {
    auto& pl = shared_pipeline(12, 256);
    const auto& d = pl.deltas();
    Prec p{256};
    CHECK(close_abs(d.values[0], Real(1, p) / 2, lit("1e-60")));

    // delta_n / n! shrinks over the computed range
    Real r5 = abs(d.values[5]) / factorial(5);
    Real r12 = abs(d.values[12]) / factorial(12);
    CHECK(r12 < r5);

    // m zeta^(m-1)(0) - zeta^(m)(0) = (-1)^(m-1)[m delta_{m-1} + delta_m], m = 2
    const auto& dv = pl.derivs0();
    Real lhs = dv[1].value * 2 - dv[2].value;
    Real rhs = -(dv[1].delta * 2 + dv[2].delta);
    CHECK(close_abs(lhs, rhs, lit("1e-60")));

    DeltaSeq cross = delta_from_gamma(pl.gammas(), 8);
    for (long n = 0; n <= 8; ++n)
        CHECK(close_abs(d.values[static_cast<size_t>(n)], cross.values[static_cast<size_t>(n)],
                        (d.err[static_cast<size_t>(n)] + cross.err[static_cast<size_t>(n)]) * 4));
}

TEST_CASE("precision ladder: doubling the budget stays within err_est") {
    auto c1 = PrecisionContext::with_bits(192);
    auto c2 = PrecisionContext::with_bits(384);
    auto z1 = zeta_real(Real(2, c1.prec()), c1);
    auto z2 = zeta_real(Real(2, c2.prec()), c2);
    CHECK(abs(z1.value - z2.value) <= z1.err);

    auto d1 = zeta_derivs0_abel_plana(4, c1);
    auto d2 = zeta_derivs0_abel_plana(4, c2);
    for (long n = 1; n <= 4; ++n)
        CHECK(abs(d1[static_cast<size_t>(n)].delta - d2[static_cast<size_t>(n)].delta) <=
              d1[static_cast<size_t>(n)].err);

    auto g1 = stieltjes(3, c1);
    auto g2 = stieltjes(3, c2);
    for (size_t i = 0; i < g1.values.size(); ++i) CHECK(abs(g1.values[i] - g2.values[i]) <= g1.err[i]);
}
