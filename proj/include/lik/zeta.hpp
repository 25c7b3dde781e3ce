#pragma once

#include "lik/real.hpp"

#include <string>
#include <vector>

namespace lik {

struct Approx {
    Real value;
    Real err;
};

// zeta(s) for real s > -1, s != 1: truncated Dirichlet sum with
// Euler-Maclaurin tail corrections, error bounded by the first omitted
// correction term (valid for real s).
Approx zeta_real(const Real& s, const PrecisionContext& ctx);

// Integer-argument values zeta(2..n_max), evaluated once at work_bits + 32.
struct ZetaTable {
    long n_max = 1;
    std::vector<Approx> z;  // index m, valid for 2 <= m <= n_max
    const Approx& at(long m) const;
};
ZetaTable zeta_int_table(long n_max, const PrecisionContext& ctx);

enum class DerivMethod { abel_plana, limit_formula };

// zeta^(n)(0) together with the oscillation delta_n = (-1)^n [zeta^(n)(0) + n!].
// delta is the primary stored quantity: for large n the value field loses the
// oscillation to the n! term at any fixed precision, while delta is exact
// output of both evaluation routes.
struct ZetaDerivAt0 {
    long n = 0;
    Real value;
    Real delta;
    Real err;  // absolute bound for delta (value inherits it)
    DerivMethod method = DerivMethod::abel_plana;
};

// All of zeta^(n)(0), n = 0..n_max, in one Abel-Plana node sweep:
// zeta^(n)(0) = -n! + 2 (-1)^(n+1) Im INT_0^inf log^n(1+ix)/(e^(2 pi x)-1) dx.
std::vector<ZetaDerivAt0> zeta_derivs0_abel_plana(long n_max, const PrecisionContext& ctx);
ZetaDerivAt0 zeta_deriv0_abel_plana(long n, const PrecisionContext& ctx);

// Independent route: the limit formula
// (-1)^n [zeta^(n)(0) + n!] = lim_m [sum_{k<=m} log^n k - INT_1^m log^n x dx - log^n(m)/2]
// evaluated at finite cutoff m with Euler-Maclaurin tail acceleration.
ZetaDerivAt0 zeta_deriv0_limit(long n, long m_cutoff, const PrecisionContext& ctx);

struct StieltjesSeq {
    std::vector<Real> values;  // gamma_0..gamma_n_max
    std::vector<Real> err;
    bool reached_target = true;
    std::string route;  // "limit_em" | "hasse"
};

// Production route: gamma_n = lim_N [sum_{k<=N} log^n k / k - log^(n+1) N/(n+1)],
// accelerated with Euler-Maclaurin tail corrections at a finite cutoff.
StieltjesSeq stieltjes(long n_max, const PrecisionContext& ctx);

// Series route over the alternating binomial lattice:
// gamma_n = -1/(n+1) sum_i 1/(i+1) sum_j C(i,j) (-1)^j log^(n+1)(1+j).
// Converges only polynomially; err_est is honest and reached_target records
// whether the truncation met ctx.target_abs_err.
StieltjesSeq stieltjes_hasse(long n_max, const PrecisionContext& ctx, long i_max = 400);

struct DeltaSeq {
    std::vector<Real> values;  // delta_0..delta_n_max
    std::vector<Real> err;
};

// Primary route, straight off the derivative engine.
DeltaSeq delta_seq(const std::vector<ZetaDerivAt0>& derivs, long n_max);
// Cross-check route delta_n = sum_p gamma_{n+p}/p!, truncated; the tail
// estimate is folded into err.
DeltaSeq delta_from_gamma(const StieltjesSeq& g, long n_max);

}  // namespace lik
