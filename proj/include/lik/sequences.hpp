#pragma once

#include "lik/exact.hpp"
#include "lik/real.hpp"
#include "lik/xi.hpp"
#include "lik/zeta.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lik {

enum class Family { eta, lehmer_b, sigma, lambda, s1, s2 };

enum class Route {
    sigma_binomial,   // lambda from the sigma alternating binomial sum
    lehmer_route,     // lambda from n lambda_1 + binomial sum over zeta/b brackets
    eta_route,        // lambda from trend + S1 + S2 over eta
    bell_xi_route,    // lambda from partial Bell polynomials of 2 xi^(j)(1)
    lehmer_relation,  // sigma from b and integer zeta values
    eta_sigma,        // eta from sigma and integer zeta values
    gamma_log_series, // eta from the log of the gamma-coefficient series
    b_log_series      // b from the log of the (s-1)zeta(s) Taylor series at 0
};

const char* route_name(Route r);
const char* family_name(Family f);

// One constant family: values[i] is entry (start_index + i).
struct ConstSeq {
    Family family = Family::eta;
    long start_index = 0;
    std::vector<Real> values;
    std::vector<Real> err;
    Route route = Route::eta_sigma;

    long last_index() const { return start_index + static_cast<long>(values.size()) - 1; }
    const Real& at(long n) const;
    const Real& err_at(long n) const;
};

// eta_0..eta_{n_max-1} by forming the Taylor series of (s-1)zeta(s) about
// s = 1 from the gamma coefficients and reading the log series.
ConstSeq eta_from_gamma(long n_max, const StieltjesSeq& gammas);

// eta_0 = -gamma; eta_n = (-1)^(n+1)[sigma_{n+1} + (1 - 2^-(n+1)) zeta(n+1) - 1].
// Guarded: eta_n ~ 3^-(n+1) emerges from O(1) cancellation.
ConstSeq eta_from_sigma(long n_max, const ConstSeq& sigmas, const ZetaTable& zt,
                        const PrecisionContext& ctx);

// b_0..b_{n_max}: Taylor coefficients of 2(s-1)zeta(s) at 0 assembled from the
// delta oscillations, then the log-series recurrence.
ConstSeq lehmer_b(long n_max, const std::vector<ZetaDerivAt0>& derivs);

// sigma_1 from its closed form; sigma_m = (-1)^(m-1) 2^-m zeta(m) - b_{m-1}.
ConstSeq sigma_seq(long n_max, const ConstSeq& bs, const ZetaTable& zt,
                   const PrecisionContext& ctx);

struct LambdaInputs {
    const ConstSeq* sigmas = nullptr;   // route sigma_binomial
    const ConstSeq* bs = nullptr;       // route lehmer_route
    const ConstSeq* etas = nullptr;     // route eta_route
    const XiDerivSeq* xi = nullptr;     // route bell_xi_route
    const ZetaTable* zetas = nullptr;   // routes lehmer_route / eta_route
};

// lambda_1..lambda_n_max by the requested route. Throws precision_shortfall
// if the running binomial accumulation exceeds the cancellation budget.
ConstSeq li_lambda(long n_max, Route route, const LambdaInputs& in, const PrecisionContext& ctx);

// S1(n) over integer zeta values and S2(n) = -sum C(n,m) eta_{m-1}.
Approx s1_value(long n, const ZetaTable& zt, const PrecisionContext& ctx);
Approx s2_value(long n, const ConstSeq& etas, const PrecisionContext& ctx);

// trend/oscillation split of lambda; trend + osc reproduces the eta route
// exactly (same summands, same order).
std::pair<ConstSeq, ConstSeq> maslanka_decompose(long n_max, const ConstSeq& etas,
                                                 const ZetaTable& zt, const PrecisionContext& ctx);

// The involutive signed binomial transform a_n -> -sum_m (-1)^m C(n,m) a_m
// linking sigma and lambda (1-based input and output).
template <class T>
std::vector<T> sign_binomial_transform(const std::vector<T>& a) {
    std::vector<T> out;
    long N = static_cast<long>(a.size());
    for (long n = 1; n <= N; ++n) {
        T acc = a[0] - a[0];
        for (long m = 1; m <= n; ++m) {
            T t = a[m - 1];
            if constexpr (std::is_same_v<T, Real>) t = t * binomial(n, m);
            else t = t * T(binomial(n, m));
            if (m % 2 == 1) acc += t;
            else acc -= t;
        }
        out.push_back(acc);
    }
    return out;
}

}  // namespace lik
