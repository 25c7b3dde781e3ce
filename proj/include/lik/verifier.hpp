#pragma once

#include "lik/pipeline.hpp"

#include <string>
#include <vector>

namespace lik {

// One verification outcome. kind distinguishes the pass rule:
//   eq:   passed <=> |residual| <= tolerance   (tolerance = 4x propagated err)
//   ineq: passed <=> residual > tolerance      (margin strictly above combined err)
struct CheckResult {
    std::string check_id;
    std::string kind;  // "eq" | "ineq"
    Real lhs;
    Real rhs;
    Real residual;
    Real tolerance;
    bool passed = false;
    std::string notes;
};

// Y_n(-sigma_1, -1! sigma_2, ..., -(n-1)! sigma_n) = 2 (-1)^n xi^(n)(1)
std::vector<CheckResult> check_bell_xi_sigma(long n_max, const ConstSeq& sigmas, const XiDerivSeq& xi);

// Y_m(-eta_0, -1! eta_1, ...) = (-1)^(m-1) m gamma_{m-1}
std::vector<CheckResult> check_bell_gamma_eta(long m_max, const StieltjesSeq& gammas, const ConstSeq& etas);

// Y_m(0! b_0, ..., (m-1)! b_{m-1}) = 2[m zeta^(m-1)(0) - zeta^(m)(0)], plus the
// truncated gamma-series form of the same right side.
std::vector<CheckResult> check_bell_b_zeta(long m_max, const ConstSeq& bs,
                                           const std::vector<ZetaDerivAt0>& derivs,
                                           const StieltjesSeq& gammas);

// lambda_n via the Stirling-weighted partial-Bell formula vs the sigma route.
std::vector<CheckResult> check_lambda_stirling(long n_max, const ConstSeq& sigmas, const ConstSeq& lambda_a);

// S2(n) via the double Bell sum vs the plain binomial form.
std::vector<CheckResult> check_s2_bell(long n_max, const ConstSeq& etas, const PrecisionContext& ctx);

// The inequality suite over the computed ranges.
std::vector<CheckResult> check_inequalities(Pipeline& pl);

// Identity suite: two-method derivative agreement, Stieltjes consistency,
// gamma-sum, delta relations, cross-route agreements, positivity, the
// Maslanka split, the Lehmer sum, decay monotonicity, involution replay.
std::vector<CheckResult> check_identities(Pipeline& pl);

// Sign structure of b, eta and the leading sigma pattern.
std::vector<CheckResult> sign_report(Pipeline& pl);

struct ConjectureScan {
    long k_min = 1;
    long k_max = 1;
    std::vector<Real> eta;            // eta_k for k = k_min..k_max
    std::vector<Real> model;          // (-1/3)^(k+1)
    std::vector<Real> ratio;          // eta_k / (-1/3)^(k+1)
    std::vector<Real> refined_ratio;  // eta_k / [(-1/3)^(k+1) zeta(k+1)]
    Real best_alpha;                  // max over k of |eta_k| 3^(k+1)
    Real best_alpha_from2;            // same restricted to k >= 2 (report value only)
    std::vector<long> violations;     // k with |eta_k| > 3^-(k+1)
    long clean_above_k = 0;           // smallest N with no violations for k > N in range
    std::vector<Real> bound_values;   // lower-bound curve at best_alpha, n = 1..k_max
    long bound_positive_upto = 0;     // largest n with a positive bound value
};

ConjectureScan conjecture_scan(Pipeline& pl, long k_max);

struct Report {
    std::string command;
    long n_max = 0;
    long precision_bits = 0;
    std::vector<CheckResult> results;  // sorted by check_id
    long passed = 0;
    long failed = 0;
};

// Full suite at ranges keyed to pl.n_max(); results sorted by check_id.
Report run_verify(Pipeline& pl);

}  // namespace lik
