#pragma once

#include "lik/real.hpp"
#include "lik/series.hpp"
#include "lik/zeta.hpp"

#include <vector>

namespace lik {

// omega(x) = sum_{k>=1} e^(-pi k^2 x), truncated so the geometric tail bound
// is below target/2.
struct ThetaSum {
    Real x;
    Real value;
    long k_used = 0;
    Real err;
};
ThetaSum theta_omega(const Real& x, const PrecisionContext& ctx);

// Taylor data of 2 xi(s) about s = 1: alpha_n coefficients, Keiper's beta_n,
// and xi^(n)(1) = alpha_n n!/2, cross-validated against the direct
// theta-integral route for the derivatives (n >= 2).
struct XiDerivSeq {
    long n_max = 0;
    std::vector<Real> xi1;           // xi^(n)(1), n = 0..n_max (alpha/beta route)
    std::vector<Real> xi1_integral;  // direct-integral values, n >= 2 (index n; 0,1 unused)
    std::vector<Real> alpha;         // alpha_0..alpha_n_max
    std::vector<Real> beta;          // beta_0..beta_{n_max-1}
    std::vector<Real> err;           // per-n bound for xi1
};

// Throws if the two derivative routes disagree beyond their combined error.
XiDerivSeq xi_deriv1(long n_max, const PrecisionContext& ctx);

// beta_n alone (closed form for n = 0, quadrature otherwise).
Approx keiper_beta(long n, const PrecisionContext& ctx);

// alpha_n coefficients of 2 xi(s) about s = 1 as a PowerSeries (center 1).
PowerSeries xi_taylor(long n_max, const PrecisionContext& ctx);

}  // namespace lik
