#pragma once

#include "lik/real.hpp"

#include <functional>
#include <vector>

namespace lik {

// Vector-valued tanh-sinh quadrature over a finite interval. One node sweep
// serves every component, so a whole family of integrals (e.g. all derivative
// orders at once) costs a single pass of transcendental evaluations.
//
// Node tables are cached per working precision and grown level by level;
// summation order is fixed, so results are bit-reproducible.

struct QuadResult {
    std::vector<Real> values;
    std::vector<Real> errs;   // per-component: last refinement delta + rounding slack
    bool converged = false;
    int levels = 0;
};

using BatchIntegrand = std::function<void(const Real& x, std::vector<Real>& out)>;

QuadResult integrate_batch(const BatchIntegrand& f, const Real& a, const Real& b, long ncomp,
                           long prec_bits, const Real& abs_target, const Real& rel_target,
                           int max_level = 11);

}  // namespace lik
