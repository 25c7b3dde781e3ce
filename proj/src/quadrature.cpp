#include "lik/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace lik {

namespace {

struct Node {
    Real delta;   // distance from the interval endpoint, in units of (b-a)/2
    Real weight;  // (pi/2) cosh(t) / cosh^2((pi/2) sinh t)
};

struct Rule {
    long prec;
    double t_max;
    // levels[0]: t = 0, 1, 2, ...; levels[l]: odd multiples of 2^-l
    std::vector<std::vector<Node>> levels;

    void ensure_level(int level) {
        Prec p{prec};
        Real half_pi = Real::pi(p) / 2;
        while (static_cast<int>(levels.size()) <= level) {
            int l = static_cast<int>(levels.size());
            std::vector<Node> nodes;
            double h = l == 0 ? 1.0 : std::ldexp(1.0, -l);
            long k = l == 0 ? 0 : 1;
            long step = l == 0 ? 1 : 2;
            for (;; k += step) {
                double td = k * h;
                if (td > t_max) break;
                Real t(td, p);
                Real u = half_pi * sinh(t);
                Real e2u = exp(u * 2);
                Node nd{2 / (e2u + 1), half_pi * cosh(t) / ((e2u + 2 + 1 / e2u) / 4)};
                nodes.push_back(std::move(nd));
            }
            levels.push_back(std::move(nodes));
        }
    }
};

std::mutex g_rules_mu;
std::map<long, std::shared_ptr<Rule>> g_rules;

std::shared_ptr<Rule> rule_for(long prec) {
    std::lock_guard<std::mutex> lock(g_rules_mu);
    auto it = g_rules.find(prec);
    if (it != g_rules.end()) return it->second;
    auto r = std::make_shared<Rule>();
    r->prec = prec;
    r->t_max = std::asinh((static_cast<double>(prec) + 40.0) * 0.6931471805599453 / 3.141592653589793) + 0.1;
    g_rules[prec] = r;
    return r;
}

}  // namespace

QuadResult integrate_batch(const BatchIntegrand& f, const Real& a, const Real& b, long ncomp,
                           long prec_bits, const Real& abs_target, const Real& rel_target,
                           int max_level) {
    Prec p{prec_bits};
    auto rule = rule_for(prec_bits);
    {
        // node construction is serialized; evaluation below is lock-free
        std::lock_guard<std::mutex> lock(g_rules_mu);
        rule->ensure_level(max_level);
    }

    Real half = (b - a) / 2;
    std::vector<Real> sum(ncomp, Real(p));
    std::vector<Real> fx(ncomp, Real(p));
    std::vector<Real> peak(ncomp, err_zero());  // max |weight * f| seen, for rounding slack
    std::vector<Real> prev, est(ncomp, Real(p)), errs(ncomp, err_zero());

    long nodes_seen = 0;
    QuadResult out;
    for (int level = 0; level <= max_level; ++level) {
        const auto& nodes = rule->levels[level];
        for (const auto& nd : nodes) {
            Real off = half * nd.delta;
            for (int side = 0; side < 2; ++side) {
                if (level == 0 && &nd == &nodes[0] && side == 1) continue;  // t = 0 once
                Real x = side == 0 ? a + off : b - off;
                f(x, fx);
                for (long c = 0; c < ncomp; ++c) {
                    Real term = nd.weight * fx[c];
                    sum[c] += term;
                    Real m = err_from(term);
                    if (m > peak[c]) peak[c] = m;
                }
                ++nodes_seen;
            }
        }
        Real h = Real::pow2(-level, p);
        bool ok = level >= 2;
        for (long c = 0; c < ncomp; ++c) {
            est[c] = sum[c] * h * half;
            if (level >= 1) {
                Real d = err_from(est[c] - prev[c]);
                errs[c] = d;
                Real bar = max(abs_target.to_prec(Prec{kErrPrec}), rel_target * err_from(est[c]));
                if (!(d <= bar)) ok = false;
            } else {
                ok = false;
            }
        }
        prev = est;
        out.levels = level;
        if (ok) {
            out.converged = true;
            break;
        }
    }

    // rounding slack: every node contributes ~1 ulp of the largest term
    Real n_nodes(static_cast<long>(nodes_seen), Prec{kErrPrec});
    for (long c = 0; c < ncomp; ++c)
        errs[c] += peak[c] * n_nodes * Real::pow2(-(prec_bits - 4), Prec{kErrPrec}) * err_from(half);
    out.values = std::move(est);
    out.errs = std::move(errs);
    return out;
}

}  // namespace lik
