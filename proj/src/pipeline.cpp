#include "lik/pipeline.hpp"

namespace lik {

long Pipeline::gamma_count() const { return n_max_ + 44; }

const ZetaTable& Pipeline::zetas() {
    if (!zetas_) zetas_ = zeta_int_table(n_max_ + 2, ctx_);
    return *zetas_;
}

const std::vector<ZetaDerivAt0>& Pipeline::derivs0() {
    if (!derivs_) derivs_ = zeta_derivs0_abel_plana(n_max_ + 1, ctx_);
    return *derivs_;
}

const ConstSeq& Pipeline::b() {
    if (!b_) b_ = lehmer_b(n_max_, derivs0());
    return *b_;
}

const ConstSeq& Pipeline::sigma() {
    if (!sigma_) sigma_ = sigma_seq(n_max_ + 1, b(), zetas(), ctx_);
    return *sigma_;
}

const ConstSeq& Pipeline::eta() {
    if (!eta_) eta_ = eta_from_sigma(n_max_, sigma(), zetas(), ctx_);
    return *eta_;
}

const StieltjesSeq& Pipeline::gammas() {
    if (!gammas_) gammas_ = stieltjes(gamma_count(), ctx_);
    return *gammas_;
}

const ConstSeq& Pipeline::eta_gamma() {
    if (!eta_gamma_) eta_gamma_ = eta_from_gamma(std::max<long>(1, n_max_), gammas());
    return *eta_gamma_;
}

const XiDerivSeq& Pipeline::xi() {
    if (!xi_) xi_ = xi_deriv1(std::max<long>(12, n_max_), ctx_);
    return *xi_;
}

const DeltaSeq& Pipeline::deltas() {
    if (!deltas_) deltas_ = delta_seq(derivs0(), n_max_);
    return *deltas_;
}

const ConstSeq& Pipeline::lambda(Route route) {
    LambdaInputs in;
    switch (route) {
        case Route::sigma_binomial:
            if (!lambda_a_) {
                in.sigmas = &sigma();
                lambda_a_ = li_lambda(n_max_, route, in, ctx_);
            }
            return *lambda_a_;
        case Route::lehmer_route:
            if (!lambda_b_) {
                in.bs = &b();
                in.zetas = &zetas();
                lambda_b_ = li_lambda(n_max_, route, in, ctx_);
            }
            return *lambda_b_;
        case Route::eta_route:
            if (!lambda_c_) {
                // eta from the gamma chain keeps this route independent of the
                // Abel-Plana/b engine feeding routes A and B
                in.etas = &eta_gamma();
                in.zetas = &zetas();
                lambda_c_ = li_lambda(n_max_, route, in, ctx_);
            }
            return *lambda_c_;
        case Route::bell_xi_route:
            if (!lambda_d_) {
                in.xi = &xi();
                lambda_d_ = li_lambda(n_max_, route, in, ctx_);
            }
            return *lambda_d_;
        default:
            throw std::invalid_argument("Pipeline::lambda: not a lambda route");
    }
}

}  // namespace lik
