#pragma once

#include "lik/sequences.hpp"

#include <optional>

namespace lik {

// Lazily builds the shared evaluation chain for one (n_max, precision) pair.
// Everything below is deterministic for a fixed configuration; members are
// computed once and reused across routes and checks.
class Pipeline {
  public:
    Pipeline(long n_max, PrecisionContext ctx) : n_max_(n_max), ctx_(std::move(ctx)) {}

    long n_max() const { return n_max_; }
    const PrecisionContext& ctx() const { return ctx_; }

    const ZetaTable& zetas();                       // zeta(2 .. n_max+2)
    const std::vector<ZetaDerivAt0>& derivs0();     // zeta^(n)(0), n <= n_max+1
    const ConstSeq& b();                            // b_0..b_n_max
    const ConstSeq& sigma();                        // sigma_1..sigma_{n_max+1}
    const ConstSeq& eta();                          // eta_sigma route, eta_0..eta_n_max
    const StieltjesSeq& gammas();                   // gamma_0..gamma_{gamma_count}
    const ConstSeq& eta_gamma();                    // gamma_log_series route, eta_0..eta_{n_max-1}
    const XiDerivSeq& xi();                         // xi^(n)(1) through n_max (>= 12 for checks)
    const DeltaSeq& deltas();                       // delta_0..delta_n_max
    const ConstSeq& lambda(Route route);            // cached per lambda route

    long gamma_count() const;

  private:
    long n_max_;
    PrecisionContext ctx_;
    std::optional<ZetaTable> zetas_;
    std::optional<std::vector<ZetaDerivAt0>> derivs_;
    std::optional<ConstSeq> b_, sigma_, eta_, eta_gamma_;
    std::optional<StieltjesSeq> gammas_;
    std::optional<XiDerivSeq> xi_;
    std::optional<DeltaSeq> deltas_;
    std::optional<ConstSeq> lambda_a_, lambda_b_, lambda_c_, lambda_d_;
};

}  // namespace lik
