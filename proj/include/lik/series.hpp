#pragma once

#include "lik/real.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace lik {

// Truncated power series about a fixed expansion point. coeffs[0] is the
// constant term; order() == coeffs.size() - 1 always holds.
struct PowerSeries {
    Real center;
    std::vector<Real> coeffs;
    long order() const { return static_cast<long>(coeffs.size()) - 1; }
};

namespace detail {
inline Rat exp_scalar(const Rat& b0) {
    if (b0 != 0) throw std::invalid_argument("series_exp: exact path needs b0 == 0");
    return Rat(1);
}
inline Real exp_scalar(const Real& b0) { return exp(b0); }
inline Rat log_scalar(const Rat& a0) {
    if (a0 != 1) throw std::invalid_argument("series_log: exact path needs a0 == 1");
    return Rat(0);
}
inline Real log_scalar(const Real& a0) {
    if (!(a0 > 0)) throw domain_error("series_log: leading coefficient must be positive");
    return log(a0);
}
}  // namespace detail

// Exponential of a log-series given in the b_n/n convention:
// log h(x) = b0 + sum_{n>=1} (b_n / n) x^n. Returns a_0..a_order of h via
// a_0 = e^{b0}, r a_r = sum_{m=1..r} a_{r-m} b_m.
template <class T>
std::vector<T> series_exp(const T& b0, const std::vector<T>& bs, long order) {
    if (order < 0) throw std::invalid_argument("series_exp: order must be nonnegative");
    if (static_cast<long>(bs.size()) < order) throw std::invalid_argument("series_exp: needs `order` coefficients");
    std::vector<T> a;
    a.reserve(order + 1);
    a.push_back(detail::exp_scalar(b0));
    for (long r = 1; r <= order; ++r) {
        T acc = b0 - b0;
        for (long m = 1; m <= r; ++m) acc += a[r - m] * bs[m - 1];
        a.push_back(acc / r);
    }
    return a;
}

// Inverse: recovers (b0, b_1..b_N) from a_0..a_N, same convention. Requires
// a_0 > 0 on the Real path (a_0 == 1 exactly on the Rat path).
template <class T>
std::pair<T, std::vector<T>> series_log(const std::vector<T>& as) {
    if (as.empty()) throw std::invalid_argument("series_log: empty series");
    T b0 = detail::log_scalar(as[0]);
    long order = static_cast<long>(as.size()) - 1;
    std::vector<T> b;
    b.reserve(order);
    for (long r = 1; r <= order; ++r) {
        T acc = as[r] * r;
        for (long m = 1; m < r; ++m) acc -= as[r - m] * b[m - 1];
        b.push_back(acc / as[0]);
    }
    return {b0, b};
}

// Term-wise absolute error bound through the series_log recurrence.
inline std::vector<Real> series_log_err(const std::vector<Real>& as, const std::vector<Real>& aerr,
                                        const std::vector<Real>& bs) {
    long order = static_cast<long>(as.size()) - 1;
    Real a0 = err_from(as[0]);
    std::vector<Real> be;
    be.reserve(order);
    for (long r = 1; r <= order; ++r) {
        Real e = aerr[r] * Real(r, Prec{kErrPrec});
        for (long m = 1; m < r; ++m) e += aerr[r - m] * err_from(bs[m - 1]) + err_from(as[r - m]) * be[m - 1];
        e = e / a0 + err_from(bs[r - 1]) * aerr[0] / a0;
        be.push_back(e + ulp_of(bs[r - 1]) * Real(r + 1, Prec{kErrPrec}));
    }
    return be;
}

inline std::vector<Real> series_exp_err(const std::vector<Real>& bs, const std::vector<Real>& berr,
                                        const std::vector<Real>& as) {
    long order = static_cast<long>(as.size()) - 1;
    std::vector<Real> ae = {err_zero()};
    for (long r = 1; r <= order; ++r) {
        Real e(Prec{kErrPrec});
        for (long m = 1; m <= r; ++m) e += ae[r - m] * err_from(bs[m - 1]) + err_from(as[r - m]) * berr[m - 1];
        ae.push_back(e / r + ulp_of(as[r]) * Real(r + 1, Prec{kErrPrec}));
    }
    return ae;
}

}  // namespace lik
