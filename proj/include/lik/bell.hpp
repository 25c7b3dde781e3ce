#pragma once

#include "lik/exact.hpp"
#include "lik/real.hpp"

#include <stdexcept>
#include <vector>

namespace lik {

// Exponential Bell polynomial algebra over an exact (Rat) or floating (Real)
// scalar. Arguments are the plain x_1..x_n slots; any factorial weighting of
// the arguments is the caller's responsibility.

namespace detail {
inline Rat one_like(const Rat&) { return Rat(1); }
inline Real one_like(const Real& x) { return Real(1, Prec{x.prec()}); }
inline Rat scalar_int(const Rat&, const Int& c) { return Rat(c); }
inline Real scalar_int(const Real& x, const Int& c) { return Real(c, Prec{x.prec()}); }
}  // namespace detail

// Complete Bell polynomials Y_0..Y_n by the binomial recurrence
// Y_{r+1} = sum_k C(r,k) Y_{r-k} x_{k+1}.
template <class T>
std::vector<T> bell_complete_all(long n, const std::vector<T>& xs) {
    if (n < 0) throw std::invalid_argument("bell_complete: n must be nonnegative");
    if (static_cast<long>(xs.size()) < n) throw std::invalid_argument("bell_complete: needs n arguments");
    T proto = xs.empty() ? T() : xs[0];
    std::vector<T> y;
    y.reserve(n + 1);
    y.push_back(detail::one_like(proto));
    for (long r = 0; r < n; ++r) {
        T acc = y[0] - y[0];  // typed zero
        for (long k = 0; k <= r; ++k) acc += detail::scalar_int(proto, binomial(r, k)) * y[r - k] * xs[k];
        y.push_back(acc);
    }
    return y;
}

template <class T>
T bell_complete(long n, const std::vector<T>& xs) {
    return bell_complete_all(n, xs).back();
}

// Partial Bell polynomials B_{m,k} for all m <= n, k <= m, by
// B_{m,k} = sum_j C(m-1,j-1) x_j B_{m-j,k-1}. Missing trailing arguments are
// treated as zero slots; B_{n,k} only ever reads x_1..x_{n-k+1}.
template <class T>
std::vector<std::vector<T>> bell_partial_table(long n, const std::vector<T>& xs) {
    if (n < 0) throw std::invalid_argument("bell_partial: n must be nonnegative");
    T proto = xs.empty() ? T() : xs[0];
    T zero = proto - proto;
    std::vector<T> x = xs;
    while (static_cast<long>(x.size()) < n) x.push_back(zero);
    std::vector<std::vector<T>> b(n + 1);
    for (long m = 0; m <= n; ++m) b[m].assign(m + 1, zero);
    b[0][0] = detail::one_like(proto);
    for (long m = 1; m <= n; ++m)
        for (long k = 1; k <= m; ++k) {
            T acc = zero;
            for (long j = 1; j <= m - k + 1; ++j)
                acc += detail::scalar_int(proto, binomial(m - 1, j - 1)) * x[j - 1] * b[m - j][k - 1];
            b[m][k] = acc;
        }
    return b;
}

template <class T>
T bell_partial(long n, long k, const std::vector<T>& xs) {
    if (n < 0 || k < 0) throw std::invalid_argument("bell_partial: indices must be nonnegative");
    T proto = xs.empty() ? T() : xs[0];
    if (k > n) return proto - proto;  // B_{n,k} = 0 for k >= n+1
    if (k == 0) return n == 0 ? detail::one_like(proto) : proto - proto;
    return bell_partial_table(n, xs)[n][k];
}

// Y_n(a x_1, ..., a x_n) expanded through the partial polynomials:
// sum_k a^k B_{n,k}(x).
template <class T>
T bell_scale(long n, const T& alpha, const std::vector<T>& xs) {
    if (n == 0) return detail::one_like(alpha);
    auto b = bell_partial_table(n, xs);
    T acc = alpha - alpha;
    T ap = detail::one_like(alpha);
    for (long k = 1; k <= n; ++k) {
        ap = ap * alpha;
        acc += ap * b[n][k];
    }
    return acc;
}

// Logarithmic partition polynomial L_n(g) = sum_k (-1)^(k-1) (k-1)! B_{n,k}(g);
// L_0 = 0. These are the n-th derivative coefficients of log of the
// exponential generating function with g_0 = 1.
template <class T>
T log_polynomial_from_table(long n, const std::vector<std::vector<T>>& table, const T& proto) {
    T acc = proto - proto;
    for (long k = 1; k <= n; ++k) {
        T term = detail::scalar_int(proto, factorial(k - 1)) * table[n][k];
        if (k % 2 == 0) acc -= term;
        else acc += term;
    }
    return acc;
}

template <class T>
T log_polynomial(long n, const std::vector<T>& gs) {
    if (n < 0) throw std::invalid_argument("log_polynomial: n must be nonnegative");
    T proto = gs.empty() ? T() : gs[0];
    if (n == 0) return proto - proto;
    return log_polynomial_from_table(n, bell_partial_table(n, gs), proto);
}

// Inverse of the forward map y_n = Y_n(x) = sum_k B_{n,k}(x):
// x_n = sum_k (-1)^(k-1) (k-1)! B_{n,k}(y).
template <class T>
std::vector<T> bell_invert(const std::vector<T>& ys) {
    long n = static_cast<long>(ys.size());
    if (n == 0) return {};
    T proto = ys[0];
    auto table = bell_partial_table(n, ys);
    std::vector<T> xs;
    xs.reserve(n);
    for (long m = 1; m <= n; ++m) xs.push_back(log_polynomial_from_table(m, table, proto));
    return xs;
}

// Forward map of the inversion pair: y_n = Y_n(x_1..x_n) for n = 1..len(xs).
template <class T>
std::vector<T> bell_forward(const std::vector<T>& xs) {
    auto y = bell_complete_all(static_cast<long>(xs.size()), xs);
    return std::vector<T>(y.begin() + 1, y.end());
}

// Error propagation companions (Real only): same recurrences run on
// term-wise absolute bounds.

inline std::vector<Real> bell_complete_all_err(long n, const std::vector<Real>& xs,
                                               const std::vector<Real>& xerr) {
    std::vector<Real> yabs = {Real(1, Prec{kErrPrec})};
    std::vector<Real> yerr = {err_zero()};
    for (long r = 0; r < n; ++r) {
        Real a(Prec{kErrPrec}), e(Prec{kErrPrec});
        for (long k = 0; k <= r; ++k) {
            Real c(binomial(r, k), Prec{kErrPrec});
            Real xa = err_from(xs[k]);
            a += c * yabs[r - k] * xa;
            e += c * (yerr[r - k] * xa + yabs[r - k] * xerr[k]);
        }
        yabs.push_back(a);
        yerr.push_back(e + ldexp(a, -(xs[0].prec() - 8)));
    }
    return yerr;
}

inline std::vector<std::vector<Real>> bell_partial_table_err(long n, const std::vector<Real>& xs,
                                                             const std::vector<Real>& xerr) {
    long p = xs.empty() ? kErrPrec : xs[0].prec();
    std::vector<Real> xa, xe;
    for (auto& v : xs) xa.push_back(err_from(v));
    xe = xerr;
    while (static_cast<long>(xa.size()) < n) {
        xa.push_back(err_zero());
        xe.push_back(err_zero());
    }
    std::vector<std::vector<Real>> babs(n + 1), berr(n + 1);
    for (long m = 0; m <= n; ++m) {
        babs[m].assign(m + 1, err_zero());
        berr[m].assign(m + 1, err_zero());
    }
    babs[0][0] = Real(1, Prec{kErrPrec});
    for (long m = 1; m <= n; ++m)
        for (long k = 1; k <= m; ++k) {
            Real a(Prec{kErrPrec}), e(Prec{kErrPrec});
            for (long j = 1; j <= m - k + 1; ++j) {
                Real c(binomial(m - 1, j - 1), Prec{kErrPrec});
                a += c * xa[j - 1] * babs[m - j][k - 1];
                e += c * (xe[j - 1] * babs[m - j][k - 1] + xa[j - 1] * berr[m - j][k - 1]);
            }
            babs[m][k] = a;
            berr[m][k] = e + ldexp(a, -(p - 8));
        }
    return berr;
}

}  // namespace lik
