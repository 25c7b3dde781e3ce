#include "lik/exact.hpp"

#include <mutex>
#include <stdexcept>

namespace lik {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace {

std::mutex g_stirling_mu;
// row l holds S(l,0..l)
std::vector<std::vector<Int>> g_stirling = {{Int(1)}};

std::mutex g_tangent_mu;
// zigzag (Euler up/down) numbers via the Seidel triangle; tangent T_n = Z_{2n-1}
std::vector<Int> g_zigzag;

void grow_zigzag(size_t upto) {
    if (g_zigzag.size() > upto) return;
    // boustrophedon transform of the sequence 1,0,0,0,...
    std::vector<Int> row = {Int(1)};
    std::vector<Int> z = {Int(1)};
    while (z.size() <= upto) {
        std::vector<Int> next(row.size() + 1);
        next[0] = 0;
        for (size_t i = 0; i < row.size(); ++i) next[i + 1] = next[i] + row[row.size() - 1 - i];
        row.swap(next);
        z.push_back(row.back());
    }
    g_zigzag.swap(z);
}

}  // namespace

Int stirling2(unsigned long l, unsigned long k) {
    if (k > l) return 0;
    std::lock_guard<std::mutex> lock(g_stirling_mu);
    while (g_stirling.size() <= l) {
        size_t m = g_stirling.size();
        std::vector<Int> row(m + 1);
        row[0] = 0;
        row[m] = 1;
        for (size_t j = 1; j < m; ++j) row[j] = Int(static_cast<long>(j)) * g_stirling[m - 1][j] + g_stirling[m - 1][j - 1];
        g_stirling.push_back(std::move(row));
    }
    return g_stirling[l][k];
}

Rat bernoulli(unsigned long n) {
    if (n == 0) return Rat(1);
    if (n == 1) return Rat(-1, 2);
    if (n % 2 == 1) return Rat(0);
    unsigned long m = n / 2;  // B_{2m} from the tangent number T_m = Z_{2m-1}
    Int t;
    {
        std::lock_guard<std::mutex> lock(g_tangent_mu);
        grow_zigzag(2 * m - 1);
        t = g_zigzag[2 * m - 1];
    }
    Int four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, m);
    Rat b = Rat(Int(2 * static_cast<long>(m)) * t) / Rat(four_m * (four_m - 1));
    if (m % 2 == 0) b = -b;
    return b;
}

}  // namespace lik
