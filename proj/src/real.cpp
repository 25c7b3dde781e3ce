#include "lik/real.hpp"

#include <cmath>
#include <cstdlib>

namespace lik {

std::string format_sci(const Real& x, long sig_digits) {
    if (sig_digits < 1) sig_digits = 1;
    if (x.is_zero()) return "0";
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig_digits), x.raw(), MPFR_RNDN);
    if (!s) return "nan";
    std::string digits(s);
    mpfr_free_str(s);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // mpfr_get_str exponent convention: value = 0.digits * 10^e.
    long dec_exp = static_cast<long>(e) - 1;
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e";
    out += (dec_exp < 0 ? "-" : "+");
    long a = dec_exp < 0 ? -dec_exp : dec_exp;
    std::string es = std::to_string(a);
    if (es.size() < 2) es = "0" + es;
    return out + es;
}

long justified_digits(const Real& value, const Real& err) {
    long cap = static_cast<long>(static_cast<double>(value.prec()) * 0.30103) - 2;
    if (cap < 3) cap = 3;
    if (err.is_zero()) return cap;
    // digits = ceil(-log10 err) + 2
    double l10 = static_cast<double>(err.exp2()) * 0.3010299956639812;
    long d = static_cast<long>(std::ceil(-l10)) + 2;
    if (d < 3) d = 3;
    if (d > cap) d = cap;
    return d;
}

}  // namespace lik
