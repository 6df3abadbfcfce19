// SPDX-License-Identifier: Apache-2.0
#include "cnt/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "cnt/errors.hpp"

namespace cnt {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) {
            throw ParseError("not a rational: \"" + text + "\"");
        }
        return Rational(mpz_class(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
        throw ParseError("not a rational: \"" + text + "\"");
    }
    mpz_class d(den);
    if (d == 0) {
        throw ParseError("zero denominator in \"" + text + "\"");
    }
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

std::string to_decimal(const Rational& value, int significant_digits) {
    if (significant_digits < 1) significant_digits = 1;
    if (value == 0) return "0";

    // Round-trip through mpf with generous precision, then assemble a
    // positional or scientific rendering depending on the exponent.
    const auto prec_bits = static_cast<mp_bitcnt_t>(64 + 4 * significant_digits);
    mpf_class f(value, prec_bits);
    mp_exp_t exp = 0;
    std::string digits = f.get_str(exp, 10, static_cast<std::size_t>(significant_digits));

    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(digits.begin());
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

    const long e = static_cast<long>(exp);
    const long n = static_cast<long>(digits.size());
    if (e > 0 && e <= significant_digits + 2) {
        if (n <= e) {
            return sign + digits + std::string(static_cast<std::size_t>(e - n), '0');
        }
        return sign + digits.substr(0, static_cast<std::size_t>(e)) + "." +
               digits.substr(static_cast<std::size_t>(e));
    }
    if (e <= 0 && e > -4) {
        return sign + "0." + std::string(static_cast<std::size_t>(-e), '0') + digits;
    }
    // Scientific: d.ddd e(exp-1)
    std::string mant = digits.substr(0, 1);
    if (digits.size() > 1) mant += "." + digits.substr(1);
    return sign + mant + "e" + std::to_string(e - 1);
}

Rational rational_pow(const Rational& value, unsigned long exponent) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), value.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), value.get_den_mpz_t(), exponent);
    // num/den coprime implies num^k/den^k coprime; canonical form is preserved.
    return out;
}

}  // namespace cnt
