#include "hydromoments/specfun/rational.hpp"

#include "hydromoments/errors.hpp"

#include <cctype>
#include <cmath>

namespace hydro::specfun {

Rational toRational(double x) {
    if (!std::isfinite(x)) throw ValidationError("cannot convert a non-finite value to a rational");
    Rational q(x);  // mpq_set_d is exact
    q.canonicalize();
    return q;
}

bool isSimpleRational(double x) {
    if (!std::isfinite(x) || std::fabs(x) > 1099511627776.0) return false;
    const double scaled = x * 1024.0;
    return scaled == std::nearbyint(scaled);
}

std::string toString(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double toDouble(const Rational& q) { return q.get_d(); }

Rational makeRational(long p, long q) {
    if (q == 0) throw ValidationError("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational parseRational(const std::string& text) {
    auto fail = [&] { throw ValidationError("not a rational literal: '" + text + "'"); };
    if (text.empty()) fail();
    if (auto slash = text.find('/'); slash != std::string::npos) {
        Rational num = parseRational(text.substr(0, slash));
        Rational den = parseRational(text.substr(slash + 1));
        if (den == 0) fail();
        Rational q = num / den;
        q.canonicalize();
        return q;
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
    std::string digits;
    long scale = 0;
    bool seenPoint = false;
    for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
        const char c = text[i];
        if (c == '.') {
            if (seenPoint) fail();
            seenPoint = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            if (seenPoint) --scale;
        } else {
            fail();
        }
    }
    if (digits.empty()) fail();
    if (i < text.size()) {
        const std::string expText = text.substr(i + 1);
        if (expText.empty()) fail();
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(expText, &used);
        } catch (const std::exception&) {
            fail();
        }
        if (used != expText.size() || std::labs(e) > 4000) fail();
        scale += e;
    }
    mpz_class num(digits, 10);
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
    Rational q = scale >= 0 ? Rational(num * pow10) : Rational(num, pow10);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(c);
}

}  // namespace hydro::specfun
