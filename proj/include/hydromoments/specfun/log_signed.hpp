#pragma once

#include <cmath>

namespace hydro::specfun {

// A real number stored as sign * exp(logAbs). sign == 0 means exactly zero.
struct LogSigned {
    double logAbs = 0.0;
    int sign = 1;

    static LogSigned zero() { return {0.0, 0}; }
    static LogSigned one() { return {0.0, 1}; }
    static LogSigned fromValue(double x) {
        if (x == 0.0) return zero();
        return {std::log(std::fabs(x)), x < 0 ? -1 : 1};
    }
    static LogSigned fromLog(double logAbs, int sign = 1) { return {logAbs, sign}; }

    bool isZero() const { return sign == 0; }
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(logAbs); }

    LogSigned operator*(const LogSigned& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return {logAbs + o.logAbs, sign * o.sign};
    }
    LogSigned operator/(const LogSigned& o) const {
        if (o.sign == 0) return {INFINITY, sign == 0 ? 1 : sign};
        if (sign == 0) return zero();
        return {logAbs - o.logAbs, sign * o.sign};
    }
    LogSigned& operator*=(const LogSigned& o) { return *this = *this * o; }
    LogSigned& operator/=(const LogSigned& o) { return *this = *this / o; }

    // Real power of a positive quantity.
    LogSigned pow(double e) const {
        if (sign == 0) return e > 0 ? zero() : LogSigned{INFINITY, 1};
        return {logAbs * e, 1};
    }
};

}  // namespace hydro::specfun
