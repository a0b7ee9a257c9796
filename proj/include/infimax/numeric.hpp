#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace infimax {

// Unbounded exact arithmetic. Everything that feeds a verdict uses these;
// doubles appear only for display and log/sqrt-based thresholds.
using Integer = mpz_class;
using Rational = mpq_class;

// Error taxonomy mirrored by the CLI exit codes.
struct MalformedInput : std::runtime_error {
    explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline Integer floor_quotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor(a/b) for b > 0.
inline Integer floor_quotient(const Rational& a, const Rational& b) {
    Rational q = a / b;
    return floor_quotient(Integer(q.get_num()), Integer(q.get_den()));
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

// Canonical form: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

// log of a positive rational, stable far beyond the double exponent range
inline double log_rational(const Rational& r) {
    if (r <= 0) throw InternalError("log of a non-positive rational");
    signed long num_exp = 0, den_exp = 0;
    const double num = mpz_get_d_2exp(&num_exp, r.get_num_mpz_t());
    const double den = mpz_get_d_2exp(&den_exp, r.get_den_mpz_t());
    return std::log(num) - std::log(den) +
           (static_cast<double>(num_exp) - static_cast<double>(den_exp)) * std::log(2.0);
}

Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

inline Integer parse_integer(const std::string& text) {
    if (text.empty()) throw MalformedInput("empty integer");
    Integer n;
    if (mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0)
        throw MalformedInput("not an integer: '" + text + "'");
    return n;
}

// Accepts "24/41" and "24".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw MalformedInput("zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace infimax
