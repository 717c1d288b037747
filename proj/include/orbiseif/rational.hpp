#ifndef ORBISEIF_RATIONAL_HPP
#define ORBISEIF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace orbiseif {

// Exact rational, always in lowest terms with positive denominator.
struct Rational {
    mpz_class num = 0;
    mpz_class den = 1;

    Rational() = default;
    Rational(mpz_class n, mpz_class d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    Rational(long n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    int sign() const { return sgn(num); }

    bool operator==(const Rational& other) const = default;

    Rational operator+(const Rational& o) const {
        return Rational(num * o.den + o.num * den, den * o.den);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num * o.den - o.num * den, den * o.den);
    }

    std::string str() const {
        if (den == 1) return num.get_str();
        return num.get_str() + "/" + den.get_str();
    }
};

}  // namespace orbiseif

#endif
