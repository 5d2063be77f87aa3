#include "dilworth/rational.hpp"

#include <cmath>

#include "dilworth/errors.hpp"

namespace dilworth {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw InvalidInput("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) {
        throw InvalidInput("empty rational");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        throw InvalidInput("cannot parse rational '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw InvalidInput("rational with zero denominator: '" + text + "'");
    }
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

double Rational::log2() const {
    if (sgn(q_) <= 0) {
        throw InvalidInput("log2 of a non-positive rational");
    }
    long exp_num = 0;
    long exp_den = 0;
    const double mant_num = mpz_get_d_2exp(&exp_num, q_.get_num_mpz_t());
    const double mant_den = mpz_get_d_2exp(&exp_den, q_.get_den_mpz_t());
    return std::log2(mant_num) - std::log2(mant_den) + static_cast<double>(exp_num - exp_den);
}

Rational Rational::pow(unsigned exponent) const {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

long Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r.get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (sgn(o.q_) == 0) {
        throw InvalidInput("division by zero rational");
    }
    q_ /= o.q_;
    return *this;
}

}  // namespace dilworth
