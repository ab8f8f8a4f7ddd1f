#include "skewcap/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace skewcap {

Int::Int(const std::string& decimal) {
    if (mpz_init_set_str(v_, decimal.c_str(), 10) != 0) {
        mpz_clear(v_);
        throw std::invalid_argument("Int: malformed decimal string: " + decimal);
    }
}

std::string Int::to_string() const {
    char* s = mpz_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

Int operator+(const Int& a, const Int& b) {
    Int r;
    mpz_add(r.v_, a.v_, b.v_);
    return r;
}
Int operator-(const Int& a, const Int& b) {
    Int r;
    mpz_sub(r.v_, a.v_, b.v_);
    return r;
}
Int operator*(const Int& a, const Int& b) {
    Int r;
    mpz_mul(r.v_, a.v_, b.v_);
    return r;
}
Int operator-(const Int& a) {
    Int r;
    mpz_neg(r.v_, a.v_);
    return r;
}

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
    mpq_t den;
    mpq_init(den);
    mpq_set_si(den, d, 1);
    mpq_div(v_, v_, den);
    mpq_clear(den);
}

Rational::Rational(const Int& n, const Int& d) {
    if (d.is_zero()) throw std::domain_error("Rational: zero denominator");
    mpq_init(v_);
    mpz_set(mpq_numref(v_), n.raw());
    mpz_set(mpq_denref(v_), d.raw());
    mpq_canonicalize(v_);
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return from_int(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: malformed value: " + s);
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.v_, a.v_, b.v_);
    return r;
}
Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.v_, a.v_, b.v_);
    return r;
}
Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.v_, a.v_, b.v_);
    return r;
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    mpq_div(r.v_, a.v_, b.v_);
    return r;
}
Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.v_, a.v_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    mpq_inv(r.v_, v_);
    return r;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational acc(1), base(*this);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Rational::to_string() const {
    if (is_integer()) return numerator().to_string();
    return numerator().to_string() + "/" + denominator().to_string();
}

std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace skewcap
