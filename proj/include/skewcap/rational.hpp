#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace skewcap {

// Arbitrary-precision integer, value semantics over mpz_t.
class Int {
  public:
    Int() { mpz_init(v_); }
    Int(long x) { mpz_init_set_si(v_, x); }
    explicit Int(const std::string& decimal);
    Int(const Int& o) { mpz_init_set(v_, o.v_); }
    Int(Int&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~Int() { mpz_clear(v_); }

    friend Int operator+(const Int& a, const Int& b);
    friend Int operator-(const Int& a, const Int& b);
    friend Int operator*(const Int& a, const Int& b);
    friend Int operator-(const Int& a);
    Int& operator+=(const Int& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    Int& operator*=(const Int& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend auto operator<=>(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) <=> 0; }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    int sign() const { return mpz_sgn(v_); }
    std::string to_string() const;

    static Int factorial(unsigned long n) {
        Int r;
        mpz_fac_ui(r.v_, n);
        return r;
    }
    static Int binomial(unsigned long n, unsigned long k) {
        Int r;
        mpz_bin_uiui(r.v_, n, k);
        return r;
    }
    static Int pow2(unsigned long e) {
        Int r(1);
        mpz_mul_2exp(r.v_, r.v_, e);
        return r;
    }

    const mpz_t& raw() const { return v_; }
    mpz_t& raw() { return v_; }

  private:
    mpz_t v_;
};

// Exact rational; canonical form maintained by GMP (gcd-reduced, positive
// denominator, zero is 0/1).
class Rational {
  public:
    Rational() { mpq_init(v_); }
    Rational(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(long n, long d);
    Rational(const Int& n, const Int& d);
    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    // Parses "n" or "n/d"; throws std::invalid_argument on malformed input.
    static Rational parse(const std::string& s);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    // Throws std::domain_error when b == 0.
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);
    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend auto operator<=>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) <=> 0; }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    Int numerator() const {
        Int n;
        mpz_set(n.raw(), mpq_numref(v_));
        return n;
    }
    Int denominator() const {
        Int d;
        mpz_set(d.raw(), mpq_denref(v_));
        return d;
    }

    Rational inverse() const;
    Rational pow(long e) const;  // e >= 0, or any e for nonzero base
    std::string to_string() const;

    static Rational from_int(const Int& n) {
        Rational r;
        mpq_set_z(r.v_, n.raw());
        return r;
    }
    static Rational factorial(unsigned long n) { return from_int(Int::factorial(n)); }
    static Rational binomial(unsigned long n, unsigned long k) { return from_int(Int::binomial(n, k)); }

  private:
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Int& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace skewcap
