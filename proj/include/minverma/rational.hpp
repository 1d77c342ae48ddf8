#ifndef MINVERMA_RATIONAL_HPP
#define MINVERMA_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace minverma {

/// Exact rational number. Thin value wrapper around GMP's mpq_class that
/// keeps every value canonical (reduced, positive denominator) and fixes the
/// serialization "p/q" (bare "p" when q == 1).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    /// Parse "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
    static Rational parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty string");
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: malformed '" + s + "'");
        if (q.get_den() == 0)
            throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(wrap_tag{}, q);
    }

    std::string str() const { return v_.get_str(); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Value as long; precondition: integral and in range.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw std::domain_error("Rational: not a small integer: " + str());
        return v_.get_num().get_si();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(wrap_tag{}, -a.v_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    const mpq_class& raw() const { return v_; }

private:
    struct wrap_tag {};
    Rational(wrap_tag, const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_.get_str();
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// gcd of the absolute values, as a positive rational content helper.
inline mpz_class gcdz(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace minverma

#endif
