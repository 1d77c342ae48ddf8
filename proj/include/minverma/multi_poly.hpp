#ifndef MINVERMA_MULTI_POLY_HPP
#define MINVERMA_MULTI_POLY_HPP

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "minverma/linear_form.hpp"
#include "minverma/rational.hpp"

namespace minverma {

/// Variable index reserved for the polynomial indeterminate x.
/// Lambda variables use the (positive) simple-root index, epsilon variables
/// whatever index set the caller chooses.
inline constexpr int kVarX = 0;

/// Monomial: variable index -> positive exponent.
using Monomial = std::map<int, unsigned>;

/// Sparse exact multivariate polynomial. Zero coefficients are never stored.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(Rational c) {
        if (!c.is_zero()) terms_[Monomial{}] = std::move(c);
    }
    explicit MultiPoly(const LinearForm& f) {
        if (!f.constant().is_zero()) terms_[Monomial{}] = f.constant();
        for (const auto& [j, c] : f.coeffs()) terms_[Monomial{{j, 1}}] = c;
    }

    static MultiPoly variable(int j) {
        MultiPoly p;
        p.terms_[Monomial{{j, 1}}] = Rational(1);
        return p;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MultiPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [j, e] : mb) m[j] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned k) const {
        MultiPoly r{Rational(1)};
        MultiPoly base = *this;
        while (k) {
            if (k & 1u) r = r * base;
            base = base * base;
            k >>= 1u;
        }
        return r;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) {
            unsigned t = 0;
            for (const auto& [j, e] : m) t += e;
            if (t > d) d = t;
        }
        return d;
    }

    /// Substitute rational values for every variable appearing.
    Rational eval(const Assignment& a) const {
        Rational r(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [j, e] : m) {
                auto it = a.find(j);
                if (it == a.end())
                    throw std::invalid_argument("MultiPoly: variable " + std::to_string(j) +
                                                " is unassigned");
                for (unsigned k = 0; k < e; ++k) t *= it->second;
            }
            r += t;
        }
        return r;
    }

    /// Substitute values for a subset of the variables, keeping the rest.
    MultiPoly substitute(const Assignment& a) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            Monomial rest;
            for (const auto& [j, e] : m) {
                auto it = a.find(j);
                if (it == a.end()) {
                    rest[j] = e;
                } else {
                    for (unsigned k = 0; k < e; ++k) t *= it->second;
                }
            }
            r.add_term(rest, t);
        }
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
        if (p.terms_.empty()) return os << "0";
        bool first = true;
        for (const auto& [m, c] : p.terms_) {
            if (!first) os << (c.sign() >= 0 ? " + " : " - ");
            else if (c.sign() < 0) os << "-";
            first = false;
            Rational ac = abs(c);
            bool printed = false;
            if (ac != Rational(1) || m.empty()) {
                os << ac;
                printed = true;
            }
            for (const auto& [j, e] : m) {
                if (printed) os << "*";
                if (j == kVarX)
                    os << "x";
                else
                    os << "v" << j;
                if (e > 1) os << "^" << e;
                printed = true;
            }
        }
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    std::map<Monomial, Rational> terms_;
};

}  // namespace minverma

#endif
