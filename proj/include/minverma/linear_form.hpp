#ifndef MINVERMA_LINEAR_FORM_HPP
#define MINVERMA_LINEAR_FORM_HPP

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "minverma/rational.hpp"

namespace minverma {

/// Assignment of rational values to lambda variables, keyed by index.
using Assignment = std::map<int, Rational>;

/// Affine-linear function of the lambda coordinates:
///   constant + sum_j coeff_j * lambda_j.
/// Zero coefficients are never stored, so equality is structural.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(Rational c) : constant_(std::move(c)) {}

    static LinearForm variable(int j, Rational coeff = Rational(1)) {
        LinearForm f;
        f.set_coeff(j, std::move(coeff));
        return f;
    }

    const Rational& constant() const { return constant_; }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }

    void set_constant(Rational c) { constant_ = std::move(c); }
    void set_coeff(int j, Rational c) {
        if (c.is_zero())
            coeffs_.erase(j);
        else
            coeffs_[j] = std::move(c);
    }
    Rational coeff(int j) const {
        auto it = coeffs_.find(j);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    bool is_constant() const { return coeffs_.empty(); }
    bool is_zero() const { return coeffs_.empty() && constant_.is_zero(); }

    LinearForm& operator+=(const LinearForm& o) {
        constant_ += o.constant_;
        for (const auto& [j, c] : o.coeffs_) set_coeff(j, coeff(j) + c);
        return *this;
    }
    LinearForm& operator-=(const LinearForm& o) {
        constant_ -= o.constant_;
        for (const auto& [j, c] : o.coeffs_) set_coeff(j, coeff(j) - c);
        return *this;
    }
    LinearForm& operator*=(const Rational& s) {
        if (s.is_zero()) {
            coeffs_.clear();
            constant_ = Rational(0);
            return *this;
        }
        constant_ *= s;
        for (auto& [j, c] : coeffs_) c *= s;
        return *this;
    }

    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
    friend LinearForm operator*(const Rational& s, LinearForm a) { return a *= s; }
    friend LinearForm operator-(const LinearForm& a) {
        LinearForm r;
        r.constant_ = -a.constant_;
        for (const auto& [j, c] : a.coeffs_) r.coeffs_[j] = -c;
        return r;
    }

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LinearForm& a, const LinearForm& b) { return !(a == b); }
    /// Deterministic total order (used for canonical factor ordering).
    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        if (a.coeffs_ != b.coeffs_) {
            return std::lexicographical_compare(
                a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
                [](const auto& x, const auto& y) {
                    if (x.first != y.first) return x.first < y.first;
                    return x.second < y.second;
                });
        }
        return a.constant_ < b.constant_;
    }

    /// Evaluate; every variable present in the form must be assigned.
    /// The error names the first unassigned index.
    Rational eval(const Assignment& a) const {
        Rational r = constant_;
        for (const auto& [j, c] : coeffs_) {
            auto it = a.find(j);
            if (it == a.end())
                throw std::invalid_argument("LinearForm: variable " + std::to_string(j) +
                                            " is unassigned");
            r += c * it->second;
        }
        return r;
    }

    /// Divide out the content: returns (scale, primitive) with
    /// *this == scale * primitive, primitive having coprime integer
    /// coefficients and positive leading entry (first variable coefficient,
    /// else the constant). The zero form yields scale 0, primitive 0.
    std::pair<Rational, LinearForm> primitive() const {
        if (is_zero()) return {Rational(0), LinearForm()};
        // lcm of denominators, then gcd of numerators
        mpz_class l = constant_.den();
        for (const auto& [j, c] : coeffs_) {
            mpz_class g = gcdz(l, c.den());
            l = l / g * c.den();
        }
        mpz_class g = 0;
        {
            mpz_class t = constant_.num() * (l / constant_.den());
            g = gcdz(g, t);
        }
        for (const auto& [j, c] : coeffs_) {
            mpz_class t = c.num() * (l / c.den());
            g = gcdz(g, t);
        }
        Rational scale = Rational(mpz_class(g)) / Rational(mpz_class(l));
        LinearForm prim = *this;
        prim *= Rational(1) / scale;
        const Rational lead = prim.coeffs_.empty() ? prim.constant_ : prim.coeffs_.begin()->second;
        if (lead.sign() < 0) {
            prim *= Rational(-1);
            scale = -scale;
        }
        return {scale, prim};
    }

    friend std::ostream& operator<<(std::ostream& os, const LinearForm& f) {
        bool first = true;
        for (const auto& [j, c] : f.coeffs_) {
            if (first) {
                if (c == Rational(1))
                    os << "l" << j;
                else if (c == Rational(-1))
                    os << "-l" << j;
                else
                    os << c << "*l" << j;
                first = false;
            } else {
                if (c.sign() >= 0)
                    os << " + " << (c == Rational(1) ? std::string() : c.str() + "*") << "l" << j;
                else
                    os << " - " << (c == Rational(-1) ? std::string() : (-c).str() + "*") << "l"
                       << j;
            }
        }
        if (first) {
            os << f.constant_;
        } else if (!f.constant_.is_zero()) {
            if (f.constant_.sign() > 0)
                os << " + " << f.constant_;
            else
                os << " - " << -f.constant_;
        }
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    Rational constant_;
    std::map<int, Rational> coeffs_;
};

/// Substitute linear forms for variables: every variable j present in subst
/// is replaced by its form, others stay.
inline LinearForm substitute_vars(const LinearForm& f, const std::map<int, LinearForm>& subst) {
    LinearForm r(f.constant());
    for (const auto& [j, c] : f.coeffs()) {
        auto it = subst.find(j);
        if (it == subst.end()) {
            r.set_coeff(j, r.coeff(j) + c);
        } else {
            LinearForm t = it->second;
            t *= c;
            r += t;
        }
    }
    return r;
}

}  // namespace minverma

#endif
