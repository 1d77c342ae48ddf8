#ifndef MINVERMA_VEC_HPP
#define MINVERMA_VEC_HPP

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "minverma/rational.hpp"

namespace minverma {

/// Dense vector of rational coordinates in the ambient epsilon basis.
/// The standard bilinear form ( , ) is the Euclidean one: (e_i, e_j) = delta_ij.
using VecQ = std::vector<Rational>;

inline VecQ operator+(const VecQ& a, const VecQ& b) {
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline VecQ operator-(const VecQ& a, const VecQ& b) {
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline VecQ operator-(const VecQ& a) {
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
inline VecQ operator*(const Rational& s, const VecQ& a) {
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

/// Standard Euclidean pairing.
inline Rational dot(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational r(0);
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

inline bool is_zero(const VecQ& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
}

inline std::ostream& operator<<(std::ostream& os, const VecQ& v) {
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os << ")";
}

inline std::string to_string(const VecQ& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace minverma

#endif
