#ifndef BCA_VEC_HPP_
#define BCA_VEC_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bca/errors.hpp"
#include "bca/numeric.hpp"

namespace bca {

// Element of Z^n. The dimension is the length of the entry list.
using IntVector = std::vector<Int>;

// Element of Q^n, entries kept in lowest terms by the rational type.
using RationalVector = std::vector<Rational>;

// Manhattan norm |v_1| + ... + |v_n|; zero exactly for the zero vector.
inline Int norm(const IntVector& v) {
    Int s = 0;
    for (const Int& x : v) s += abs_int(x);
    return s;
}

inline bool is_zero(const IntVector& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline IntVector zero_vector(std::size_t dim) { return IntVector(dim, Int(0)); }

inline IntVector add(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw ValidationError("vector dimension mismatch in add");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline void add_in_place(IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw ValidationError("vector dimension mismatch in add");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

inline IntVector sub(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw ValidationError("vector dimension mismatch in sub");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVector negated(const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IntVector scaled(const IntVector& a, const Int& k) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    return r;
}

inline std::string vector_to_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    s += ")";
    return s;
}

// Enumerates every v in Z^dim with Manhattan norm exactly `k`, in a fixed
// deterministic order (entry-wise ascending). Used by shell searches and
// by test oracles.
void enumerate_norm_shell(std::size_t dim, const Int& k,
                          const std::function<void(const IntVector&)>& visit);

// Enumerates the Manhattan ball of radius `r`, shells in ascending order.
void enumerate_norm_ball(std::size_t dim, const Int& r,
                         const std::function<void(const IntVector&)>& visit);

}  // namespace bca

#endif  // BCA_VEC_HPP_
