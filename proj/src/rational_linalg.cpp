#include "bca/rational_linalg.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "bca/errors.hpp"

namespace bca {

std::vector<std::size_t> rref_in_place(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t sel = pr;
        while (sel < rows && m[sel][pc] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[pr], m[sel]);
        const Rational inv = Rational(1) / m[pr][pc];
        for (std::size_t j = pc; j < cols; ++j) m[pr][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || m[i][pc] == 0) continue;
            const Rational f = m[i][pc];
            for (std::size_t j = pc; j < cols; ++j) m[i][j] -= f * m[pr][j];
        }
        pivots.push_back(pc);
        ++pr;
    }
    return pivots;
}

std::size_t rational_rank(RationalMatrix m) { return rref_in_place(m).size(); }

std::optional<RationalMatrix> right_inverse(const RationalMatrix& a) {
    const std::size_t rows = a.size();
    if (rows == 0) return RationalMatrix{};  // 0x0 identity; cols x 0 matrix below
    const std::size_t cols = a[0].size();
    // Reduce [A | I] and read the row-operation matrix E with E*A = rref(A).
    RationalMatrix aug(rows, RationalVector(cols + rows, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols + i] = 1;
    }
    // Restrict pivoting to the A-block so the identity block records E only.
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t sel = pr;
        while (sel < rows && aug[sel][pc] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(aug[pr], aug[sel]);
        const Rational inv = Rational(1) / aug[pr][pc];
        for (std::size_t j = 0; j < cols + rows; ++j) aug[pr][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || aug[i][pc] == 0) continue;
            const Rational f = aug[i][pc];
            for (std::size_t j = 0; j < cols + rows; ++j) aug[i][j] -= f * aug[pr][j];
        }
        pivots.push_back(pc);
        ++pr;
    }
    if (pivots.size() < rows) return std::nullopt;
    // With R = E*A in reduced form and unit pivots at columns c_k, setting
    // B[c_k] = E-row k (zero elsewhere) gives R*B = E, hence A*B = I.
    RationalMatrix b(cols, RationalVector(rows, Rational(0)));
    for (std::size_t k = 0; k < rows; ++k)
        for (std::size_t j = 0; j < rows; ++j) b[pivots[k]][j] = aug[k][cols + j];
    return b;
}

std::vector<RationalVector> left_nullspace_basis(const RationalMatrix& a) {
    const std::size_t rows = a.size();
    if (rows == 0) return {};
    const std::size_t cols = a[0].size();
    // z*A = 0  <=>  z is in the kernel of A^T (z has `rows` entries).
    RationalMatrix t(cols, RationalVector(rows, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    std::vector<std::size_t> pivots = rref_in_place(t);
    std::vector<bool> is_pivot(rows, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < rows; ++f) {
        if (is_pivot[f]) continue;
        RationalVector z(rows, Rational(0));
        z[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) z[pivots[k]] = -t[k][f];
        basis.push_back(std::move(z));
    }
    return basis;
}

IntVector scale_to_integers(const RationalVector& v) {
    Int l = 1;
    for (const Rational& x : v) l = boost::integer::lcm(l, Int(denominator(x)));
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = numerator(v[i]) * (l / denominator(v[i]));
    return r;
}

Rational rational_row_norm(const RationalVector& v) {
    Rational s = 0;
    for (const Rational& x : v) s += x < 0 ? Rational(-x) : x;
    return s;
}

Int integer_determinant(const std::vector<IntVector>& m) {
    const std::size_t n = m.size();
    RationalMatrix q(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw ValidationError("determinant of non-square matrix");
        for (std::size_t j = 0; j < n; ++j) q[i][j] = Rational(m[i][j]);
    }
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && q[sel][c] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            std::swap(q[sel], q[c]);
            det = -det;
        }
        det *= q[c][c];
        const Rational inv = Rational(1) / q[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (q[i][c] == 0) continue;
            const Rational f = q[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) q[i][j] -= f * q[c][j];
        }
    }
    if (denominator(det) != 1) throw ValidationError("non-integer determinant of integer matrix");
    return numerator(det);
}

std::vector<IntVector> integer_matrix_multiply(const std::vector<IntVector>& a,
                                               const std::vector<IntVector>& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k ? b[0].size() : 0;
    std::vector<IntVector> r(n, IntVector(m, Int(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw ValidationError("matrix dimension mismatch in multiply");
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    }
    return r;
}

IntVector apply_matrix(const std::vector<IntVector>& a, const IntVector& v) {
    const std::size_t n = a.size();
    IntVector r(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != v.size()) throw ValidationError("matrix/vector dimension mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    }
    return r;
}

}  // namespace bca
