#include "bca/vec.hpp"

namespace bca {

namespace {

void shell_rec(std::size_t pos, std::size_t dim, const Int& remaining, IntVector& cur,
               const std::function<void(const IntVector&)>& visit) {
    if (pos + 1 == dim) {
        // Last coordinate must consume the whole remaining budget.
        if (remaining == 0) {
            cur[pos] = 0;
            visit(cur);
        } else {
            cur[pos] = -remaining;
            visit(cur);
            cur[pos] = remaining;
            visit(cur);
        }
        cur[pos] = 0;
        return;
    }
    for (Int t = -remaining; t <= remaining; ++t) {
        cur[pos] = t;
        shell_rec(pos + 1, dim, remaining - abs_int(t), cur, visit);
    }
    cur[pos] = 0;
}

}  // namespace

void enumerate_norm_shell(std::size_t dim, const Int& k,
                          const std::function<void(const IntVector&)>& visit) {
    if (dim == 0) {
        if (k == 0) visit(IntVector{});
        return;
    }
    IntVector cur(dim, Int(0));
    shell_rec(0, dim, k, cur, visit);
}

void enumerate_norm_ball(std::size_t dim, const Int& r,
                         const std::function<void(const IntVector&)>& visit) {
    for (Int k = 0; k <= r; ++k) enumerate_norm_shell(dim, k, visit);
}

}  // namespace bca
