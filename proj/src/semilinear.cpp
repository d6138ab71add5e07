#include "bca/semilinear.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "bca/errors.hpp"
#include "bca/rational_linalg.hpp"

namespace bca {

LinearSet::LinearSet(IntVector offset, std::vector<IntVector> periods)
    : offset_(std::move(offset)) {
    periods_.reserve(periods.size());
    for (auto& p : periods) {
        if (p.size() != offset_.size())
            throw ValidationError("period dimension differs from offset dimension");
        if (is_zero(p)) continue;  // zero periods denote nothing
        if (std::find(periods_.begin(), periods_.end(), p) == periods_.end())
            periods_.push_back(std::move(p));
    }
    // canonical order: makes the set algebra representationally symmetric
    std::sort(periods_.begin(), periods_.end());
}

IntVector apply_map(const LinearMap& sigma, const IntVector& u) {
    if (u.size() != sigma.domain_dim) throw ValidationError("map applied to wrong dimension");
    IntVector r = zero_vector(sigma.codomain_dim);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < sigma.codomain_dim; ++j) r[j] += u[i] * sigma.images[i][j];
    }
    return r;
}

namespace {

void check_map(const LinearMap& sigma) {
    if (sigma.images.size() != sigma.domain_dim)
        throw ValidationError("linear map image count differs from domain dimension");
    for (const auto& x : sigma.images)
        if (x.size() != sigma.codomain_dim)
            throw ValidationError("linear map image has wrong dimension");
}

using LMKey = std::tuple<std::size_t, std::size_t, std::vector<IntVector>>;

BoundConstants compute_LM_impl(const LinearMap& sigma);

BoundConstants compute_LM_cached(const LinearMap& sigma) {
    thread_local std::map<LMKey, BoundConstants> cache;
    LMKey key{sigma.domain_dim, sigma.codomain_dim, sigma.images};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    BoundConstants r = compute_LM_impl(sigma);
    if (cache.size() > 20000) cache.clear();
    cache.emplace(std::move(key), r);
    return r;
}

BoundConstants compute_LM_impl(const LinearMap& sigma) {
    const std::size_t p = sigma.domain_dim;
    const std::size_t n = sigma.codomain_dim;
    if (p == 0) return {Rational(0), Rational(0)};

    RationalMatrix a(p, RationalVector(n));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(sigma.images[i][j]);

    if (auto inv = right_inverse(a)) {
        // Injective case: |u| = |v * inv| <= (max row norm) * |v|.
        Rational l = 0;
        for (const auto& row : *inv) l = std::max(l, rational_row_norm(row));
        return {l, Rational(0)};
    }

    // Non-injective: take an integer kernel vector with a positive entry
    // and recurse on the maps obtained by pinning each coordinate to 0.
    auto basis = left_nullspace_basis(a);
    IntVector z = scale_to_integers(basis.front());
    bool has_positive = false;
    for (const Int& x : z)
        if (x > 0) has_positive = true;
    if (!has_positive) z = negated(z);
    Int c = 0;
    for (const Int& x : z) c = std::max(c, x);

    Rational l = 0, m_sub = 0;
    for (std::size_t i = 0; i < p; ++i) {
        LinearMap curried;
        curried.domain_dim = p - 1;
        curried.codomain_dim = n;
        for (std::size_t j = 0; j < p; ++j)
            if (j != i) curried.images.push_back(sigma.images[j]);
        BoundConstants sub = compute_LM_cached(curried);
        l = std::max(l, sub.L);
        m_sub = std::max(m_sub, sub.M);
    }
    Int q = 0;
    for (const auto& x : sigma.images) q = std::max(q, norm(x));
    Rational m = l * Rational(c) * Rational(q) + m_sub + Rational(c);
    return {l, m};
}

}  // namespace

BoundConstants compute_LM(const LinearMap& sigma) {
    check_map(sigma);
    return compute_LM_cached(sigma);
}

namespace {

// Depth-first coefficient search: coordinates are assigned in order with a
// shared norm budget; the last coordinate is solved exactly.
struct PreimageSearch {
    const LinearMap& sigma;
    std::vector<Int> suffix_max_norm;          // max image norm among i..p-1
    std::vector<std::vector<bool>> can_raise;  // some image i.. has coord j > 0
    std::vector<std::vector<bool>> can_lower;  // some image i.. has coord j < 0
    IntVector residual;
    IntVector chosen;

    explicit PreimageSearch(const LinearMap& s, IntVector target)
        : sigma(s), residual(std::move(target)) {
        const std::size_t p = sigma.domain_dim;
        const std::size_t n = sigma.codomain_dim;
        suffix_max_norm.assign(p + 1, Int(0));
        can_raise.assign(p + 1, std::vector<bool>(n, false));
        can_lower.assign(p + 1, std::vector<bool>(n, false));
        for (std::size_t i = p; i-- > 0;) {
            suffix_max_norm[i] = std::max(suffix_max_norm[i + 1], norm(sigma.images[i]));
            can_raise[i] = can_raise[i + 1];
            can_lower[i] = can_lower[i + 1];
            for (std::size_t j = 0; j < n; ++j) {
                if (sigma.images[i][j] > 0) can_raise[i][j] = true;
                if (sigma.images[i][j] < 0) can_lower[i][j] = true;
            }
        }
        chosen.assign(p, Int(0));
    }

    bool feasible(std::size_t i, const Int& budget) const {
        if (norm(residual) > budget * suffix_max_norm[i]) return false;
        for (std::size_t j = 0; j < residual.size(); ++j) {
            if (residual[j] > 0 && !can_raise[i][j]) return false;
            if (residual[j] < 0 && !can_lower[i][j]) return false;
        }
        return true;
    }

    bool run(std::size_t i, Int budget) {
        const std::size_t p = sigma.domain_dim;
        if (i == p) return is_zero(residual);
        if (!feasible(i, budget)) return false;
        if (i + 1 == p) {
            // residual must be an exact nonnegative multiple of the image
            const IntVector& x = sigma.images[i];
            Int k = -1;
            for (std::size_t j = 0; j < x.size(); ++j) {
                if (x[j] == 0) {
                    if (residual[j] != 0) return false;
                    continue;
                }
                if (residual[j] % x[j] != 0) return false;
                Int kj = residual[j] / x[j];
                if (kj < 0) return false;
                if (k == -1)
                    k = kj;
                else if (k != kj)
                    return false;
            }
            if (k == -1) k = 0;  // zero image, zero residual
            if (k > budget) return false;
            chosen[i] = k;
            return true;
        }
        const IntVector& x = sigma.images[i];
        for (Int t = 0; t <= budget; ++t) {
            if (t > 0)
                for (std::size_t j = 0; j < x.size(); ++j) residual[j] -= x[j];
            chosen[i] = t;
            if (run(i + 1, budget - t)) return true;
        }
        // restore residual
        for (std::size_t j = 0; j < x.size(); ++j) residual[j] += x[j] * chosen[i];
        chosen[i] = 0;
        return false;
    }
};

}  // namespace

std::optional<IntVector> bounded_preimage(const LinearMap& sigma, const IntVector& v,
                                          const BoundConstants& bounds) {
    check_map(sigma);
    if (v.size() != sigma.codomain_dim)
        throw ValidationError("preimage target has wrong dimension");
    Rational cap = bounds.L * Rational(norm(v)) + bounds.M;
    Int budget = numerator(cap) / denominator(cap);  // floor for nonnegative cap
    if (cap < 0) budget = -1;
    if (budget < 0) return std::nullopt;
    PreimageSearch search(sigma, v);
    if (!search.run(0, budget)) return std::nullopt;
    return search.chosen;
}

std::optional<IntVector> linear_member(const LinearSet& s, const IntVector& v) {
    if (v.size() != s.dim()) throw ValidationError("membership query has wrong dimension");
    IntVector target = sub(v, s.offset());
    if (s.periods().empty()) {
        if (is_zero(target)) return IntVector{};
        return std::nullopt;
    }
    LinearMap sigma{s.periods().size(), s.dim(), s.periods()};
    return bounded_preimage(sigma, target, compute_LM(sigma));
}

bool member(const SemilinearSet& s, const IntVector& v) {
    return member_witness(s, v).has_value();
}

std::optional<MemberWitness> member_witness(const SemilinearSet& s, const IntVector& v) {
    if (v.size() != s.dim) throw ValidationError("membership query has wrong dimension");
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        if (auto coeffs = linear_member(s.components[i], v))
            return MemberWitness{i, std::move(*coeffs)};
    }
    return std::nullopt;
}

SemilinearSet negate(const SemilinearSet& s) {
    SemilinearSet r;
    r.dim = s.dim;
    r.components.reserve(s.components.size());
    for (const auto& c : s.components) {
        std::vector<IntVector> periods;
        periods.reserve(c.periods().size());
        for (const auto& p : c.periods()) periods.push_back(negated(p));
        r.components.emplace_back(negated(c.offset()), std::move(periods));
    }
    std::sort(r.components.begin(), r.components.end(),
              [](const LinearSet& a, const LinearSet& b) {
                  if (a.offset() != b.offset()) return a.offset() < b.offset();
                  return a.periods() < b.periods();
              });
    return r;
}

namespace {

void check_cap(std::size_t count, const Limits& limits, const char* op) {
    if (count > limits.max_components)
        throw ResourceLimitError(std::string("semilinear component cap exceeded in ") + op);
}

}  // namespace

SemilinearSet simplify(SemilinearSet s) {
    const auto& comps = s.components;
    auto period_subset = [](const LinearSet& a, const LinearSet& b) {
        for (const auto& p : a.periods())
            if (std::find(b.periods().begin(), b.periods().end(), p) == b.periods().end())
                return false;
        return true;
    };
    std::vector<LinearSet> kept;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < comps.size() && !dominated; ++j) {
            if (i == j || comps[j].offset() != comps[i].offset()) continue;
            if (!period_subset(comps[i], comps[j])) continue;
            // equal period sets: keep the earlier occurrence only
            if (period_subset(comps[j], comps[i]))
                dominated = j < i;
            else
                dominated = true;
        }
        if (!dominated) kept.push_back(comps[i]);
    }
    std::sort(kept.begin(), kept.end(), [](const LinearSet& a, const LinearSet& b) {
        if (a.offset() != b.offset()) return a.offset() < b.offset();
        return a.periods() < b.periods();
    });
    s.components = std::move(kept);
    return s;
}

SemilinearSet sum(const SemilinearSet& s, const SemilinearSet& t, const Limits& limits) {
    if (s.dim != t.dim) throw ValidationError("semilinear sum dimension mismatch");
    SemilinearSet r;
    r.dim = s.dim;
    for (const auto& cs : s.components) {
        for (const auto& ct : t.components) {
            std::vector<IntVector> periods = cs.periods();
            periods.insert(periods.end(), ct.periods().begin(), ct.periods().end());
            LinearSet comp(add(cs.offset(), ct.offset()), std::move(periods));
            if (std::find(r.components.begin(), r.components.end(), comp) == r.components.end()) {
                r.components.push_back(std::move(comp));
                check_cap(r.components.size(), limits, "sum");
            }
        }
    }
    return simplify(std::move(r));
}

SemilinearSet unite(const SemilinearSet& s, const SemilinearSet& t, const Limits& limits) {
    if (s.dim != t.dim) throw ValidationError("semilinear union dimension mismatch");
    SemilinearSet r = s;
    for (const auto& c : t.components) {
        if (std::find(r.components.begin(), r.components.end(), c) == r.components.end()) {
            r.components.push_back(c);
            check_cap(r.components.size(), limits, "union");
        }
    }
    return simplify(std::move(r));
}

SemilinearSet star(const SemilinearSet& s, const Limits& limits) {
    // star(U c_i) = sum_i ({0} ∪ <o_i; {o_i} ∪ P_i>), expanded incrementally
    // so intermediate results can be deduplicated.
    SemilinearSet r = SemilinearSet::singleton(zero_vector(s.dim));
    for (const auto& c : s.components) {
        std::vector<IntVector> periods = c.periods();
        periods.insert(periods.begin(), c.offset());
        SemilinearSet factor{s.dim, {LinearSet(zero_vector(s.dim), {})}};
        factor.components.emplace_back(c.offset(), std::move(periods));
        r = sum(r, factor, limits);
    }
    return r;
}

Int constant_bound(const SemilinearSet& s) {
    Int b = 0;
    for (const auto& c : s.components) b = std::max(b, norm(c.offset()));
    return b;
}

Int generator_bound(const SemilinearSet& s) {
    Int b = 0;
    for (const auto& c : s.components)
        for (const auto& p : c.periods()) b = std::max(b, norm(p));
    return b;
}

IntersectionConstants intersection_constants(const SemilinearSet& s, const SemilinearSet& t) {
    if (s.dim != t.dim) throw ValidationError("intersection dimension mismatch");
    Rational max_p = 1, max_q = 0;  // values of the period-free pair
    for (const auto& cs : s.components) {
        Int c = 0;
        for (const auto& p : cs.periods()) c = std::max(c, norm(p));
        for (const auto& ct : t.components) {
            LinearMap pi;
            pi.codomain_dim = s.dim;
            pi.images = cs.periods();
            for (const auto& p : ct.periods()) pi.images.push_back(negated(p));
            pi.domain_dim = pi.images.size();
            BoundConstants lm = compute_LM(pi);
            max_p = std::max(max_p, lm.L * Rational(c) + 1);
            max_q = std::max(max_q, Rational(c) * lm.M);
        }
    }
    // the aggregated additive constant strictly exceeds every per-pair
    // value, which keeps the witness bound strict even when every offset
    // is zero
    return {Rational(2) * max_p, max_q + 1};
}

IntersectionResult intersect(const SemilinearSet& s, const SemilinearSet& t) {
    IntersectionConstants cd = intersection_constants(s, t);
    IntersectionResult result;
    result.C = cd.C;
    result.D = cd.D;
    result.m = std::max(constant_bound(s), constant_bound(t));
    result.bound = cd.C * Rational(result.m) + cd.D;

    // Exact emptiness test per component pair; each feasible pair also
    // yields some common element, whose norm caps the minimal-norm search.
    std::optional<Int> search_cap;
    for (const auto& cs : s.components) {
        for (const auto& ct : t.components) {
            LinearMap pi;
            pi.codomain_dim = s.dim;
            pi.images = cs.periods();
            for (const auto& p : ct.periods()) pi.images.push_back(negated(p));
            pi.domain_dim = pi.images.size();
            IntVector target = sub(ct.offset(), cs.offset());
            auto u = bounded_preimage(pi, target, compute_LM(pi));
            if (!u) continue;
            IntVector v = cs.offset();
            for (std::size_t i = 0; i < cs.periods().size(); ++i)
                add_in_place(v, scaled(cs.periods()[i], (*u)[i]));
            Int nv = norm(v);
            if (!search_cap || nv < *search_cap) search_cap = nv;
        }
    }
    if (!search_cap) return result;  // disjoint

    for (Int k = 0; k <= *search_cap; ++k) {
        std::optional<IntVector> hit;
        enumerate_norm_shell(s.dim, k, [&](const IntVector& v) {
            if (hit) return;
            if (member(s, v) && member(t, v)) hit = v;
        });
        if (hit) {
            result.witness = std::move(hit);
            return result;
        }
    }
    // unreachable: the cap element itself is a common element
    throw std::logic_error("intersection witness search missed its own cap");
}

std::optional<IntVector> intersect_witness(const SemilinearSet& s, const SemilinearSet& t) {
    return intersect(s, t).witness;
}

}  // namespace bca
