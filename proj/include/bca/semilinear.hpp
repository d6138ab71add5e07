#ifndef BCA_SEMILINEAR_HPP_
#define BCA_SEMILINEAR_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "bca/numeric.hpp"
#include "bca/vec.hpp"

namespace bca {

// Resource caps for set-algebra operations. Exceeding a cap raises
// ResourceLimitError; results are never silently truncated.
struct Limits {
    std::size_t max_components = 4096;
};

// { offset + l_1 p_1 + ... + l_k p_k | l_i in N }. Periods are kept as a
// duplicate-free list in a canonical (sorted) order; zero periods are
// dropped on construction since they do not change the denoted set.
class LinearSet {
public:
    LinearSet(IntVector offset, std::vector<IntVector> periods);

    const IntVector& offset() const { return offset_; }
    const std::vector<IntVector>& periods() const { return periods_; }
    std::size_t dim() const { return offset_.size(); }

    bool operator==(const LinearSet& o) const {
        return offset_ == o.offset_ && periods_ == o.periods_;
    }

private:
    IntVector offset_;
    std::vector<IntVector> periods_;
};

// Finite union of linear sets; an empty component list denotes the empty
// set. Equality is representational: extensional questions go through
// membership.
struct SemilinearSet {
    std::size_t dim = 0;
    std::vector<LinearSet> components;

    static SemilinearSet empty(std::size_t dim) { return SemilinearSet{dim, {}}; }
    static SemilinearSet singleton(IntVector v) {
        std::size_t d = v.size();
        return SemilinearSet{d, {LinearSet(std::move(v), {})}};
    }

    bool is_empty() const { return components.empty(); }
    bool operator==(const SemilinearSet& o) const {
        return dim == o.dim && components == o.components;
    }
};

// Linear map Z^p -> Z^n given by the images of the standard basis vectors;
// u maps to u_1 x_1 + ... + u_p x_p.
struct LinearMap {
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    std::vector<IntVector> images;
};

IntVector apply_map(const LinearMap& sigma, const IntVector& u);

// Certified search bounds: every v in the image of N^p under the map has a
// preimage u in N^p with |u| <= L|v| + M.
struct BoundConstants {
    Rational L;
    Rational M;
};

// Derives (L, M) constructively. Injective maps get a rational right
// inverse of the image matrix (L = max row norm of the inverse, M = 0);
// otherwise an integer kernel vector is used to curry the map one
// coordinate at a time and the sub-bounds are combined. Results are
// memoized per thread.
BoundConstants compute_LM(const LinearMap& sigma);

// If v lies in the image of N^p, returns a preimage u with |u| <= L|v| + M
// (depth-first over coefficient space with partial-sum pruning; the bound
// makes the search complete). Returns nullopt exactly when v has no
// nonnegative preimage at all.
std::optional<IntVector> bounded_preimage(const LinearMap& sigma, const IntVector& v,
                                          const BoundConstants& bounds);

// Complete membership for a single linear set: the coefficient vector if
// one exists.
std::optional<IntVector> linear_member(const LinearSet& s, const IntVector& v);

bool member(const SemilinearSet& s, const IntVector& v);

struct MemberWitness {
    std::size_t component;
    IntVector coefficients;
};
std::optional<MemberWitness> member_witness(const SemilinearSet& s, const IntVector& v);

// Elementwise negation; preserves constant and generator bounds exactly.
SemilinearSet negate(const SemilinearSet& s);

// Minkowski sum: pairwise components, offsets added, period lists merged
// and deduplicated. Result is simplified.
SemilinearSet sum(const SemilinearSet& s, const SemilinearSet& t, const Limits& limits = {});

// Set union: concatenated components, deduplicated and simplified.
SemilinearSet unite(const SemilinearSet& s, const SemilinearSet& t, const Limits& limits = {});

// Closure under finite sums (the empty sum contributes the zero vector).
SemilinearSet star(const SemilinearSet& s, const Limits& limits = {});

// Representation-level bounds: max offset norm / max period norm of the
// stored components (0 for the empty set or a period-free one).
Int constant_bound(const SemilinearSet& s);
Int generator_bound(const SemilinearSet& s);

// Drops duplicate components and components whose offset equals another's
// offset with a subset of its periods. Denotation is unchanged.
SemilinearSet simplify(SemilinearSet s);

// Intersection bound constants: for every pair of components the map
// (l, m) -> sum l_i s_i - sum m_j t_j is analysed, the per-pair values
// P = Lc+1 and Q = cM (c = max period norm on the S side) are maxed, and
// C = 2 max P, D = max Q. Any nonempty intersection then contains an
// element of norm < C*m + D where m = max constant bound.
struct IntersectionConstants {
    Rational C;
    Rational D;
};
IntersectionConstants intersection_constants(const SemilinearSet& s, const SemilinearSet& t);

struct IntersectionResult {
    std::optional<IntVector> witness;  // minimal-norm common element
    Rational C;
    Rational D;
    Int m;            // max constant bound of the two sets
    Rational bound;   // C*m + D
};

// Decides S ∩ T and, when nonempty, returns a common element of minimal
// Manhattan norm (first in shell enumeration order among ties). Emptiness
// is decided exactly; the minimal element is located by ascending-norm
// search, which the derived bound guarantees to terminate.
IntersectionResult intersect(const SemilinearSet& s, const SemilinearSet& t);

std::optional<IntVector> intersect_witness(const SemilinearSet& s, const SemilinearSet& t);

}  // namespace bca

#endif  // BCA_SEMILINEAR_HPP_
