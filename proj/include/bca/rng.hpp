#ifndef BCA_RNG_HPP_
#define BCA_RNG_HPP_

#include <cstdint>

namespace bca {

// Deterministic generator (splitmix64). Distribution helpers avoid the
// standard library's unspecified distributions so fixed seeds reproduce
// byte-identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi]; fine for test-case generation.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(double p) { return static_cast<double>(next() >> 11) / 9007199254740992.0 < p; }

private:
    std::uint64_t state_;
};

}  // namespace bca

#endif  // BCA_RNG_HPP_
