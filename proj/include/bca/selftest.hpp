#ifndef BCA_SELFTEST_HPP_
#define BCA_SELFTEST_HPP_

#include <cstdint>
#include <ostream>

namespace bca {

// Runs the built-in oracle suites (brute-force enumerations cross-checking
// the decision procedures) with the given seed, printing one line per
// suite. Returns true when every suite passes.
bool run_selftest(std::uint64_t seed, std::ostream& out);

}  // namespace bca

#endif  // BCA_SELFTEST_HPP_
