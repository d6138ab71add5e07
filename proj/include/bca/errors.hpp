#ifndef BCA_ERRORS_HPP_
#define BCA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bca {

// Malformed or inconsistent input (bad JSON, dimension mismatch, invariant
// violation at validation time). CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable resource cap was exceeded (component counts, vector-set
// sizes, memory caps). Never silent truncation. CLI maps this to exit code 3.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bca

#endif  // BCA_ERRORS_HPP_
