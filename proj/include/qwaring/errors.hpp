#ifndef QWARING_ERRORS_HPP
#define QWARING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qw {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct InvalidArgument : std::invalid_argument {
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// A diagonal block of the condition system has zero determinant.
// `block_k` is the arity k of the offending block.
struct SingularBlock : std::runtime_error {
    int block_k;
    explicit SingularBlock(int k)
        : std::runtime_error("singular diagonal block for k=" + std::to_string(k)), block_k(k) {}
};

// The symbolic solver was asked to divide by a quantity that depends on n.
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

struct RetryExhausted : std::runtime_error {
    explicit RetryExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct SizeCapExceeded : std::runtime_error {
    explicit SizeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownBuiltin : std::invalid_argument {
    explicit UnknownBuiltin(const std::string& name)
        : std::invalid_argument("unknown builtin: " + name) {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct VersionUnsupported : std::runtime_error {
    explicit VersionUnsupported(int v)
        : std::runtime_error("unsupported certificate version " + std::to_string(v)) {}
};

struct InvalidTolerance : std::invalid_argument {
    InvalidTolerance() : std::invalid_argument("tolerance must be positive") {}
};

}  // namespace qw

#endif
