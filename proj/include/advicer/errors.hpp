#ifndef ADVICER_ERRORS_HPP
#define ADVICER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace advicer {

// Precondition violations (bad arguments, ill-formed inputs).
struct ContractViolation : std::invalid_argument {
    explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

// Operation needs ultimately periodic advice but got a generated stream.
struct UnsupportedAdvice : std::runtime_error {
    explicit UnsupportedAdvice(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration guard exceeded.
struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

// Class count exceeds the requested bound k during synthesis.
struct BoundViolation : std::runtime_error {
    BoundViolation(const std::string& what, std::size_t where) : std::runtime_error(what), position(where) {}
    std::size_t position;
};

// Suffix/context depth too small to produce a well-defined successor map.
struct DepthInsufficiency : std::runtime_error {
    explicit DepthInsufficiency(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (codes, machine files, descriptors).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Machine lacks the structure an operation needs (e.g. no accepting states).
struct DegenerateMachine : std::runtime_error {
    explicit DegenerateMachine(const std::string& what) : std::runtime_error(what) {}
};

} // namespace advicer

#endif
