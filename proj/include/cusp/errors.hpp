#pragma once

#include <stdexcept>
#include <string>

namespace cusp {

// Error types thrown by the library. Each names the contract it guards;
// all derive from std::runtime_error so callers can catch coarsely.

struct NoSignChange : std::runtime_error {
    explicit NoSignChange(const std::string& what) : std::runtime_error(what) {}
};

struct NoRoot : std::runtime_error {
    explicit NoRoot(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfDomain : std::runtime_error {
    explicit OutOfDomain(const std::string& what) : std::runtime_error(what) {}
};

struct BranchPole : std::runtime_error {
    explicit BranchPole(const std::string& what) : std::runtime_error(what) {}
};

struct NonzeroConstantTerm : std::runtime_error {
    explicit NonzeroConstantTerm(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRange : std::runtime_error {
    explicit OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct NotMaMinda : std::runtime_error {
    explicit NotMaMinda(const std::string& what) : std::runtime_error(what) {}
};

struct NotInBackwardTable : std::runtime_error {
    explicit NotInBackwardTable(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedClass : std::runtime_error {
    explicit UnsupportedClass(const std::string& what) : std::runtime_error(what) {}
};

struct ParamOrder : std::runtime_error {
    explicit ParamOrder(const std::string& what) : std::runtime_error(what) {}
};

struct VerificationFailed : std::runtime_error {
    explicit VerificationFailed(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cusp
