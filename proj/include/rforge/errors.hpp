#pragma once

#include <stdexcept>
#include <string>

namespace rforge {

// Exceeding an exact-search or enumeration limit is an error, never a silent
// approximation.
struct SizeLimitExceeded : std::runtime_error {
    explicit SizeLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

struct ConstructionFailed : std::runtime_error {
    explicit ConstructionFailed(const std::string& what) : std::runtime_error(what) {}
};

struct NotTriangleFree : std::invalid_argument {
    explicit NotTriangleFree(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyCover : std::invalid_argument {
    explicit EmptyCover(const std::string& what) : std::invalid_argument(what) {}
};

struct HostTooSmall : std::invalid_argument {
    explicit HostTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

// Candidate set emptied during a host reduction: signals an arithmetic or
// bookkeeping bug, the ledger inequalities make it unreachable on legal input.
struct CandidateUnderflow : std::logic_error {
    explicit CandidateUnderflow(const std::string& what) : std::logic_error(what) {}
};

struct LimitExceeded : std::runtime_error {
    explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rforge
