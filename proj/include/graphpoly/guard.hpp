// Size and compute budgets for exhaustive enumerations.
//
// Every entry point that enumerates a graph family or sweeps colorings takes
// a Limits value and refuses work that would exceed it, with a message that
// states both the requested amount and the configured bound.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphpoly {

struct Limits {
    std::uint64_t max_graphs = 10'000'000;     // largest graph family we will enumerate
    std::uint64_t max_steps = 1'000'000'000;   // elementary coloring/subgraph steps per batch
    unsigned jobs = 0;                          // worker threads; 0 = all hardware cores
};

class GuardError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// base^exp, throwing GuardError as soon as the value passes `bound`.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t bound,
                                 const std::string& what) {
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && acc > bound / base)
            throw GuardError(what + " exceeds the configured bound of " + std::to_string(bound) +
                             " (raise the limit to override)");
        acc *= base;
    }
    if (acc > bound)
        throw GuardError(what + " is " + std::to_string(acc) + ", exceeding the configured bound of " +
                         std::to_string(bound) + " (raise the limit to override)");
    return acc;
}

inline void check_budget(std::uint64_t amount, std::uint64_t bound, const std::string& what) {
    if (amount > bound)
        throw GuardError(what + " needs " + std::to_string(amount) +
                         " steps, exceeding the configured bound of " + std::to_string(bound) +
                         " (raise the limit to override)");
}

}  // namespace graphpoly
