#pragma once

#include <stdexcept>
#include <string>

namespace qperiod {

// Input diagram fails a structural invariant (arc used once, inconsistent
// cycles, bad orientation data, ...).
struct MalformedDiagram : std::runtime_error {
    explicit MalformedDiagram(const std::string& what) : std::runtime_error(what) {}
};

// State-sum size guard: the bracket enumerates 2^c smoothings.
struct TooManyCrossings : std::runtime_error {
    long long count;
    long long cap;
    TooManyCrossings(long long count_, long long cap_)
        : std::runtime_error("diagram has " + std::to_string(count_) +
                             " crossings, cap is " + std::to_string(cap_)),
          count(count_), cap(cap_) {}
};

// exact_div_int asked to divide a coefficient that is not divisible.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

// An invariant that is guaranteed to be an algebraic integer came out with a
// denominator, or with stray odd zeta-powers.  Always an internal bug.
struct IntegralityViolation : std::logic_error {
    explicit IntegralityViolation(const std::string& what) : std::logic_error(what) {}
};

// Jones exponent bookkeeping produced an odd A-exponent.  Cannot happen for
// genuine link diagrams.
struct NonIntegralExponent : std::logic_error {
    explicit NonIntegralExponent(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qperiod
