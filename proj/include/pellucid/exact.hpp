#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace pellucid {

// Arbitrary-precision integers. Nat is a signed type used where values are
// nonnegative by construction; all arithmetic is exact.
using Int = mpz_class;
using Nat = mpz_class;

struct PerfectSquareError : std::invalid_argument {
    explicit PerfectSquareError(const Nat& d)
        : std::invalid_argument("d = " + d.get_str() + " is a perfect square (or < 2)") {}
};

struct UnsolvableError : std::runtime_error {
    explicit UnsolvableError(const std::string& why) : std::runtime_error(why) {}
};

struct OutOfRangeError : std::invalid_argument {
    explicit OutOfRangeError(const std::string& why) : std::invalid_argument(why) {}
};

// Raised when an internal termination bound is exceeded; indicates a bug or
// an infeasible bounded search, never a property of the inputs.
struct BoundExceededError : std::logic_error {
    explicit BoundExceededError(const std::string& why) : std::logic_error(why) {}
};

struct IsqrtResult {
    Nat root;
    bool exact; // root * root == n
};

// Floor square root by Newton iteration with a monotone-decreasing guard.
IsqrtResult isqrt(const Nat& n);

bool is_perfect_square(const Nat& n);

// Exact state (p + sqrt(d)) / q of the continued-fraction recursion.
// Invariants: d >= 2 and not a perfect square, q != 0, and q | (d - p^2).
// Construction validates; every reachable state satisfies the invariants.
class QuadraticSurd {
  public:
    QuadraticSurd(Int p, Int q, Nat d);

    // The initial state sqrt(d) = (0 + sqrt(d)) / 1.
    static QuadraticSurd sqrt_of(Nat d);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Nat& d() const { return d_; }
    const Nat& floor_sqrt_d() const { return root_d_; }

    bool operator==(const QuadraticSurd& o) const {
        return p_ == o.p_ && q_ == o.q_ && d_ == o.d_;
    }

  private:
    Int p_;
    Int q_;
    Nat d_;
    Nat root_d_; // cached floor(sqrt(d))
};

struct SurdStep {
    Nat quotient; // a = floor(alpha)
    QuadraticSurd next; // 1 / (alpha - a)
};

// One step of the expansion of alpha = (p + sqrt(d)) / q in integer form:
//   a = floor((p + floor(sqrt d)) / q),  p' = a q - p,  q' = (d - p'^2) / q.
// The division defining q' is exact whenever q | (d - p^2). Requires q > 0
// (always true for states reachable from sqrt_of).
SurdStep surd_step(const QuadraticSurd& alpha);

} // namespace pellucid
