#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "pellucid/exact.hpp"

namespace pellucid {

// The equation x^2 - d y^2 = rhs for a fixed non-square d >= 2 and
// rhs in {1, -1, 4, -4}.
struct PellProblem {
    Nat d;
    int rhs;

    PellProblem(Nat d_, int rhs_);
};

// One positive solution: x, y >= 1 and x^2 - d y^2 = rhs exactly.
struct PellSolution {
    Nat x;
    Nat y;

    bool operator==(const PellSolution&) const = default;
    // Solutions of a fixed problem are totally ordered; x and y increase
    // together, so ordering by (x, y) is the natural enumeration order.
    auto operator<=>(const PellSolution& o) const {
        if (auto c = cmp(x, o.x); c != 0) return c < 0 ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
        auto c = cmp(y, o.y);
        return c < 0    ? std::strong_ordering::less
               : c == 0 ? std::strong_ordering::equal
                        : std::strong_ordering::greater;
    }
};

std::ostream& operator<<(std::ostream& os, const PellSolution& s);

// x^2 - d y^2 = -1 is solvable exactly when the period of sqrt(d) is odd.
bool is_negative_one_solvable(const Nat& d);

// How minimality of a fundamental solution is established.
enum class MinimalityWitness {
    ConvergentLemma,      // rhs = +-1: convergent at index l-1 / 2l-1
    SmallCoefficientBound, // rhs = 4 with x > y^2 - 2
    UnitGroup,            // rhs = +-4: order-index construction
    None,                 // no solution exists
};

struct FundamentalResult {
    std::optional<PellSolution> solution;
    MinimalityWitness witness;
};

// Smallest positive solution, if any. rhs = 1 always has one; rhs = -1
// exists iff the period is odd; rhs = +-4 are reduced to +-1 problems
// (doubled solutions, d/4 descent, or the half-integer unit when the
// fundamental unit of Z[(1+sqrt d)/2] lies outside Z[sqrt d]).
std::optional<PellSolution> fundamental(const PellProblem& prob);
FundamentalResult fundamental_certified(const PellProblem& prob);

// Ascending search on y, testing whether d y^2 + rhs is a perfect square.
// Terminates at 2*y1 of the matching +-1 problem (any +-1 solution doubles
// to a +-4 one, so the bound is sound). The bound itself can be astronomically
// large; if it exceeds probe_limit and nothing was found the search throws
// BoundExceededError rather than run forever.
std::optional<PellSolution> fundamental_by_search(const PellProblem& prob,
                                                  unsigned long probe_limit = 10'000'000);

// Lazy enumeration in increasing order, starting with the fundamental.
// One ring multiplication per step; the halvings in the +-4 cases are
// asserted exact, never truncated.
class SolutionStream {
  public:
    explicit SolutionStream(const PellProblem& prob); // throws UnsolvableError
    const PellProblem& problem() const { return prob_; }
    PellSolution next();

  private:
    PellProblem prob_;
    PellSolution fund_;
    PellSolution cur_;
    bool started_ = false;
    Int mul_x_, mul_y_; // step multiplier in the ring Z[sqrt d]
};

// First `count` positive solutions, ascending. Throws UnsolvableError when
// no solution exists.
std::vector<PellSolution> solutions(const PellProblem& prob, std::size_t count);

// Same sequence, each term computed independently by binary powering of the
// fundamental in Z[sqrt d] followed by the exact 2^(n-1) / 4^(n-1) reduction.
std::vector<PellSolution> solutions_by_powering(const PellProblem& prob, std::size_t count);

bool verify(const PellProblem& prob, const PellSolution& sol);

} // namespace pellucid
