#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "pellucid/exact.hpp"

namespace pellucid {

// Periodic continued fraction sqrt(d) = [a0; a1, ..., al] with al = 2*a0.
// The period is minimal and a1..a(l-1) is a palindrome; both are checked at
// construction.
struct SqrtCF {
    Nat d;
    Nat a0;
    std::vector<Nat> period; // a1..al

    SqrtCF(Nat d_, Nat a0_, std::vector<Nat> period_);

    std::size_t length() const { return period.size(); }

    // Quotient a_n of the periodically extended stream, n >= 0.
    const Nat& quotient(std::size_t n) const {
        return n == 0 ? a0 : period[(n - 1) % period.size()];
    }

    bool operator==(const SqrtCF&) const = default;
};

std::ostream& operator<<(std::ostream& os, const SqrtCF& cf);

// Expansion of sqrt(d) with the period detected by first recurrence of the
// surd state (p, q); the closing quotient 2*a0 is then checked, not trusted.
SqrtCF expand_sqrt(const Nat& d);

std::size_t period_length(const Nat& d);

struct Convergent {
    std::size_t n; // 0-based; p0/q0 = a0
    Nat p;
    Nat q;
};

// Convergents p_n/q_n by the three-term recurrence over the periodic
// quotient stream, indices unbounded.
class ConvergentStream {
  public:
    explicit ConvergentStream(SqrtCF cf);
    const SqrtCF& cf() const { return cf_; }
    Convergent next();

  private:
    SqrtCF cf_;
    std::size_t n_ = 0;
    Nat p_prev_ = 1, p_prev2_ = 0; // p_{-1}, p_{-2}
    Nat q_prev_ = 0, q_prev2_ = 1; // q_{-1}, q_{-2}
};

Convergent convergent(const SqrtCF& cf, std::size_t n);

} // namespace pellucid
