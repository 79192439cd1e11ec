#include "pellucid/exact.hpp"

namespace pellucid {

IsqrtResult isqrt(const Nat& n) {
    if (n < 0) {
        throw std::invalid_argument("isqrt of negative value " + n.get_str());
    }
    if (n < 2) {
        return {n, true};
    }
    // Start from x = 2^ceil(bits/2) >= sqrt(n); the iteration is then
    // monotone decreasing and stops at floor(sqrt(n)).
    const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Nat x = Nat(1) << static_cast<unsigned long>((bits + 1) / 2);
    Nat y = (x + n / x) / 2;
    while (y < x) {
        x = std::move(y);
        y = (x + n / x) / 2;
    }
    return {x, x * x == n};
}

bool is_perfect_square(const Nat& n) {
    if (n < 0) return false;
    return isqrt(n).exact;
}

QuadraticSurd::QuadraticSurd(Int p, Int q, Nat d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
    if (d_ < 2) {
        throw PerfectSquareError(d_);
    }
    auto r = isqrt(d_);
    if (r.exact) {
        throw PerfectSquareError(d_);
    }
    root_d_ = std::move(r.root);
    if (q_ == 0) {
        throw std::invalid_argument("quadratic surd with zero denominator");
    }
    if ((d_ - p_ * p_) % q_ != 0) {
        throw std::invalid_argument("quadratic surd violates q | (d - p^2)");
    }
}

QuadraticSurd QuadraticSurd::sqrt_of(Nat d) {
    return QuadraticSurd(0, 1, std::move(d));
}

SurdStep surd_step(const QuadraticSurd& alpha) {
    Nat a;
    Int num = alpha.p() + alpha.floor_sqrt_d();
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), alpha.q().get_mpz_t());

    Int p_next = a * alpha.q() - alpha.p();
    Int q_num = alpha.d() - p_next * p_next;
    // Exact by the invariant: d - p'^2 == d - p^2 (mod q).
    if (q_num % alpha.q() != 0) {
        throw BoundExceededError("surd_step: inexact division, invariant broken");
    }
    Int q_next;
    mpz_divexact(q_next.get_mpz_t(), q_num.get_mpz_t(), alpha.q().get_mpz_t());

    return {std::move(a), QuadraticSurd(std::move(p_next), std::move(q_next), alpha.d())};
}

} // namespace pellucid
