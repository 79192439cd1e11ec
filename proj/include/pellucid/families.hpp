#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pellucid/contfrac.hpp"
#include "pellucid/exact.hpp"
#include "pellucid/lucas.hpp"
#include "pellucid/pell.hpp"

namespace pellucid {

// The parameterized coefficient families with closed-form answers.
enum class Family { K2P4, K2M4, K2P1, K2M1, K2MK };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// One parameterized problem x^2 - d y^2 = rhs with d determined by (family, k).
// Parameter ranges are part of the contract: K2P4 needs k > 1, K2M4 k > 3,
// K2P1 k >= 1, K2M1 k > 1, K2MK k > 2 (and rhs = -1 only).
struct FamilyCase {
    Family family;
    unsigned long k;
    int rhs;

    FamilyCase(Family family_, unsigned long k_, int rhs_); // throws OutOfRangeError

    Nat d() const;
};

enum class CoordScale { Half, One, Twice };

// Closed-form solution generator: the n-th solution (n >= 1) is
//   x = scale(V_m(k', s')), y = scale(U_m(k', s')) with m = stride*n - offset.
struct SolutionForm {
    LucasParams params;
    unsigned long stride;
    unsigned long offset;
    CoordScale x_scale; // Half or One
    CoordScale y_scale;

    PellSolution eval(unsigned long n) const;
    std::string describe() const;
};

struct ReasonTag {
    std::string code;     // stable machine tag, e.g. "even-period"
    std::string citation; // human explanation
};

enum class AnswerKind {
    ClosedForm,      // Lucas-sequence generator
    GenericFallback, // solvable but no closed form (k^2-1 with k = 3, rhs = -4)
    NoSolution,
};

struct FamilyAnswer {
    AnswerKind kind;
    std::optional<SolutionForm> form; // ClosedForm
    std::optional<ReasonTag> reason;  // NoSolution
};

// The closed continued-fraction pattern for sqrt(d); equals expand_sqrt(d).
SqrtCF family_cf(Family family, unsigned long k);

FamilyAnswer family_answer(const FamilyCase& c);

// Closed-form fundamental solution (GenericFallback cases delegate to the
// generic solver); nullopt for the NoSolution cases.
std::optional<PellSolution> family_fundamental(const FamilyCase& c);

// First `count` solutions from the closed form, ascending; throws
// UnsolvableError (carrying the reason) for NoSolution cases.
std::vector<PellSolution> family_solutions(const FamilyCase& c, std::size_t count);

// The reason the case has no solution, when it has none.
std::optional<ReasonTag> family_nonexistence(const FamilyCase& c);

struct CrosscheckReport {
    bool passed;
    std::string divergence; // empty when passed
};

// Family answers against the generic machinery: pattern vs expand_sqrt,
// closed fundamental vs fundamental, first m solutions vs solutions; for
// NoSolution cases, the generic solver and the oracle (y <= oracle_y_max)
// must both come up empty.
CrosscheckReport crosscheck(const FamilyCase& c, std::size_t m,
                            const Nat& oracle_y_max = 10000);

} // namespace pellucid
