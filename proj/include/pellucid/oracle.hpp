#pragma once

#include <vector>

#include "pellucid/exact.hpp"
#include "pellucid/pell.hpp"

namespace pellucid {

// Exhaustive search for solutions of x^2 - d y^2 = rhs with 1 <= y <= y_max.
// Deliberately shares nothing with the continued-fraction solver beyond the
// integer primitives: for each y it just asks whether d y^2 + rhs is a
// positive perfect square.
struct OracleQuery {
    Nat d;
    int rhs;   // one of 1, -1, 4, -4
    Nat y_max; // >= 1

    OracleQuery(Nat d_, int rhs_, Nat y_max_);
};

// Serial reference implementation.
std::vector<PellSolution> brute_solutions_serial(const OracleQuery& q);

// OpenMP kernel: contiguous y-chunks scanned in parallel, results merged in
// chunk order. Output is bit-identical to brute_solutions_serial.
std::vector<PellSolution> brute_solutions(const OracleQuery& q);

} // namespace pellucid
