#pragma once

#include "lamplab/halting_set.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lamplab {

// Experiments on separability witnesses: how large a shift-killing
// modulus (equivalently, a progression avoiding A) must be for a given
// non-identity element u_x uhat_x^-1, and how that grows with the
// halting time of the machine behind X_n.

struct QuotientVerdict {
    enum class Kind { Identity, NonIdentity, BudgetExhausted };
    Kind kind;
    std::optional<Int> witness;  // element of A in x + N*Z, when Identity
};

// Decides whether u_x uhat_x^-1 collapses in the quotient of the
// amalgam by a^N = ahat^N = e: it does iff some x + kN lies in A.
// Uses exact X_n structure when available (declared loops status or an
// in-budget halt), residue enumeration plus bounded search otherwise.
QuotientVerdict quotient_kill_shifts(const HaltingSet& hs, const Int& x, const Int& N,
                                     const Int& budget);

struct DepthRow {
    Int x;
    Int word_length;                    // 4|x| + 2
    std::optional<Int> witness_modulus; // smallest verified schedule modulus
    std::string certificate;            // membership certificate or skip note
    bool skipped = false;               // x in A: nothing to separate
};

// For each x not in A, the smallest schedule modulus N with a verified
// x + N*Z inside B; unknown (no modulus) when the X_n structure is not
// available within budget.  Rejects an empty schedule.
std::vector<DepthRow> depth_table(const HaltingSet& hs, const std::vector<Int>& xs,
                                  const std::vector<Int>& schedule, std::uint64_t budget);

// Default schedule theta(2), ..., theta(s_max), deduplicated.
std::vector<Int> theta_schedule(int s_max);

}  // namespace lamplab
