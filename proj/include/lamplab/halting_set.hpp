#pragma once

#include "lamplab/machines.hpp"
#include "lamplab/profinite.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lamplab {

// Open set B built from a registry of machines: B is the disjoint
// union of neighborhoods X_n of t_n (product of the first n primes),
// each driven by a step-bounded run of machine M_n.  A is the
// complement of B.  Membership in B is decidable; producing a
// progression witness around a center point requires halting
// knowledge, which is the whole point of the construction.

// Product of the first n primes.  Rejects n < 1.
Int t_seq(int n);

struct XnParams {
    int n;
    Int t_n;     // p_1 ... p_n
    Int t_next;  // p_1 ... p_{n+1}
    Int m;       // theta(t_next): modulus of the closed ball around t_n
    Rat r_n;     // 1 / t_next

    Progression closed_ball() const { return Progression(t_n, m); }
};

struct XnDescription {
    bool exact;  // machine halted, description finalized
    std::uint64_t steps;  // halting step K when exact, steps simulated otherwise
    // Open balls around t_n +- k*m for each completed step k, in step
    // order (+k before -k); when exact, the final ball around t_n is
    // appended last.
    std::vector<Progression> balls;
    // Exact-only finalization data.
    Rat r;        // min over k of (1/2) d(t_n, t_n +- k*m); r_n when K = 0
    Int y;        // smallest natural != t_n with d(t_n, y) < r
    Rat r_prime;  // d(t_n, y); the final ball is B(t_n, r_prime)
};

enum class CertKind {
    NoCandidateIndex,   // no n with p_n | x, p_{n+1} !| x inside the registry
    OutsideClosedBall,  // x not congruent to t_n mod m
    CenterPoint,        // x = t_n
    AddedAtStep,        // x lies in a ball added at step k
    InsideFinalBall,    // x lies in the final ball B(t_n, r')
    ExcludedByExactXn,  // machine halted and x is in none of the balls
};

struct MembershipAnswer {
    bool verdict;
    CertKind kind;
    int n = 0;                          // candidate index, when one exists
    Int k = 0;                          // (x - t_n) / m, for the ball certificates
    std::optional<Progression> ball;    // containing ball, for the containment forms

    std::string describe() const;  // key=value lines
};

struct WitnessResult {
    bool known;
    Int modulus;            // valid when known
    bool verified;          // re-checked against the X_n structure
    std::uint64_t budget;   // budget used when unknown

    bool operator==(const WitnessResult&) const = default;
};

class HaltingSet {
  public:
    explicit HaltingSet(Registry reg) : reg_(std::move(reg)) {}

    const Registry& registry() const { return reg_; }

    XnParams xn_params(int n) const;

    // Total decision procedure for x in B, with a re-checkable
    // certificate.
    MembershipAnswer member_B(const Int& x) const;

    bool member_A(const Int& x) const { return !member_B(x).verdict; }

    XnDescription describe_Xn(int n, std::uint64_t budget) const;

    // Progression witness x + N*Z contained in B, for x in B.  For a
    // center-point certificate this needs the machine to halt within
    // budget or a declared loops status; otherwise the result is
    // UnknownWithinBudget.  Every witness is re-verified by a covering
    // check against the known X_n structure.
    WitnessResult openness_witness(const Int& x, std::uint64_t budget) const;

    // Smallest k >= 1 with t_n + k*m inside B(t_n, r): if B(t_n, r) is
    // contained in B then M_n halts within that many steps or never.
    Int halting_bound_from_certificate(int n, const Rat& r) const;

    // Known structure of X_n as a list of progressions whose union is
    // exactly X_n minus possibly the center point: the whole closed
    // ball under a declared (or supplied) loops status, the exact ball
    // list after an in-budget halt, nullopt otherwise.
    std::optional<std::vector<Progression>> known_structure(int n, std::uint64_t budget) const;

  private:
    Registry reg_;
};

// The coarser bound theta(ceil(1/r) + 1) that works for any radius.
Int coarse_halting_bound(const Rat& r);

}  // namespace lamplab
