#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace lamplab {

using Int = mpz_class;
using Rat = mpq_class;

// theta(n) = lcm(1, 2, ..., n).  Rejects n < 1.
Int theta(const Int& n);

// Profinite norm of x: 0 if x = 0, else 1/n where n is the largest
// integer such that 1, 2, ..., n all divide x.  Exact rational.
Rat norm(const Int& x);

// dist(x, y) = norm(x - y).
Rat dist(const Int& x, const Int& y);

// Residue class c + M*Z, stored canonically with 0 <= c < M.
struct Progression {
    Int residue;
    Int modulus;

    Progression(Int c, Int m);

    bool contains(const Int& x) const;

    // True iff *this is a subset of other, i.e. other.modulus divides
    // modulus and the residues agree mod other.modulus.
    bool subset_of(const Progression& other) const;

    bool operator==(const Progression& other) const = default;

    std::string str() const;
};

// Closed ball of radius 1/n around x: the progression x + theta(n)*Z.
Progression closed_ball(const Int& x, const Int& n);

// Open ball {y : dist(x, y) < r} for a positive rational radius r.
// Norm values are reciprocals of integers, so the strict threshold
// resolves to x + theta(s)*Z where s is the smallest integer with 1/s < r.
Progression open_ball(const Int& x, const Rat& r);

enum class CoverResult { Covered, NotCovered, BudgetExhausted };

// Exact decision of P being contained in the union of the qs, by
// enumerating the residue classes of P modulo lcm(P.modulus, all
// q.modulus).  Returns BudgetExhausted when the class count exceeds
// the budget; that is a non-answer, not a failure.
CoverResult progression_covered_by(const Progression& p,
                                   const std::vector<Progression>& qs,
                                   const Int& budget);

// Optional uncovered witness, for callers that want the element itself.
// Same enumeration as progression_covered_by.
struct CoverCheck {
    CoverResult result;
    std::optional<Int> uncovered;  // set when result == NotCovered
};
CoverCheck progression_cover_check(const Progression& p,
                                   const std::vector<Progression>& qs,
                                   const Int& budget);

std::string rat_str(const Rat& q);

}  // namespace lamplab
