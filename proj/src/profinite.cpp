#include "lamplab/profinite.hpp"

#include <sstream>
#include <stdexcept>

namespace lamplab {

Int theta(const Int& n) {
    if (n < 1) throw std::invalid_argument("theta: n must be >= 1");
    Int acc = 1;
    for (Int i = 2; i <= n; ++i) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), i.get_mpz_t());
    return acc;
}

Rat norm(const Int& x) {
    if (x == 0) return Rat(0);
    Int ax = abs(x);
    // largest n with lcm(1..n) | x; grow the lcm one step at a time
    Int n = 1;
    Int l = 1;
    for (;;) {
        Int next = n + 1;
        Int l2;
        mpz_lcm(l2.get_mpz_t(), l.get_mpz_t(), next.get_mpz_t());
        if (!mpz_divisible_p(ax.get_mpz_t(), l2.get_mpz_t())) break;
        n = next;
        l = l2;
    }
    Rat r(1, n);
    r.canonicalize();
    return r;
}

Rat dist(const Int& x, const Int& y) { return norm(x - y); }

Progression::Progression(Int c, Int m) : residue(std::move(c)), modulus(std::move(m)) {
    if (modulus <= 0) throw std::invalid_argument("Progression: modulus must be positive");
    mpz_fdiv_r(residue.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
}

bool Progression::contains(const Int& x) const {
    Int d = x - residue;
    return mpz_divisible_p(d.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

bool Progression::subset_of(const Progression& other) const {
    if (!mpz_divisible_p(modulus.get_mpz_t(), other.modulus.get_mpz_t())) return false;
    return other.contains(residue);
}

std::string Progression::str() const {
    std::ostringstream os;
    os << residue << "+" << modulus << "Z";
    return os.str();
}

Progression closed_ball(const Int& x, const Int& n) {
    return Progression(x, theta(n));
}

Progression open_ball(const Int& x, const Rat& r) {
    if (r <= 0) throw std::invalid_argument("open_ball: radius must be positive");
    // smallest s with 1/s < r, i.e. s = floor(1/r) + 1
    Int s;
    mpz_fdiv_q(s.get_mpz_t(), r.get_den().get_mpz_t(), r.get_num().get_mpz_t());
    s += 1;
    return Progression(x, theta(s));
}

CoverCheck progression_cover_check(const Progression& p,
                                   const std::vector<Progression>& qs,
                                   const Int& budget) {
    Int l = p.modulus;
    for (const auto& q : qs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.modulus.get_mpz_t());
    Int classes = l / p.modulus;
    if (classes > budget) return {CoverResult::BudgetExhausted, std::nullopt};
    for (Int j = 0; j < classes; ++j) {
        Int x = p.residue + j * p.modulus;
        bool hit = false;
        for (const auto& q : qs) {
            if (q.contains(x)) { hit = true; break; }
        }
        if (!hit) return {CoverResult::NotCovered, x};
    }
    return {CoverResult::Covered, std::nullopt};
}

CoverResult progression_covered_by(const Progression& p,
                                   const std::vector<Progression>& qs,
                                   const Int& budget) {
    return progression_cover_check(p, qs, budget).result;
}

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    if (q.get_den() == 1) os << q.get_num();
    else os << q.get_num() << "/" << q.get_den();
    return os.str();
}

}  // namespace lamplab
