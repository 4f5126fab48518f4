#include "lamplab/depth.hpp"

#include <algorithm>
#include <stdexcept>

namespace lamplab {

namespace {

std::uint64_t budget_steps(const Int& budget) {
    return budget.fits_ulong_p() ? budget.get_ui() : ~0ull;
}

}  // namespace

QuotientVerdict quotient_kill_shifts(const HaltingSet& hs, const Int& x, const Int& N,
                                     const Int& budget) {
    if (N < 1) throw std::invalid_argument("quotient_kill_shifts: N must be >= 1");
    if (hs.member_A(x)) return {QuotientVerdict::Kind::Identity, x};

    Progression target(x, N);
    // residue reasoning: if some class of x + N*Z escapes every closed
    // ball around a t_n, that element is in A outright
    std::vector<Progression> closed_balls;
    for (int n = 1; n <= static_cast<int>(hs.registry().size()); ++n)
        closed_balls.push_back(hs.xn_params(n).closed_ball());
    CoverCheck outer = progression_cover_check(target, closed_balls, budget);
    if (outer.result == CoverResult::NotCovered)
        return {QuotientVerdict::Kind::Identity, outer.uncovered};

    if (outer.result == CoverResult::Covered) {
        // every class sits in some closed ball; resolve against the
        // exact X_n structures when all of them are known
        std::vector<Progression> structure;
        bool all_known = true;
        for (int n = 1; n <= static_cast<int>(hs.registry().size()); ++n) {
            auto s = hs.known_structure(n, budget_steps(budget));
            if (!s) { all_known = false; break; }
            structure.insert(structure.end(), s->begin(), s->end());
        }
        if (all_known) {
            CoverCheck inner = progression_cover_check(target, structure, budget);
            if (inner.result == CoverResult::Covered)
                return {QuotientVerdict::Kind::NonIdentity, std::nullopt};
            if (inner.result == CoverResult::NotCovered)
                return {QuotientVerdict::Kind::Identity, inner.uncovered};
        }
    }

    // bounded direct search for a member of A in x + N*Z
    for (Int k = 1; k <= budget; ++k) {
        if (hs.member_A(x + k * N)) return {QuotientVerdict::Kind::Identity, x + k * N};
        if (hs.member_A(x - k * N)) return {QuotientVerdict::Kind::Identity, x - k * N};
    }
    return {QuotientVerdict::Kind::BudgetExhausted, std::nullopt};
}

std::vector<DepthRow> depth_table(const HaltingSet& hs, const std::vector<Int>& xs,
                                  const std::vector<Int>& schedule, std::uint64_t budget) {
    if (schedule.empty()) throw std::invalid_argument("depth_table: empty schedule");
    std::vector<Int> sched = schedule;
    std::sort(sched.begin(), sched.end());

    std::vector<DepthRow> rows;
    for (const Int& x : xs) {
        DepthRow row;
        row.x = x;
        row.word_length = 4 * abs(x) + 2;
        MembershipAnswer ans = hs.member_B(x);
        if (!ans.verdict) {
            row.skipped = true;
            row.certificate = "x in A: u_x = uhat_x, nothing to separate";
            rows.push_back(std::move(row));
            continue;
        }
        row.certificate = ans.describe();
        auto structure = hs.known_structure(ans.n, budget);
        if (structure) {
            Progression outer = hs.xn_params(ans.n).closed_ball();
            for (const Int& N : sched) {
                // every ball of X_n sits inside the closed ball, so a
                // candidate progression must too
                if (!Progression(x, N).subset_of(outer)) continue;
                if (progression_covered_by(Progression(x, N), *structure, Int(1000000)) ==
                    CoverResult::Covered) {
                    row.witness_modulus = N;
                    break;
                }
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Int> theta_schedule(int s_max) {
    std::vector<Int> out;
    for (int s = 2; s <= s_max; ++s) {
        Int t = theta(s);
        if (out.empty() || out.back() != t) out.push_back(t);
    }
    return out;
}

}  // namespace lamplab
