#include "lamplab/halting_set.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace lamplab {

namespace {

Int nth_prime(int n) {
    Int p = 2;
    for (int i = 1; i < n; ++i) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    return p;
}

const char* cert_name(CertKind k) {
    switch (k) {
        case CertKind::NoCandidateIndex: return "NoCandidateIndex";
        case CertKind::OutsideClosedBall: return "OutsideClosedBall";
        case CertKind::CenterPoint: return "CenterPoint";
        case CertKind::AddedAtStep: return "AddedAtStep";
        case CertKind::InsideFinalBall: return "InsideFinalBall";
        case CertKind::ExcludedByExactXn: return "ExcludedByExactXn";
    }
    return "?";
}

std::uint64_t to_budget(const Int& k) {
    Int a = abs(k);
    if (!a.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
    return a.get_ui();
}

}  // namespace

Int t_seq(int n) {
    if (n < 1) throw std::invalid_argument("t_seq: n must be >= 1");
    Int p = 2, t = 1;
    for (int i = 1; i <= n; ++i) {
        t *= p;
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    return t;
}

std::string MembershipAnswer::describe() const {
    std::ostringstream os;
    os << "verdict=" << (verdict ? "true" : "false") << "\n";
    os << "certificate=" << cert_name(kind) << "\n";
    if (kind != CertKind::NoCandidateIndex) os << "n=" << n << "\n";
    if (kind == CertKind::AddedAtStep) os << "k=" << k << "\n";
    if (ball) os << "ball=" << ball->str() << "\n";
    return os.str();
}

XnParams HaltingSet::xn_params(int n) const {
    if (n < 1 || static_cast<std::size_t>(n) > reg_.size())
        throw std::out_of_range("xn_params: index " + std::to_string(n) + " beyond registry");
    XnParams p;
    p.n = n;
    p.t_n = t_seq(n);
    p.t_next = p.t_n * nth_prime(n + 1);
    p.m = theta(p.t_next);
    p.r_n = Rat(1, p.t_next);
    p.r_n.canonicalize();
    return p;
}

MembershipAnswer HaltingSet::member_B(const Int& x) const {
    MembershipAnswer ans;
    // candidate index: the unique n with p_n | x and p_{n+1} !| x.
    // x = 0 is divisible by every prime, so it has no candidate.
    int n = 0;
    if (x != 0) {
        Int p = 2;
        while (static_cast<std::size_t>(n) <= reg_.size() &&
               mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
            ++n;
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        }
    }
    if (n < 1 || static_cast<std::size_t>(n) > reg_.size()) {
        ans.verdict = false;
        ans.kind = CertKind::NoCandidateIndex;
        return ans;
    }
    ans.n = n;
    XnParams params = xn_params(n);
    Int diff = x - params.t_n;
    if (!mpz_divisible_p(diff.get_mpz_t(), params.m.get_mpz_t())) {
        ans.verdict = false;
        ans.kind = CertKind::OutsideClosedBall;
        return ans;
    }
    Int k = diff / params.m;
    ans.k = abs(k);
    if (k == 0) {
        ans.verdict = true;
        ans.kind = CertKind::CenterPoint;
        return ans;
    }
    std::uint64_t steps_needed = to_budget(k);
    RunStatus st = run_bounded(reg_.at(n), steps_needed);
    if (!st.halted || st.steps == steps_needed) {
        // the run reached step |k| (halting step included), so x was added
        ans.verdict = true;
        ans.kind = CertKind::AddedAtStep;
        ans.ball = open_ball(x, dist(params.t_n, x) / 2);
        return ans;
    }
    // machine halted before step |k|: X_n is known exactly
    XnDescription desc = describe_Xn(n, st.steps);
    for (std::size_t i = 0; i + 1 < desc.balls.size(); ++i) {
        if (desc.balls[i].contains(x)) {
            ans.verdict = true;
            ans.kind = CertKind::AddedAtStep;
            ans.k = Int(static_cast<unsigned long>(i / 2 + 1));
            ans.ball = desc.balls[i];
            return ans;
        }
    }
    if (!desc.balls.empty() && desc.balls.back().contains(x)) {
        ans.verdict = true;
        ans.kind = CertKind::InsideFinalBall;
        ans.ball = desc.balls.back();
        return ans;
    }
    ans.verdict = false;
    ans.kind = CertKind::ExcludedByExactXn;
    return ans;
}

XnDescription HaltingSet::describe_Xn(int n, std::uint64_t budget) const {
    XnParams params = xn_params(n);
    RunStatus st = run_bounded(reg_.at(n), budget);
    XnDescription desc;
    desc.exact = st.halted;
    desc.steps = st.steps;
    Rat r_min = params.r_n;
    bool have_min = false;
    for (std::uint64_t k = 1; k <= st.steps; ++k) {
        Int km = Int(static_cast<unsigned long>(k)) * params.m;
        Rat half = norm(km) / 2;
        desc.balls.push_back(open_ball(params.t_n + km, half));
        desc.balls.push_back(open_ball(params.t_n - km, half));
        if (!have_min || half < r_min) { r_min = half; have_min = true; }
    }
    if (st.halted) {
        desc.r = r_min;  // r_n when K = 0 (empty minimum)
        Progression inner = open_ball(params.t_n, desc.r);
        // smallest natural != t_n at distance < r
        desc.y = inner.residue == params.t_n ? inner.residue + inner.modulus : inner.residue;
        desc.r_prime = dist(params.t_n, desc.y);
        desc.balls.push_back(open_ball(params.t_n, desc.r_prime));
    }
    return desc;
}

std::optional<std::vector<Progression>> HaltingSet::known_structure(int n,
                                                                    std::uint64_t budget) const {
    XnParams params = xn_params(n);
    const MachineSpec& m = reg_.at(n);
    if (m.declared.kind == DeclaredStatus::Kind::Loops)
        return std::vector<Progression>{params.closed_ball()};
    RunStatus st = run_bounded(m, budget);
    if (st.halted) return describe_Xn(n, budget).balls;
    return std::nullopt;
}

WitnessResult HaltingSet::openness_witness(const Int& x, std::uint64_t budget) const {
    MembershipAnswer ans = member_B(x);
    if (!ans.verdict)
        throw std::invalid_argument("openness_witness: x is not a member of B");
    Int verify_budget = 1000000;
    if (ans.kind == CertKind::AddedAtStep || ans.kind == CertKind::InsideFinalBall) {
        Int mod = ans.ball->modulus;
        auto structure = known_structure(ans.n, budget);
        std::vector<Progression> against =
            structure ? *structure : std::vector<Progression>{*ans.ball};
        bool ok = progression_covered_by(Progression(x, mod), against, verify_budget) ==
                  CoverResult::Covered;
        return {true, mod, ok, budget};
    }
    // center point: the witness radius depends on whether M_n halts
    XnParams params = xn_params(ans.n);
    const MachineSpec& m = reg_.at(ans.n);
    RunStatus st = run_bounded(m, budget);
    if (st.halted) {
        XnDescription desc = describe_Xn(ans.n, budget);
        Int mod = desc.balls.back().modulus;
        bool ok = progression_covered_by(Progression(x, mod), desc.balls, verify_budget) ==
                  CoverResult::Covered;
        return {true, mod, ok, budget};
    }
    if (m.declared.kind == DeclaredStatus::Kind::Loops) {
        bool ok = Progression(x, params.m).subset_of(params.closed_ball());
        return {true, params.m, ok, budget};
    }
    return {false, Int(0), false, budget};
}

Int HaltingSet::halting_bound_from_certificate(int n, const Rat& r) const {
    if (r <= 0) throw std::invalid_argument("halting_bound_from_certificate: r must be positive");
    XnParams params = xn_params(n);
    Int big = open_ball(params.t_n, r).modulus;
    Int g;
    mpz_gcd(g.get_mpz_t(), big.get_mpz_t(), params.m.get_mpz_t());
    return big / g;
}

Int coarse_halting_bound(const Rat& r) {
    if (r <= 0) throw std::invalid_argument("coarse_halting_bound: r must be positive");
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), r.get_den().get_mpz_t(), r.get_num().get_mpz_t());
    return theta(c + 1);
}

}  // namespace lamplab
