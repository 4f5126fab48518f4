#include "lamplab/depth.hpp"
#include "lamplab/halting_set.hpp"
#include "lamplab/lamp.hpp"
#include "lamplab/machines.hpp"
#include "lamplab/profinite.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>

using namespace lamplab;

namespace {

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("'" + s + "' is not an integer");
    }
}

Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("'" + s + "' is not a rational (p or p/q)");
    }
}

std::string oneline(std::string s) {
    for (auto& c : s)
        if (c == '\n') c = ';';
    if (!s.empty() && s.back() == ';') s.pop_back();
    return s;
}

struct Ctx {
    std::vector<std::string> registry_files;
    std::uint64_t budget = 10000;
    std::string format = "text";
    int exit_code = 0;

    std::unique_ptr<HaltingSet> hs;

    HaltingSet& halting_set() {
        if (!hs) {
            if (registry_files.empty())
                throw CLI::ValidationError("this command needs at least one --registry file");
            Registry reg;
            for (const auto& f : registry_files) reg.add_file(f);
            hs = std::make_unique<HaltingSet>(std::move(reg));
        }
        return *hs;
    }

    AOracle oracle() {
        HaltingSet& h = halting_set();
        return [&h](long long i) { return h.member_A(Int(static_cast<long>(i))); };
    }
};

std::string factor_tag(Factor f) { return f == Factor::Plain ? "L" : "L^"; }

void print_description(const XnDescription& d, std::ostream& os) {
    os << "exact=" << (d.exact ? "true" : "false") << "\n";
    os << "steps=" << d.steps << "\n";
    os << "balls=" << d.balls.size() << "\n";
    std::size_t shown = std::min<std::size_t>(d.balls.size(), 24);
    for (std::size_t i = 0; i < shown; ++i) os << "ball=" << d.balls[i].str() << "\n";
    if (shown < d.balls.size()) os << "ball=...\n";
    if (d.exact) {
        os << "r=" << rat_str(d.r) << "\n";
        os << "y=" << d.y << "\n";
        os << "r_prime=" << rat_str(d.r_prime) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    Ctx ctx;
    CLI::App app{"profinite metric on Z, machine-driven open sets, and the word problem in "
                 "amalgamated lamplighter groups"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--registry", ctx.registry_files, "machine registry file (repeatable)");
    app.add_option("--budget", ctx.budget, "step / class budget")->capture_default_str();
    app.add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"text", "tsv"}))
        ->capture_default_str();

    // metric
    auto* metric = app.add_subcommand("metric", "profinite norm, distance and balls");
    metric->require_subcommand(1);
    std::string arg_x, arg_y, arg_n, arg_r;

    auto* m_norm = metric->add_subcommand("norm", "profinite norm of an integer");
    m_norm->add_option("x", arg_x)->required();
    m_norm->callback([&] { std::cout << rat_str(norm(parse_int(arg_x))) << "\n"; });

    auto* m_dist = metric->add_subcommand("dist", "profinite distance");
    m_dist->add_option("x", arg_x)->required();
    m_dist->add_option("y", arg_y)->required();
    m_dist->callback(
        [&] { std::cout << rat_str(dist(parse_int(arg_x), parse_int(arg_y))) << "\n"; });

    auto* m_theta = metric->add_subcommand("theta", "lcm(1..n)");
    m_theta->add_option("n", arg_n)->required();
    m_theta->callback([&] { std::cout << theta(parse_int(arg_n)) << "\n"; });

    auto* m_cball = metric->add_subcommand("cball", "closed ball of radius 1/n as a progression");
    m_cball->add_option("x", arg_x)->required();
    m_cball->add_option("n", arg_n)->required();
    m_cball->callback(
        [&] { std::cout << closed_ball(parse_int(arg_x), parse_int(arg_n)).str() << "\n"; });

    auto* m_oball = metric->add_subcommand("oball", "open ball of rational radius");
    m_oball->add_option("x", arg_x)->required();
    m_oball->add_option("r", arg_r)->required();
    m_oball->callback(
        [&] { std::cout << open_ball(parse_int(arg_x), parse_rat(arg_r)).str() << "\n"; });

    // machine
    auto* machine = app.add_subcommand("machine", "registry validation and simulation");
    machine->require_subcommand(1);
    std::string arg_machine;

    auto* mc_validate = machine->add_subcommand("validate", "parse registry and audit statuses");
    mc_validate->callback([&] {
        const Registry& reg = ctx.halting_set().registry();
        if (auto bad = audit_registry(reg, ctx.budget)) throw std::runtime_error(*bad);
        std::cout << "ok machines=" << reg.size() << "\n";
        for (std::size_t i = 0; i < reg.size(); ++i)
            std::cout << "M_" << i + 1 << "=" << reg.machines[i].name << "\n";
    });

    auto* mc_run = machine->add_subcommand("run", "step-bounded run from the blank tape");
    mc_run->add_option("name", arg_machine, "machine name or 1-based index")->required();
    mc_run->callback([&] {
        const Registry& reg = ctx.halting_set().registry();
        const MachineSpec* spec = nullptr;
        for (const auto& m : reg.machines)
            if (m.name == arg_machine) spec = &m;
        if (!spec) {
            try {
                spec = &reg.at(std::stoul(arg_machine));
            } catch (...) {
                throw std::runtime_error("no machine named '" + arg_machine + "'");
            }
        }
        RunStatus st = run_bounded(*spec, ctx.budget);
        if (st.halted) std::cout << "halted steps=" << st.steps << "\n";
        else std::cout << "running steps=" << st.steps << "\n";
    });

    // set
    auto* set = app.add_subcommand("set", "the machine-driven open set B and its complement A");
    set->require_subcommand(1);

    auto* s_member = set->add_subcommand("member", "decide membership in B, with certificate");
    s_member->add_option("x", arg_x)->required();
    s_member->callback([&] {
        MembershipAnswer ans = ctx.halting_set().member_B(parse_int(arg_x));
        std::cout << (ans.verdict ? "true" : "false") << "\n" << ans.describe();
    });

    auto* s_describe = set->add_subcommand("describe", "budgeted description of X_n");
    s_describe->add_option("n", arg_n)->required();
    s_describe->callback([&] {
        print_description(
            ctx.halting_set().describe_Xn(std::stoi(arg_n), ctx.budget), std::cout);
    });

    auto* s_witness = set->add_subcommand("witness", "progression witness x + N*Z inside B");
    s_witness->add_option("x", arg_x)->required();
    s_witness->callback([&] {
        WitnessResult w = ctx.halting_set().openness_witness(parse_int(arg_x), ctx.budget);
        if (w.known) {
            std::cout << "witness=" << w.modulus << "\n"
                      << "verified=" << (w.verified ? "true" : "false") << "\n";
        } else {
            std::cout << "unknown\nbudget=" << w.budget << "\n";
            ctx.exit_code = 2;
        }
    });

    // group
    auto* group = app.add_subcommand("group", "word problem in the amalgamated lamplighter group");
    group->require_subcommand(1);
    std::string arg_word;

    auto* g_eval = group->add_subcommand("eval", "evaluate a single-factor word");
    g_eval->add_option("word", arg_word)->required();
    g_eval->callback([&] { std::cout << eval_factor(parse_word(arg_word)).str() << "\n"; });

    auto* g_nf = group->add_subcommand("nf", "syllable normal form");
    g_nf->add_option("word", arg_word)->required();
    g_nf->callback([&] {
        auto nf = normal_form(parse_word(arg_word), ctx.oracle());
        if (nf.empty()) std::cout << "identity\n";
        for (const auto& s : nf)
            std::cout << factor_tag(s.factor) << " " << s.elem.str() << "\n";
    });

    auto* g_trivial = group->add_subcommand("trivial", "does the word represent the identity?");
    g_trivial->add_option("word", arg_word)->required();
    g_trivial->callback([&] {
        std::cout << (is_trivial(parse_word(arg_word), ctx.oracle()) ? "true" : "false") << "\n";
    });

    // depth
    auto* depth = app.add_subcommand("depth", "separability-witness experiments");
    depth->require_subcommand(1);
    std::vector<std::string> arg_xs, arg_sched;
    int arg_smax = 20;

    auto* d_table = depth->add_subcommand("table", "smallest verified witness modulus per x");
    d_table->add_option("--x", arg_xs, "elements to separate")->required();
    d_table->add_option("--schedule", arg_sched, "candidate moduli (default theta(2..s-max))");
    d_table->add_option("--s-max", arg_smax, "upper s for the default theta schedule")
        ->capture_default_str();
    d_table->callback([&] {
        std::vector<Int> xs, sched;
        for (const auto& s : arg_xs) xs.push_back(parse_int(s));
        for (const auto& s : arg_sched) sched.push_back(parse_int(s));
        if (sched.empty()) sched = theta_schedule(arg_smax);
        auto rows = depth_table(ctx.halting_set(), xs, sched, ctx.budget);
        if (ctx.format == "tsv") std::cout << "x\tword_length\twitness_modulus\tcertificate\n";
        bool any_unknown = false;
        for (const auto& row : rows) {
            std::string mod = row.skipped ? "skipped"
                              : row.witness_modulus ? row.witness_modulus->get_str()
                                                    : "unknown";
            if (!row.skipped && !row.witness_modulus) any_unknown = true;
            if (ctx.format == "tsv") {
                std::cout << row.x << "\t" << row.word_length << "\t" << mod << "\t"
                          << oneline(row.certificate) << "\n";
            } else {
                std::cout << "x=" << row.x << " word_length=" << row.word_length
                          << " witness_modulus=" << mod << " " << oneline(row.certificate)
                          << "\n";
            }
        }
        if (any_unknown) ctx.exit_code = 2;
    });

    auto* d_quot = depth->add_subcommand("quotient",
                                         "does u_x uhat_x^-1 die after killing a^N, ahat^N?");
    d_quot->add_option("x", arg_x)->required();
    d_quot->add_option("N", arg_n)->required();
    d_quot->callback([&] {
        QuotientVerdict v =
            quotient_kill_shifts(ctx.halting_set(), parse_int(arg_x), parse_int(arg_n),
                                 Int(static_cast<unsigned long>(ctx.budget)));
        switch (v.kind) {
            case QuotientVerdict::Kind::Identity:
                std::cout << "identity witness=" << *v.witness << "\n";
                break;
            case QuotientVerdict::Kind::NonIdentity:
                std::cout << "non-identity\n";
                break;
            case QuotientVerdict::Kind::BudgetExhausted:
                std::cout << "budget-exhausted\n";
                ctx.exit_code = 2;
                break;
        }
    });

    // demo
    auto* demo = app.add_subcommand("demo", "guided demonstrations");
    demo->require_subcommand(1);
    int arg_demo_n = 1;
    std::string arg_demo_r;

    auto* dm_bound = demo->add_subcommand(
        "halting-bound", "turn a ball-in-B certificate into a halting bound");
    dm_bound->add_option("--n", arg_demo_n, "machine index")->capture_default_str();
    dm_bound->add_option("--radius", arg_demo_r, "ball radius (default: from a witness at t_n)");
    dm_bound->callback([&] {
        HaltingSet& hs = ctx.halting_set();
        XnParams params = hs.xn_params(arg_demo_n);
        Rat r;
        if (!arg_demo_r.empty()) {
            r = parse_rat(arg_demo_r);
        } else {
            WitnessResult w = hs.openness_witness(params.t_n, ctx.budget);
            if (!w.known) {
                std::cout << "no witness for t_" << arg_demo_n << " within budget " << ctx.budget
                          << "; pass --radius explicitly\n";
                ctx.exit_code = 2;
                return;
            }
            // the witness progression is an open ball around t_n with
            // modulus theta(s); radius 1/(s-1) reproduces it
            Int s = 1;
            while (theta(s) != w.modulus) ++s;
            r = s > 1 ? Rat(Int(1), s - 1) : Rat(2);
            r.canonicalize();
            std::cout << "witness_modulus=" << w.modulus << "\n";
        }
        Int tight = hs.halting_bound_from_certificate(arg_demo_n, r);
        std::cout << "radius=" << rat_str(r) << "\n";
        std::cout << "tight_bound=" << tight << "\n";
        std::cout << "coarse_bound=" << coarse_halting_bound(r) << "\n";
        std::uint64_t probe = tight.fits_ulong_p() ? tight.get_ui() : ctx.budget;
        RunStatus st = run_bounded(hs.registry().at(arg_demo_n), std::min(probe, ctx.budget));
        if (st.halted)
            std::cout << "machine halts at step " << st.steps << " <= bound\n";
        else
            std::cout << "machine still running after " << st.steps
                      << " steps (claim: halts within the bound or never)\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return ctx.exit_code;
}
