#include "lamplab/machines.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lamplab {

namespace {

const char kAlphabet[] = {'0', '1', '_'};

bool valid_symbol(const std::string& s) {
    return s.size() == 1 && (s[0] == '0' || s[0] == '1' || s[0] == '_');
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

void validate(const MachineSpec& m, int decl_line) {
    std::set<std::string> known{m.start, m.halt};
    for (const auto& [key, tr] : m.transitions) known.insert(key.first);
    for (const auto& [key, tr] : m.transitions) {
        if (!known.count(tr.next_state))
            throw ParseError(decl_line, "machine " + m.name + ": dangling state reference '" +
                                            tr.next_state + "'");
        if (key.first == m.halt)
            throw ParseError(decl_line, "machine " + m.name + ": transition out of halt state");
    }
    // every non-halt state that appears must be total on the alphabet
    for (const auto& st : known) {
        if (st == m.halt) continue;
        for (char sym : kAlphabet) {
            if (!m.transitions.count({st, sym}))
                throw ParseError(decl_line, "machine " + m.name + ": state '" + st +
                                                "' has no transition on '" + std::string(1, sym) +
                                                "'");
        }
    }
}

}  // namespace

std::vector<std::string> MachineSpec::non_halt_states() const {
    std::set<std::string> known{start};
    for (const auto& [key, tr] : transitions) known.insert(key.first);
    known.erase(halt);
    return {known.begin(), known.end()};
}

std::vector<MachineSpec> parse_machines(const std::string& text) {
    std::vector<MachineSpec> out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool in_machine = false;
    int decl_line = 0;
    MachineSpec cur;
    bool have_start = false, have_halt = false;

    while (std::getline(is, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& kw = toks[0];
        if (kw == "machine") {
            if (in_machine) throw ParseError(lineno, "nested 'machine' block");
            if (toks.size() != 2) throw ParseError(lineno, "expected: machine <name>");
            cur = MachineSpec{};
            cur.name = toks[1];
            in_machine = true;
            have_start = have_halt = false;
            decl_line = lineno;
        } else if (!in_machine) {
            throw ParseError(lineno, "'" + kw + "' outside a machine block");
        } else if (kw == "status") {
            if (toks.size() == 3 && toks[1] == "halts") {
                cur.declared.kind = DeclaredStatus::Kind::HaltsIn;
                cur.declared.steps = std::stoull(toks[2]);
            } else if (toks.size() == 2 && toks[1] == "loops") {
                cur.declared.kind = DeclaredStatus::Kind::Loops;
            } else if (toks.size() == 2 && toks[1] == "unknown") {
                cur.declared.kind = DeclaredStatus::Kind::Unknown;
            } else {
                throw ParseError(lineno, "expected: status halts <K> | status loops | status unknown");
            }
        } else if (kw == "start") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: start <state>");
            cur.start = toks[1];
            have_start = true;
        } else if (kw == "halt") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: halt <state>");
            cur.halt = toks[1];
            have_halt = true;
        } else if (kw == "trans") {
            // trans <state> <symbol> -> <state> <symbol> <L|R>
            if (toks.size() != 7 || toks[3] != "->")
                throw ParseError(lineno, "expected: trans <state> <sym> -> <state> <sym> <L|R>");
            if (!valid_symbol(toks[2]) || !valid_symbol(toks[5]))
                throw ParseError(lineno, "symbols must be 0, 1 or _");
            if (toks[6] != "L" && toks[6] != "R")
                throw ParseError(lineno, "direction must be L or R");
            std::pair<std::string, char> key{toks[1], toks[2][0]};
            if (cur.transitions.count(key))
                throw ParseError(lineno, "determinism violation: duplicate transition for (" +
                                             toks[1] + ", " + toks[2] + ")");
            cur.transitions[key] =
                Transition{toks[4], toks[5][0], toks[6] == "L" ? Move::Left : Move::Right};
        } else if (kw == "end") {
            if (!have_start) throw ParseError(lineno, "machine without 'start'");
            if (!have_halt) throw ParseError(lineno, "machine without 'halt'");
            validate(cur, decl_line);
            out.push_back(std::move(cur));
            in_machine = false;
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (in_machine) throw ParseError(lineno, "unterminated machine block");
    return out;
}

RunStatus run_bounded(const MachineSpec& m, std::uint64_t budget) {
    if (m.start == m.halt) return {true, 0};
    std::map<long long, char> tape;
    long long head = 0;
    std::string state = m.start;
    for (std::uint64_t step = 1; step <= budget; ++step) {
        auto it = tape.find(head);
        char sym = it == tape.end() ? '_' : it->second;
        const Transition& tr = m.transitions.at({state, sym});
        if (tr.write == '_') tape.erase(head);
        else tape[head] = tr.write;
        head += tr.move == Move::Right ? 1 : -1;
        state = tr.next_state;
        if (state == m.halt) return {true, step};
    }
    return {false, budget};
}

bool halts_within(const MachineSpec& m, std::uint64_t k) {
    return run_bounded(m, k).halted;
}

const MachineSpec& Registry::at(std::size_t n) const {
    if (n < 1 || n > machines.size())
        throw std::out_of_range("registry index " + std::to_string(n) + " out of range");
    return machines[n - 1];
}

void Registry::add_text(const std::string& text) {
    for (auto& m : parse_machines(text)) {
        for (const auto& existing : machines)
            if (existing.name == m.name)
                throw std::runtime_error("duplicate machine name '" + m.name + "'");
        machines.push_back(std::move(m));
    }
}

void Registry::add_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open registry file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    add_text(buf.str());
}

std::optional<std::string> audit_registry(const Registry& reg, std::uint64_t audit_budget) {
    for (const auto& m : reg.machines) {
        switch (m.declared.kind) {
            case DeclaredStatus::Kind::HaltsIn: {
                RunStatus st = run_bounded(m, m.declared.steps);
                if (!(st.halted && st.steps == m.declared.steps))
                    return "machine " + m.name + ": declared halts " +
                           std::to_string(m.declared.steps) + " but simulation disagrees";
                break;
            }
            case DeclaredStatus::Kind::Loops: {
                RunStatus st = run_bounded(m, audit_budget);
                if (st.halted)
                    return "machine " + m.name + ": declared loops but halted at step " +
                           std::to_string(st.steps);
                break;
            }
            default:
                break;
        }
    }
    return std::nullopt;
}

}  // namespace lamplab
