#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamplab {

// Deterministic one-tape Turing machine over the alphabet {0, 1, _},
// with _ the blank.  The tape is bi-infinite and starts all blank,
// head at cell 0.

enum class Move { Left, Right };

struct DeclaredStatus {
    enum class Kind { None, HaltsIn, Loops, Unknown };
    Kind kind = Kind::None;
    std::uint64_t steps = 0;  // meaningful for HaltsIn
};

struct Transition {
    std::string next_state;
    char write;
    Move move;
};

struct MachineSpec {
    std::string name;
    std::string start;
    std::string halt;
    // keyed by (state, read symbol)
    std::map<std::pair<std::string, char>, Transition> transitions;
    DeclaredStatus declared;

    std::vector<std::string> non_halt_states() const;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Parses one or more machines from the textual format:
//
//   machine <name>
//   status halts <K> | status loops | status unknown   (optional)
//   start <state>
//   halt <state>
//   trans <state> <symbol> -> <state> <symbol> <L|R>
//   end
//
// Symbols are 0, 1, _ and lines beginning with # are comments.
// Validates determinism, totality of non-halt states, and that every
// referenced state is defined somewhere.
std::vector<MachineSpec> parse_machines(const std::string& text);

struct RunStatus {
    bool halted;
    std::uint64_t steps;  // halting step if halted, budget otherwise

    bool operator==(const RunStatus&) const = default;
};

// Runs the machine from the blank initial configuration for at most
// `budget` steps.  Entering the halt state ends the run and counts as
// that step; a machine whose start state is the halt state halts at
// step 0.
RunStatus run_bounded(const MachineSpec& m, std::uint64_t budget);

// True iff the machine halts within k steps.
bool halts_within(const MachineSpec& m, std::uint64_t k);

// Ordered registry of machines: position n (1-based) designates M_n.
struct Registry {
    std::vector<MachineSpec> machines;

    std::size_t size() const { return machines.size(); }
    const MachineSpec& at(std::size_t n) const;  // 1-based

    // Appends machines parsed from text; rejects duplicate names.
    void add_text(const std::string& text);
    void add_file(const std::string& path);
};

// Simulates every machine with a declared status and reports the first
// violation, or nullopt if all declarations check out.  `loops`
// declarations are audited up to audit_budget steps.
std::optional<std::string> audit_registry(const Registry& reg, std::uint64_t audit_budget);

}  // namespace lamplab
