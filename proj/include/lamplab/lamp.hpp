#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamplab {

// The lamplighter group Z wr Z/2Z: elements are (finite set of lit
// lamps, shift).  The lamp generator u_i (one lit lamp at position i)
// is ({i}, 0); the shift generator a is ({}, 1).

struct LampElement {
    std::set<long long> lamps;
    long long shift = 0;

    bool is_identity() const { return lamps.empty() && shift == 0; }

    // (S1, t1) * (S2, t2) = (S1 xor (S2 + t1), t1 + t2)
    LampElement operator*(const LampElement& rhs) const;
    LampElement inverse() const;

    bool operator==(const LampElement&) const = default;

    std::string str() const;
};

enum class Factor { Plain, Hat };

// Generators of the amalgam, with ASCII aliases:
//   a = shift, A = shift^-1, e = lamp toggle; b, B, f are the hatted copies.
enum class Gen { A, AInv, Eps, AHat, AHatInv, EpsHat };

Factor gen_factor(Gen g);

using Word = std::vector<Gen>;

struct LexError : std::runtime_error {
    std::size_t pos;
    LexError(std::size_t pos_, const std::string& msg)
        : std::runtime_error(msg), pos(pos_) {}
};

// Parses a word over a A e b B f; whitespace is ignored.
Word parse_word(const std::string& text);

std::string word_str(const Word& w);

// Reverses the word and inverts each generator.
Word inverse_word(const Word& w);

// The generator word a^i e a^-i (hatted when factor == Hat).
Word u_word(long long i, Factor factor);

// Evaluates a single-factor token run as a lamplighter element.
// Rejects mixed factors.
LampElement eval_factor(const Word& tokens);

// Membership oracle for the identified index set A.
using AOracle = std::function<bool(long long)>;

// The amalgamated subgroup: shift 0 and every lit lamp at an index in A.
bool in_amalgamated_subgroup(const LampElement& x, const AOracle& in_A);

struct Syllable {
    Factor factor;
    LampElement elem;

    bool operator==(const Syllable&) const = default;
};

enum class ScanOrder { Forward, Reverse };

// Syllable normal form in the amalgamated product: alternating factors,
// no syllable in the amalgamated subgroup except a lone one, which is
// canonically presented in the plain factor.  The scan order picks
// which applicable rewrite fires first; both orders must agree on
// triviality.
std::vector<Syllable> normal_form(const Word& w, const AOracle& in_A,
                                  ScanOrder order = ScanOrder::Forward);

// Empty normal form iff the word represents the identity.
bool is_trivial(const Word& w, const AOracle& in_A);

}  // namespace lamplab
