#include "lamplab/lamp.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lamplab {

LampElement LampElement::operator*(const LampElement& rhs) const {
    LampElement out;
    out.lamps = lamps;
    for (long long i : rhs.lamps) {
        long long j = i + shift;
        if (!out.lamps.erase(j)) out.lamps.insert(j);
    }
    out.shift = shift + rhs.shift;
    return out;
}

LampElement LampElement::inverse() const {
    LampElement out;
    for (long long i : lamps) out.lamps.insert(i - shift);
    out.shift = -shift;
    return out;
}

std::string LampElement::str() const {
    std::ostringstream os;
    os << "({";
    bool first = true;
    for (long long i : lamps) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << "}," << shift << ")";
    return os.str();
}

Factor gen_factor(Gen g) {
    switch (g) {
        case Gen::A:
        case Gen::AInv:
        case Gen::Eps:
            return Factor::Plain;
        default:
            return Factor::Hat;
    }
}

Word parse_word(const std::string& text) {
    Word w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        switch (c) {
            case 'a': w.push_back(Gen::A); break;
            case 'A': w.push_back(Gen::AInv); break;
            case 'e': w.push_back(Gen::Eps); break;
            case 'b': w.push_back(Gen::AHat); break;
            case 'B': w.push_back(Gen::AHatInv); break;
            case 'f': w.push_back(Gen::EpsHat); break;
            default:
                throw LexError(i, std::string("unexpected character '") + c + "' at position " +
                                      std::to_string(i));
        }
    }
    return w;
}

std::string word_str(const Word& w) {
    static const char alias[] = {'a', 'A', 'e', 'b', 'B', 'f'};
    std::string s;
    for (Gen g : w) s += alias[static_cast<int>(g)];
    return s;
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (*it) {
            case Gen::A: out.push_back(Gen::AInv); break;
            case Gen::AInv: out.push_back(Gen::A); break;
            case Gen::Eps: out.push_back(Gen::Eps); break;
            case Gen::AHat: out.push_back(Gen::AHatInv); break;
            case Gen::AHatInv: out.push_back(Gen::AHat); break;
            case Gen::EpsHat: out.push_back(Gen::EpsHat); break;
        }
    }
    return out;
}

Word u_word(long long i, Factor factor) {
    Gen fwd = factor == Factor::Plain ? Gen::A : Gen::AHat;
    Gen bwd = factor == Factor::Plain ? Gen::AInv : Gen::AHatInv;
    Gen eps = factor == Factor::Plain ? Gen::Eps : Gen::EpsHat;
    Word w;
    for (long long k = 0; k < (i >= 0 ? i : -i); ++k) w.push_back(i >= 0 ? fwd : bwd);
    w.push_back(eps);
    for (long long k = 0; k < (i >= 0 ? i : -i); ++k) w.push_back(i >= 0 ? bwd : fwd);
    return w;
}

namespace {

LampElement gen_elem(Gen g) {
    switch (g) {
        case Gen::A:
        case Gen::AHat:
            return LampElement{{}, 1};
        case Gen::AInv:
        case Gen::AHatInv:
            return LampElement{{}, -1};
        default:
            return LampElement{{0}, 0};
    }
}

}  // namespace

LampElement eval_factor(const Word& tokens) {
    LampElement acc;
    if (tokens.empty()) return acc;
    Factor f = gen_factor(tokens.front());
    for (Gen g : tokens) {
        if (gen_factor(g) != f)
            throw std::invalid_argument("eval_factor: mixed factors in token run");
        acc = acc * gen_elem(g);
    }
    return acc;
}

bool in_amalgamated_subgroup(const LampElement& x, const AOracle& in_A) {
    if (x.shift != 0) return false;
    for (long long i : x.lamps)
        if (!in_A(i)) return false;
    return true;
}

namespace {

// One reduction pass: fires the first applicable rewrite in scan order
// and returns true.  Rules, by priority: delete identity syllables,
// merge adjacent equal-factor syllables, flip an amalgamated-subgroup
// syllable to the opposite factor (which enables a merge next pass).
bool reduce_step(std::vector<Syllable>& s, const AOracle& in_A, ScanOrder order) {
    auto indices = [&](std::size_t count) {
        std::vector<std::size_t> idx(count);
        for (std::size_t i = 0; i < count; ++i)
            idx[i] = order == ScanOrder::Forward ? i : count - 1 - i;
        return idx;
    };
    for (std::size_t i : indices(s.size())) {
        if (s[i].elem.is_identity()) {
            s.erase(s.begin() + static_cast<long>(i));
            return true;
        }
    }
    if (s.size() >= 2) {
        for (std::size_t i : indices(s.size() - 1)) {
            if (s[i].factor == s[i + 1].factor) {
                s[i].elem = s[i].elem * s[i + 1].elem;
                s.erase(s.begin() + static_cast<long>(i) + 1);
                return true;
            }
        }
    }
    if (s.size() >= 2) {
        for (std::size_t i : indices(s.size())) {
            if (in_amalgamated_subgroup(s[i].elem, in_A)) {
                s[i].factor = s[i].factor == Factor::Plain ? Factor::Hat : Factor::Plain;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

std::vector<Syllable> normal_form(const Word& w, const AOracle& in_A, ScanOrder order) {
    std::vector<Syllable> syllables;
    std::size_t i = 0;
    while (i < w.size()) {
        Factor f = gen_factor(w[i]);
        Word run;
        while (i < w.size() && gen_factor(w[i]) == f) run.push_back(w[i++]);
        syllables.push_back({f, eval_factor(run)});
    }
    while (reduce_step(syllables, in_A, order)) {}
    if (syllables.size() == 1 && in_amalgamated_subgroup(syllables[0].elem, in_A))
        syllables[0].factor = Factor::Plain;
    return syllables;
}

bool is_trivial(const Word& w, const AOracle& in_A) {
    return normal_form(w, in_A).empty();
}

}  // namespace lamplab
