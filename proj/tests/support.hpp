#pragma once

#include "lamplab/halting_set.hpp"
#include "lamplab/machines.hpp"
#include "lamplab/profinite.hpp"

#include <string>

namespace lamplab::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(LAMPLAB_FIXTURES_DIR) + "/" + name;
}

inline Registry load_registry(std::initializer_list<std::string> names) {
    Registry reg;
    for (const auto& n : names) reg.add_file(fixture_path(n));
    return reg;
}

inline HaltingSet halting_set(std::initializer_list<std::string> names) {
    return HaltingSet(load_registry(names));
}

// Independent theta oracle: product over primes p <= n of the largest
// power of p not exceeding n.  No lcm calls anywhere.
inline Int theta_prime_power_oracle(long n) {
    Int out = 1;
    for (long p = 2; p <= n; ++p) {
        bool prime = true;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        Int pw = p;
        while (pw * p <= n) pw *= p;
        out *= pw;
    }
    return out;
}

// Independent norm oracle: trial division by 1, 2, 3, ... directly.
inline Rat norm_divisor_scan_oracle(const Int& x) {
    if (x == 0) return Rat(0);
    Int ax = abs(x);
    Int n = 1;
    while (mpz_divisible_p(ax.get_mpz_t(), Int(n + 1).get_mpz_t())) ++n;
    Rat r(1, n);
    r.canonicalize();
    return r;
}

}  // namespace lamplab::testing
