#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace gordian {

using Int = mpz_class;
using Rat = mpq_class;

inline long to_long(const Int& v) { return v.get_si(); }

inline bool fits_long(const Int& v) { return v.fits_slong_p(); }

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// x mod m reduced into [0, m).
inline Int mod_floor(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

// Fractional part of q in [0, 1).
inline Rat mod_one(const Rat& q) {
    Rat r = q;
    r.canonicalize();
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    r -= Rat(fl);
    r.canonicalize();
    return r;
}

inline bool is_perfect_square(const Int& v) {
    if (v < 0) return false;
    return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

// Prime factors by trial division; inputs here are small (knot determinants).
std::vector<Int> prime_factors(Int v);

inline bool has_divisor_3_mod_4(const Int& v) {
    for (const Int& p : prime_factors(abs_int(v)))
        if (mod_floor(p, 4) == 3) return true;
    return false;
}

// Exact multiplicity of prime p in v.
inline int p_adic_valuation(Int v, const Int& p) {
    int k = 0;
    v = abs_int(v);
    while (v != 0 && v % p == 0) { v /= p; ++k; }
    return k;
}

} // namespace gordian
