#pragma once

#include <optional>
#include <string>

#include "gordian/bigint.hpp"
#include "gordian/laurent.hpp"

namespace gordian {

/// The four quadratic integer rings the special values live in, each
/// described by the minimal polynomial of its distinguished root:
///   GoldenZ:   z^2 + z - 1,  root (sqrt5 - 1)/2
///   OmegaT:    t^2 - t + 1,  root e^{i pi/3}
///   GaussT:    t^2 + 1,      root i
///   MinusOneT: t + 1,        root -1 (degenerate, b == 0)
enum class QuadRing { GoldenZ, OmegaT, GaussT, MinusOneT };

std::string ring_name(QuadRing r);

/// Element a + b*alpha of one of the fixed rings, exact integer coordinates.
struct QuadValue {
    Int a;
    Int b;
    QuadRing ring;

    QuadValue(Int a_, Int b_, QuadRing r) : a(std::move(a_)), b(std::move(b_)), ring(r) {}
    static QuadValue zero(QuadRing r) { return {0, 0, r}; }
    static QuadValue one(QuadRing r) { return {1, 0, r}; }
    static QuadValue root(QuadRing r);

    bool operator==(const QuadValue& o) const {
        return ring == o.ring && a == o.a && b == o.b;
    }
    bool is_integer() const { return b == 0; }

    QuadValue operator+(const QuadValue& o) const;
    QuadValue operator-(const QuadValue& o) const;
    QuadValue operator*(const QuadValue& o) const;
    QuadValue operator-() const;
    QuadValue scaled(const Int& c) const { return {a * c, b * c, ring}; }

    // Galois conjugate (image of alpha under the other root).
    QuadValue conjugate() const;
    // Field norm, always an integer.
    Int norm() const;

    // Exact quotient, or nullopt when this is not divisible by d in the ring.
    std::optional<QuadValue> divide_exact(const QuadValue& d) const;

    std::string str() const;
};

// alpha^e for any integer e (alpha is a unit in all four rings).
QuadValue root_pow(QuadRing r, int e);

// Exact evaluation of p at the ring's root; integer exponent grid required.
QuadValue eval_quad(const LaurentPoly& p, QuadRing r);

// i*sqrt3 = 2w - 1 in OmegaT; sqrt5 = 2a + 1 in GoldenZ.
QuadValue omega_isqrt3();
QuadValue golden_sqrt5();

/// v written as sign * base^k where base is i*sqrt3 (OmegaT) or sqrt5
/// (GoldenZ); conforming is false when v has no such form.
struct PowerForm {
    bool conforming = false;
    int sign = 0; // +1 or -1
    int k = 0;
};

PowerForm extract_power_form(QuadValue v, const QuadValue& base);

} // namespace gordian
