#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gordian/bigint.hpp"

namespace gordian {

enum class Var { A, t, z };

/// Exact Laurent polynomial with integer coefficients.  Exponents live on a
/// quarter-integer grid and are stored in quarter units, so the same type
/// carries the bracket (integer powers of A), Jones polynomials of links
/// (half-integer powers of t) and the Q polynomial (integer powers of z).
class LaurentPoly {
public:
    LaurentPoly() : var_(Var::t) {}
    explicit LaurentPoly(Var v) : var_(v) {}

    static LaurentPoly constant(Var v, Int c);
    static LaurentPoly one(Var v) { return constant(v, 1); }
    // Single term c * x^(q/4), exponent given in quarter units.
    static LaurentPoly term(Var v, Int c, int quarter_exp);

    Var var() const { return var_; }
    bool is_zero() const { return coeff_.empty(); }
    const std::map<int, Int>& terms() const { return coeff_; }

    Int coeff(int quarter_exp) const;
    void set_coeff(int quarter_exp, Int c);

    bool operator==(const LaurentPoly& o) const {
        return var_ == o.var_ && coeff_ == o.coeff_;
    }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    LaurentPoly scaled(const Int& c) const;
    // Multiply by x^(q/4).
    LaurentPoly shifted(int quarter_exp) const;
    // x -> 1/x.
    LaurentPoly inverted_variable() const;
    LaurentPoly with_var(Var v) const;

    // True when every exponent is an integer power (quarter units % 4 == 0).
    bool on_integer_grid() const;
    // True when p(x) == p(1/x).
    bool self_conjugate() const { return *this == inverted_variable(); }

    int min_quarter_exp() const;
    int max_quarter_exp() const;

    // Exact evaluation at x = -1 and x = 1 (integer grid required).
    Int eval_at_minus_one() const;
    Int eval_at_one() const;
    // Exact evaluation at a rational point; negative exponents allowed.
    Rat eval_at(const Rat& x) const;

    // order-th derivative at x = 1 via falling factorials; integer grid only.
    Rat derivative_at_one(int order) const;

    std::string str(const std::string& var_name) const;
    std::string str() const;

private:
    void trim();

    Var var_;
    std::map<int, Int> coeff_; // quarter-unit exponent -> nonzero coefficient
};

/// Remainder of t^clearing * p modulo a monic integer polynomial m, where
/// `clearing` is the minimal shift making all exponents nonnegative.  The
/// remainder is dense, degree < deg m.
struct ReducedPoly {
    std::vector<Int> remainder; // remainder[i] = coefficient of t^i
    int clearing = 0;
};

// m given as dense coefficients, lowest degree first, leading coefficient 1.
ReducedPoly poly_reduce_mod(const LaurentPoly& p, const std::vector<Int>& m);

// p == q as elements of Z[t,1/t]/(m); requires m(0) = +-1 so t is a unit.
bool congruent_mod(const LaurentPoly& p, const LaurentPoly& q, const std::vector<Int>& m);

} // namespace gordian
