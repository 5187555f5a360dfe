#include "gordian/laurent.hpp"

#include <sstream>

#include "gordian/errors.hpp"

namespace gordian {

LaurentPoly LaurentPoly::constant(Var v, Int c) {
    LaurentPoly p(v);
    if (c != 0) p.coeff_[0] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::term(Var v, Int c, int quarter_exp) {
    LaurentPoly p(v);
    if (c != 0) p.coeff_[quarter_exp] = std::move(c);
    return p;
}

Int LaurentPoly::coeff(int quarter_exp) const {
    auto it = coeff_.find(quarter_exp);
    return it == coeff_.end() ? Int(0) : it->second;
}

void LaurentPoly::set_coeff(int quarter_exp, Int c) {
    if (c == 0)
        coeff_.erase(quarter_exp);
    else
        coeff_[quarter_exp] = std::move(c);
}

void LaurentPoly::trim() {
    for (auto it = coeff_.begin(); it != coeff_.end();) {
        if (it->second == 0)
            it = coeff_.erase(it);
        else
            ++it;
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (var_ != o.var_) throw InvariantViolation("laurent: variable mismatch in +");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeff_) r.coeff_[e] += c;
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    if (var_ != o.var_) throw InvariantViolation("laurent: variable mismatch in -");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeff_) r.coeff_[e] -= c;
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (var_ != o.var_) throw InvariantViolation("laurent: variable mismatch in *");
    LaurentPoly r(var_);
    for (const auto& [e1, c1] : coeff_)
        for (const auto& [e2, c2] : o.coeff_)
            r.coeff_[e1 + e2] += c1 * c2;
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    LaurentPoly r(var_);
    if (c == 0) return r;
    for (const auto& [e, k] : coeff_) r.coeff_[e] = k * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int quarter_exp) const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : coeff_) r.coeff_[e + quarter_exp] = c;
    return r;
}

LaurentPoly LaurentPoly::inverted_variable() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : coeff_) r.coeff_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::with_var(Var v) const {
    LaurentPoly r(v);
    r.coeff_ = coeff_;
    return r;
}

bool LaurentPoly::on_integer_grid() const {
    for (const auto& [e, c] : coeff_)
        if (e % 4 != 0) return false;
    return true;
}

int LaurentPoly::min_quarter_exp() const {
    if (coeff_.empty()) return 0;
    return coeff_.begin()->first;
}

int LaurentPoly::max_quarter_exp() const {
    if (coeff_.empty()) return 0;
    return coeff_.rbegin()->first;
}

Int LaurentPoly::eval_at_minus_one() const {
    if (!on_integer_grid()) throw InvariantViolation("laurent: eval at -1 off the integer grid");
    Int s = 0;
    for (const auto& [e, c] : coeff_) {
        int m = e / 4;
        s += (m % 2 == 0) ? c : -c;
    }
    return s;
}

Int LaurentPoly::eval_at_one() const {
    if (!on_integer_grid()) throw InvariantViolation("laurent: eval at 1 off the integer grid");
    Int s = 0;
    for (const auto& [e, c] : coeff_) s += c;
    return s;
}

Rat LaurentPoly::eval_at(const Rat& x) const {
    if (!on_integer_grid()) throw InvariantViolation("laurent: rational eval off the integer grid");
    if (x == 0) throw InvariantViolation("laurent: eval at 0");
    Rat s = 0;
    for (const auto& [e, c] : coeff_) {
        int m = e / 4;
        Rat p = 1;
        Rat base = m >= 0 ? x : Rat(1) / x;
        for (int i = 0; i < std::abs(m); ++i) p *= base;
        s += Rat(c) * p;
    }
    s.canonicalize();
    return s;
}

Rat LaurentPoly::derivative_at_one(int order) const {
    if (!on_integer_grid()) throw InvariantViolation("laurent: derivative off the integer grid");
    if (order < 0) throw InvariantViolation("laurent: negative derivative order");
    Rat s = 0;
    for (const auto& [e, c] : coeff_) {
        Int m = e / 4;
        Int f = 1;
        for (int i = 0; i < order; ++i) f *= (m - i);
        s += Rat(c * f);
    }
    s.canonicalize();
    return s;
}

std::string LaurentPoly::str(const std::string& var_name) const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeff_) {
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        first = false;
        Int a = abs_int(c);
        bool unit_coeff = (a == 1) && e != 0;
        if (!unit_coeff) os << a.get_str();
        if (e != 0) {
            os << var_name;
            if (e != 4) {
                os << "^";
                if (e % 4 == 0)
                    os << e / 4;
                else if (e % 2 == 0)
                    os << "(" << e / 2 << "/2)";
                else
                    os << "(" << e << "/4)";
            }
        }
    }
    return os.str();
}

std::string LaurentPoly::str() const {
    switch (var_) {
        case Var::A: return str("A");
        case Var::t: return str("t");
        case Var::z: return str("z");
    }
    return str("x");
}

ReducedPoly poly_reduce_mod(const LaurentPoly& p, const std::vector<Int>& m) {
    if (m.empty() || m.back() != 1)
        throw InvariantViolation("poly_reduce_mod: modulus must be monic");
    if (!p.on_integer_grid())
        throw InvariantViolation("poly_reduce_mod: polynomial off the integer grid");

    ReducedPoly out;
    int deg_m = static_cast<int>(m.size()) - 1;
    int lo = p.min_quarter_exp() / 4;
    out.clearing = lo < 0 ? -lo : 0;

    // Dense coefficients of t^clearing * p.
    int hi = p.max_quarter_exp() / 4 + out.clearing;
    std::vector<Int> dense(static_cast<size_t>(hi + 1), Int(0));
    for (const auto& [e, c] : p.terms()) dense[static_cast<size_t>(e / 4 + out.clearing)] = c;

    // Long division by m.
    for (int d = hi; d >= deg_m; --d) {
        Int q = dense[static_cast<size_t>(d)];
        if (q == 0) continue;
        for (int i = 0; i <= deg_m; ++i)
            dense[static_cast<size_t>(d - deg_m + i)] -= q * m[static_cast<size_t>(i)];
    }
    dense.resize(static_cast<size_t>(deg_m));
    out.remainder = std::move(dense);
    return out;
}

bool congruent_mod(const LaurentPoly& p, const LaurentPoly& q, const std::vector<Int>& m) {
    if (m.front() != 1 && m.front() != -1)
        throw InvariantViolation("congruent_mod: t is not a unit modulo m");
    ReducedPoly r = poly_reduce_mod(p - q, m);
    for (const Int& c : r.remainder)
        if (c != 0) return false;
    return true;
}

} // namespace gordian
