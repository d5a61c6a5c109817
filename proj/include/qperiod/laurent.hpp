#pragma once

#include <cassert>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qperiod/errors.hpp"
#include "qperiod/numeric.hpp"

namespace qperiod {

// Exact Laurent polynomial in one variable.  Canonical form: no zero
// coefficients are stored, so equality is plain map comparison.  The variable
// tag is carried along for display and to catch accidental mixing of rings
// (brackets live in A, Jones values in s with t = s^2, Chebyshev expansions
// in z).
template <typename C>
class Laurent {
  public:
    using Terms = std::map<long long, C>;

    Laurent() = default;
    explicit Laurent(char var) : var_(var) {}

    static Laurent zero(char var = 'A') { return Laurent(var); }

    static Laurent constant(C c, char var = 'A') {
        Laurent r(var);
        r.add_term(0, std::move(c));
        return r;
    }

    static Laurent one(char var = 'A') { return constant(C(1), var); }

    static Laurent monomial(long long e, C c, char var = 'A') {
        Laurent r(var);
        r.add_term(e, std::move(c));
        return r;
    }

    char var() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    C coeff(long long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(long long e, C c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        check_var(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Laurent& operator-=(const Laurent& o) {
        check_var(o);
        for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        a.check_var(b);
        Laurent r(a.var_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent operator-() const {
        Laurent r(var_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, C(-c));
        return r;
    }

    friend Laurent operator*(const C& s, const Laurent& a) {
        Laurent r(a.var_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
        return r;
    }

    // Multiply by c * x^e.
    Laurent shifted(long long e, const C& c = C(1)) const {
        Laurent r(var_);
        for (const auto& [ex, cx] : terms_) r.add_term(ex + e, c * cx);
        return r;
    }

    // The ring involution x -> x^{-1}.
    Laurent conj() const {
        Laurent r(var_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    Laurent pow(unsigned long long n) const {
        Laurent r = one(var_);
        Laurent base = *this;
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    // Image in the quotient by x^M - 1: exponents folded into [0, M).
    Laurent exponents_mod(long long M) const {
        Laurent r(var_);
        for (const auto& [e, c] : terms_) r.add_term(imod(e, M), c);
        return r;
    }

    // Coefficient-wise residues in [0, p).
    Laurent coeffs_mod(long long p) const {
        Laurent r(var_);
        for (const auto& [e, c] : terms_) r.add_term(e, imod(c, p));
        return r;
    }

    long long min_exponent() const {
        assert(!terms_.empty());
        return terms_.begin()->first;
    }

    long long max_exponent() const {
        assert(!terms_.empty());
        return terms_.rbegin()->first;
    }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

  private:
    void check_var(const Laurent& o) const {
        if (!terms_.empty() && !o.terms_.empty() && var_ != o.var_)
            throw std::logic_error(std::string("variable mismatch: ") + var_ + " vs " + o.var_);
    }

    Terms terms_;
    char var_ = 'A';
};

using LaurentZ = Laurent<Int>;
using LaurentQ = Laurent<Rat>;

inline LaurentQ promote(const LaurentZ& p) {
    LaurentQ r(p.var());
    for (const auto& [e, c] : p.terms()) r.add_term(e, Rat(c));
    return r;
}

// Coefficient-wise exact division by a nonzero integer; throws NotDivisible
// if any coefficient has a remainder.
inline LaurentZ exact_div_int(const LaurentZ& p, const Int& d) {
    if (d == 0) throw NotDivisible("division by zero");
    LaurentZ r(p.var());
    for (const auto& [e, c] : p.terms()) {
        if (c % d != 0)
            throw NotDivisible("coefficient " + c.str() + " at exponent " + std::to_string(e) +
                               " not divisible by " + d.str());
        r.add_term(e, c / d);
    }
    return r;
}

// Ascending-exponent display with explicit signs, e.g. "1 - 2A + 2A^2 - A^3".
template <typename C>
std::string to_display(const Laurent<C>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool neg = c < 0;
        C a = neg ? C(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string coeff = qperiod::to_string(a);
        if (e == 0) {
            out += coeff;
        } else {
            if (coeff != "1") out += coeff;
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace qperiod
