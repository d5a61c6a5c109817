#pragma once

#include <cassert>
#include <memory>
#include <vector>

#include "qperiod/errors.hpp"
#include "qperiod/laurent.hpp"
#include "qperiod/numeric.hpp"

namespace qperiod {

namespace detail {

// Dense integer polynomials, ascending coefficients, used only to build and
// divide by cyclotomic moduli.
using DensePoly = std::vector<Int>;

inline DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
    DensePoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Exact division, divisor need not be monic but the division must leave no
// remainder (always the case in the Moebius product below).
inline DensePoly dense_div_exact(DensePoly num, const DensePoly& den) {
    assert(den.back() != 0);
    assert(num.size() >= den.size());
    DensePoly q(num.size() - den.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Int c = num[k + den.size() - 1];
        if (c == 0) continue;
        assert(c % den.back() == 0);
        c /= den.back();
        q[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    for (const Int& c : num) {
        (void)c;
        assert(c == 0);
    }
    return q;
}

inline DensePoly x_pow_minus_one(long long d) {
    DensePoly r(static_cast<std::size_t>(d) + 1, Int(0));
    r[0] = -1;
    r[static_cast<std::size_t>(d)] = 1;
    return r;
}

inline int moebius(long long n) {
    int mu = 1;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace detail

inline long long euler_phi(long long n) {
    long long result = n;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0) n /= d;
            result -= result / d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Coefficients of the N-th cyclotomic polynomial, by the Moebius product
// Phi_N = prod_{d|N} (x^d - 1)^{mu(N/d)} evaluated with exact division.
inline std::vector<Int> cyclotomic_polynomial(long long N) {
    assert(N >= 1);
    if (N == 1) return {Int(-1), Int(1)};
    detail::DensePoly num = {Int(1)};
    std::vector<long long> dens;
    for (long long d = 1; d <= N; ++d) {
        if (N % d) continue;
        int mu = detail::moebius(N / d);
        if (mu == 1)
            num = detail::dense_mul(num, detail::x_pow_minus_one(d));
        else if (mu == -1)
            dens.push_back(d);
    }
    for (long long d : dens) num = detail::dense_div_exact(num, detail::x_pow_minus_one(d));
    assert(static_cast<long long>(num.size()) == euler_phi(N) + 1);
    assert(num.back() == 1);
    return num;
}

// Z[x]/Phi_N(x), optionally with coefficients in Z/p.  Elements are coefficient
// vectors of length phi(N) in the power basis 1, x, ..., x^{phi(N)-1}.
class CycloRing {
  public:
    static std::shared_ptr<const CycloRing> make(long long N, long long characteristic = 0) {
        return std::shared_ptr<const CycloRing>(new CycloRing(N, characteristic));
    }

    long long N() const { return N_; }
    long long characteristic() const { return char_; }
    long long degree() const { return static_cast<long long>(phi_.size()) - 1; }
    const std::vector<Int>& modulus() const { return phi_; }

    bool same_as(const CycloRing& o) const { return N_ == o.N_ && char_ == o.char_; }

    Int normalize(Int c) const { return char_ ? imod(c, char_) : c; }

  private:
    CycloRing(long long N, long long characteristic) : N_(N), char_(characteristic) {
        assert(N >= 1);
        assert(characteristic == 0 || characteristic >= 2);
        phi_ = cyclotomic_polynomial(N);
    }

    long long N_;
    long long char_;
    std::vector<Int> phi_;
};

using RingPtr = std::shared_ptr<const CycloRing>;

template <typename C>
class CycloElem {
  public:
    CycloElem() = default;

    explicit CycloElem(RingPtr ring) : ring_(std::move(ring)) {
        coeffs_.assign(static_cast<std::size_t>(ring_->degree()), C(0));
    }

    CycloElem(RingPtr ring, std::vector<C> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        assert(static_cast<long long>(coeffs_.size()) == ring_->degree());
        normalize();
    }

    static CycloElem zero(const RingPtr& ring) { return CycloElem(ring); }

    static CycloElem one(const RingPtr& ring) {
        CycloElem e(ring);
        e.coeffs_[0] = C(1);
        e.normalize();
        return e;
    }

    static CycloElem from_int(const RingPtr& ring, const C& v) {
        CycloElem e(ring);
        e.coeffs_[0] = v;
        e.normalize();
        return e;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<C>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const C& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const CycloElem& o) const {
        assert(ring_->same_as(*o.ring_));
        return coeffs_ == o.coeffs_;
    }
    bool operator!=(const CycloElem& o) const { return !(*this == o); }

    CycloElem& operator+=(const CycloElem& o) {
        assert(ring_->same_as(*o.ring_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }

    CycloElem& operator-=(const CycloElem& o) {
        assert(ring_->same_as(*o.ring_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }

    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }

    CycloElem operator-() const {
        CycloElem r(ring_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
        r.normalize();
        return r;
    }

    friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
        assert(a.ring_->same_as(*b.ring_));
        std::size_t d = a.coeffs_.size();
        std::vector<C> conv(2 * d - 1, C(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return CycloElem(a.ring_, reduce_dense(*a.ring_, std::move(conv)));
    }

    CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }

    friend CycloElem operator*(const C& s, const CycloElem& a) {
        CycloElem r(a.ring_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = s * a.coeffs_[i];
        r.normalize();
        return r;
    }

    CycloElem pow(unsigned long long n) const {
        CycloElem r = one(ring_);
        CycloElem base = *this;
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    Laurent<C> to_laurent(char var = 'x') const {
        Laurent<C> r(var);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            r.add_term(static_cast<long long>(i), coeffs_[i]);
        return r;
    }

    // Reduce a dense coefficient vector (degree may exceed the ring degree) by
    // the monic modulus Phi_N.
    static std::vector<C> reduce_dense(const CycloRing& ring, std::vector<C> v) {
        const auto& phi = ring.modulus();
        std::size_t deg = phi.size() - 1;
        if (v.size() < deg) v.resize(deg, C(0));
        for (std::size_t k = v.size(); k-- > deg;) {
            C c = v[k];
            if (c == 0) continue;
            v[k] = C(0);
            for (std::size_t j = 0; j < deg; ++j) v[k - deg + j] -= c * C(phi[j]);
        }
        v.resize(deg);
        if (ring.characteristic())
            for (C& c : v) c = normalize_coeff(c, ring.characteristic());
        return v;
    }

  private:
    void normalize() {
        if (ring_->characteristic()) {
            for (C& c : coeffs_) c = normalize_coeff(c, ring_->characteristic());
        }
    }

    static Int normalize_coeff(const Int& c, long long p) { return imod(c, p); }
    static Rat normalize_coeff(const Rat&, long long) {
        throw std::logic_error("rational coefficients require characteristic 0");
    }

    RingPtr ring_;
    std::vector<C> coeffs_;
};

using CycloZ = CycloElem<Int>;
using CycloQ = CycloElem<Rat>;

// Canonical representative of a Laurent polynomial in the quotient ring.
// Negative exponents are cleared with x^N = 1 (valid mod Phi_N) before the
// division, keeping a single canonical basis.
template <typename C>
CycloElem<C> reduce_to_ring(const Laurent<C>& poly, const RingPtr& ring) {
    Laurent<C> folded = poly.exponents_mod(ring->N());
    std::vector<C> v(static_cast<std::size_t>(ring->N()), C(0));
    for (const auto& [e, c] : folded.terms()) v[static_cast<std::size_t>(e)] = c;
    return CycloElem<C>(ring, CycloElem<C>::reduce_dense(*ring, std::move(v)));
}

// x^e as a ring element, e may be negative.
template <typename C = Int>
CycloElem<C> root_power(const RingPtr& ring, long long e) {
    return reduce_to_ring(Laurent<C>::monomial(imod(e, ring->N()), C(1), 'x'), ring);
}

// The ring automorphism x -> x^{-1} (= complex conjugation at roots of unity).
template <typename C>
CycloElem<C> galois_conj(const CycloElem<C>& e) {
    const auto& ring = e.ring();
    Laurent<C> img('x');
    const auto& co = e.coeffs();
    for (std::size_t i = 0; i < co.size(); ++i)
        img.add_term(imod(-static_cast<long long>(i), ring->N()), co[i]);
    return reduce_to_ring(img, ring);
}

// Coefficient-wise reduction mod an odd prime: the quotient map
// Z[x]/Phi_N -> (Z/p)[x]/Phi_N.
inline CycloZ mod_p_reduce(const CycloZ& e, long long p) {
    assert(e.ring()->characteristic() == 0);
    auto ring_p = CycloRing::make(e.ring()->N(), p);
    std::vector<Int> v = e.coeffs();
    for (Int& c : v) c = imod(c, p);
    return CycloZ(ring_p, std::move(v));
}

inline CycloZ exact_div_int(const CycloZ& e, const Int& d) {
    if (d == 0) throw NotDivisible("division by zero");
    std::vector<Int> v = e.coeffs();
    for (Int& c : v) {
        if (c % d != 0) throw NotDivisible("coefficient " + c.str() + " not divisible by " + d.str());
        c /= d;
    }
    return CycloZ(e.ring(), std::move(v));
}

inline CycloQ promote(const CycloZ& e) {
    std::vector<Rat> v;
    v.reserve(e.coeffs().size());
    for (const Int& c : e.coeffs()) v.emplace_back(c);
    return CycloQ(e.ring(), std::move(v));
}

// Assert every coefficient is an integer and strip the denominators.
inline CycloZ integral_part(const CycloQ& e, const char* context) {
    std::vector<Int> v;
    v.reserve(e.coeffs().size());
    for (const Rat& c : e.coeffs()) {
        if (!is_integral(c))
            throw IntegralityViolation(std::string(context) + ": non-integral coefficient " +
                                       qperiod::to_string(c));
        v.push_back(rat_num(c));
    }
    return CycloZ(e.ring(), std::move(v));
}

}  // namespace qperiod
