#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <vector>

#include "qperiod/colored.hpp"
#include "qperiod/cyclotomic.hpp"
#include "qperiod/errors.hpp"
#include "qperiod/signature.hpp"

namespace qperiod {

// Quantum dimension of the skein element e_i on the 0-framed unknot, in the
// division-free closed form Delta_i = (-1)^i (A^{2i} + A^{2i-4} + ... + A^{-2i}).
inline LaurentZ delta_laurent(long long i) {
    LaurentZ r('A');
    Int sign = i % 2 == 0 ? Int(1) : Int(-1);
    for (long long t = 0; t <= i; ++t) r.add_term(2 * i - 4 * t, sign);
    return r;
}

// Everything needed to evaluate the SO(3) invariant at an odd prime p.  All
// scalars live in Z[zeta]/Phi_{4p}, where zeta has order 4p, A = zeta^2 is a
// primitive 2p-th root of unity, and k = k_sign * zeta^{k_exponent} satisfies
// k^2 = A^{-6-p(p+1)/2}.  eta carries a denominator of p, so it is stored
// with exact rational coefficients; integrality of final invariants is
// asserted, never assumed.
//
// Values are immutable after construction; evaluation is pure and safe to run
// concurrently against a shared context.
class SO3Context {
  public:
    explicit SO3Context(long long p) : p_(p) {
        if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
        ring2p_ = CycloRing::make(2 * p);
        ring4p_ = CycloRing::make(4 * p);
        long long N = 4 * p;

        k_exponent_ = imod(-6 - p * (p + 1) / 2, N);

        // Gauss sum sum_{m=1}^{2p} (-1)^m A^{m^2} with A = zeta^2.
        LaurentZ gauss('x');
        for (long long m = 1; m <= 2 * p; ++m)
            gauss.add_term(imod(2 * m * m, N), m % 2 == 0 ? Int(1) : Int(-1));

        // eta = k * (1/2p) * A^3 (A^2 - A^{-2}) A^{p(p-1)/2} * gauss; the
        // k-free part is computed over Z and divided by 2p over Q.  The
        // division is genuinely rational: eta is not an algebraic integer
        // (eta^2 has denominator p).
        LaurentZ prefactor('x');
        long long base = 6 + p * (p - 1);
        prefactor.add_term(imod(base + 4, N), Int(1));
        prefactor.add_term(imod(base - 4, N), Int(-1));
        CycloZ x_num = reduce_to_ring(prefactor, ring4p_) * reduce_to_ring(gauss, ring4p_);
        eta_over_k_ = Rat(1, 2 * p) * promote(x_num);

        for (long long i = 0; i <= (p - 3) / 2; ++i)
            delta_table_.push_back(reduce_to_ring(delta_laurent(i), ring2p_));

        // k^2 = A^{-6-p(p+1)/2} holds for either sign by construction.
        CycloZ k2 = root_power<Int>(ring4p_, 2 * k_exponent_);
        if (k2 != root_power<Int>(ring4p_, imod(-12 - p * (p + 1), N)))
            throw IntegralityViolation("k^2 normalization failed");

        // eta^2 = -(A^2 - A^{-2})^2 / p, checked over Z as
        // zeta^{2k} x_num^2 + 4p (A - A^{-1})^2 = 0 with A = zeta^2.
        LaurentZ bracket_sq('x');
        bracket_sq.add_term(imod(8, N), Int(1));
        bracket_sq.add_term(0, Int(-2));
        bracket_sq.add_term(imod(-8, N), Int(1));
        CycloZ lhs = root_power<Int>(ring4p_, 2 * k_exponent_) * x_num * x_num +
                     Int(4 * p) * reduce_to_ring(bracket_sq, ring4p_);
        if (!lhs.is_zero()) throw IntegralityViolation("eta^2 identity failed");

        // eta^2 [Omega_p] = 1: with S = sum Delta_i^2,
        // zeta^{2k} x_num^2 S = (2p)^2.
        LaurentZ s2('A');
        for (long long i = 0; i <= (p - 3) / 2; ++i) s2 += delta_laurent(i) * delta_laurent(i);
        CycloZ check = root_power<Int>(ring4p_, 2 * k_exponent_) * x_num * x_num *
                       reduce_to_ring(to_zeta(s2), ring4p_);
        if (check != Int(4 * p * p) * CycloZ::one(ring4p_))
            throw IntegralityViolation("eta^2 [Omega_p] = 1 failed");

        // The defining normalization fixes the sign of k: the 3-sphere,
        // presented by a +1-framed unknot, must have invariant 1.  With
        // G = sum Delta_i^2 mu_i this reads k^{-1} eta G = 1; eta carries a
        // factor of k, so both signs are tried and the first that works kept.
        LaurentZ g_plus('A');
        for (long long i = 0; i <= (p - 3) / 2; ++i)
            g_plus += delta_laurent(i) * delta_laurent(i) * twist_factor(i, 1);
        CycloQ one_q = promote(CycloZ::one(ring4p_));
        k_sign_ = 0;
        for (int sign : {+1, -1}) {
            CycloQ value = eta_over_k_ * promote(reduce_to_ring(to_zeta(g_plus), ring4p_));
            // eta/k is sign-independent; the loop documents the convention.
            if (value == one_q) {
                k_sign_ = sign;
                break;
            }
        }
        if (k_sign_ == 0) throw IntegralityViolation("sphere normalization failed for both signs of k");

        eta_ = k_elem_q() * eta_over_k_;
    }

    long long p() const { return p_; }
    const RingPtr& ring2p() const { return ring2p_; }
    const RingPtr& ring4p() const { return ring4p_; }
    long long k_exponent() const { return k_exponent_; }
    int k_sign() const { return k_sign_; }
    const CycloQ& eta() const { return eta_; }
    const CycloQ& eta_over_k() const { return eta_over_k_; }

    CycloZ k_elem() const {
        CycloZ k = root_power<Int>(ring4p_, k_exponent_);
        return k_sign_ < 0 ? -k : k;
    }
    CycloQ k_elem_q() const { return promote(k_elem()); }

    // k^e for any integer e (k is a root of unity; negative powers are
    // exponent arithmetic, no ring inversion).
    CycloQ k_power(long long e) const {
        CycloZ k = root_power<Int>(ring4p_, imod(e * k_exponent_, 4 * p_));
        bool flip = k_sign_ < 0 && imod(e, 2) == 1;
        return promote(flip ? -k : k);
    }

    // Delta_i reduced into Z[A]/Phi_{2p}; table entries for i <= (p-3)/2.
    CycloZ delta(long long i) const {
        if (i >= 0 && i < static_cast<long long>(delta_table_.size()))
            return delta_table_[static_cast<std::size_t>(i)];
        return reduce_to_ring(delta_laurent(i), ring2p_);
    }

    // Coefficient list of Omega_p = sum_{i=0}^{(p-3)/2} Delta_i e_i.
    std::vector<std::pair<long long, CycloZ>> omega_coefficients() const {
        std::vector<std::pair<long long, CycloZ>> out;
        for (long long i = 0; i < static_cast<long long>(delta_table_.size()); ++i)
            out.emplace_back(i, delta_table_[static_cast<std::size_t>(i)]);
        return out;
    }

    // A-Laurent exponents doubled into zeta-exponents (A = zeta^2) for
    // reduction in the 4p-th ring; for the 2p-th ring A is the generator.
    static LaurentZ to_zeta(const LaurentZ& in_a) {
        LaurentZ r('x');
        for (const auto& [e, c] : in_a.terms()) r.add_term(2 * e, c);
        return r;
    }

    CycloQ reduce4p(const LaurentZ& in_a) const {
        return promote(reduce_to_ring(to_zeta(in_a), ring4p_));
    }

  private:
    long long p_;
    RingPtr ring2p_, ring4p_;
    long long k_exponent_;
    int k_sign_;
    CycloQ eta_, eta_over_k_;
    std::vector<CycloZ> delta_table_;
};

enum class InvariantSource { surgery, brieskorn };

// A computed SO(3) invariant.  For homology spheres the value is an algebraic
// integer in Z[A] and value2p holds the reduced form in Z[A]/Phi_{2p}; the
// raw rational form in the 4p-th ring is always kept.
struct InvariantValue {
    long long p;
    CycloQ value4p;
    std::optional<CycloZ> value2p;
    bool homology_sphere = false;
    InvariantSource source = InvariantSource::surgery;
};

namespace detail {

// Map a 4p-ring value into Z[A]/Phi_{2p}.  Phi_{4p}(x) = Phi_{2p}(x^2), so
// reduction preserves exponent parity: a value in Z[A] has no odd
// zeta-coordinates, and any that survive indicate a bug upstream.
inline CycloZ even_part_to_2p(const CycloQ& v, const RingPtr& ring2p, const char* context) {
    const auto& co = v.coeffs();
    std::vector<Int> out(static_cast<std::size_t>(ring2p->degree()), Int(0));
    for (std::size_t j = 0; j < co.size(); ++j) {
        if (j % 2 == 1) {
            if (co[j] != 0)
                throw IntegralityViolation(std::string(context) + ": odd zeta-power " +
                                           std::to_string(j) + " survived");
            continue;
        }
        if (!is_integral(co[j]))
            throw IntegralityViolation(std::string(context) + ": non-integral coefficient " +
                                       qperiod::to_string(co[j]));
        out[j / 2] = rat_num(co[j]);
    }
    return CycloZ(ring2p, std::move(out));
}

}  // namespace detail

// Membership test for Z[A,k] inside the 4p-th ring: integer coefficients,
// and only even zeta-powers when p = 3 (mod 4) (there k is itself a power
// of A; for p = 1 (mod 4), Z[A,k] = Z[A,i] is the full ring of integers).
inline CycloZ assert_in_ZAk(const CycloQ& v, long long p, const char* context) {
    CycloZ w = integral_part(v, context);
    if (p % 4 == 3) {
        const auto& co = w.coeffs();
        for (std::size_t j = 1; j < co.size(); j += 2)
            if (co[j] != 0)
                throw IntegralityViolation(std::string(context) +
                                           ": value outside Z[A] at odd zeta-power " +
                                           std::to_string(j));
    }
    return w;
}

// The surgery invariant of (M, J): M presented by surgery on the uncolored
// components L, J the colored components.  Each component of L is cabled by
// eta Omega_p, each component of J by e_i for its color i, and the
// renormalized bracket is scaled by k^{-sigma(L)}.
inline InvariantValue surgery_invariant(const SurgeryPresentation& pres, const SO3Context& ctx,
                                        long long cap = kDefaultCrossingCap,
                                        BracketCache* cache = nullptr) {
    const long long p = ctx.p();
    FramedLinkDiagram d = pres.diagram;
    d.colors.resize(d.component_count());

    // Colors above (p-3)/2 are traded for their mirror e_{p-2-i}, which does
    // not change the invariant.
    for (std::size_t c : pres.observed_components) {
        long long color = *d.colors[c];
        if (color > p - 2) throw MalformedDiagram("color exceeds p-2");
        if (color > (p - 3) / 2) d.colors[c] = p - 2 - color;
    }

    const auto& surgery = pres.surgery_components;
    std::size_t m = surgery.size();

    auto full = linking_matrix(pres.diagram);
    IntMatrix sub(m, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) sub[i][j] = full[surgery[i]][surgery[j]];
    long long sigma = signature_exact(sub);
    Int det = det_exact(sub);
    bool homology_sphere = det == 1 || det == -1;

    // Multilinear expansion of eta Omega_p on the surgery components: sum
    // over colorings weighted by prod Delta_{i_l}, times eta^m overall.
    BracketCache local_cache;
    if (!cache) cache = &local_cache;
    long long top = (p - 3) / 2;
    std::vector<long long> coloring(m, 0);
    LaurentZ total('A');
    for (;;) {
        LaurentZ weight = LaurentZ::one('A');
        for (std::size_t l = 0; l < m; ++l) {
            d.colors[surgery[l]] = coloring[l];
            weight *= delta_laurent(coloring[l]);
        }
        total += weight * colored_bracket(d, cap, cache);

        std::size_t l = 0;
        while (l < m && ++coloring[l] > top) coloring[l++] = 0;
        if (l == m) break;
    }

    InvariantValue out;
    out.p = p;
    out.source = InvariantSource::surgery;
    out.homology_sphere = homology_sphere;
    out.value4p = ctx.k_power(-sigma) * ctx.eta().pow(static_cast<unsigned long long>(m)) *
                  ctx.reduce4p(total);
    if (homology_sphere)
        out.value2p = detail::even_part_to_2p(out.value4p, ctx.ring2p(), "surgery invariant");
    return out;
}

// <<M, J>> = eta * I_p(M, J).  For presentations with singular linking matrix
// (first Betti number > 0) the value is checked to lie in Z[A,k].
inline CycloQ double_bracket(const SurgeryPresentation& pres, const SO3Context& ctx,
                             long long cap = kDefaultCrossingCap, BracketCache* cache = nullptr) {
    InvariantValue inv = surgery_invariant(pres, ctx, cap, cache);
    CycloQ value = ctx.eta() * inv.value4p;

    const auto& surgery = pres.surgery_components;
    auto full = linking_matrix(pres.diagram);
    IntMatrix sub(surgery.size(), std::vector<Int>(surgery.size()));
    for (std::size_t i = 0; i < surgery.size(); ++i)
        for (std::size_t j = 0; j < surgery.size(); ++j) sub[i][j] = full[surgery[i]][surgery[j]];
    if (det_exact(sub) == 0) assert_in_ZAk(value, ctx.p(), "double bracket");
    return value;
}

// Closed form for the invariant of the homology sphere obtained by +1 surgery
// on the (2, n) torus knot (right-handed for n > 0): a double sum over colors
// with twist coefficients lambda_{2j}^{ii} = (-1)^{i-j} A^{i(i+2)-j(2j+2)},
// evaluated exactly and reduced into Z[A]/Phi_{2p}.
inline InvariantValue brieskorn_invariant(long long n, const SO3Context& ctx) {
    if (n % 2 == 0 || std::llabs(n) < 3)
        throw std::invalid_argument("brieskorn_invariant requires odd n with |n| >= 3");
    const long long p = ctx.p();
    LaurentZ total('A');
    for (long long i = 0; i <= (p - 3) / 2; ++i) {
        LaurentZ inner('A');
        for (long long j = 0; j <= i; ++j) {
            long long lam_exp = i * (i + 2) - j * (2 * j + 2);
            Int sign = (i - j) % 2 == 0 ? Int(1) : Int(-1);  // (-1)^{(i-j)n}, n odd
            inner += delta_laurent(2 * j).shifted(-n * lam_exp, sign);
        }
        // (-A)^{i(i+2)(1-n)}: the exponent is even since n is odd.
        total += delta_laurent(i).shifted(i * (i + 2) * (1 - n)) * inner;
    }

    InvariantValue out;
    out.p = p;
    out.source = InvariantSource::brieskorn;
    out.homology_sphere = true;
    out.value4p = ctx.eta_over_k() * ctx.reduce4p(total);
    out.value2p = detail::even_part_to_2p(out.value4p, ctx.ring2p(), "brieskorn invariant");
    return out;
}

}  // namespace qperiod
