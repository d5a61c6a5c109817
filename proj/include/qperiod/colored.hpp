#pragma once

#include <vector>

#include "qperiod/bracket.hpp"
#include "qperiod/chebyshev.hpp"
#include "qperiod/diagram_ops.hpp"
#include "qperiod/laurent.hpp"

namespace qperiod {

// Twist eigenvalue of a full positive twist on the skein element e_i:
// mu_i = (-1)^i A^{i(i+2)}.  Returns mu_i^g as a signed monomial.
inline LaurentZ twist_factor(long long i, long long g) {
    Int sign = (i * g) % 2 == 0 ? Int(1) : Int(-1);
    return LaurentZ::monomial(i * (i + 2) * g, sign, 'A');
}

// Renormalized bracket of the diagram with every component c cabled by the
// skein element e_{color(c)}: multilinear expansion through the Chebyshev
// coefficients, each monomial z^m contributing the m-fold parallel cable.
// The stored framing need not match the blackboard framing of the drawn
// component; the discrepancy f - w contributes mu_i^{f-w} per component.
inline LaurentZ colored_bracket(const FramedLinkDiagram& d, long long cap = kDefaultCrossingCap,
                                BracketCache* cache = nullptr) {
    require_valid(d);
    std::size_t n = d.component_count();
    if (d.colors.size() != n) throw MalformedDiagram("colored_bracket requires a color per component");
    for (const auto& c : d.colors)
        if (!c) throw MalformedDiagram("colored_bracket requires a color per component");

    LaurentZ twist = LaurentZ::one('A');
    std::vector<ChebyshevExpansion> expansion;
    expansion.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        long long color = *d.colors[c];
        twist *= twist_factor(color, d.framings[c] - self_writhe(d.pd, c));
        expansion.push_back(chebyshev_coeffs(color));
    }

    // Odometer over the multi-degrees with nonzero Chebyshev coefficient.
    std::vector<std::vector<long long>> support(n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t m = 0; m < expansion[c].coeffs.size(); ++m)
            if (expansion[c].coeffs[m] != 0) support[c].push_back(static_cast<long long>(m));

    LaurentZ total('A');
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        Int coeff(1);
        std::vector<long long> mult(n);
        for (std::size_t c = 0; c < n; ++c) {
            mult[c] = support[c][idx[c]];
            coeff *= expansion[c].coeffs[static_cast<std::size_t>(mult[c])];
        }
        FramedLinkDiagram cabled = cable_multi(d, mult);
        total += coeff * bracket_renormalized(cabled.pd, cap, cache);

        std::size_t c = 0;
        while (c < n && ++idx[c] == support[c].size()) idx[c++] = 0;
        if (c == n) break;
    }
    return twist * total;
}

}  // namespace qperiod
