#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

#include "qperiod/numeric.hpp"
#include "qperiod/pd_code.hpp"

namespace qperiod {
namespace catalog {

// 0-crossing unknot.
inline FramedLinkDiagram unknot(long long framing = 0) {
    FramedLinkDiagram d;
    d.pd.components = {{1}};
    d.framings = {framing};
    return d;
}

inline FramedLinkDiagram unlink(std::size_t n, long long framing = 0) {
    FramedLinkDiagram d;
    for (std::size_t i = 0; i < n; ++i) {
        d.pd.components.push_back({static_cast<long long>(i + 1)});
        d.framings.push_back(framing);
    }
    return d;
}

// Closure of the 2-strand braid with |n| crossings, all of sign(n): the
// (2, n) torus link.  Odd n gives a knot (n = 3 the trefoil, right-handed for
// n > 0), even n a 2-component link (n = 2 the positive Hopf link), |n| = 1 a
// kinked unknot of writhe sign(n).
inline FramedLinkDiagram torus2(long long n, long long framing = 0) {
    if (n == 0) return unlink(2, framing);
    long long m = std::llabs(n);
    bool positive = n > 0;

    // Strand arcs between consecutive crossings: left L_i, right R_i,
    // i mod m.  Crossing i of a positive braid: (R_i, R_{i+1}, L_{i+1}, L_i);
    // mirrored tuple for a negative braid.
    auto L = [&](long long i) { return imod(i, m) + 1; };
    auto R = [&](long long i) { return m + imod(i, m) + 1; };

    PDCode pd;
    for (long long i = 0; i < m; ++i) {
        if (positive)
            pd.crossings.push_back({{R(i), R(i + 1), L(i + 1), L(i)}});
        else
            pd.crossings.push_back({{L(i), R(i), R(i + 1), L(i + 1)}});
    }
    // Trace: at crossing i the under strand enters R_i (positive) or L_i
    // (negative); either way L_i continues to R_{i+1} and R_i to L_{i+1}.
    std::vector<std::vector<long long>> comps;
    std::vector<bool> used(static_cast<std::size_t>(2 * m), false);
    for (long long start = 0; start < 2 * m; ++start) {
        if (used[static_cast<std::size_t>(start)]) continue;
        std::vector<long long> cyc;
        bool left = start < m;
        long long i = left ? start : start - m;
        for (;;) {
            long long arc = left ? L(i) : R(i);
            if (used[static_cast<std::size_t>(arc - 1)]) break;
            used[static_cast<std::size_t>(arc - 1)] = true;
            cyc.push_back(arc);
            left = !left;
            i = i + 1;
        }
        comps.push_back(std::move(cyc));
    }
    FramedLinkDiagram d;
    d.pd.crossings = pd.crossings;
    d.pd.components = comps;
    d.framings.assign(comps.size(), framing);
    d.pd = canonical_relabel(d.pd);
    return d;
}

inline FramedLinkDiagram trefoil_right(long long framing = 0) { return torus2(3, framing); }
inline FramedLinkDiagram trefoil_left(long long framing = 0) { return torus2(-3, framing); }
inline FramedLinkDiagram hopf_positive() { return torus2(2); }
inline FramedLinkDiagram hopf_negative() { return torus2(-2); }
inline FramedLinkDiagram kink(int sign) { return torus2(sign > 0 ? 1 : -1); }

// Figure-eight knot, 4 crossings, amphichiral.
inline FramedLinkDiagram figure_eight(long long framing = 0) {
    FramedLinkDiagram d;
    d.pd.crossings = {{{4, 2, 5, 1}}, {{8, 6, 1, 5}}, {{6, 3, 7, 4}}, {{2, 7, 3, 8}}};
    d.pd.components = {{1, 2, 3, 4, 5, 6, 7, 8}};
    d.framings = {framing};
    return d;
}

}  // namespace catalog
}  // namespace qperiod
