#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "qperiod/bracket.hpp"
#include "qperiod/diagram_ops.hpp"
#include "qperiod/errors.hpp"
#include "qperiod/laurent.hpp"
#include "qperiod/pd_code.hpp"

namespace qperiod {

// Jones polynomial in the variable s with t = s^2, so half-integer powers of
// t are integer powers of s.  Computed as (-A^3)^{-w} <L> with the exponent
// substitution A = s^{-1/2}: A-exponent e maps to s-exponent -e/2.
inline LaurentZ jones(const PDCode& pd, long long cap = kDefaultCrossingCap) {
    long long w = writhe(pd);
    LaurentZ p = bracket(pd, cap).shifted(-3 * w);
    if (w % 2 != 0) p = -p;
    LaurentZ v('s');
    for (const auto& [e, c] : p.terms()) {
        if (e % 2 != 0)
            throw NonIntegralExponent("odd A-exponent " + std::to_string(e) +
                                      " in writhe-corrected bracket");
        v.add_term(-e / 2, c);
    }
    return v;
}

inline LaurentZ jones(const FramedLinkDiagram& d, long long cap = kDefaultCrossingCap) {
    return jones(d.pd, cap);
}

// Swap over and under strands at one crossing; the tuple is re-rooted so the
// new incoming under-strand is slot 0.
inline PDCode switch_crossing(const PDCode& pd, std::size_t i) {
    DiagramOrientation ori = analyze(pd);
    PDCode out = pd;
    const auto& x = pd.crossings[i];
    if (ori.over_in_slot[i] == 3)
        out.crossings[i].arcs = {x[3], x[0], x[1], x[2]};
    else
        out.crossings[i].arcs = {x[1], x[2], x[3], x[0]};
    return out;
}

// Orientation-preserving smoothing of one crossing: the incoming under-arc
// joins the outgoing over-arc and vice versa.  Components are re-traced.
inline PDCode smooth_oriented(const PDCode& pd, std::size_t i) {
    DiagramOrientation ori = analyze(pd);
    const auto& x = pd.crossings[i];
    long long a = x[0], c = x[2];
    long long oi = x[ori.over_in_slot[i]], oo = x[4 - ori.over_in_slot[i]];

    std::set<long long> on_crossings;
    for (const auto& y : pd.crossings)
        for (long long arc : y.arcs) on_crossings.insert(arc);

    std::map<long long, long long> rep;
    auto find = [&](long long v) {
        while (rep.count(v) && rep[v] != v) v = rep[v];
        return v;
    };
    auto unite = [&](long long u, long long v) {
        u = find(u);
        v = find(v);
        if (u != v) rep[v] = u;
        rep.emplace(u, u);
    };
    unite(a, oo);
    unite(oi, c);

    // Transitions x -> succ(x) survive except the two consumed at crossing i
    // (each arc's transition sits at the crossing where the arc ends).
    std::map<long long, long long> step;
    for (const auto& cyc : pd.components) {
        if (cyc.size() == 1 && !on_crossings.count(cyc[0])) continue;
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            long long from = cyc[j];
            long long to = cyc[(j + 1) % cyc.size()];
            if (from == a || from == oi) continue;  // consumed at crossing i
            step[find(from)] = find(to);
        }
    }

    PDCode out;
    for (std::size_t j = 0; j < pd.crossings.size(); ++j) {
        if (j == i) continue;
        const auto& y = pd.crossings[j];
        out.crossings.push_back({{find(y[0]), find(y[1]), find(y[2]), find(y[3])}});
    }

    std::set<long long> seen;
    for (const auto& [start, next] : step) {
        (void)next;
        if (seen.count(start)) continue;
        std::vector<long long> cycle;
        long long cur = start;
        do {
            seen.insert(cur);
            cycle.push_back(cur);
            cur = step.at(cur);
        } while (cur != start);
        out.components.push_back(std::move(cycle));
    }
    // Classes touched by the smoothing that acquired no transition became
    // crossingless circles; untouched crossingless components survive as-is.
    std::set<long long> circle_classes;
    for (long long v : {a, c, oi, oo}) circle_classes.insert(find(v));
    for (long long cls : circle_classes)
        if (!step.count(cls) && !seen.count(cls)) {
            out.components.push_back({cls});
            seen.insert(cls);
        }
    for (const auto& cyc : pd.components)
        if (cyc.size() == 1 && !on_crossings.count(cyc[0])) out.components.push_back({cyc[0]});

    return canonical_relabel(out);
}

namespace detail {

// (-s - s^{-1})^{m-1}: the Jones value of an m-component unlink, as forced by
// the two defining rules.
inline LaurentZ jones_unlink(std::size_t m) {
    LaurentZ loop('s');
    loop.add_term(1, Int(-1));
    loop.add_term(-1, Int(-1));
    return loop.pow(static_cast<unsigned long long>(m - 1));
}

// First crossing whose first visit, walking all components in order, enters
// on the under-strand.  Diagrams with no such crossing are descending stacks
// of unknots.
inline long long first_bad_crossing(const PDCode& pd, const DiagramOrientation& ori) {
    std::map<long long, std::pair<std::size_t, bool>> entry;  // arc -> (crossing, is_under)
    for (std::size_t j = 0; j < pd.crossings.size(); ++j) {
        entry[pd.crossings[j][0]] = {j, true};
        entry[pd.crossings[j][ori.over_in_slot[j]]] = {j, false};
    }
    std::set<std::size_t> visited;
    for (const auto& cyc : pd.components)
        for (long long arc : cyc) {
            auto it = entry.find(arc);
            if (it == entry.end()) continue;
            auto [crossing, under] = it->second;
            if (visited.insert(crossing).second && under)
                return static_cast<long long>(crossing);
        }
    return -1;
}

inline LaurentZ jones_skein_rec(const PDCode& pd, std::unordered_map<std::string, LaurentZ>& memo) {
    if (pd.crossings.empty()) return jones_unlink(pd.component_count());
    std::string key = serialize(pd);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    DiagramOrientation ori = analyze(pd);
    long long bad = first_bad_crossing(pd, ori);
    LaurentZ value('s');
    if (bad < 0) {
        value = jones_unlink(pd.component_count());
    } else {
        std::size_t i = static_cast<std::size_t>(bad);
        LaurentZ v_switch = jones_skein_rec(canonical_relabel(switch_crossing(pd, i)), memo);
        LaurentZ v_smooth = jones_skein_rec(smooth_oriented(pd, i), memo);
        LaurentZ skein('s');
        if (ori.sign(i) > 0) {
            // V(L+) = s^4 V(L-) + s^2 (s - s^{-1}) V(L0)
            skein.add_term(3, Int(1));
            skein.add_term(1, Int(-1));
            value = v_switch.shifted(4) + skein * v_smooth;
        } else {
            // V(L-) = s^{-4} V(L+) - s^{-2} (s - s^{-1}) V(L0)
            skein.add_term(-1, Int(-1));
            skein.add_term(-3, Int(1));
            value = v_switch.shifted(-4) + skein * v_smooth;
        }
    }
    memo.emplace(std::move(key), value);
    return value;
}

}  // namespace detail

// Jones polynomial computed directly from the two defining rules by crossing
// switches and oriented smoothings, independent of the Kauffman bracket.
inline LaurentZ jones_by_skein(const PDCode& pd, long long cap = kDefaultCrossingCap) {
    require_valid(pd);
    if (pd.empty()) return LaurentZ::one('s');
    long long c = static_cast<long long>(pd.crossing_count());
    if (c > cap) throw TooManyCrossings(c, cap);
    std::unordered_map<std::string, LaurentZ> memo;
    return detail::jones_skein_rec(canonical_relabel(pd), memo);
}

inline LaurentZ jones_by_skein(const FramedLinkDiagram& d, long long cap = kDefaultCrossingCap) {
    return jones_by_skein(d.pd, cap);
}

// Render a Jones value (variable s, t = s^2) in terms of t, with odd powers
// of s printed as half-integer powers of t.
inline std::string jones_display(const LaurentZ& v) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : v.terms()) {
        bool neg = c < 0;
        Int a = neg ? Int(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string coeff = a.str();
        if (e == 0) {
            out += coeff;
            continue;
        }
        if (coeff != "1") out += coeff;
        out += "t^";
        if (e % 2 == 0)
            out += std::to_string(e / 2);
        else
            out += std::to_string(e) + "/2";
    }
    return out;
}

}  // namespace qperiod
