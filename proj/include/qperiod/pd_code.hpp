#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qperiod/errors.hpp"

namespace qperiod {

// Planar diagram code.  A crossing is a 4-tuple of arc labels listed
// counterclockwise starting at the incoming under-strand, so the under-strand
// runs slot 0 -> slot 2.  Local geometry, with the under-strand pointing
// north: slot 0 = S, slot 1 = E, slot 2 = N, slot 3 = W.
//
// Components list the arc labels of each link component in traversal order;
// the cycles carry the orientation.  A component with no crossings is a
// single arc label that appears in no tuple.
struct Crossing {
    std::array<long long, 4> arcs;
    long long operator[](int i) const { return arcs[static_cast<std::size_t>(i)]; }
    bool operator==(const Crossing&) const = default;
};

struct PDCode {
    std::vector<Crossing> crossings;
    std::vector<std::vector<long long>> components;

    std::size_t crossing_count() const { return crossings.size(); }
    std::size_t component_count() const { return components.size(); }
    bool empty() const { return crossings.empty() && components.empty(); }

    bool operator==(const PDCode& o) const = default;
};

// Derived orientation data: for each crossing, which over slot (1 or 3) is the
// incoming over-strand, plus arc -> component and arc -> successor maps.
//
// Slot in/out status is propagated globally: under slots are forced, and each
// arc is incoming at exactly one of its two occurrences.  A component whose
// arcs appear only in over slots (it lies entirely above the rest of the
// diagram) is genuinely ambiguous in a PD code; the first unresolved crossing
// is then read with the incoming over-strand at slot 1.
struct DiagramOrientation {
    std::vector<int> over_in_slot;             // per crossing: 1 or 3
    std::map<long long, std::size_t> comp_of;  // arc -> component index
    std::map<long long, long long> succ;       // arc -> next arc along its component

    int sign(std::size_t crossing) const {
        // Rotating the under-strand (S->N) counterclockwise by 90 degrees
        // aligns it with an over-strand running W->E, i.e. entering at slot 3.
        return over_in_slot[crossing] == 3 ? +1 : -1;
    }
};

namespace detail {

struct SlotRef {
    std::size_t crossing;
    int slot;
};

inline std::map<long long, std::vector<SlotRef>> occurrences(const PDCode& pd) {
    std::map<long long, std::vector<SlotRef>> occ;
    for (std::size_t i = 0; i < pd.crossings.size(); ++i)
        for (int s = 0; s < 4; ++s) occ[pd.crossings[i][s]].push_back({i, s});
    return occ;
}

}  // namespace detail

// Structural check; returns a diagnostic for the first violation, or nullopt.
inline std::optional<std::string> validate(const PDCode& pd);

inline DiagramOrientation analyze(const PDCode& pd) {
    if (auto diag = validate(pd)) throw MalformedDiagram(*diag);

    DiagramOrientation ori;
    ori.over_in_slot.assign(pd.crossings.size(), 0);
    for (std::size_t ci = 0; ci < pd.components.size(); ++ci) {
        const auto& cyc = pd.components[ci];
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            ori.comp_of[cyc[j]] = ci;
            ori.succ[cyc[j]] = cyc[(j + 1) % cyc.size()];
        }
    }

    auto occ = detail::occurrences(pd);

    // 0 = unknown, 1 = incoming, 2 = outgoing, per (crossing, slot).
    std::vector<std::array<int, 4>> status(pd.crossings.size(), {0, 0, 0, 0});
    for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        status[i][0] = 1;
        status[i][2] = 2;
    }

    auto propagate = [&]() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [arc, refs] : occ) {
                int s0 = status[refs[0].crossing][static_cast<std::size_t>(refs[0].slot)];
                int s1 = status[refs[1].crossing][static_cast<std::size_t>(refs[1].slot)];
                if (s0 && !s1) {
                    status[refs[1].crossing][static_cast<std::size_t>(refs[1].slot)] = 3 - s0;
                    changed = true;
                } else if (s1 && !s0) {
                    status[refs[0].crossing][static_cast<std::size_t>(refs[0].slot)] = 3 - s1;
                    changed = true;
                }
            }
            for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
                int a = status[i][1], b = status[i][3];
                if (a && !b) {
                    status[i][3] = 3 - a;
                    changed = true;
                } else if (b && !a) {
                    status[i][1] = 3 - b;
                    changed = true;
                }
            }
        }
    };

    propagate();
    for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        if (!status[i][1]) {
            // Component lying entirely above the rest: seed the direction
            // from its cycle; a 2-arc circle is read as slot1 incoming.
            long long u = pd.crossings[i][1], v = pd.crossings[i][3];
            if (ori.succ.at(u) == v)
                status[i][1] = 1;
            else if (ori.succ.at(v) == u)
                status[i][3] = 1;
            else
                throw MalformedDiagram("over slots at crossing " + std::to_string(i) +
                                       " are not consecutive along a component");
            propagate();
        }
    }

    for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        ori.over_in_slot[i] = status[i][1] == 1 ? 1 : 3;
        long long in = pd.crossings[i][ori.over_in_slot[i]];
        long long out = pd.crossings[i][4 - ori.over_in_slot[i]];
        if (ori.succ.at(in) != out)
            throw MalformedDiagram("over-strand at crossing " + std::to_string(i) +
                                   " does not follow a component cycle");
    }
    for (const auto& [arc, refs] : occ) {
        int s0 = status[refs[0].crossing][static_cast<std::size_t>(refs[0].slot)];
        int s1 = status[refs[1].crossing][static_cast<std::size_t>(refs[1].slot)];
        if (s0 + s1 != 3)
            throw MalformedDiagram("arc " + std::to_string(arc) +
                                   " is not incoming at exactly one crossing");
    }
    return ori;
}

inline std::optional<std::string> validate(const PDCode& pd) {
    std::map<long long, int> uses;
    for (const auto& x : pd.crossings)
        for (int s = 0; s < 4; ++s) {
            if (x[s] <= 0) return "arc labels must be positive, found " + std::to_string(x[s]);
            ++uses[x[s]];
        }

    std::set<long long> in_components;
    std::map<long long, long long> succ;
    for (const auto& cyc : pd.components) {
        if (cyc.empty()) return "empty component cycle";
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            if (cyc[j] <= 0) return "arc labels must be positive";
            if (!in_components.insert(cyc[j]).second)
                return "arc " + std::to_string(cyc[j]) + " listed in more than one component";
            succ[cyc[j]] = cyc[(j + 1) % cyc.size()];
        }
    }

    for (const auto& [arc, n] : uses) {
        if (n != 2)
            return "arc " + std::to_string(arc) + " appears " + std::to_string(n) +
                   " times in crossings (expected 2)";
        if (!in_components.count(arc))
            return "arc " + std::to_string(arc) + " appears in crossings but in no component";
    }
    for (const auto& cyc : pd.components) {
        bool on_crossings = uses.count(cyc[0]) > 0;
        if (!on_crossings && cyc.size() != 1)
            return "crossingless component must consist of a single arc";
        if (on_crossings && cyc.size() < 2) {
            // A 1-arc component through a crossing would have to cross the
            // rest of the diagram an odd number of times; not planar.
            return "component with a single arc passes through a crossing";
        }
    }

    for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        const auto& x = pd.crossings[i];
        auto it = succ.find(x[0]);
        if (it == succ.end() || it->second != x[2])
            return "crossing " + std::to_string(i) +
                   ": under-strand does not run slot0 -> slot2 along its component";
        bool over_ok = false;
        if (auto jt = succ.find(x[1]); jt != succ.end() && jt->second == x[3]) over_ok = true;
        if (auto jt = succ.find(x[3]); jt != succ.end() && jt->second == x[1]) over_ok = true;
        if (!over_ok)
            return "crossing " + std::to_string(i) +
                   ": over slots are not consecutive along a component";
    }
    return std::nullopt;
}

inline void require_valid(const PDCode& pd) {
    if (auto diag = validate(pd)) throw MalformedDiagram(*diag);
}

inline int crossing_sign(const PDCode& pd, std::size_t crossing) {
    return analyze(pd).sign(crossing);
}

// Swap over/under at every crossing.  The tuple is re-rooted at the new
// incoming under-strand (the old incoming over-strand).
inline PDCode mirror(const PDCode& pd) {
    DiagramOrientation ori = analyze(pd);
    PDCode m = pd;
    for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        const auto& x = pd.crossings[i];
        if (ori.over_in_slot[i] == 3)
            m.crossings[i].arcs = {x[3], x[0], x[1], x[2]};
        else
            m.crossings[i].arcs = {x[1], x[2], x[3], x[0]};
    }
    return m;
}

// Relabel arcs as consecutive positive integers along each component, in
// component order, starting from each cycle's first listed arc.
inline PDCode canonical_relabel(const PDCode& pd) {
    std::map<long long, long long> rename;
    long long next = 1;
    PDCode out;
    out.components.reserve(pd.components.size());
    for (const auto& cyc : pd.components) {
        std::vector<long long> newcyc;
        newcyc.reserve(cyc.size());
        for (long long a : cyc) {
            rename[a] = next;
            newcyc.push_back(next);
            ++next;
        }
        out.components.push_back(std::move(newcyc));
    }
    out.crossings.reserve(pd.crossings.size());
    for (const auto& x : pd.crossings)
        out.crossings.push_back({{rename.at(x[0]), rename.at(x[1]), rename.at(x[2]), rename.at(x[3])}});
    return out;
}

// Deterministic serialization, used as a memo key for bracket evaluations.
inline std::string serialize(const PDCode& pd) {
    std::string s = "C";
    for (const auto& cyc : pd.components) {
        s += '[';
        for (long long a : cyc) s += std::to_string(a) + ",";
        s += ']';
    }
    s += "X";
    for (const auto& x : pd.crossings) {
        s += '(';
        for (int i = 0; i < 4; ++i) s += std::to_string(x[i]) + ",";
        s += ')';
    }
    return s;
}

// A link diagram with one framing integer per component and optional colors.
// Framing is the surgery coefficient, stored explicitly rather than as
// blackboard writhe; evaluations compensate the difference with twist
// factors.
struct FramedLinkDiagram {
    PDCode pd;
    std::vector<long long> framings;
    std::vector<std::optional<long long>> colors;

    std::size_t component_count() const { return pd.component_count(); }
};

inline void require_valid(const FramedLinkDiagram& d) {
    require_valid(d.pd);
    if (d.framings.size() != d.pd.component_count())
        throw MalformedDiagram("framings length " + std::to_string(d.framings.size()) +
                               " != component count " + std::to_string(d.pd.component_count()));
    if (!d.colors.empty() && d.colors.size() != d.pd.component_count())
        throw MalformedDiagram("colors length does not match component count");
    for (const auto& c : d.colors)
        if (c && *c < 0) throw MalformedDiagram("colors must be nonnegative");
}

// Surgery data for a pair (M, J): components without a color are the surgery
// link L, colored components form the observed link J.  Both live in the same
// PD universe so J may link and cross L.
struct SurgeryPresentation {
    FramedLinkDiagram diagram;
    std::vector<std::size_t> surgery_components;
    std::vector<std::size_t> observed_components;

    static SurgeryPresentation from_diagram(const FramedLinkDiagram& d) {
        require_valid(d);
        SurgeryPresentation pres;
        pres.diagram = d;
        for (std::size_t i = 0; i < d.component_count(); ++i) {
            if (i < d.colors.size() && d.colors[i])
                pres.observed_components.push_back(i);
            else
                pres.surgery_components.push_back(i);
        }
        return pres;
    }
};

}  // namespace qperiod
