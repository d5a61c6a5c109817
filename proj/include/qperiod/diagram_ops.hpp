#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "qperiod/numeric.hpp"
#include "qperiod/pd_code.hpp"

namespace qperiod {

// Sum of crossing signs over the whole diagram, self and mixed crossings
// alike (the Tait number of the diagram as drawn).
inline long long writhe(const PDCode& pd) {
    DiagramOrientation ori = analyze(pd);
    long long w = 0;
    for (std::size_t i = 0; i < pd.crossings.size(); ++i) w += ori.sign(i);
    return w;
}

inline long long writhe(const FramedLinkDiagram& d) { return writhe(d.pd); }

// Signed self-crossing count of one component (its blackboard framing).
inline long long self_writhe(const PDCode& pd, std::size_t comp) {
    DiagramOrientation ori = analyze(pd);
    long long w = 0;
    for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        const auto& x = pd.crossings[i];
        if (ori.comp_of.at(x[0]) == comp && ori.comp_of.at(x[1]) == comp) w += ori.sign(i);
    }
    return w;
}

// Linking matrix: diagonal entries are the stored framings, off-diagonal
// entries the pairwise linking numbers (half the signed count of mixed
// crossings).
inline std::vector<std::vector<Int>> linking_matrix(const FramedLinkDiagram& d) {
    require_valid(d);
    DiagramOrientation ori = analyze(d.pd);
    std::size_t n = d.component_count();
    std::vector<std::vector<long long>> twice(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < d.pd.crossings.size(); ++i) {
        const auto& x = d.pd.crossings[i];
        std::size_t cu = ori.comp_of.at(x[0]);
        std::size_t co = ori.comp_of.at(x[1]);
        if (cu != co) {
            twice[cu][co] += ori.sign(i);
            twice[co][cu] += ori.sign(i);
        }
    }
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = d.framings[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (twice[i][j] % 2 != 0)
                throw MalformedDiagram("odd signed crossing count between components " +
                                       std::to_string(i) + " and " + std::to_string(j) +
                                       "; diagram is not planar-realizable");
            m[i][j] = twice[i][j] / 2;
        }
    }
    return m;
}

inline FramedLinkDiagram add_disjoint_unknot(const FramedLinkDiagram& d, long long framing) {
    FramedLinkDiagram out = d;
    long long fresh = 1;
    for (const auto& cyc : d.pd.components)
        for (long long a : cyc) fresh = std::max(fresh, a + 1);
    out.pd.components.push_back({fresh});
    out.framings.push_back(framing);
    if (!out.colors.empty()) out.colors.push_back(std::nullopt);
    return out;
}

inline FramedLinkDiagram disjoint_union(const FramedLinkDiagram& a, const FramedLinkDiagram& b) {
    long long offset = 0;
    for (const auto& cyc : a.pd.components)
        for (long long arc : cyc) offset = std::max(offset, arc);
    FramedLinkDiagram out = a;
    for (const auto& x : b.pd.crossings)
        out.pd.crossings.push_back({{x[0] + offset, x[1] + offset, x[2] + offset, x[3] + offset}});
    for (const auto& cyc : b.pd.components) {
        std::vector<long long> shifted;
        shifted.reserve(cyc.size());
        for (long long arc : cyc) shifted.push_back(arc + offset);
        out.pd.components.push_back(std::move(shifted));
    }
    out.framings.insert(out.framings.end(), b.framings.begin(), b.framings.end());
    if (!a.colors.empty() || !b.colors.empty()) {
        out.colors.resize(a.component_count());
        auto bc = b.colors;
        bc.resize(b.component_count());
        out.colors.insert(out.colors.end(), bc.begin(), bc.end());
    }
    return out;
}

namespace detail {

// Interned symbolic arc ids for the cabling construction: copies of original
// arcs plus fresh segment ids created inside expanded crossings.
class IdPool {
  public:
    long long get(long long kind, long long a, long long b, long long c) {
        auto key = std::make_tuple(kind, a, b, c);
        auto it = ids_.find(key);
        if (it != ids_.end()) return it->second;
        long long id = static_cast<long long>(origin_.size());
        ids_.emplace(key, id);
        origin_.push_back({-1, -1});
        return id;
    }

    long long arc_copy(long long arc, long long copy, std::size_t comp) {
        long long id = get(0, arc, copy, 0);
        origin_[static_cast<std::size_t>(id)] = {static_cast<long long>(comp), copy};
        return id;
    }

    std::size_t size() const { return origin_.size(); }

    // (component, copy) for ids that are copies of original arcs, else (-1,-1).
    std::pair<long long, long long> origin(long long id) const {
        return origin_[static_cast<std::size_t>(id)];
    }

  private:
    std::map<std::tuple<long long, long long, long long, long long>, long long> ids_;
    std::vector<std::pair<long long, long long>> origin_;
};

struct UnionFind {
    mutable std::vector<long long> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    long long find(long long x) const {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(long long a, long long b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(b)] = a;
    }
};

}  // namespace detail

// Replace every component c by multiplicity[c] parallel blackboard-framed
// copies.  A crossing with M under-copies and K over-copies expands into an
// M*K grid of crossings of the original sign; multiplicity 0 deletes the
// component and heals the strands that crossed it.  Copy lanes are ordered
// left-to-right facing along the strand, so copy t of an arc continues as
// copy t of the next arc and the copies are honest parallel push-offs of the
// drawn diagram.  Copies inherit the framing and color of their original.
inline FramedLinkDiagram cable_multi(const FramedLinkDiagram& d,
                                     const std::vector<long long>& multiplicity) {
    require_valid(d);
    assert(multiplicity.size() == d.component_count());
    for (long long m : multiplicity) assert(m >= 0);

    DiagramOrientation ori = analyze(d.pd);
    detail::IdPool pool;

    for (std::size_t c = 0; c < d.component_count(); ++c)
        for (long long arc : d.pd.components[c])
            for (long long t = 1; t <= multiplicity[c]; ++t) pool.arc_copy(arc, t, c);

    struct NewCrossing {
        std::array<long long, 4> slot;  // symbolic ids, slot0 = incoming under
        int over_in_slot;               // 1 or 3
    };
    std::vector<NewCrossing> xs;
    std::vector<std::pair<long long, long long>> merges;

    for (std::size_t i = 0; i < d.pd.crossings.size(); ++i) {
        const auto& x = d.pd.crossings[i];
        int ois = ori.over_in_slot[i];
        long long a = x[0], c = x[2];
        long long oi = x[ois], oo = x[4 - ois];
        std::size_t cu = ori.comp_of.at(a);
        std::size_t co = ori.comp_of.at(oi);
        long long M = multiplicity[cu];  // under lanes, numbered W to E
        long long K = multiplicity[co];  // over lanes, numbered S to N
        long long ii = static_cast<long long>(i);

        if (M == 0 && K == 0) continue;
        if (K == 0) {
            for (long long q = 1; q <= M; ++q)
                merges.push_back({pool.arc_copy(a, q, cu), pool.arc_copy(c, q, cu)});
            continue;
        }
        if (M == 0) {
            for (long long s = 1; s <= K; ++s)
                merges.push_back({pool.arc_copy(oi, s, co), pool.arc_copy(oo, s, co)});
            continue;
        }

        // Under copy q runs S->N through over lanes r = 1..K.
        auto under_in_seg = [&](long long q, long long r) {
            return r == 1 ? pool.arc_copy(a, q, cu) : pool.get(1, ii, q, r - 1);
        };
        auto under_out_seg = [&](long long q, long long r) {
            return r == K ? pool.arc_copy(c, q, cu) : pool.get(1, ii, q, r);
        };
        // Facing along the over-strand, copy 1 is the leftmost lane: N-most
        // for a W->E over-strand (enters slot 3), S-most for E->W.
        bool east = (ois == 3);
        auto lane_copy = [&](long long r) { return east ? K + 1 - r : r; };
        auto over_w_seg = [&](long long q, long long r) {
            long long s = lane_copy(r);
            if (q > 1) return pool.get(2, ii, r, q - 1);
            return east ? pool.arc_copy(oi, s, co) : pool.arc_copy(oo, s, co);
        };
        auto over_e_seg = [&](long long q, long long r) {
            long long s = lane_copy(r);
            if (q < M) return pool.get(2, ii, r, q);
            return east ? pool.arc_copy(oo, s, co) : pool.arc_copy(oi, s, co);
        };

        for (long long q = 1; q <= M; ++q)
            for (long long r = 1; r <= K; ++r)
                xs.push_back({{under_in_seg(q, r), over_e_seg(q, r), under_out_seg(q, r),
                               over_w_seg(q, r)},
                              east ? 3 : 1});
    }

    detail::UnionFind uf(pool.size());
    for (const auto& [u, v] : merges) uf.unite(u, v);

    std::map<long long, std::pair<long long, long long>> class_origin;
    for (long long id = 0; id < static_cast<long long>(pool.size()); ++id) {
        auto org = pool.origin(id);
        if (org.first >= 0) class_origin[uf.find(id)] = org;
    }

    struct Passage {
        std::size_t crossing;
        bool under;
    };
    std::map<long long, Passage> in_at;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        auto& nc = xs[j];
        for (auto& s : nc.slot) s = uf.find(s);
        long long under_in = nc.slot[0];
        long long over_in = nc.slot[static_cast<std::size_t>(nc.over_in_slot)];
        if (!in_at.emplace(under_in, Passage{j, true}).second ||
            !in_at.emplace(over_in, Passage{j, false}).second)
            throw std::logic_error("cable: arc class incoming at two passages");
    }

    // Trace the cycles of the cabled diagram and attribute each to the
    // (component, copy) it is a push-off of.
    std::map<std::pair<long long, long long>, std::vector<long long>> cycles;
    std::set<long long> visited;
    for (const auto& [start, p0] : in_at) {
        (void)p0;
        if (visited.count(start)) continue;
        std::vector<long long> cycle;
        std::pair<long long, long long> origin{-1, -1};
        long long cur = start;
        do {
            visited.insert(cur);
            cycle.push_back(cur);
            if (origin.first < 0) {
                auto it = class_origin.find(cur);
                if (it != class_origin.end()) origin = it->second;
            }
            const Passage& p = in_at.at(cur);
            const auto& nc = xs[p.crossing];
            cur = p.under ? nc.slot[2] : nc.slot[static_cast<std::size_t>(4 - nc.over_in_slot)];
        } while (cur != start);
        if (origin.first < 0) throw std::logic_error("cable: traced circle with no origin");
        cycles.emplace(origin, std::move(cycle));
    }

    // Relabel consecutively in (component, copy) order.  Copies whose classes
    // no longer meet any crossing are crossingless circles.
    FramedLinkDiagram out;
    std::map<long long, long long> label_of_class;
    long long next = 1;
    for (std::size_t c = 0; c < d.component_count(); ++c) {
        for (long long t = 1; t <= multiplicity[c]; ++t) {
            auto it = cycles.find({static_cast<long long>(c), t});
            std::vector<long long> comp;
            if (it != cycles.end()) {
                for (long long cls : it->second) {
                    label_of_class[cls] = next;
                    comp.push_back(next);
                    ++next;
                }
            } else {
                comp.push_back(next);
                ++next;
            }
            out.pd.components.push_back(std::move(comp));
            out.framings.push_back(d.framings[c]);
            if (!d.colors.empty()) out.colors.push_back(d.colors[c]);
        }
    }
    for (const auto& nc : xs)
        out.pd.crossings.push_back({{label_of_class.at(nc.slot[0]), label_of_class.at(nc.slot[1]),
                                     label_of_class.at(nc.slot[2]), label_of_class.at(nc.slot[3])}});
    return out;
}

// m parallel copies of one component; m = 0 deletes it.
inline FramedLinkDiagram cable(const FramedLinkDiagram& d, std::size_t component, long long m) {
    std::vector<long long> mult(d.component_count(), 1);
    mult.at(component) = m;
    return cable_multi(d, mult);
}

}  // namespace qperiod
