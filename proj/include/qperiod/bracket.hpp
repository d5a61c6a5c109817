#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "qperiod/diagram_ops.hpp"
#include "qperiod/errors.hpp"
#include "qperiod/laurent.hpp"
#include "qperiod/pd_code.hpp"

namespace qperiod {

inline constexpr long long kDefaultCrossingCap = 26;

// delta = -A^2 - A^{-2}, the value of a closed loop.
inline LaurentZ bracket_delta() {
    LaurentZ d('A');
    d.add_term(2, Int(-1));
    d.add_term(-2, Int(-1));
    return d;
}

// Insert-only memo for renormalized bracket values, keyed on the serialized
// PD code.  Colored evaluations re-visit the same cabled diagrams many times.
struct BracketCache {
    std::unordered_map<std::string, LaurentZ> renormalized;
};

namespace detail {

// State sum: for each of the 2^c smoothings count loops with union-find and
// histogram the states by (A-exponent, loop count).
inline std::map<std::pair<long long, long long>, long long> state_histogram(const PDCode& pd,
                                                                            long long cap) {
    long long c = static_cast<long long>(pd.crossing_count());
    if (c > cap) throw TooManyCrossings(c, cap);

    std::map<long long, int> arc_index;
    for (const auto& x : pd.crossings)
        for (int s = 0; s < 4; ++s) arc_index.emplace(x[s], 0);
    int n_arcs = 0;
    for (auto& [arc, idx] : arc_index) idx = n_arcs++;

    long long free_circles = 0;
    for (const auto& cyc : pd.components)
        if (cyc.size() == 1 && !arc_index.count(cyc[0])) ++free_circles;

    std::map<std::pair<long long, long long>, long long> hist;
    std::vector<int> parent(static_cast<std::size_t>(n_arcs));
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    };

    for (unsigned long long mask = 0; mask < (1ULL << c); ++mask) {
        for (int i = 0; i < n_arcs; ++i) parent[static_cast<std::size_t>(i)] = i;
        long long exponent = 0;
        for (long long i = 0; i < c; ++i) {
            const auto& x = pd.crossings[static_cast<std::size_t>(i)];
            int a = arc_index[x[0]], b = arc_index[x[1]], cc = arc_index[x[2]], dd = arc_index[x[3]];
            if (mask >> i & 1) {
                // B-smoothing joins S-W and E-N.
                unite(a, dd);
                unite(b, cc);
                --exponent;
            } else {
                // A-smoothing joins S-E and N-W (the regions swept rotating
                // the over-strand counterclockwise onto the under-strand).
                unite(a, b);
                unite(cc, dd);
                ++exponent;
            }
        }
        long long loops = free_circles;
        for (int i = 0; i < n_arcs; ++i)
            if (find(i) == i) ++loops;
        ++hist[{exponent, loops}];
    }
    return hist;
}

}  // namespace detail

// Kauffman bracket, normalized so that a single circle evaluates to 1.
// The empty diagram also evaluates to 1.
inline LaurentZ bracket(const PDCode& pd, long long cap = kDefaultCrossingCap) {
    require_valid(pd);
    if (pd.empty()) return LaurentZ::one('A');
    LaurentZ delta = bracket_delta();
    LaurentZ result('A');
    for (const auto& [key, count] : detail::state_histogram(pd, cap)) {
        auto [e, loops] = key;
        result += Int(count) * delta.pow(static_cast<unsigned long long>(loops - 1)).shifted(e);
    }
    return result;
}

// Renormalized bracket: every loop contributes a full factor of delta, the
// empty diagram evaluates to 1.  Equals -(A^2+A^{-2}) * bracket on nonempty
// diagrams.
inline LaurentZ bracket_renormalized(const PDCode& pd, long long cap = kDefaultCrossingCap,
                                     BracketCache* cache = nullptr) {
    require_valid(pd);
    if (pd.empty()) return LaurentZ::one('A');
    std::string key;
    if (cache) {
        key = serialize(pd);
        auto it = cache->renormalized.find(key);
        if (it != cache->renormalized.end()) return it->second;
    }
    LaurentZ delta = bracket_delta();
    LaurentZ result('A');
    for (const auto& [hk, count] : detail::state_histogram(pd, cap)) {
        auto [e, loops] = hk;
        result += Int(count) * delta.pow(static_cast<unsigned long long>(loops)).shifted(e);
    }
    if (cache) cache->renormalized.emplace(std::move(key), result);
    return result;
}

namespace detail {

// Independent evaluator used as an oracle: resolve one crossing at a time by
// the two smoothings and recurse, memoized on a relabeled serialization.
struct SkeinDiagram {
    std::vector<std::array<long long, 4>> xs;
    long long circles = 0;

    std::string key() const {
        std::map<long long, long long> rename;
        std::string s = std::to_string(circles);
        for (const auto& x : xs) {
            s += '|';
            for (long long a : x) {
                auto [it, fresh] = rename.emplace(a, static_cast<long long>(rename.size()));
                (void)fresh;
                s += std::to_string(it->second) + ",";
            }
        }
        return s;
    }
};

inline LaurentZ bracket_skein_rec(const SkeinDiagram& d,
                                  std::unordered_map<std::string, LaurentZ>& memo) {
    if (d.xs.empty()) {
        if (d.circles == 0) return LaurentZ::one('A');
        return bracket_delta().pow(static_cast<unsigned long long>(d.circles - 1));
    }
    std::string key = d.key();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    auto resolve = [&](bool a_smoothing) {
        const auto& x = d.xs.front();
        std::map<long long, long long> rep;
        auto find = [&](long long v) {
            while (rep.count(v) && rep[v] != v) v = rep[v];
            return v;
        };
        auto unite = [&](long long a, long long b) {
            a = find(a);
            b = find(b);
            if (a != b) rep[b] = a;
            rep.emplace(a, a);
        };
        if (a_smoothing) {
            unite(x[0], x[1]);
            unite(x[2], x[3]);
        } else {
            unite(x[0], x[3]);
            unite(x[1], x[2]);
        }
        SkeinDiagram next;
        next.circles = d.circles;
        next.xs.reserve(d.xs.size() - 1);
        std::set<long long> still_used;
        for (std::size_t i = 1; i < d.xs.size(); ++i) {
            std::array<long long, 4> y;
            for (int s = 0; s < 4; ++s) {
                y[static_cast<std::size_t>(s)] = find(d.xs[i][static_cast<std::size_t>(s)]);
                still_used.insert(y[static_cast<std::size_t>(s)]);
            }
            next.xs.push_back(y);
        }
        std::set<long long> closed;
        for (long long v : {x[0], x[1], x[2], x[3]}) closed.insert(find(v));
        for (long long cls : closed)
            if (!still_used.count(cls)) ++next.circles;
        return next;
    };

    LaurentZ value = bracket_skein_rec(resolve(true), memo).shifted(1) +
                     bracket_skein_rec(resolve(false), memo).shifted(-1);
    memo.emplace(std::move(key), value);
    return value;
}

}  // namespace detail

// Skein-recursion bracket.  Same contract as bracket(); kept as a fully
// independent computation path for cross-checking the state sum.
inline LaurentZ bracket_by_skein(const PDCode& pd, long long cap = kDefaultCrossingCap) {
    require_valid(pd);
    if (pd.empty()) return LaurentZ::one('A');
    long long c = static_cast<long long>(pd.crossing_count());
    if (c > cap) throw TooManyCrossings(c, cap);

    detail::SkeinDiagram d;
    std::set<long long> on_crossings;
    for (const auto& x : pd.crossings) {
        d.xs.push_back(x.arcs);
        for (long long a : x.arcs) on_crossings.insert(a);
    }
    for (const auto& cyc : pd.components)
        if (cyc.size() == 1 && !on_crossings.count(cyc[0])) ++d.circles;

    std::unordered_map<std::string, LaurentZ> memo;
    return detail::bracket_skein_rec(d, memo);
}

}  // namespace qperiod
