// Shared test fixtures: a small toy signature, exhaustive move enumeration,
// random diagram generation, and a breadth-first interchange-reachability
// oracle that `equal` is checked against.
#pragma once

#include <deque>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "twocat/diagram.hpp"
#include "twocat/normalize.hpp"

namespace twocat::testutil {

// Toy signature: one object A; 1-cells a, b : A -> A; 2-cells
//   s : a∘a => a          (vertical contraction, window 2 -> 1)
//   t : a => b            (relabel, window 1 -> 1, invertible)
//   u : id_{AA} => a□a-side pair (insertion, window 0 -> 2)
inline Signature toy_signature() {
    Signature sig;
    sig.add_object("A");
    sig.add_one_cell("a", {"A"}, {"A"});
    sig.add_one_cell("b", {"A"}, {"A"});
    Path aa{{"A"}, {Whiskered1{{}, "a", {}}, Whiskered1{{}, "a", {}}}};
    Path a1{{"A"}, {Whiskered1{{}, "a", {}}}};
    Path b1{{"A"}, {Whiskered1{{}, "b", {}}}};
    sig.add_two_cell("s", aa, a1, false);
    sig.add_two_cell("t", a1, b1, true);
    Path idAA{{"A", "A"}, {}};
    Path pair{{"A", "A"},
              {Whiskered1{{}, "a", {"A"}}, Whiskered1{{"A"}, "a", {}}}};
    sig.add_two_cell("u", idAA, pair, false);
    return sig;
}

// Every level (cell, direction, position, whisker split) that applies to `p`
// over the given 2-cell menu. Deterministic order.
inline std::vector<Level> enumerate_levels(const Signature& sig, const Path& p,
                                           const std::vector<TwoCellRef>& menu) {
    std::vector<Level> out;
    for (const auto& cell : menu) {
        Path cs = cell_src(sig, cell);
        std::size_t k = cs.factors.size();
        if (k == 0) {
            // insertion: try every gap and every split of the gap word
            for (std::size_t gap = 0; gap <= p.factors.size(); ++gap) {
                Word w = word_at(sig, p, gap);
                if (w.size() < cs.base.size()) continue;
                for (std::size_t off = 0; off + cs.base.size() <= w.size(); ++off) {
                    Word lw(w.begin(), w.begin() + off);
                    Word mid(w.begin() + off, w.begin() + off + cs.base.size());
                    Word rw(w.begin() + off + cs.base.size(), w.end());
                    if (mid != cs.base) continue;
                    Level lv{gap, lw, rw, cell};
                    try {
                        apply_level(sig, p, lv);
                        out.push_back(lv);
                    } catch (const error&) {
                    }
                }
            }
            continue;
        }
        for (std::size_t pre = 0; pre + k <= p.factors.size(); ++pre) {
            // candidate outer whiskers read off the first window factor
            const Whiskered1& h0 = p.factors[pre];
            const Whiskered1& c0 = cs.factors[0];
            if (h0.cell != c0.cell) continue;
            if (h0.lw.size() < c0.lw.size() || h0.rw.size() < c0.rw.size()) continue;
            if (!std::equal(c0.lw.rbegin(), c0.lw.rend(), h0.lw.rbegin())) continue;
            if (!std::equal(c0.rw.begin(), c0.rw.end(), h0.rw.begin())) continue;
            Word lw(h0.lw.begin(), h0.lw.end() - c0.lw.size());
            Word rw(h0.rw.begin() + c0.rw.size(), h0.rw.end());
            Level lv{pre, lw, rw, cell};
            try {
                apply_level(sig, p, lv);
                out.push_back(lv);
            } catch (const error&) {
            }
        }
    }
    return out;
}

inline std::vector<TwoCellRef> toy_menu() {
    return {TwoCellRef::gen("s"), TwoCellRef::gen("t"), TwoCellRef::gen("t", true),
            TwoCellRef::gen("u")};
}

// Random diagram: a random walk of valid levels from a random toy source path.
inline Diagram random_toy_diagram(const Signature& sig, std::mt19937_64& rng,
                                  std::size_t max_levels) {
    std::vector<Path> sources = {
        Path{{"A", "A"}, {Whiskered1{{}, "a", {"A"}}}},
        Path{{"A", "A"}, {Whiskered1{{}, "a", {"A"}}, Whiskered1{{"A"}, "a", {}}}},
        Path{{"A", "A"}, {}},
    };
    Diagram d;
    d.src = sources[rng() % sources.size()];
    Path cur = d.src;
    std::size_t n = rng() % (max_levels + 1);
    for (std::size_t i = 0; i < n; ++i) {
        auto moves = enumerate_levels(sig, cur, toy_menu());
        if (moves.empty()) break;
        Level lv = moves[rng() % moves.size()];
        cur = apply_level(sig, cur, lv);
        d.levels.push_back(lv);
    }
    return d;
}

// Breadth-first closure of a level list under single adjacent interchange
// swaps. Keys are printed diagrams, values the actual level lists.
inline std::vector<std::vector<Level>> interchange_class(const Signature& sig,
                                                         const Diagram& d) {
    auto key = [&](const std::vector<Level>& ls) {
        Diagram t{d.src, ls};
        return show_diagram(t);
    };
    std::set<std::string> seen;
    std::deque<std::vector<Level>> queue;
    std::vector<std::vector<Level>> out;
    queue.push_back(d.levels);
    seen.insert(key(d.levels));
    while (!queue.empty()) {
        auto ls = queue.front();
        queue.pop_front();
        out.push_back(ls);
        for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
            auto sw = try_swap_adjacent(sig, ls[i], ls[i + 1]);
            if (!sw) continue;
            auto nxt = ls;
            nxt[i] = sw->first;
            nxt[i + 1] = sw->second;
            if (seen.insert(key(nxt)).second) queue.push_back(nxt);
        }
    }
    return out;
}

} // namespace twocat::testutil
