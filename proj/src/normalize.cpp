#include "twocat/normalize.hpp"

#include <map>
#include <tuple>

namespace twocat {

std::optional<std::pair<Level, Level>> try_swap_adjacent(const Signature& sig,
                                                         const Level& a,
                                                         const Level& b) {
    std::size_t ka = level_src_width(sig, a);
    std::size_t ka_out = level_tgt_width(sig, a);
    std::size_t kb = level_src_width(sig, b);
    std::size_t kb_out = level_tgt_width(sig, b);

    // b acts strictly right of a's output window: b can run first, shifted
    // back by a's width change.
    if (b.pre >= a.pre + ka_out) {
        Level b2 = b;
        b2.pre = b.pre - ka_out + ka;
        return std::make_pair(b2, a);
    }
    // b acts strictly left of a's (input) window: b can run first unchanged,
    // a shifts by b's width change.
    if (b.pre + kb <= a.pre) {
        Level a2 = a;
        a2.pre = a.pre + kb_out - kb;
        return std::make_pair(b, a2);
    }
    return std::nullopt;
}

static std::tuple<std::size_t, int, std::string, std::string, std::string, int, Word, Word>
level_key(const Level& lv) {
    const TwoCellRef& c = lv.cell;
    bool gen = c.kind == TwoCellRef::Kind::generator;
    return {lv.pre,
            gen ? 0 : 1,
            gen ? c.name : c.cross.lcell,
            gen ? std::string() : show_word(c.cross.mid),
            gen ? std::string() : c.cross.rcell,
            c.inverse ? 1 : 0,
            lv.lw,
            lv.rw};
}

bool level_less(const Level& lhs, const Level& rhs) {
    return level_key(lhs) < level_key(rhs);
}

namespace {

std::string levels_tag(const std::vector<Level>& ls) {
    std::string s;
    for (const auto& lv : ls) {
        s += show_level(lv);
        s += '\n';
    }
    return s;
}

bool levels_lex_less(const std::vector<Level>& a, const std::vector<Level>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        auto ka = level_key(a[i]);
        auto kb = level_key(b[i]);
        if (ka != kb) return ka < kb;
    }
    return a.size() < b.size();
}

// Canonical representative of the interchange class of `ls`: the
// lexicographically least level list reachable by strict interchange.
// Greedy selection: every level that can bubble to the front by adjacent
// swaps is a candidate first letter; take the least front key; identical
// front levels whose remainders differ are resolved by recursively
// normalizing each remainder and keeping the least.
std::vector<Level> nf_levels(const Signature& sig, const std::vector<Level>& ls,
                             std::map<std::string, std::vector<Level>>& memo) {
    if (ls.size() <= 1) return ls;
    std::string tag = levels_tag(ls);
    if (auto it = memo.find(tag); it != memo.end()) return it->second;

    struct Candidate {
        Level front;
        std::vector<Level> rest;
    };
    std::vector<Candidate> cands;
    for (std::size_t j = 0; j < ls.size(); ++j) {
        std::vector<Level> cur = ls;
        bool ok = true;
        for (std::size_t k = j; k > 0; --k) {
            auto sw = try_swap_adjacent(sig, cur[k - 1], cur[k]);
            if (!sw) {
                ok = false;
                break;
            }
            cur[k - 1] = sw->first;
            cur[k] = sw->second;
        }
        if (!ok) continue;
        Candidate c;
        c.front = cur[0];
        c.rest.assign(cur.begin() + 1, cur.end());
        cands.push_back(std::move(c));
    }
    // at least j = 0 always succeeds
    const auto* best = &cands[0];
    for (const auto& c : cands)
        if (level_key(c.front) < level_key(best->front)) best = &c;

    std::vector<Level> best_rest;
    bool chosen = false;
    for (const auto& c : cands) {
        if (level_key(c.front) != level_key(best->front)) continue;
        std::vector<Level> r = nf_levels(sig, c.rest, memo);
        if (!chosen || levels_lex_less(r, best_rest)) {
            best_rest = std::move(r);
            chosen = true;
        }
    }
    std::vector<Level> out;
    out.reserve(ls.size());
    out.push_back(best->front);
    out.insert(out.end(), best_rest.begin(), best_rest.end());
    memo.emplace(std::move(tag), out);
    return out;
}

} // namespace

Diagram normalize(const Signature& sig, const Diagram& d) {
    std::map<std::string, std::vector<Level>> memo;
    return Diagram{d.src, nf_levels(sig, d.levels, memo)};
}

bool equal(const Signature& sig, const Diagram& d1, const Diagram& d2) {
    if (!(d1.src == d2.src)) return false;
    return normalize(sig, d1) == normalize(sig, d2);
}

std::string diagram_key(const Signature& sig, const Diagram& d) {
    return show_diagram(normalize(sig, d));
}

} // namespace twocat
