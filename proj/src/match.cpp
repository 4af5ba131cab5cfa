// Sub-diagram matching and rule application, plus on-demand synthesis of
// the structured rule families (crossing cancellation, coupon slides,
// inverse-pair cancellation) referenced by id.
#include <algorithm>

#include "twocat/engine.hpp"
#include "twocat/normalize.hpp"

namespace twocat {

namespace {

const Word kE;

bool word_suffix(const Word& small, const Word& big) {
    return small.size() <= big.size() &&
           std::equal(small.rbegin(), small.rend(), big.rbegin());
}

bool word_prefix(const Word& small, const Word& big) {
    return small.size() <= big.size() &&
           std::equal(small.begin(), small.end(), big.begin());
}

// The rule side's levels embedded at `pos`: shifted to the factor offset
// and whiskered by the position's outer words.
std::vector<Level> embed_levels(const std::vector<Level>& ls, const Position& pos) {
    std::vector<Level> out;
    out.reserve(ls.size());
    for (const auto& lv : ls)
        out.push_back(Level{lv.pre + pos.factor_offset, concat(pos.lw, lv.lw),
                            concat(lv.rw, pos.rw), lv.cell});
    return out;
}

// Exact factor-context condition at `pos`: the pattern's source factors
// appear as a contiguous block whiskered uniformly by pos.lw/pos.rw, or —
// with no factors — its base word splits the gap word there.
bool embeds_at(const Signature& sig, const Path& host, const Path& pat,
               const Position& pos) {
    const std::size_t f = pat.factors.size();
    const std::size_t o = pos.factor_offset;
    if (f == 0) {
        if (o > host.factors.size()) return false;
        return word_at(sig, host, o) == concat(pos.lw, pat.base, pos.rw);
    }
    if (o + f > host.factors.size()) return false;
    for (std::size_t j = 0; j < f; ++j) {
        const Whiskered1& h = host.factors[o + j];
        const Whiskered1& c = pat.factors[j];
        if (h.cell != c.cell) return false;
        if (h.lw != concat(pos.lw, c.lw)) return false;
        if (h.rw != concat(c.rw, pos.rw)) return false;
    }
    return true;
}

// Host paths at every level gap; throws type_error when `d` is ill-typed.
std::vector<Path> prefix_paths(const Signature& sig, const Diagram& d) {
    std::vector<Path> at;
    at.reserve(d.levels.size() + 1);
    at.push_back(d.src);
    for (const auto& lv : d.levels) at.push_back(apply_level(sig, at.back(), lv));
    return at;
}

// Sorted cell names of a level window; invariant under interchange, so a
// window whose bag differs from the pattern's can never match.
std::vector<std::string> cell_bag(const std::vector<Level>& ls, std::size_t from,
                                  std::size_t count) {
    std::vector<std::string> bag;
    bag.reserve(count);
    for (std::size_t i = 0; i < count; ++i) bag.push_back(show_cell(ls[from + i].cell));
    std::sort(bag.begin(), bag.end());
    return bag;
}

} // namespace

std::string show_position(const Position& pos) {
    return "L" + std::to_string(pos.level_start) + ".." +
           "L" + std::to_string(pos.level_start + pos.level_count) + " F" +
           std::to_string(pos.factor_offset) + " lw=" + show_word(pos.lw) +
           " rw=" + show_word(pos.rw);
}

std::vector<Position> find_matches(const Signature& sig, const Diagram& d,
                                   const RewriteRule& rule, bool reverse) {
    const Diagram& pat = reverse ? rule.rhs : rule.lhs;
    const std::size_t k = pat.levels.size();
    const std::size_t n = d.levels.size();
    std::vector<Position> out;
    if (k > n) return out;
    const auto at = prefix_paths(sig, d);
    const auto pat_bag = cell_bag(pat.levels, 0, k);
    const std::size_t f = pat.src.factors.size();
    for (std::size_t s = 0; s + k <= n; ++s) {
        if (k > 0 && cell_bag(d.levels, s, k) != pat_bag) continue;
        const Path& host = at[s];
        auto consider = [&](const Position& pos) {
            if (!embeds_at(sig, host, pat.src, pos)) return;
            Diagram embedded{host, embed_levels(pat.levels, pos)};
            if (!validate(sig, embedded).empty()) return;
            if (k > 0) {
                Diagram window{host,
                               {d.levels.begin() + s, d.levels.begin() + s + k}};
                if (!equal(sig, window, embedded)) return;
            }
            out.push_back(pos);
        };
        if (f == 0) {
            // insertion pattern: every factor gap, every split of its word
            for (std::size_t o = 0; o <= host.factors.size(); ++o) {
                Word here = word_at(sig, host, o);
                if (here.size() < pat.src.base.size()) continue;
                for (std::size_t i = 0; i + pat.src.base.size() <= here.size(); ++i)
                    consider(Position{
                        s, k, o, Word(here.begin(), here.begin() + i),
                        Word(here.begin() + i + pat.src.base.size(), here.end())});
            }
        } else {
            // the outer whiskers are read off the first pattern factor
            for (std::size_t o = 0; o + f <= host.factors.size(); ++o) {
                const Whiskered1& h0 = host.factors[o];
                const Whiskered1& c0 = pat.src.factors[0];
                if (h0.cell != c0.cell) continue;
                if (!word_suffix(c0.lw, h0.lw) || !word_prefix(c0.rw, h0.rw)) continue;
                consider(Position{s, k, o,
                                  Word(h0.lw.begin(), h0.lw.end() - c0.lw.size()),
                                  Word(h0.rw.begin() + c0.rw.size(), h0.rw.end())});
            }
        }
    }
    return out;
}

Diagram apply_rule(const Signature& sig, const Diagram& d, const RewriteRule& rule,
                   bool reverse, const Position& pos) {
    const Diagram& pat = reverse ? rule.rhs : rule.lhs;
    const Diagram& rep = reverse ? rule.lhs : rule.rhs;
    const std::string what = rule.id + (reverse ? " (reversed)" : "");
    if (pos.level_count != pat.levels.size())
        throw no_match("apply " + what + ": position spans " +
                       std::to_string(pos.level_count) + " levels but the pattern has " +
                       std::to_string(pat.levels.size()));
    if (pos.level_start + pos.level_count > d.levels.size())
        throw no_match("apply " + what + ": level window out of range at " +
                       show_position(pos));
    Path host = d.src;
    for (std::size_t i = 0; i < pos.level_start; ++i)
        host = apply_level(sig, host, d.levels[i]);
    bool ok = embeds_at(sig, host, pat.src, pos);
    if (ok) {
        Diagram embedded{host, embed_levels(pat.levels, pos)};
        ok = validate(sig, embedded).empty();
        if (ok && pos.level_count > 0) {
            Diagram window{host, {d.levels.begin() + pos.level_start,
                                  d.levels.begin() + pos.level_start + pos.level_count}};
            ok = equal(sig, window, embedded);
        }
    }
    if (!ok)
        throw no_match("apply " + what + ": the window does not match at " +
                       show_position(pos));
    Diagram out;
    out.src = d.src;
    out.levels.assign(d.levels.begin(), d.levels.begin() + pos.level_start);
    auto mid = embed_levels(rep.levels, pos);
    out.levels.insert(out.levels.end(), mid.begin(), mid.end());
    out.levels.insert(out.levels.end(),
                      d.levels.begin() + pos.level_start + pos.level_count,
                      d.levels.end());
    if (auto faults = validate(sig, out); !faults.empty())
        throw type_error("apply " + what + ": rewritten diagram is ill-typed: " +
                         faults.front());
    return out;
}

std::optional<RewriteRule> cancel_rule(const Signature& sig, const TwoCellRef& cell,
                                       char variant) {
    if (variant != 'a' && variant != 'b') return std::nullopt;
    TwoCellRef fwd = cell;
    fwd.inverse = false;
    if (fwd.kind == TwoCellRef::Kind::generator) {
        const TwoCellDecl* decl = sig.find_two_cell(fwd.name);
        if (!decl || !decl->invertible) return std::nullopt;
    } else {
        if (!sig.find_one_cell(fwd.cross.lcell) || !sig.find_one_cell(fwd.cross.rcell))
            return std::nullopt;
        for (const auto& obj : fwd.cross.mid)
            if (!sig.has_object(obj)) return std::nullopt;
    }
    TwoCellRef inv = fwd;
    inv.inverse = true;
    Path base = variant == 'a' ? cell_src(sig, fwd) : cell_tgt(sig, fwd);
    std::vector<Level> pair =
        variant == 'a' ? std::vector<Level>{Level{0, kE, kE, fwd}, Level{0, kE, kE, inv}}
                       : std::vector<Level>{Level{0, kE, kE, inv}, Level{0, kE, kE, fwd}};
    std::string id = "CANCEL[" + show_cell(fwd) + "," + std::string(1, variant) + "]";
    return RewriteRule{std::move(id), "", Diagram{base, std::move(pair)},
                       Diagram{std::move(base), {}}};
}

namespace {

// "PREFIX[a,b,c]" -> {a, b, c}; commas inside parentheses are kept (they
// belong to a crossing spec's middle word).
std::optional<std::vector<std::string>> bracket_args(const std::string& id,
                                                     const std::string& prefix) {
    if (id.size() < prefix.size() + 2) return std::nullopt;
    if (id.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    if (id[prefix.size()] != '[' || id.back() != ']') return std::nullopt;
    std::string body = id.substr(prefix.size() + 1, id.size() - prefix.size() - 2);
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : body) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
            continue;
        }
        cur += c;
    }
    parts.push_back(cur);
    return parts;
}

// Inverse of show_cell: "mu", "mu!", "cross(m;A,B;i)", "cross(m;;i)!".
std::optional<TwoCellRef> parse_cell_spec(const std::string& spec) {
    std::string body = spec;
    bool inv = false;
    if (!body.empty() && body.back() == '!') {
        inv = true;
        body.pop_back();
    }
    if (body.empty()) return std::nullopt;
    if (body.rfind("cross(", 0) == 0 && body.back() == ')') {
        std::string in = body.substr(6, body.size() - 7);
        std::vector<std::string> parts;
        std::string cur;
        for (char c : in) {
            if (c == ';') {
                parts.push_back(cur);
                cur.clear();
                continue;
            }
            cur += c;
        }
        parts.push_back(cur);
        if (parts.size() != 3 || parts[0].empty() || parts[2].empty())
            return std::nullopt;
        Word mid;
        std::string letter;
        for (char c : parts[1]) {
            if (c == ',') {
                mid.push_back(letter);
                letter.clear();
                continue;
            }
            letter += c;
        }
        if (!letter.empty()) mid.push_back(letter);
        return TwoCellRef::crossing(parts[0], std::move(mid), parts[2], inv);
    }
    return TwoCellRef::gen(body, inv);
}

} // namespace

std::optional<RewriteRule> resolve_rule(const Theory& th, const std::string& id) {
    if (const RewriteRule* r = th.find_rule(id)) return *r;
    try {
        if (auto args = bracket_args(id, "INT.inv"); args && args->size() == 3) {
            for (auto& r : interchanger_inverse_rules(th.sig, (*args)[0], (*args)[1]))
                if (r.id == id) return std::move(r);
            return std::nullopt;
        }
        if (auto args = bracket_args(id, "NAT.slide");
            args && args->size() == 3 && (*args)[2].size() == 1) {
            RewriteRule r =
                interchanger_slide_rule(th.sig, (*args)[0], (*args)[1], (*args)[2][0]);
            if (r.id == id) return r;
            return std::nullopt;
        }
        if (auto args = bracket_args(id, "CANCEL");
            args && args->size() == 2 && (*args)[1].size() == 1) {
            auto cell = parse_cell_spec((*args)[0]);
            if (!cell || cell->inverse) return std::nullopt; // ids use the forward cell
            return cancel_rule(th.sig, *cell, (*args)[1][0]);
        }
    } catch (const error&) {
        return std::nullopt; // a structured id over undeclared cells
    }
    return std::nullopt;
}

} // namespace twocat
