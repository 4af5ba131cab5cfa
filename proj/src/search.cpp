// Bounded equational search (iterative deepening with eager inverse-pair
// cleanup) and the derived certifiers built on it: snake triangles for a
// unit/counit pair, and compatibility of a candidate 2-cell with two
// module-action squares.
#include <map>
#include <utility>

#include "twocat/engine.hpp"
#include "twocat/normalize.hpp"

namespace twocat {

namespace {

const Word kE;

// Cancel adjacent inverse pairs until none is left, emitting the CANCEL
// steps taken. The input and output diagrams are in normal form.
std::pair<Diagram, std::vector<Step>> cleanup(const Theory& th, Diagram d) {
    std::vector<Step> steps;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Level& lv : d.levels) {
            TwoCellRef fwd = lv.cell;
            fwd.inverse = false;
            for (char variant : {'a', 'b'}) {
                auto rule = cancel_rule(th.sig, fwd, variant);
                if (!rule) continue;
                auto ms = find_matches(th.sig, d, *rule, false);
                if (ms.empty()) continue;
                steps.push_back(Step{rule->id, false, pin(ms.front())});
                d = normalize(th.sig, apply_rule(th.sig, d, *rule, false, ms.front()));
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return {std::move(d), std::move(steps)};
}

struct SearchContext {
    const Theory& th;
    std::vector<RewriteRule> moves;
    std::string goal_key;
    // normal-form key -> largest remaining budget it was explored with
    std::map<std::string, std::size_t> seen;
};

// Depth-first over rule moves; `cur` is normalized, cleanup-stable, and
// already known not to be the goal.
std::optional<std::vector<Step>> dfs(SearchContext& cx, const Diagram& cur,
                                     std::size_t budget) {
    if (budget == 0) return std::nullopt;
    for (const auto& rule : cx.moves) {
        for (bool reverse : {false, true}) {
            for (const Position& pos : find_matches(cx.th.sig, cur, rule, reverse)) {
                Diagram next =
                    normalize(cx.th.sig, apply_rule(cx.th.sig, cur, rule, reverse, pos));
                std::vector<Step> trail{Step{rule.id, reverse, pin(pos)}};
                if (diagram_key(cx.th.sig, next) == cx.goal_key) return trail;
                auto [clean, extra] = cleanup(cx.th, std::move(next));
                trail.insert(trail.end(), extra.begin(), extra.end());
                std::string key = diagram_key(cx.th.sig, clean);
                if (!extra.empty() && key == cx.goal_key) return trail;
                if (budget == 1) continue;
                auto it = cx.seen.find(key);
                if (it != cx.seen.end() && it->second >= budget - 1) continue;
                cx.seen[key] = budget - 1;
                if (auto rest = dfs(cx, clean, budget - 1)) {
                    trail.insert(trail.end(), rest->begin(), rest->end());
                    return trail;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<Step>> bounded_search(const Theory& th, const Diagram& from,
                                                const Diagram& to,
                                                const std::vector<std::string>& rule_ids,
                                                std::size_t max_depth) {
    for (const Diagram* d : {&from, &to})
        if (auto faults = validate(th.sig, *d); !faults.empty())
            throw type_error("bounded_search: ill-typed diagram: " + faults.front());
    if (!(from.src == to.src) || !(tgt(th.sig, from) == tgt(th.sig, to)))
        throw type_error("bounded_search: the diagrams do not share a boundary");
    SearchContext cx{th, {}, diagram_key(th.sig, to), {}};
    if (rule_ids.empty()) {
        cx.moves = th.rules;
    } else {
        for (const auto& id : rule_ids) {
            auto r = resolve_rule(th, id);
            if (!r) throw type_error("bounded_search: unknown rule '" + id + "'");
            cx.moves.push_back(std::move(*r));
        }
    }
    Diagram start = normalize(th.sig, from);
    if (diagram_key(th.sig, start) == cx.goal_key) return std::vector<Step>{};
    auto [clean, prologue] = cleanup(th, std::move(start));
    if (!prologue.empty() && diagram_key(th.sig, clean) == cx.goal_key) return prologue;
    const std::string start_key = diagram_key(th.sig, clean);
    for (std::size_t depth = 1; depth <= max_depth; ++depth) {
        cx.seen.clear();
        cx.seen[start_key] = depth;
        if (auto rest = dfs(cx, clean, depth)) {
            prologue.insert(prologue.end(), rest->begin(), rest->end());
            return prologue;
        }
    }
    return std::nullopt;
}

bool certify_snakes(const Theory& th, const Diagram& unit, const Diagram& counit,
                    const std::vector<std::string>& rule_ids, std::size_t depth) {
    for (const Diagram* d : {&unit, &counit})
        if (auto faults = validate(th.sig, *d); !faults.empty())
            throw type_error("certify_snakes: ill-typed diagram: " + faults.front());
    if (!unit.src.factors.empty())
        throw type_error("certify_snakes: the unit must start at an identity path");
    if (!tgt(th.sig, counit).factors.empty())
        throw type_error("certify_snakes: the counit must end at an identity path");
    const Path P = tgt(th.sig, unit); // F then G
    const Path& Q = counit.src;       // G then F
    const std::size_t t = P.factors.size();
    auto shifted = [](std::vector<Level> ls, std::size_t by) {
        for (auto& lv : ls) lv.pre += by;
        return ls;
    };
    bool any_split = false;
    for (std::size_t k = 0; Q.factors.size() == t && k <= t; ++k) {
        std::vector<Whiskered1> rotated(P.factors.begin() + k, P.factors.end());
        rotated.insert(rotated.end(), P.factors.begin(), P.factors.begin() + k);
        if (Q.factors != rotated) continue;
        if (Q.base != word_at(th.sig, P, k)) continue;
        Path path_f{P.base, {P.factors.begin(), P.factors.begin() + k}};
        Path path_g{word_at(th.sig, P, k), {P.factors.begin() + k, P.factors.end()}};
        // triangle on F: insert F∘G after nothing, then cancel G∘F behind F
        Diagram tri_f{path_f, unit.levels};
        auto cf = shifted(counit.levels, k);
        tri_f.levels.insert(tri_f.levels.end(), cf.begin(), cf.end());
        // triangle on G: insert F∘G behind G, then cancel the leading G∘F
        Diagram tri_g{path_g, shifted(unit.levels, t - k)};
        tri_g.levels.insert(tri_g.levels.end(), counit.levels.begin(),
                            counit.levels.end());
        if (!validate(th.sig, tri_f).empty() || !validate(th.sig, tri_g).empty())
            continue;
        any_split = true;
        if (bounded_search(th, tri_f, identity_diagram(th.sig, path_f), rule_ids,
                           depth) &&
            bounded_search(th, tri_g, identity_diagram(th.sig, path_g), rule_ids, depth))
            return true;
    }
    if (!any_split)
        throw type_error(
            "certify_snakes: the counit source is not a rotation of the unit target");
    return false;
}

bool check_module_2morphism(const Theory& th, const Diagram& candidate,
                            const Diagram& psi_src, const Diagram& psi_tgt,
                            const std::vector<std::string>& rule_ids,
                            std::size_t depth) {
    for (const Diagram* d : {&candidate, &psi_src, &psi_tgt})
        if (auto faults = validate(th.sig, *d); !faults.empty())
            throw type_error("check_module_2morphism: ill-typed diagram: " +
                             faults.front());
    const Path& F = candidate.src;
    const Path G = tgt(th.sig, candidate);

    // Read the frame of one action square off its boundary: the algebra
    // whisker word and the two plain action factors around the map.
    struct Frame {
        Word alg;
        Whiskered1 act_after;  // action consumed after the whiskered map
        Whiskered1 act_before; // action produced before the bare map
    };
    auto read_frame = [&](const Diagram& sq, const Path& side, const char* which) {
        auto bad = [&](const std::string& why) {
            return type_error(std::string("check_module_2morphism: ") + which +
                              " action square frame mismatch: " + why);
        };
        const Path& S = sq.src;
        if (S.base.size() < side.base.size() ||
            !std::equal(side.base.begin(), side.base.end(), S.base.begin()))
            throw bad("its base word does not extend the map's");
        Word alg(S.base.begin() + side.base.size(), S.base.end());
        if (S.factors.size() != side.factors.size() + 1)
            throw bad("expected the whiskered map followed by one action factor");
        Path whiskered = whisker_path(kE, side, alg);
        for (std::size_t j = 0; j < side.factors.size(); ++j)
            if (!(S.factors[j] == whiskered.factors[j]))
                throw bad("factor " + std::to_string(j) +
                          " is not the map whiskered by the algebra word");
        const Whiskered1& after = S.factors.back();
        if (!after.lw.empty() || !after.rw.empty())
            throw bad("the consumed action factor must be unwhiskered");
        Path T = tgt(th.sig, sq);
        if (T.factors.size() != side.factors.size() + 1)
            throw bad("its target must be one action factor then the map");
        const Whiskered1& before = T.factors.front();
        if (!before.lw.empty() || !before.rw.empty())
            throw bad("the produced action factor must be unwhiskered");
        for (std::size_t j = 0; j < side.factors.size(); ++j)
            if (!(T.factors[j + 1] == side.factors[j]))
                throw bad("its target does not end with the bare map");
        return Frame{std::move(alg), after, before};
    };
    Frame fs = read_frame(psi_src, F, "source");
    Frame ft = read_frame(psi_tgt, G, "target");
    if (fs.alg != ft.alg || !(fs.act_after == ft.act_after) ||
        !(fs.act_before == ft.act_before))
        throw type_error(
            "check_module_2morphism: the two action squares carry different data");

    // act-then-candidate must rewrite into candidate-then-act:
    //   (candidate # alg) . act   ==>   via psi_tgt
    //   psi_src               ==>   act' then candidate
    Diagram whiskered_cand = whisker_object(kE, candidate, fs.alg);
    Path act_after_path{tgt_word(th.sig, whiskered_cand.src), {fs.act_after}};
    Diagram lhs = vcompose(
        th.sig, postcompose(th.sig, whiskered_cand, act_after_path), psi_tgt);
    Path act_before_path{psi_src.src.base, {fs.act_before}};
    Diagram rhs =
        vcompose(th.sig, psi_src, precompose(th.sig, candidate, act_before_path));
    return bounded_search(th, lhs, rhs, rule_ids, depth).has_value();
}

} // namespace twocat
