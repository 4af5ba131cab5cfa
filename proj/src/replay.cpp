// Proof-script replay: deterministic step-by-step rewriting with unique
// match selection and a per-step report.
#include "twocat/engine.hpp"
#include "twocat/normalize.hpp"

namespace twocat {

bool PositionFilter::admits(const Position& pos) const {
    if (level_start && *level_start != pos.level_start) return false;
    if (factor_offset && *factor_offset != pos.factor_offset) return false;
    if (lw && *lw != pos.lw) return false;
    return true;
}

bool PositionFilter::unconstrained() const {
    return !level_start && !factor_offset && !lw;
}

PositionFilter pin(const Position& pos) {
    return PositionFilter{pos.level_start, pos.factor_offset, pos.lw};
}

Position select_match(const Signature& sig, const Diagram& d, const RewriteRule& rule,
                      bool reverse, const PositionFilter& where) {
    auto all = find_matches(sig, d, rule, reverse);
    std::vector<Position> hits;
    for (const auto& pos : all)
        if (where.admits(pos)) hits.push_back(pos);
    const std::string what = rule.id + (reverse ? " (reversed)" : "");
    if (hits.empty()) {
        if (all.empty()) throw no_match(what + ": no match");
        throw no_match(what + ": no match under the position constraint (" +
                       std::to_string(all.size()) + " elsewhere)");
    }
    if (hits.size() > 1)
        throw ambiguous_match(what + ": " + std::to_string(hits.size()) +
                              " matches, e.g. " + show_position(hits[0]) + " and " +
                              show_position(hits[1]) + "; pin the position");
    return hits.front();
}

ProofReport replay(const Theory& th, const ProofScript& script) {
    ProofReport rep;
    rep.final = script.start;
    auto fail = [&](std::string msg) {
        rep.verdict = false;
        rep.failure = std::move(msg);
        return rep;
    };
    if (auto faults = validate(th.sig, script.start); !faults.empty())
        return fail("start diagram is ill-typed: " + faults.front());
    if (auto faults = validate(th.sig, script.target); !faults.empty())
        return fail("target diagram is ill-typed: " + faults.front());
    if (!(script.start.src == script.target.src) ||
        !(tgt(th.sig, script.start) == tgt(th.sig, script.target)))
        return fail("start and target do not share a boundary");

    Diagram cur = normalize(th.sig, script.start);
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        const Step& st = script.steps[i];
        StepReport sr;
        auto rule = resolve_rule(th, st.rule);
        if (!rule) {
            sr.note = "unknown rule '" + st.rule + "'";
            rep.steps.push_back(sr);
            rep.final = cur;
            return fail("step " + std::to_string(i) + ": " + sr.note);
        }
        try {
            Position pos = select_match(th.sig, cur, *rule, st.reverse, st.where);
            cur = normalize(th.sig, apply_rule(th.sig, cur, *rule, st.reverse, pos));
            sr.applied = true;
            sr.at = pos;
            rep.steps.push_back(sr);
        } catch (const error& e) {
            sr.note = e.what();
            rep.steps.push_back(sr);
            rep.final = cur;
            return fail("step " + std::to_string(i) + ": " + sr.note);
        }
    }
    rep.final = cur;
    if (!equal(th.sig, cur, script.target))
        return fail("final diagram does not equal the target");
    rep.verdict = true;
    return rep;
}

} // namespace twocat
