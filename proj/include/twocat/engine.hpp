// Rewrite engine: sub-diagram matching, rule application, proof-script
// replay, and bounded equational search over a theory's rules.
//
// A rule side with k levels matches a window of k consecutive host levels
// when the window — read as a diagram from the host path at the window's
// start — equals the rule side embedded at a factor offset with uniform
// outer whisker words, equality taken modulo strict interchange. Matching
// is exact on the window's factor block and insensitive to the order of
// independent levels inside the window. A side with no factors embeds at a
// factor gap by splitting the gap's object word around its base.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twocat/theories.hpp"

namespace twocat {

// --------------------------------------------------------------- matching --

/// Where a rule side sits inside a host diagram: `level_count` consecutive
/// levels from `level_start`, acting on the host path's factors from
/// `factor_offset`, whiskered by the uniform outer words `lw`/`rw`.
struct Position {
    std::size_t level_start = 0;
    std::size_t level_count = 0;
    std::size_t factor_offset = 0;
    Word lw;
    Word rw;
    bool operator==(const Position&) const = default;
};

/// "L2..L4 F1 lw=A rw=I" — half-open level span, then the factor context.
std::string show_position(const Position& pos);

/// Every embedding of the rule's left side (right side when `reverse`)
/// into `d`, ordered by level_start, then factor_offset, then |lw|.
std::vector<Position> find_matches(const Signature& sig, const Diagram& d,
                                   const RewriteRule& rule, bool reverse);

/// Rewrites `d` at `pos`, replacing the matched window by the rule's other
/// side under the same embedding. Throws no_match when the window does not
/// match the pattern there; the result always validates and keeps `d`'s
/// boundary.
Diagram apply_rule(const Signature& sig, const Diagram& d, const RewriteRule& rule,
                   bool reverse, const Position& pos);

// ------------------------------------------------------- synthesized rules --

/// CANCEL[c,a]: an invertible 2-cell followed by its inverse rewrites to
/// the identity (variant 'b' composes the other way around). Synthesized
/// on demand for any invertible generator or crossing reference; nullopt
/// when `cell` is not invertible or undeclared.
std::optional<RewriteRule> cancel_rule(const Signature& sig, const TwoCellRef& cell,
                                       char variant);

/// Looks `id` up in the theory (by id or alias), then falls back to the
/// synthesized families INT.inv[x,y,a|b], NAT.slide[alpha,g,l|r] and
/// CANCEL[cell,a|b] over the theory's signature. Nullopt when unknown.
std::optional<RewriteRule> resolve_rule(const Theory& th, const std::string& id);

// ----------------------------------------------------------------- replay --

/// Partial position constraint on a proof step; an omitted field admits
/// anything. (level_start, factor_offset, lw) pins a match uniquely.
struct PositionFilter {
    std::optional<std::size_t> level_start;
    std::optional<std::size_t> factor_offset;
    std::optional<Word> lw;
    bool admits(const Position& pos) const;
    bool unconstrained() const;
};

/// The filter that pins exactly the given position.
PositionFilter pin(const Position& pos);

/// The unique match admitted by the filter. Throws no_match when none is,
/// ambiguous_match when several are.
Position select_match(const Signature& sig, const Diagram& d, const RewriteRule& rule,
                      bool reverse, const PositionFilter& where);

struct Step {
    std::string rule; ///< rule id or alias, resolved via resolve_rule
    bool reverse = false;
    PositionFilter where{};
};

/// A replayable proof: rewrite `start` into `target` by `steps`. The
/// `uses` theory names and the optional `derives` rule id are consumed by
/// the script loader, not by replay itself.
struct ProofScript {
    std::string name;
    std::vector<std::string> uses;
    Diagram start;
    std::vector<Step> steps;
    Diagram target;
    std::string derives;
};

struct StepReport {
    bool applied = false;
    Position at{};    ///< the position used, when applied
    std::string note; ///< failure reason, when not
};

struct ProofReport {
    std::vector<StepReport> steps; ///< one entry per attempted step
    Diagram final;                 ///< the diagram after the last attempted step
    bool verdict = false;
    std::string failure; ///< empty exactly when the verdict holds
};

/// Replays a script. The working diagram is kept in interchange normal
/// form, so step positions always refer to the normal form's level order.
/// Each step must select exactly one match after filtering — none fails
/// the step, several report an ambiguity. Verdict: every step applied and
/// the final diagram equals the target modulo strict interchange.
ProofReport replay(const Theory& th, const ProofScript& script);

// ----------------------------------------------------------------- search --

/// Iterative-deepening search for a step sequence rewriting `from` into
/// `to` modulo interchange. Moves are the listed rules (all theory rules
/// when the list is empty) in both directions; after every move, adjacent
/// inverse pairs are cancelled eagerly and those CANCEL steps are emitted
/// too, without counting toward the depth. Deterministic: the first
/// sequence in move order at the smallest depth wins. Returned steps
/// replay as-is. Throws type_error for unknown rule ids or when the two
/// diagrams do not even share a boundary.
std::optional<std::vector<Step>> bounded_search(const Theory& th, const Diagram& from,
                                                const Diagram& to,
                                                const std::vector<std::string>& rule_ids,
                                                std::size_t max_depth);

inline constexpr std::size_t default_search_depth = 8;

/// Certifies a unit/counit pair: unit : id => F then G, counit : G then F
/// => id, where the F/G split of the unit's target is recovered against
/// the counit's source. True when, for some compatible split, both
/// triangle composites rewrite to identity diagrams within `depth`.
bool certify_snakes(const Theory& th, const Diagram& unit, const Diagram& counit,
                    const std::vector<std::string>& rule_ids,
                    std::size_t depth = default_search_depth);

/// Checks that `candidate : F => G` is compatible with the module
/// structures carried by the two action squares
///   psi_src : (F # id:alg) . act  =>  act' . F      (and psi_tgt for G):
/// the composite that acts first and then applies the candidate must
/// rewrite into the one that applies the candidate first, within `depth`.
/// Throws type_error when the frames do not line up.
bool check_module_2morphism(const Theory& th, const Diagram& candidate,
                            const Diagram& psi_src, const Diagram& psi_tgt,
                            const std::vector<std::string>& rule_ids,
                            std::size_t depth = default_search_depth);

} // namespace twocat
