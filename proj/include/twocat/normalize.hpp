// Interchange normal form and decidable equality.
//
// Two levels acting on disjoint factor ranges commute strictly; `normalize`
// sorts each diagram's level list into the canonical representative of its
// interchange class by lex-improving adjacent swaps, and `equal` compares
// normal forms syntactically.
#pragma once

#include <optional>
#include <utility>

#include "twocat/diagram.hpp"

namespace twocat {

// If the adjacent pair (a, then b) commutes strictly (disjoint factor
// windows), return the swapped pair (b', then a') with pre-counts adjusted;
// otherwise nullopt.
std::optional<std::pair<Level, Level>> try_swap_adjacent(const Signature& sig,
                                                         const Level& a,
                                                         const Level& b);

// True when lhs precedes rhs in the canonical level order (pre first,
// then cell content).
bool level_less(const Level& lhs, const Level& rhs);

// Canonical representative: repeatedly perform adjacent swaps that make the
// level list lexicographically smaller, to a fixed point. Idempotent and
// boundary-preserving.
Diagram normalize(const Signature& sig, const Diagram& d);

// Decidable equality modulo strict interchange.
bool equal(const Signature& sig, const Diagram& d1, const Diagram& d2);

// Stable one-line key of the normal form, for hashing/deduplication.
std::string diagram_key(const Signature& sig, const Diagram& d);

} // namespace twocat
