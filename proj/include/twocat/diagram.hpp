// Core value types for string diagrams in a strict cubical monoidal
// 2-category presented by generators:
//
//   Word      — a tensor word of generating objects (empty word = unit I)
//   OneCell   — a generating 1-cell with source/target words
//   Path      — a composite 1-morphism: a base word plus an ordered list of
//               whiskered 1-cell factors, factor 0 applied first
//   TwoCellRef— a reference to a generating 2-cell (possibly inverted) or to
//               a structural interchanger ("crossing") between two 1-cells
//   Level     — one horizontal slice of a diagram: a 2-cell applied in a
//               whisker context after `pre` untouched leading factors
//   Diagram   — a source path plus an ordered list of levels, read
//               top to bottom
//   Signature — the ambient presentation: objects, 1-cells, 2-cells,
//               adjunction data
//
// All values are immutable after construction; operations are pure.
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twocat/errors.hpp"

namespace twocat {

// ------------------------------------------------------------------ words --

// A tensor word of generating-object names; the empty vector is the unit I.
using Word = std::vector<std::string>;

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);

// "I" for the empty word, otherwise letters joined by commas: "M,A".
std::string show_word(const Word& w);

// ------------------------------------------------------------------ cells --

struct OneCell {
    std::string name;
    Word src;
    Word tgt;
    bool operator==(const OneCell&) const = default;
};

// One factor of a Path: a generating 1-cell whiskered by identity words.
struct Whiskered1 {
    Word lw;
    std::string cell; // 1-cell name, resolved via the ambient Signature
    Word rw;
    bool operator==(const Whiskered1&) const = default;
    auto operator<=>(const Whiskered1&) const = default;
};

struct Path {
    Word base; // the source word; equals lw+src(cell)+rw of factor 0 if any
    std::vector<Whiskered1> factors;
    bool operator==(const Path&) const = default;
};

// -------------------------------------------------------------- 2-cell ref --

// Data of an interchanger chi(left; mid; right): the crossing that slides the
// left 1-cell past the right one over an untouched middle word.
struct CrossData {
    std::string lcell;
    Word mid;
    std::string rcell;
    bool operator==(const CrossData&) const = default;
    auto operator<=>(const CrossData&) const = default;
};

struct TwoCellRef {
    enum class Kind { generator, interchanger };
    Kind kind = Kind::generator;
    std::string name; // generator name when kind == generator
    CrossData cross;  // crossing data when kind == interchanger
    bool inverse = false;

    static TwoCellRef gen(std::string n, bool inv = false);
    static TwoCellRef crossing(std::string l, Word mid, std::string r, bool inv = false);

    bool operator==(const TwoCellRef&) const = default;
};

// "mu", "mu!", "cross(n;A;m)", "cross(m;;m)!"  — `!` marks the inverse.
std::string show_cell(const TwoCellRef& c);

// ------------------------------------------------------------------ level --

struct Level {
    std::size_t pre = 0; // untouched leading factors
    Word lw;             // whisker word applied on the left of the 2-cell
    Word rw;             // whisker word applied on the right
    TwoCellRef cell;
    bool operator==(const Level&) const = default;
};

struct Diagram {
    Path src;
    std::vector<Level> levels;
    bool operator==(const Diagram&) const = default;
};

// -------------------------------------------------------------- signature --

struct TwoCellDecl {
    std::string name;
    Path src;
    Path tgt;
    bool invertible = false;
};

// Adjunction left -| right with unit : id => right∘left and
// counit : left∘right => id.
struct Adjunction {
    std::string left;
    std::string right;
    std::string unit;
    std::string counit;
};

struct Signature {
    std::vector<std::string> objects;
    std::vector<OneCell> one_cells;
    std::vector<TwoCellDecl> two_cells;
    std::vector<Adjunction> adjunctions;

    bool has_object(const std::string& name) const;
    const OneCell* find_one_cell(const std::string& name) const;
    const TwoCellDecl* find_two_cell(const std::string& name) const;
    const OneCell& one_cell(const std::string& name) const;   // throws type_error
    const TwoCellDecl& two_cell(const std::string& name) const; // throws type_error
    const Adjunction* find_adjunction_by_unit(const std::string& name) const;

    // Declaration helpers; each rejects duplicates and ill-typed boundaries.
    void add_object(const std::string& name);
    void add_one_cell(const std::string& name, Word src, Word tgt);
    void add_two_cell(const std::string& name, Path src, Path tgt, bool invertible);
    void add_adjunction(const std::string& left, const std::string& right,
                        const std::string& unit, const std::string& counit);

    // Merge another signature fragment in; identical re-declarations are
    // tolerated, conflicting ones throw type_error.
    void merge(const Signature& other);
};

// ------------------------------------------------------------- operations --

// Source/target boundaries of a 2-cell reference (inverse swaps them).
// Interchanger boundaries are computed structurally from the crossing data.
const Path& two_cell_decl_src(const Signature& sig, const TwoCellRef& c); // generators only
Path cell_src(const Signature& sig, const TwoCellRef& c);
Path cell_tgt(const Signature& sig, const TwoCellRef& c);

// The object word of a path at factor gap `k` (before factor k);
// k = factors.size() gives the target word.
Word word_at(const Signature& sig, const Path& p, std::size_t k);
Word tgt_word(const Signature& sig, const Path& p);

// Path validity: base consistent with factor 0, factors chained.
void check_path(const Signature& sig, const Path& p); // throws type_error

// Sequential composition of paths: p first, then q (tgt(p) must equal q.base).
Path path_then(const Signature& sig, const Path& p, const Path& q);

// Whisker a path by identity words on both sides.
Path whisker_path(const Word& wl, const Path& p, const Word& wr);

// Identity path on a word.
Path id_path(Word w);

// Apply one level to a path; throws type_error when the level does not fit.
Path apply_level(const Signature& sig, const Path& p, const Level& lv);

// Number of factors the level consumes/produces.
std::size_t level_src_width(const Signature& sig, const Level& lv);
std::size_t level_tgt_width(const Signature& sig, const Level& lv);

// ---- diagram-level operations ----

Diagram identity_diagram(const Signature& sig, const Path& p);

// (src, tgt); computes the target by folding levels. Throws on ill-typed d.
std::pair<Path, Path> boundary(const Signature& sig, const Diagram& d);
Path tgt(const Signature& sig, const Diagram& d);

// All typing faults, empty when valid; never throws.
std::vector<std::string> validate(const Signature& sig, const Diagram& d);

// Vertical composition: levels of d1 then levels of d2; tgt(d1) must equal
// src(d2) syntactically. Throws boundary_mismatch otherwise.
Diagram vcompose(const Signature& sig, const Diagram& d1, const Diagram& d2);

// Whisker the whole diagram by identity object words.
Diagram whisker_object(const Word& wl, const Diagram& d, const Word& wr);

// Extend the source path before (after) the diagram's own factors.
Diagram precompose(const Signature& sig, const Diagram& d, const Path& p);
Diagram postcompose(const Signature& sig, const Diagram& d, const Path& p);

// Canonical one-line forms used by serialization, hashing, and diagnostics.
std::string show_path(const Path& p);
std::string show_level(const Level& lv);
std::string show_diagram(const Diagram& d);

} // namespace twocat
