#include "twocat/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace twocat {

// ------------------------------------------------------------------ words --

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word concat(const Word& a, const Word& b, const Word& c) {
    return concat(concat(a, b), c);
}

std::string show_word(const Word& w) {
    if (w.empty()) return "I";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += w[i];
    }
    return s;
}

// ------------------------------------------------------------- 2-cell ref --

TwoCellRef TwoCellRef::gen(std::string n, bool inv) {
    TwoCellRef r;
    r.kind = Kind::generator;
    r.name = std::move(n);
    r.inverse = inv;
    return r;
}

TwoCellRef TwoCellRef::crossing(std::string l, Word mid, std::string r_, bool inv) {
    TwoCellRef r;
    r.kind = Kind::interchanger;
    r.cross = CrossData{std::move(l), std::move(mid), std::move(r_)};
    r.inverse = inv;
    return r;
}

std::string show_cell(const TwoCellRef& c) {
    std::string s;
    if (c.kind == TwoCellRef::Kind::generator) {
        s = c.name;
    } else {
        s = "cross(" + c.cross.lcell + ";";
        for (std::size_t i = 0; i < c.cross.mid.size(); ++i) {
            if (i) s += ',';
            s += c.cross.mid[i];
        }
        s += ";" + c.cross.rcell + ")";
    }
    if (c.inverse) s += '!';
    return s;
}

// -------------------------------------------------------------- signature --

bool Signature::has_object(const std::string& name) const {
    return std::find(objects.begin(), objects.end(), name) != objects.end();
}

const OneCell* Signature::find_one_cell(const std::string& name) const {
    for (const auto& c : one_cells)
        if (c.name == name) return &c;
    return nullptr;
}

const TwoCellDecl* Signature::find_two_cell(const std::string& name) const {
    for (const auto& c : two_cells)
        if (c.name == name) return &c;
    return nullptr;
}

const OneCell& Signature::one_cell(const std::string& name) const {
    if (const OneCell* c = find_one_cell(name)) return *c;
    throw type_error("unknown 1-cell: " + name);
}

const TwoCellDecl& Signature::two_cell(const std::string& name) const {
    if (const TwoCellDecl* c = find_two_cell(name)) return *c;
    throw type_error("unknown 2-cell: " + name);
}

const Adjunction* Signature::find_adjunction_by_unit(const std::string& name) const {
    for (const auto& a : adjunctions)
        if (a.unit == name) return &a;
    return nullptr;
}

void Signature::add_object(const std::string& name) {
    if (name.empty() || name == "I") throw type_error("invalid object name: '" + name + "'");
    if (!has_object(name)) objects.push_back(name);
}

static void check_word_objects(const Signature& sig, const Word& w, const std::string& where) {
    for (const auto& letter : w)
        if (!sig.has_object(letter))
            throw type_error("undeclared object '" + letter + "' in " + where);
}

void Signature::add_one_cell(const std::string& name, Word src, Word tgt) {
    check_word_objects(*this, src, "1-cell " + name);
    check_word_objects(*this, tgt, "1-cell " + name);
    if (const OneCell* c = find_one_cell(name)) {
        if (c->src != src || c->tgt != tgt)
            throw type_error("conflicting redeclaration of 1-cell " + name);
        return;
    }
    if (find_two_cell(name)) throw type_error("name clash with 2-cell: " + name);
    one_cells.push_back(OneCell{name, std::move(src), std::move(tgt)});
}

void Signature::add_two_cell(const std::string& name, Path src, Path tgt, bool invertible) {
    check_path(*this, src);
    check_path(*this, tgt);
    if (src.base != tgt.base || tgt_word(*this, src) != tgt_word(*this, tgt))
        throw type_error("2-cell " + name + " boundaries are not parallel: " +
                         show_path(src) + " vs " + show_path(tgt));
    if (const TwoCellDecl* c = find_two_cell(name)) {
        if (!(c->src == src) || !(c->tgt == tgt) || c->invertible != invertible)
            throw type_error("conflicting redeclaration of 2-cell " + name);
        return;
    }
    if (find_one_cell(name)) throw type_error("name clash with 1-cell: " + name);
    two_cells.push_back(TwoCellDecl{name, std::move(src), std::move(tgt), invertible});
}

void Signature::add_adjunction(const std::string& left, const std::string& right,
                               const std::string& unit, const std::string& counit) {
    const OneCell& l = one_cell(left);
    const OneCell& r = one_cell(right);
    if (l.src != r.tgt || l.tgt != r.src)
        throw type_error("adjunction " + left + " -| " + right + ": boundaries do not oppose");
    // unit : id_{src(l)} => right∘left, counit : left∘right => id_{tgt(l)}
    Path unit_src = id_path(l.src);
    Path unit_tgt{l.src, {Whiskered1{{}, left, {}}, Whiskered1{{}, right, {}}}};
    Path counit_src{l.tgt, {Whiskered1{{}, right, {}}, Whiskered1{{}, left, {}}}};
    Path counit_tgt = id_path(l.tgt);
    add_two_cell(unit, unit_src, unit_tgt, false);
    add_two_cell(counit, counit_src, counit_tgt, false);
    for (const auto& a : adjunctions)
        if (a.left == left && a.right == right && a.unit == unit && a.counit == counit)
            return;
    adjunctions.push_back(Adjunction{left, right, unit, counit});
}

void Signature::merge(const Signature& other) {
    for (const auto& o : other.objects) add_object(o);
    for (const auto& c : other.one_cells) add_one_cell(c.name, c.src, c.tgt);
    for (const auto& c : other.two_cells) add_two_cell(c.name, c.src, c.tgt, c.invertible);
    for (const auto& a : other.adjunctions) {
        bool present = false;
        for (const auto& b : adjunctions)
            if (a.left == b.left && a.right == b.right && a.unit == b.unit &&
                a.counit == b.counit)
                present = true;
        if (!present) adjunctions.push_back(a);
    }
}

// ------------------------------------------------------------- boundaries --

Path cell_src(const Signature& sig, const TwoCellRef& c) {
    if (c.kind == TwoCellRef::Kind::generator) {
        const TwoCellDecl& d = sig.two_cell(c.name);
        if (c.inverse && !d.invertible)
            throw type_error("2-cell " + c.name + " is not invertible");
        return c.inverse ? d.tgt : d.src;
    }
    // Crossing chi(x; mid; y): forward rewrites the composite "y, then x"
    // into "x, then y" (the left cell slides down past the right one).
    const OneCell& x = sig.one_cell(c.cross.lcell);
    const OneCell& y = sig.one_cell(c.cross.rcell);
    const Word& mid = c.cross.mid;
    Word base = concat(x.src, mid, y.src);
    Path before{base,
                {Whiskered1{concat(x.src, mid), y.name, {}},
                 Whiskered1{{}, x.name, concat(mid, y.tgt)}}};
    Path after{base,
               {Whiskered1{{}, x.name, concat(mid, y.src)},
                Whiskered1{concat(x.tgt, mid), y.name, {}}}};
    return c.inverse ? after : before;
}

Path cell_tgt(const Signature& sig, const TwoCellRef& c) {
    TwoCellRef flip = c;
    flip.inverse = !flip.inverse;
    if (c.kind == TwoCellRef::Kind::generator) {
        const TwoCellDecl& d = sig.two_cell(c.name);
        if (c.inverse && !d.invertible)
            throw type_error("2-cell " + c.name + " is not invertible");
        return c.inverse ? d.src : d.tgt;
    }
    return cell_src(sig, flip);
}

Word word_at(const Signature& sig, const Path& p, std::size_t k) {
    if (k > p.factors.size()) throw type_error("factor gap index out of range");
    if (k == 0) return p.base;
    const Whiskered1& f = p.factors[k - 1];
    return concat(f.lw, sig.one_cell(f.cell).tgt, f.rw);
}

Word tgt_word(const Signature& sig, const Path& p) {
    return word_at(sig, p, p.factors.size());
}

void check_path(const Signature& sig, const Path& p) {
    check_word_objects(sig, p.base, "path base");
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
        const Whiskered1& f = p.factors[i];
        const OneCell& c = sig.one_cell(f.cell);
        check_word_objects(sig, f.lw, "factor whisker");
        check_word_objects(sig, f.rw, "factor whisker");
        Word in = concat(f.lw, c.src, f.rw);
        Word expect = (i == 0) ? p.base : word_at(sig, p, i);
        if (in != expect)
            throw type_error("path factor " + std::to_string(i) + " (" + f.cell +
                             ") expects word " + show_word(in) + " but the path carries " +
                             show_word(expect));
    }
}

Path path_then(const Signature& sig, const Path& p, const Path& q) {
    if (tgt_word(sig, p) != q.base)
        throw boundary_mismatch("path chaining failure: " + show_word(tgt_word(sig, p)) +
                                " vs " + show_word(q.base));
    Path r;
    r.base = p.base;
    r.factors = p.factors;
    r.factors.insert(r.factors.end(), q.factors.begin(), q.factors.end());
    return r;
}

Path whisker_path(const Word& wl, const Path& p, const Word& wr) {
    Path r;
    r.base = concat(wl, p.base, wr);
    r.factors.reserve(p.factors.size());
    for (const auto& f : p.factors)
        r.factors.push_back(Whiskered1{concat(wl, f.lw), f.cell, concat(f.rw, wr)});
    return r;
}

Path id_path(Word w) { return Path{std::move(w), {}}; }

std::size_t level_src_width(const Signature& sig, const Level& lv) {
    return cell_src(sig, lv.cell).factors.size();
}

std::size_t level_tgt_width(const Signature& sig, const Level& lv) {
    return cell_tgt(sig, lv.cell).factors.size();
}

Path apply_level(const Signature& sig, const Path& p, const Level& lv) {
    Path cs = cell_src(sig, lv.cell);
    Path ct = cell_tgt(sig, lv.cell);
    std::size_t k = cs.factors.size();
    if (lv.pre + k > p.factors.size())
        throw type_error("level window [" + std::to_string(lv.pre) + "," +
                         std::to_string(lv.pre + k) + ") exceeds path width " +
                         std::to_string(p.factors.size()));
    for (std::size_t j = 0; j < k; ++j) {
        Whiskered1 want{concat(lv.lw, cs.factors[j].lw), cs.factors[j].cell,
                        concat(cs.factors[j].rw, lv.rw)};
        if (!(p.factors[lv.pre + j] == want))
            throw type_error("level cell " + show_cell(lv.cell) + " source factor " +
                             std::to_string(j) + " does not match path factor " +
                             std::to_string(lv.pre + j));
    }
    if (k == 0) {
        Word here = word_at(sig, p, lv.pre);
        Word want = concat(lv.lw, cs.base, lv.rw);
        if (here != want)
            throw type_error("insertion level " + show_cell(lv.cell) + " expects word " +
                             show_word(want) + " at gap " + std::to_string(lv.pre) +
                             " but the path carries " + show_word(here));
    }
    Path r;
    r.base = p.base;
    r.factors.assign(p.factors.begin(), p.factors.begin() + lv.pre);
    for (const auto& f : ct.factors)
        r.factors.push_back(Whiskered1{concat(lv.lw, f.lw), f.cell, concat(f.rw, lv.rw)});
    r.factors.insert(r.factors.end(), p.factors.begin() + lv.pre + k, p.factors.end());
    return r;
}

// ---------------------------------------------------------------- diagram --

Diagram identity_diagram(const Signature& sig, const Path& p) {
    check_path(sig, p);
    return Diagram{p, {}};
}

Path tgt(const Signature& sig, const Diagram& d) {
    Path cur = d.src;
    for (const auto& lv : d.levels) cur = apply_level(sig, cur, lv);
    return cur;
}

std::pair<Path, Path> boundary(const Signature& sig, const Diagram& d) {
    check_path(sig, d.src);
    return {d.src, tgt(sig, d)};
}

std::vector<std::string> validate(const Signature& sig, const Diagram& d) {
    std::vector<std::string> faults;
    try {
        check_path(sig, d.src);
    } catch (const error& e) {
        faults.push_back(std::string("source path: ") + e.what());
        return faults;
    }
    Path cur = d.src;
    for (std::size_t i = 0; i < d.levels.size(); ++i) {
        try {
            cur = apply_level(sig, cur, d.levels[i]);
        } catch (const error& e) {
            faults.push_back("level " + std::to_string(i) + ": " + e.what());
            return faults; // later levels are untypable once the chain breaks
        }
    }
    return faults;
}

Diagram vcompose(const Signature& sig, const Diagram& d1, const Diagram& d2) {
    Path mid = tgt(sig, d1);
    if (!(mid == d2.src))
        throw boundary_mismatch("vcompose: " + show_path(mid) + " vs " + show_path(d2.src));
    Diagram r;
    r.src = d1.src;
    r.levels = d1.levels;
    r.levels.insert(r.levels.end(), d2.levels.begin(), d2.levels.end());
    return r;
}

Diagram whisker_object(const Word& wl, const Diagram& d, const Word& wr) {
    Diagram r;
    r.src = whisker_path(wl, d.src, wr);
    r.levels.reserve(d.levels.size());
    for (const auto& lv : d.levels)
        r.levels.push_back(Level{lv.pre, concat(wl, lv.lw), concat(lv.rw, wr), lv.cell});
    return r;
}

Diagram precompose(const Signature& sig, const Diagram& d, const Path& p) {
    Diagram r;
    r.src = path_then(sig, p, d.src);
    r.levels.reserve(d.levels.size());
    for (const auto& lv : d.levels)
        r.levels.push_back(Level{lv.pre + p.factors.size(), lv.lw, lv.rw, lv.cell});
    return r;
}

Diagram postcompose(const Signature& sig, const Diagram& d, const Path& p) {
    Diagram r;
    r.src = path_then(sig, d.src, p);
    r.levels = d.levels;
    return r;
}

// ---------------------------------------------------------------- display --

static std::string show_factor(const Whiskered1& f) {
    std::string s;
    bool multi = !f.lw.empty() || !f.rw.empty();
    if (multi) s += '(';
    for (const auto& o : f.lw) s += "id:" + o + " # ";
    s += f.cell;
    for (const auto& o : f.rw) s += " # id:" + o;
    if (multi) s += ')';
    return s;
}

std::string show_path(const Path& p) {
    if (p.factors.empty()) {
        if (p.base.empty()) return "id:I";
        std::string s;
        for (std::size_t i = 0; i < p.base.size(); ++i) {
            if (i) s += " # ";
            s += "id:" + p.base[i];
        }
        return s;
    }
    std::string s;
    for (std::size_t i = p.factors.size(); i-- > 0;) {
        s += show_factor(p.factors[i]);
        if (i) s += " . ";
    }
    return s;
}

std::string show_level(const Level& lv) {
    return "level pre=" + std::to_string(lv.pre) + " lw=" + show_word(lv.lw) +
           " rw=" + show_word(lv.rw) + " cell=" + show_cell(lv.cell);
}

std::string show_diagram(const Diagram& d) {
    std::string s = show_path(d.src);
    for (const auto& lv : d.levels) {
        s += '\n';
        s += show_level(lv);
    }
    return s;
}

} // namespace twocat
