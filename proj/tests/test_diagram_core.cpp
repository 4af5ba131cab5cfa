#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "twocat/diagram.hpp"
#include "twocat/normalize.hpp"

using namespace twocat;
using namespace twocat::testutil;

namespace {
const Signature& sig() {
    static Signature s = toy_signature();
    return s;
}
Path wire_a() { return Path{{"A"}, {Whiskered1{{}, "a", {}}}}; }
Path two_a() {
    return Path{{"A"}, {Whiskered1{{}, "a", {}}, Whiskered1{{}, "a", {}}}};
}
} // namespace

TEST_CASE("identity diagram has zero levels and equal boundaries") {
    Diagram d = identity_diagram(sig(), id_path({"A"}));
    CHECK(d.levels.empty());
    auto [s, t] = boundary(sig(), d);
    CHECK(s == t);

    Diagram d2 = identity_diagram(sig(), two_a());
    auto [s2, t2] = boundary(sig(), d2);
    CHECK(s2 == two_a());
    CHECK(t2 == two_a());
}

TEST_CASE("identity diagram rejects broken factor chaining") {
    Path broken{{"A"}, {Whiskered1{{}, "a", {"A"}}}}; // base A but factor wants AA
    CHECK_THROWS_AS(identity_diagram(sig(), broken), type_error);
}

TEST_CASE("vcompose concatenates levels and checks boundaries") {
    Diagram ida = identity_diagram(sig(), wire_a());
    CHECK(vcompose(sig(), ida, ida) == ida);

    Diagram contract{two_a(), {Level{0, {}, {}, TwoCellRef::gen("s")}}};
    Diagram relabel{wire_a(), {Level{0, {}, {}, TwoCellRef::gen("t")}}};
    Diagram both = vcompose(sig(), contract, relabel);
    CHECK(both.levels.size() == 2);
    auto [bs, bt] = boundary(sig(), both);
    CHECK(bs == two_a());
    CHECK(bt == Path{{"A"}, {Whiskered1{{}, "b", {}}}});

    CHECK_THROWS_AS(vcompose(sig(), relabel, relabel), boundary_mismatch);
}

TEST_CASE("vcompose is associative with identity units") {
    Diagram contract{two_a(), {Level{0, {}, {}, TwoCellRef::gen("s")}}};
    Diagram relabel{wire_a(), {Level{0, {}, {}, TwoCellRef::gen("t")}}};
    Diagram idl = identity_diagram(sig(), two_a());
    Diagram idr = identity_diagram(sig(), Path{{"A"}, {Whiskered1{{}, "b", {}}}});

    CHECK(vcompose(sig(), idl, contract) == contract);
    CHECK(vcompose(sig(), relabel, idr) == relabel);

    Diagram back{Path{{"A"}, {Whiskered1{{}, "b", {}}}},
                 {Level{0, {}, {}, TwoCellRef::gen("t", true)}}};
    Diagram ab_c = vcompose(sig(), vcompose(sig(), contract, relabel), back);
    Diagram a_bc = vcompose(sig(), contract, vcompose(sig(), relabel, back));
    CHECK(ab_c == a_bc);
}

TEST_CASE("whiskering by the empty word is the identity operation") {
    Diagram d{two_a(), {Level{0, {}, {}, TwoCellRef::gen("s")}}};
    CHECK(whisker_object({}, d, {}) == d);
}

TEST_CASE("whiskering a zero-level diagram extends the word") {
    Diagram d = identity_diagram(sig(), id_path({"A"}));
    Diagram w = whisker_object({"A"}, d, {});
    CHECK(w.levels.empty());
    CHECK(w.src == id_path({"A", "A"}));
}

TEST_CASE("whisker commutes with boundary on random diagrams") {
    std::mt19937_64 rng(20240901);
    for (int i = 0; i < 20; ++i) {
        Diagram d = random_toy_diagram(sig(), rng, 6);
        Diagram w = whisker_object({"A"}, d, {"A"});
        CHECK(validate(sig(), w).empty());
        auto [ds, dt] = boundary(sig(), d);
        auto [ws, wt] = boundary(sig(), w);
        CHECK(ws == whisker_path({"A"}, ds, {"A"}));
        CHECK(wt == whisker_path({"A"}, dt, {"A"}));
    }
}

TEST_CASE("whisker distributes over vcompose") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20; ++i) {
        Diagram d1 = random_toy_diagram(sig(), rng, 4);
        Diagram d2{tgt(sig(), d1), {}};
        // extend d2 with a couple of random levels
        Path cur = d2.src;
        for (int j = 0; j < 2; ++j) {
            auto moves = enumerate_levels(sig(), cur, toy_menu());
            if (moves.empty()) break;
            Level lv = moves[rng() % moves.size()];
            cur = apply_level(sig(), cur, lv);
            d2.levels.push_back(lv);
        }
        Diagram lhs = whisker_object({"A"}, vcompose(sig(), d1, d2), {});
        Diagram rhs = vcompose(sig(), whisker_object({"A"}, d1, {}),
                               whisker_object({"A"}, d2, {}));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("precompose shifts level indices; postcompose leaves them") {
    Diagram relabel{wire_a(), {Level{0, {}, {}, TwoCellRef::gen("t")}}};
    Diagram same = precompose(sig(), relabel, id_path({"A"}));
    CHECK(same == relabel);

    Path pre{{"A"}, {Whiskered1{{}, "a", {}}}};
    Diagram shifted = precompose(sig(), relabel, pre);
    CHECK(shifted.levels[0].pre == 1);
    CHECK(validate(sig(), shifted).empty());

    Diagram post = postcompose(sig(), relabel, Path{{"A"}, {Whiskered1{{}, "b", {}}}});
    CHECK(post.levels[0].pre == 0);
    CHECK(validate(sig(), post).empty());

    CHECK_THROWS_AS(precompose(sig(), relabel, id_path({"A", "A"})),
                    boundary_mismatch);
}

TEST_CASE("validate reports the offending level index") {
    Diagram d{two_a(),
              {Level{0, {}, {}, TwoCellRef::gen("s")},
               Level{1, {}, {}, TwoCellRef::gen("t")}}}; // level 1 out of range
    auto faults = validate(sig(), d);
    REQUIRE(faults.size() == 1);
    CHECK(faults[0].find("level 1") != std::string::npos);
}

TEST_CASE("constructor outputs validate cleanly") {
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 50; ++i) {
        Diagram d = random_toy_diagram(sig(), rng, 8);
        CHECK(validate(sig(), d).empty());
    }
}

TEST_CASE("boundary of a contraction level is its declared frame") {
    Diagram d{two_a(), {Level{0, {}, {}, TwoCellRef::gen("s")}}};
    auto [s, t] = boundary(sig(), d);
    CHECK(s == two_a());
    CHECK(t == wire_a());
}

TEST_CASE("normalize is idempotent and boundary-preserving on 100 random diagrams") {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 100; ++i) {
        Diagram d = random_toy_diagram(sig(), rng, 10);
        Diagram n1 = normalize(sig(), d);
        Diagram n2 = normalize(sig(), n1);
        CHECK(n1 == n2);
        auto [ds, dt] = boundary(sig(), d);
        auto [ns, nt] = boundary(sig(), n1);
        CHECK(ds == ns);
        CHECK(dt == nt);
    }
}

TEST_CASE("normalize of zero-level diagram is itself") {
    Diagram d = identity_diagram(sig(), two_a());
    CHECK(normalize(sig(), d) == d);
}

TEST_CASE("disjoint levels in either order share one normal form") {
    // two relabels on the two parallel wires of a□a
    Path par{{"A", "A"},
             {Whiskered1{{}, "a", {"A"}}, Whiskered1{{"A"}, "a", {}}}};
    Level left{0, {}, {"A"}, TwoCellRef::gen("t")};
    Level right{1, {"A"}, {}, TwoCellRef::gen("t")};
    Diagram lr{par, {left, right}};
    Diagram rl{par, {right, left}};
    CHECK(validate(sig(), lr).empty());
    CHECK(validate(sig(), rl).empty());
    CHECK(normalize(sig(), lr) == normalize(sig(), rl));
    CHECK(equal(sig(), lr, rl));
}

TEST_CASE("equal is reflexive and boundary-sensitive") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 30; ++i) {
        Diagram d = random_toy_diagram(sig(), rng, 6);
        CHECK(equal(sig(), d, d));
    }
    Diagram d1 = identity_diagram(sig(), wire_a());
    Diagram d2 = identity_diagram(sig(), two_a());
    CHECK_FALSE(equal(sig(), d1, d2));
}

// The exhaustive oracle: enumerate every diagram of <= 4 levels reachable
// from a fixed set of toy source paths, compute each diagram's breadth-first
// interchange class, and demand that (a) all members of a class share one
// normal form, so `equal` is true across the class, and (b) diagrams in
// different classes with the same boundary never compare equal.
TEST_CASE("equal agrees with BFS interchange reachability, exhaustively") {
    std::vector<Path> sources = {
        Path{{"A", "A"}, {Whiskered1{{}, "a", {"A"}}}},
        Path{{"A", "A"}, {}},
    };
    std::vector<Diagram> all;
    std::set<std::string> seen;
    for (const auto& src : sources) {
        std::deque<Diagram> frontier;
        Diagram d0{src, {}};
        frontier.push_back(d0);
        seen.insert(show_diagram(d0));
        while (!frontier.empty()) {
            Diagram d = frontier.front();
            frontier.pop_front();
            all.push_back(d);
            if (d.levels.size() == 4) continue;
            Path cur = tgt(sig(), d);
            for (const auto& lv : enumerate_levels(sig(), cur, toy_menu())) {
                Diagram nxt = d;
                nxt.levels.push_back(lv);
                if (seen.insert(show_diagram(nxt)).second) frontier.push_back(nxt);
            }
        }
    }
    REQUIRE(all.size() > 500); // sanity: the universe is not degenerate

    // map canonical key -> BFS class representative key set
    std::size_t classes_checked = 0;
    std::map<std::string, std::string> class_of; // member key -> class id (BFS root key)
    for (const auto& d : all) {
        std::string self = show_diagram(d);
        if (class_of.count(self)) continue; // class already certified
        auto members = interchange_class(sig(), d);
        Diagram nf = normalize(sig(), d);
        REQUIRE(validate(sig(), nf).empty()); // canonical form stays well-typed
        for (const auto& ls : members) {
            Diagram m{d.src, ls};
            CHECK(normalize(sig(), m) == nf);
            CHECK(equal(sig(), m, d));
            class_of[show_diagram(m)] = self;
        }
        ++classes_checked;
    }
    CHECK(classes_checked > 100);

    // distinct classes must never compare equal (same-boundary pairs sampled)
    std::mt19937_64 rng(7);
    int negative_checks = 0;
    for (int trial = 0; trial < 4000 && negative_checks < 300; ++trial) {
        const Diagram& x = all[rng() % all.size()];
        const Diagram& y = all[rng() % all.size()];
        if (class_of[show_diagram(x)] == class_of[show_diagram(y)]) continue;
        CHECK_FALSE(equal(sig(), x, y));
        ++negative_checks;
    }
    CHECK(negative_checks > 0);
}

TEST_CASE("interchanger reference boundaries are the crossed composites") {
    // cross(a;;b): "b then a" => "a then b" over base AA
    TwoCellRef chi = TwoCellRef::crossing("a", {}, "b");
    Path before = cell_src(sig(), chi);
    Path after = cell_tgt(sig(), chi);
    CHECK(before.base == Word{"A", "A"});
    REQUIRE(before.factors.size() == 2);
    CHECK(before.factors[0] == Whiskered1{{"A"}, "b", {}});
    CHECK(before.factors[1] == Whiskered1{{}, "a", {"A"}});
    REQUIRE(after.factors.size() == 2);
    CHECK(after.factors[0] == Whiskered1{{}, "a", {"A"}});
    CHECK(after.factors[1] == Whiskered1{{"A"}, "b", {}});
    // same composite boundary on both sides
    CHECK(word_at(sig(), before, 2) == word_at(sig(), after, 2));

    TwoCellRef chi_inv = TwoCellRef::crossing("a", {}, "b", true);
    CHECK(cell_src(sig(), chi_inv) == after);
    CHECK(cell_tgt(sig(), chi_inv) == before);
}

TEST_CASE("crossing then inverse crossing normalizes away only via rules, not interchange") {
    // the two levels overlap, so strict interchange must NOT merge or swap them
    TwoCellRef chi = TwoCellRef::crossing("a", {}, "b");
    Path before = cell_src(sig(), chi);
    Diagram d{before,
              {Level{0, {}, {}, chi}, Level{0, {}, {}, TwoCellRef::crossing("a", {}, "b", true)}}};
    CHECK(validate(sig(), d).empty());
    Diagram n = normalize(sig(), d);
    CHECK(n.levels.size() == 2); // cancellation is the INT.inv rule's job
    auto [s, t] = boundary(sig(), d);
    CHECK(s == t);
}
