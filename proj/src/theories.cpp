#include "twocat/theories.hpp"

#include <algorithm>

namespace twocat {

namespace {

const Word kE; // empty word

std::string tagged(const std::string& id, const std::string& tag) {
    return tag.empty() ? id : id + "[" + tag + "]";
}

Level gen_at(std::size_t pre, Word lw, const std::string& name, Word rw,
             bool inv = false) {
    return Level{pre, std::move(lw), std::move(rw), TwoCellRef::gen(name, inv)};
}

Level cross_at(std::size_t pre, Word lw, const std::string& l, Word mid,
               const std::string& r, Word rw, bool inv) {
    return Level{pre, std::move(lw), std::move(rw),
                 TwoCellRef::crossing(l, std::move(mid), r, inv)};
}

} // namespace

void Theory::add_rule(RewriteRule r) {
    if (find_rule(r.id)) throw type_error("duplicate rule id: " + r.id);
    auto fl = validate(sig, r.lhs);
    if (!fl.empty())
        throw type_error("rule " + r.id + " lhs ill-typed: " + fl.front());
    auto fr = validate(sig, r.rhs);
    if (!fr.empty())
        throw type_error("rule " + r.id + " rhs ill-typed: " + fr.front());
    if (!(r.lhs.src == r.rhs.src) || !(tgt(sig, r.lhs) == tgt(sig, r.rhs)))
        throw boundary_mismatch("rule " + r.id + ": sides are not parallel");
    rules.push_back(std::move(r));
}

const RewriteRule* Theory::find_rule(const std::string& key) const {
    for (const auto& r : rules)
        if (r.id == key) return &r;
    for (const auto& r : rules)
        if (!r.alias.empty() && r.alias == key) return &r;
    return nullptr;
}

void Theory::merge(const Theory& other) {
    sig.merge(other.sig);
    for (const auto& r : other.rules) {
        if (const RewriteRule* mine = find_rule(r.id)) {
            if (!(mine->lhs == r.lhs) || !(mine->rhs == r.rhs))
                throw type_error("conflicting redeclaration of rule " + r.id);
            continue;
        }
        rules.push_back(r);
    }
}

// ------------------------------------------------------- name-bundle defaults

AlgebraNames algebra_names_b() {
    return {"B", "mB", "iB", "muB", "lambdaB", "rhoB", "B"};
}

RightModuleNames right_module_names_n() {
    return {AlgebraNames{}, "N", "nN", "nuN", "rhoN", "N"};
}

BimoduleNames::BimoduleNames() : alg_b(algebra_names_b()) {
    right = RightModuleNames{alg_b, obj, "nP", "nuP", "rhoP", obj};
    left = LeftModuleNames{alg_a, obj, "lP", "kapP", "lamP", obj};
}

BimoduleNames bimodule_names_q() {
    BimoduleNames q;
    q.obj = "Q";
    q.right = RightModuleNames{q.alg_b, q.obj, "nQ", "nuQ", "rhoQ", q.obj};
    q.left = LeftModuleNames{q.alg_a, q.obj, "lQ", "kapQ", "lamQ", q.obj};
    q.compat = "betaQ";
    q.tag = "Q";
    return q;
}

ModuleMapNames::ModuleMapNames() : tgt_mod(right_module_names_n()) {}

LeftModuleMapNames::LeftModuleMapNames()
    : tgt_mod{AlgebraNames{}, "N", "lN", "kapN", "lamN", "N"} {}

BimoduleMapNames::BimoduleMapNames() : tgt_bim(bimodule_names_q()) {}

// ------------------------------------------------------------------- algebra

Theory algebra_theory(const AlgebraNames& n) {
    const std::string &A = n.obj, &m = n.mult, &i = n.unit;
    const std::string &mu = n.assoc, &la = n.left_unitor, &rho = n.right_unitor;
    const Word wA{A}, wAA{A, A}, wAAA{A, A, A}, wAAAA{A, A, A, A};

    Theory th;
    th.name = "algebra";
    th.sig.add_object(A);
    th.sig.add_one_cell(m, wAA, wA);
    th.sig.add_one_cell(i, kE, wA);
    th.sig.add_two_cell(mu, Path{wAAA, {{kE, m, wA}, {kE, m, kE}}},
                        Path{wAAA, {{wA, m, kE}, {kE, m, kE}}}, true);
    th.sig.add_two_cell(la, Path{wA, {{kE, i, wA}, {kE, m, kE}}}, id_path(wA),
                        true);
    th.sig.add_two_cell(rho, Path{wA, {{wA, i, kE}, {kE, m, kE}}}, id_path(wA),
                        true);

    // left-nested triple product rewrites to right-nested
    Path p3l{wAAAA, {{kE, m, wAA}, {kE, m, wA}, {kE, m, kE}}};
    th.add_rule({tagged("ALG.assoc", n.tag), tagged("algebraassociativity", n.tag),
                 Diagram{p3l,
                         {gen_at(0, kE, mu, wA), gen_at(1, kE, mu, kE),
                          gen_at(0, wA, mu, kE)}},
                 Diagram{p3l,
                         {gen_at(1, kE, mu, kE), cross_at(0, kE, m, kE, m, kE, true),
                          gen_at(1, kE, mu, kE)}}});

    Path punit{wAA, {{wA, i, wA}, {kE, m, wA}, {kE, m, kE}}};
    th.add_rule({tagged("ALG.unit", n.tag), tagged("algebraunitality", n.tag),
                 Diagram{punit, {gen_at(0, kE, rho, wA)}},
                 Diagram{punit, {gen_at(1, kE, mu, kE), gen_at(0, wA, la, kE)}}});

    Path pcl{wAA, {{kE, i, wAA}, {kE, m, wA}, {kE, m, kE}}};
    th.add_rule({tagged("COH.left", n.tag), tagged("coherenceleft", n.tag),
                 Diagram{pcl,
                         {gen_at(1, kE, mu, kE), cross_at(0, kE, i, kE, m, kE, true),
                          gen_at(1, kE, la, kE)}},
                 Diagram{pcl, {gen_at(0, kE, la, wA)}}});

    Path pcm{kE, {{kE, i, kE}, {kE, i, wA}, {kE, m, kE}}};
    th.add_rule({tagged("COH.mid", n.tag), tagged("coherencemiddle", n.tag),
                 Diagram{pcm,
                         {cross_at(0, kE, i, kE, i, kE, false), gen_at(1, kE, rho, kE)}},
                 Diagram{pcm, {gen_at(1, kE, la, kE)}}});

    // self-action instance of the module coherence rule
    Path pcr{wAA, {{wAA, i, kE}, {wA, m, kE}, {kE, m, kE}}};
    th.add_rule({tagged("COH.right", n.tag), tagged("coherenceright", n.tag),
                 Diagram{pcr,
                         {gen_at(1, kE, mu, kE, true), cross_at(0, kE, m, kE, i, kE, false),
                          gen_at(1, kE, rho, kE)}},
                 Diagram{pcr, {gen_at(0, wA, rho, kE)}}});
    return th;
}

// ------------------------------------------------------------- right modules

Theory right_module_theory(const RightModuleNames& n) {
    Theory th = algebra_theory(n.alg);
    th.name = "right-module";
    const std::string &A = n.alg.obj, &m = n.alg.mult, &i = n.alg.unit;
    const std::string &la = n.alg.left_unitor;
    const std::string &M = n.obj, &act = n.act, &nu = n.act_assoc,
                      &ru = n.act_unit;
    const Word wA{A}, wAA{A, A}, wM{M}, wMA{M, A}, wMAA{M, A, A},
        wMAAA{M, A, A, A};

    th.sig.add_object(M);
    th.sig.add_one_cell(act, wMA, wM);
    th.sig.add_two_cell(nu, Path{wMAA, {{kE, act, wA}, {kE, act, kE}}},
                        Path{wMAA, {{wM, m, kE}, {kE, act, kE}}}, true);
    th.sig.add_two_cell(ru, Path{wM, {{wM, i, kE}, {kE, act, kE}}}, id_path(wM),
                        true);

    Path passoc{wMAAA, {{kE, act, wAA}, {kE, act, wA}, {kE, act, kE}}};
    th.add_rule({tagged("MOD.assoc", n.tag), tagged("moduleassociativity", n.tag),
                 Diagram{passoc,
                         {gen_at(0, kE, nu, wA), gen_at(1, kE, nu, kE),
                          gen_at(0, wM, n.alg.assoc, kE)}},
                 Diagram{passoc,
                         {gen_at(1, kE, nu, kE), cross_at(0, kE, act, kE, m, kE, true),
                          gen_at(1, kE, nu, kE)}}});

    Path punit{wMA, {{wM, i, wA}, {kE, act, wA}, {kE, act, kE}}};
    th.add_rule({tagged("MOD.unit", n.tag), tagged("moduleunitality", n.tag),
                 Diagram{punit, {gen_at(0, kE, ru, wA)}},
                 Diagram{punit, {gen_at(1, kE, nu, kE), gen_at(0, wM, la, kE)}}});
    return th;
}

// -------------------------------------------------------------- left modules

Theory left_module_theory(const LeftModuleNames& n) {
    Theory th = algebra_theory(n.alg);
    th.name = "left-module";
    const std::string &A = n.alg.obj, &m = n.alg.mult, &i = n.alg.unit;
    const std::string &rho = n.alg.right_unitor;
    const std::string &M = n.obj, &act = n.act, &kap = n.act_assoc,
                      &lu = n.act_unit;
    const Word wA{A}, wAA{A, A}, wM{M}, wAM{A, M}, wAAM{A, A, M};

    th.sig.add_object(M);
    th.sig.add_one_cell(act, wAM, wM);
    th.sig.add_two_cell(kap, Path{wAAM, {{wA, act, kE}, {kE, act, kE}}},
                        Path{wAAM, {{kE, m, wM}, {kE, act, kE}}}, true);
    th.sig.add_two_cell(lu, Path{wM, {{kE, i, wM}, {kE, act, kE}}}, id_path(wM),
                        true);

    Path passoc{Word{A, A, A, M}, {{wAA, act, kE}, {wA, act, kE}, {kE, act, kE}}};
    th.add_rule({tagged("LMOD.assoc", n.tag), tagged("leftmoduleassociativity", n.tag),
                 Diagram{passoc,
                         {gen_at(1, kE, kap, kE), cross_at(0, kE, m, kE, act, kE, false),
                          gen_at(1, kE, kap, kE)}},
                 Diagram{passoc,
                         {gen_at(0, wA, kap, kE), gen_at(1, kE, kap, kE),
                          gen_at(0, kE, n.alg.assoc, wM, true)}}});

    Path punit{wAM, {{wA, i, wM}, {wA, act, kE}, {kE, act, kE}}};
    th.add_rule({tagged("LMOD.unit", n.tag), tagged("leftmoduleunitality", n.tag),
                 Diagram{punit, {gen_at(0, wA, lu, kE)}},
                 Diagram{punit, {gen_at(1, kE, kap, kE), gen_at(0, kE, rho, wM)}}});
    return th;
}

// ----------------------------------------------------------------- bimodules

Theory bimodule_theory(const BimoduleNames& n) {
    Theory th = right_module_theory(n.right); // includes algebra B
    th.merge(left_module_theory(n.left));     // includes algebra A
    th.name = "bimodule";
    const std::string &A = n.alg_a.obj, &B = n.alg_b.obj, &P = n.obj;
    const std::string &ract = n.right.act, &nu = n.right.act_assoc;
    const std::string &lact = n.left.act, &kap = n.left.act_assoc;
    const std::string &mB = n.alg_b.mult, &m = n.alg_a.mult, &beta = n.compat;
    const Word wA{A}, wB{B}, wAPB{A, P, B};

    th.sig.add_two_cell(beta, Path{wAPB, {{kE, lact, wB}, {kE, ract, kE}}},
                        Path{wAPB, {{wA, ract, kE}, {kE, lact, kE}}}, true);

    Path pl{Word{A, A, P, B}, {{wA, lact, wB}, {kE, lact, wB}, {kE, ract, kE}}};
    th.add_rule({tagged("BIMOD.l", n.tag), tagged("leftbimoduleassociativity", n.tag),
                 Diagram{pl, {gen_at(1, kE, beta, kE), gen_at(0, wA, beta, kE)}},
                 Diagram{pl,
                         {gen_at(0, kE, kap, wB), gen_at(1, kE, beta, kE),
                          cross_at(0, kE, m, kE, ract, kE, true),
                          gen_at(1, kE, kap, kE, true)}}});

    Path pr{Word{A, P, B, B}, {{wA, ract, wB}, {wA, ract, kE}, {kE, lact, kE}}};
    th.add_rule({tagged("BIMOD.r", n.tag), tagged("rightbimoduleassociativity", n.tag),
                 Diagram{pr, {gen_at(1, kE, beta, kE, true), gen_at(0, kE, beta, wB, true)}},
                 Diagram{pr,
                         {gen_at(0, wA, nu, kE), gen_at(1, kE, beta, kE, true),
                          cross_at(0, kE, lact, kE, mB, kE, false),
                          gen_at(1, kE, nu, kE, true)}}});
    return th;
}

// --------------------------------------------------------------- module maps

Theory module_map_theory(const ModuleMapNames& n) {
    Theory th = right_module_theory(n.src_mod);
    th.merge(right_module_theory(n.tgt_mod));
    th.name = "module-map";
    const std::string &A = n.src_mod.alg.obj, &m = n.src_mod.alg.mult,
                      &i = n.src_mod.alg.unit;
    const std::string &M = n.src_mod.obj, &N = n.tgt_mod.obj;
    const std::string &nM = n.src_mod.act, &nuM = n.src_mod.act_assoc,
                      &ruM = n.src_mod.act_unit;
    const std::string &nN = n.tgt_mod.act, &nuN = n.tgt_mod.act_assoc,
                      &ruN = n.tgt_mod.act_unit;
    const std::string &f = n.map, &psi = n.psi;
    const Word wA{A}, wAA{A, A}, wM{M}, wMA{M, A};

    th.sig.add_one_cell(f, wM, Word{N});
    th.sig.add_two_cell(psi, Path{wMA, {{kE, f, wA}, {kE, nN, kE}}},
                        Path{wMA, {{kE, nM, kE}, {kE, f, kE}}}, true);

    Path passoc{Word{M, A, A}, {{kE, f, wAA}, {kE, nN, wA}, {kE, nN, kE}}};
    th.add_rule({tagged("MODMAP.assoc", n.tag), tagged("modulemapassociativity", n.tag),
                 Diagram{passoc,
                         {gen_at(0, kE, psi, wA), gen_at(1, kE, psi, kE),
                          gen_at(0, kE, nuM, kE)}},
                 Diagram{passoc,
                         {gen_at(1, kE, nuN, kE), cross_at(0, kE, f, kE, m, kE, true),
                          gen_at(1, kE, psi, kE)}}});

    Path punit{wM, {{wM, i, kE}, {kE, f, wA}, {kE, nN, kE}}};
    th.add_rule({tagged("MODMAP.unit", n.tag), tagged("modulemapunitality", n.tag),
                 Diagram{punit,
                         {cross_at(0, kE, f, kE, i, kE, false), gen_at(1, kE, ruN, kE)}},
                 Diagram{punit, {gen_at(1, kE, psi, kE), gen_at(0, kE, ruM, kE)}}});
    return th;
}

Theory left_module_map_theory(const LeftModuleMapNames& n) {
    Theory th = left_module_theory(n.src_mod);
    th.merge(left_module_theory(n.tgt_mod));
    th.name = "left-module-map";
    const std::string &A = n.src_mod.alg.obj, &m = n.src_mod.alg.mult,
                      &i = n.src_mod.alg.unit;
    const std::string &M = n.src_mod.obj, &N = n.tgt_mod.obj;
    const std::string &lM = n.src_mod.act, &kapM = n.src_mod.act_assoc,
                      &luM = n.src_mod.act_unit;
    const std::string &lN = n.tgt_mod.act, &kapN = n.tgt_mod.act_assoc,
                      &luN = n.tgt_mod.act_unit;
    const std::string &f = n.map, &chi = n.chi;
    const Word wA{A}, wAA{A, A}, wM{M}, wAM{A, M};

    th.sig.add_one_cell(f, wM, Word{N});
    th.sig.add_two_cell(chi, Path{wAM, {{wA, f, kE}, {kE, lN, kE}}},
                        Path{wAM, {{kE, lM, kE}, {kE, f, kE}}}, true);

    Path passoc{Word{A, A, M}, {{wAA, f, kE}, {wA, lN, kE}, {kE, lN, kE}}};
    th.add_rule({tagged("LMODMAP.assoc", n.tag),
                 tagged("leftmodulemapassociativity", n.tag),
                 Diagram{passoc,
                         {gen_at(0, wA, chi, kE), gen_at(1, kE, chi, kE),
                          gen_at(0, kE, kapM, kE)}},
                 Diagram{passoc,
                         {gen_at(1, kE, kapN, kE), cross_at(0, kE, m, kE, f, kE, false),
                          gen_at(1, kE, chi, kE)}}});

    Path punit{wM, {{kE, i, wM}, {wA, f, kE}, {kE, lN, kE}}};
    th.add_rule({tagged("LMODMAP.unit", n.tag), tagged("leftmodulemapunitality", n.tag),
                 Diagram{punit,
                         {cross_at(0, kE, i, kE, f, kE, true), gen_at(1, kE, luN, kE)}},
                 Diagram{punit, {gen_at(1, kE, chi, kE), gen_at(0, kE, luM, kE)}}});
    return th;
}

Theory bimodule_map_theory(const BimoduleMapNames& n) {
    Theory th = bimodule_theory(n.src_bim);
    th.merge(bimodule_theory(n.tgt_bim));
    ModuleMapNames mm;
    mm.src_mod = n.src_bim.right;
    mm.tgt_mod = n.tgt_bim.right;
    mm.map = n.map;
    mm.psi = n.psi;
    mm.tag = n.map + "B";
    th.merge(module_map_theory(mm));
    LeftModuleMapNames lm;
    lm.src_mod = n.src_bim.left;
    lm.tgt_mod = n.tgt_bim.left;
    lm.map = n.map;
    lm.chi = n.chi;
    lm.tag = n.map + "A";
    th.merge(left_module_map_theory(lm));
    th.name = "bimodule-map";
    const std::string &A = n.src_bim.alg_a.obj, &B = n.src_bim.alg_b.obj;
    const std::string &P = n.src_bim.obj;
    const std::string &nQ = n.tgt_bim.right.act, &lQ = n.tgt_bim.left.act;
    const std::string &betaP = n.src_bim.compat, &betaQ = n.tgt_bim.compat;
    const std::string &f = n.map, &psi = n.psi, &chi = n.chi;
    const Word wA{A}, wB{B};

    Path pc{Word{A, P, B}, {{wA, f, wB}, {wA, nQ, kE}, {kE, lQ, kE}}};
    th.add_rule({tagged("BIMODMAP.compat", n.tag),
                 tagged("bimodulemapassociativity", n.tag),
                 Diagram{pc, {gen_at(0, wA, psi, kE), gen_at(1, kE, chi, kE)}},
                 Diagram{pc,
                         {gen_at(1, kE, betaQ, kE, true), gen_at(0, kE, chi, wB),
                          gen_at(1, kE, psi, kE), gen_at(0, kE, betaP, kE)}}});
    return th;
}

Theory module_map_adjoint_theory(const MapAdjointNames& n) {
    Theory th = module_map_theory(n.map);
    th.name = "module-map-adjoint";
    const std::string &M = n.map.src_mod.obj, &N = n.map.tgt_mod.obj;
    const std::string &f = n.map.map, &fs = n.dual;
    const std::string &u = n.adj_unit, &c = n.adj_counit;

    th.sig.add_one_cell(fs, Word{N}, Word{M});
    th.sig.add_adjunction(fs, f, u, c);

    Path zig{Word{N}, {{kE, fs, kE}}};
    th.add_rule({tagged("SNAKE.f-1", n.tag), "",
                 Diagram{zig, {gen_at(0, kE, u, kE), gen_at(1, kE, c, kE)}},
                 identity_diagram(th.sig, zig)});
    Path zag{Word{M}, {{kE, f, kE}}};
    th.add_rule({tagged("SNAKE.f-2", n.tag), "",
                 Diagram{zag, {gen_at(1, kE, u, kE), gen_at(0, kE, c, kE)}},
                 identity_diagram(th.sig, zag)});
    return th;
}

// ------------------------------------------------------------------ rigidity

Theory rigid_theory(const RigidNames& n) {
    Theory th = algebra_theory(n.alg);
    th.name = "rigid";
    const std::string &A = n.alg.obj, &m = n.alg.mult, &i = n.alg.unit;
    const std::string &mu = n.alg.assoc, &la = n.alg.left_unitor,
                      &rho = n.alg.right_unitor;
    const std::string &ms = n.dual, &eta = n.adj_unit, &eps = n.adj_counit;
    const std::string &pl = n.psi_l, &pr = n.psi_r;
    const Word wA{A}, wAA{A, A}, wAAA{A, A, A};

    th.sig.add_one_cell(ms, wA, wAA);
    th.sig.add_adjunction(m, ms, eta, eps);
    Path star_tgt{wAA, {{kE, m, kE}, {kE, ms, kE}}};
    th.sig.add_two_cell(pl, Path{wAA, {{wA, ms, kE}, {kE, m, wA}}}, star_tgt,
                        true);
    th.sig.add_two_cell(pr, Path{wAA, {{kE, ms, wA}, {wA, m, kE}}}, star_tgt,
                        true);

    Path pla{wAAA, {{wAA, ms, kE}, {wA, m, wA}, {kE, m, wA}}};
    th.add_rule({tagged("RIG.l-assoc", n.tag), tagged("rigidleftassociativity", n.tag),
                 Diagram{pla, {gen_at(0, wA, pl, kE), gen_at(1, kE, pl, kE)}},
                 Diagram{pla,
                         {gen_at(1, kE, mu, wA, true),
                          cross_at(0, kE, m, kE, ms, kE, false), gen_at(1, kE, pl, kE),
                          gen_at(0, kE, mu, kE)}}});

    Path plu{wA, {{kE, i, wA}, {wA, ms, kE}, {kE, m, wA}}};
    th.add_rule({tagged("RIG.l-unit", n.tag), tagged("rigidleftunit", n.tag),
                 Diagram{plu,
                         {cross_at(0, kE, i, kE, ms, kE, true), gen_at(1, kE, la, wA)}},
                 Diagram{plu, {gen_at(1, kE, pl, kE), gen_at(0, kE, la, kE)}}});

    Path pra{wAAA, {{kE, ms, wAA}, {wA, m, wA}, {wA, m, kE}}};
    th.add_rule({tagged("RIG.r-assoc", n.tag), tagged("rigidrightassociativity", n.tag),
                 Diagram{pra,
                         {gen_at(0, kE, pr, wA), gen_at(1, kE, pr, kE),
                          gen_at(0, kE, mu, kE)}},
                 Diagram{pra,
                         {gen_at(1, wA, mu, kE), cross_at(0, kE, ms, kE, m, kE, true),
                          gen_at(1, kE, pr, kE)}}});

    Path pru{wA, {{wA, i, kE}, {kE, ms, wA}, {wA, m, kE}}};
    th.add_rule({tagged("RIG.r-unit", n.tag), tagged("rigidrightunit", n.tag),
                 Diagram{pru,
                         {cross_at(0, kE, ms, kE, i, kE, false), gen_at(1, wA, rho, kE)}},
                 Diagram{pru, {gen_at(1, kE, pr, kE), gen_at(0, kE, rho, kE)}}});

    Path pbi{wAAA, {{wA, ms, wA}, {wAA, m, kE}, {kE, m, wA}}};
    th.add_rule({tagged("RIG.bimod", n.tag), tagged("rigidbimodule", n.tag),
                 Diagram{pbi, {gen_at(0, wA, pr, kE), gen_at(1, kE, pl, kE)}},
                 Diagram{pbi,
                         {cross_at(1, kE, m, kE, m, kE, false), gen_at(0, kE, pl, wA),
                          gen_at(1, kE, pr, kE), gen_at(0, kE, mu, kE)}}});

    Path pel{wAA, {{wA, ms, kE}, {wA, m, kE}, {kE, m, kE}}};
    th.add_rule({tagged("RIG.eps-l", n.tag), tagged("epsilonleft", n.tag),
                 Diagram{pel,
                         {gen_at(1, kE, mu, kE, true), gen_at(0, kE, pl, kE),
                          gen_at(1, kE, eps, kE)}},
                 Diagram{pel, {gen_at(0, wA, eps, kE)}}});

    Path per{wAA, {{kE, ms, wA}, {kE, m, wA}, {kE, m, kE}}};
    th.add_rule({tagged("RIG.eps-r", n.tag), tagged("epsilonright", n.tag),
                 Diagram{per,
                         {gen_at(1, kE, mu, kE), gen_at(0, kE, pr, kE),
                          gen_at(1, kE, eps, kE)}},
                 Diagram{per, {gen_at(0, kE, eps, wA)}}});

    Path petl{wAAA, {{kE, m, wA}}};
    th.add_rule({tagged("RIG.eta-l", n.tag), tagged("etaleft", n.tag),
                 Diagram{petl, {gen_at(0, wA, eta, kE)}},
                 Diagram{petl,
                         {gen_at(1, kE, eta, kE), gen_at(0, kE, mu, kE),
                          gen_at(1, kE, pl, kE, true)}}});

    Path petr{wAAA, {{wA, m, kE}}};
    th.add_rule({tagged("RIG.eta-r", n.tag), tagged("etaright", n.tag),
                 Diagram{petr, {gen_at(0, kE, eta, wA)}},
                 Diagram{petr,
                         {gen_at(1, kE, eta, kE), gen_at(0, kE, mu, kE, true),
                          gen_at(1, kE, pr, kE, true)}}});

    Path zig{wAA, {{kE, m, kE}}};
    th.add_rule({tagged("SNAKE.m-1", n.tag), "",
                 Diagram{zig, {gen_at(0, kE, eta, kE), gen_at(1, kE, eps, kE)}},
                 identity_diagram(th.sig, zig)});
    Path zag{wA, {{kE, ms, kE}}};
    th.add_rule({tagged("SNAKE.m-2", n.tag), "",
                 Diagram{zag, {gen_at(1, kE, eta, kE), gen_at(0, kE, eps, kE)}},
                 identity_diagram(th.sig, zag)});
    return th;
}

// -------------------------------------------------------------- separability

Theory separable_theory(const SeparableNames& n) {
    Theory th = rigid_theory(n.rigid);
    th.name = "separable";
    const std::string &A = n.rigid.alg.obj, &m = n.rigid.alg.mult;
    const std::string &mu = n.rigid.alg.assoc;
    const std::string &ms = n.rigid.dual, &eps = n.rigid.adj_counit;
    const std::string &pl = n.rigid.psi_l, &pr = n.rigid.psi_r, &g = n.section;
    const Word wA{A};

    th.sig.add_two_cell(g, id_path(wA), Path{wA, {{kE, ms, kE}, {kE, m, kE}}},
                        false);

    Path pid = id_path(wA);
    th.add_rule({tagged("SEP.section", n.tag), "",
                 Diagram{pid, {gen_at(0, kE, g, kE), gen_at(0, kE, eps, kE)}},
                 identity_diagram(th.sig, pid)});

    Path pm{Word{A, A}, {{kE, m, kE}}};
    Diagram split{pm, {gen_at(1, kE, g, kE)}};
    th.add_rule({tagged("SEP.gamma-l", n.tag), tagged("gammaleft", n.tag),
                 Diagram{pm,
                         {gen_at(0, wA, g, kE), gen_at(1, kE, mu, kE, true),
                          gen_at(0, kE, pl, kE)}},
                 split});
    th.add_rule({tagged("SEP.gamma-r", n.tag), tagged("gammaright", n.tag),
                 Diagram{pm,
                         {gen_at(0, kE, g, wA), gen_at(1, kE, mu, kE),
                          gen_at(0, kE, pr, kE)}},
                 split});
    return th;
}

// --------------------------------------------------------------------- trace

Theory trace_theory(const TraceNames& n) {
    Theory th = rigid_theory(n.rigid);
    th.name = "trace";
    const std::string &A = n.rigid.alg.obj, &m = n.rigid.alg.mult;
    const std::string &ms = n.rigid.dual, &ms2 = n.ddual;
    const std::string &u = n.adj_unit, &c = n.adj_counit;
    const Word wA{A}, wAA{A, A};

    th.sig.add_one_cell(ms2, wAA, wA);
    th.sig.add_adjunction(ms, ms2, u, c);
    th.sig.add_two_cell(n.mu_iso, Path{wAA, {{kE, ms2, kE}}},
                        Path{wAA, {{kE, m, kE}}}, true);

    Path zig{wA, {{kE, ms, kE}}};
    th.add_rule({tagged("SNAKE.mstar-1", n.tag), "",
                 Diagram{zig, {gen_at(0, kE, u, kE), gen_at(1, kE, c, kE)}},
                 identity_diagram(th.sig, zig)});
    Path zag{wAA, {{kE, ms2, kE}}};
    th.add_rule({tagged("SNAKE.mstar-2", n.tag), "",
                 Diagram{zag, {gen_at(1, kE, u, kE), gen_at(0, kE, c, kE)}},
                 identity_diagram(th.sig, zag)});
    return th;
}

// ------------------------------------------------------- 2-morphism equation

RewriteRule module_2morphism_equation(const std::string& gamma,
                                      const ModuleMapNames& f,
                                      const ModuleMapNames& g) {
    if (f.src_mod.obj != g.src_mod.obj || f.tgt_mod.obj != g.tgt_mod.obj ||
        f.src_mod.alg.obj != g.src_mod.alg.obj)
        throw type_error("module 2-morphism " + gamma +
                         ": maps are not parallel");
    const std::string& A = f.src_mod.alg.obj;
    const Word wA{A};
    Path src{Word{f.src_mod.obj, A}, {{kE, f.map, wA}, {kE, f.tgt_mod.act, kE}}};
    return {"MOD2[" + gamma + "]", "",
            Diagram{src, {gen_at(0, kE, gamma, wA), gen_at(0, kE, g.psi, kE)}},
            Diagram{src, {gen_at(0, kE, f.psi, kE), gen_at(1, kE, gamma, kE)}}};
}

// -------------------------------------------------------- interchanger rules

std::vector<RewriteRule> interchanger_inverse_rules(const Signature& sig,
                                                    const std::string& xn,
                                                    const std::string& yn) {
    const OneCell& x = sig.one_cell(xn);
    const OneCell& y = sig.one_cell(yn);
    const std::string pair = x.name + "," + y.name;
    // "y then x" layout; the forward crossing passes x under y
    Path before{concat(x.src, y.src), {{x.src, y.name, kE}, {kE, x.name, y.tgt}}};
    Path after{concat(x.src, y.src), {{kE, x.name, y.src}, {x.tgt, y.name, kE}}};
    std::vector<RewriteRule> out;
    out.push_back({"INT.inv[" + pair + ",a]", "",
                   Diagram{before,
                           {cross_at(0, kE, x.name, kE, y.name, kE, false),
                            cross_at(0, kE, x.name, kE, y.name, kE, true)}},
                   Diagram{before, {}}});
    out.push_back({"INT.inv[" + pair + ",b]", "",
                   Diagram{after,
                           {cross_at(0, kE, x.name, kE, y.name, kE, true),
                            cross_at(0, kE, x.name, kE, y.name, kE, false)}},
                   Diagram{after, {}}});
    return out;
}

RewriteRule interchanger_slide_rule(const Signature& sig, const std::string& an,
                                    const std::string& gn, char side) {
    if (side != 'l' && side != 'r')
        throw type_error("interchanger_slide_rule: side must be 'l' or 'r'");
    const TwoCellDecl& al = sig.two_cell(an);
    const OneCell& g = sig.one_cell(gn);
    const Path &S = al.src, &T = al.tgt;
    const Word &X = g.src, &Y = g.tgt;
    const Word end = tgt_word(sig, S); // shared with T: alpha is parallel

    // The crossing column that carries the wire past one side of the coupon.
    auto column = [&](const Path& P, bool to_left) {
        std::vector<Level> lvls;
        for (std::size_t j = P.factors.size(); j-- > 0;) {
            const auto& fa = P.factors[j];
            if (to_left)
                lvls.push_back(cross_at(j, fa.lw, fa.cell, fa.rw, g.name, kE, true));
            else
                lvls.push_back(cross_at(j, kE, g.name, fa.lw, fa.cell, fa.rw, false));
        }
        return lvls;
    };

    const std::string id =
        "NAT.slide[" + al.name + "," + g.name + "," + std::string(1, side) + "]";
    if (side == 'r') {
        // the wire starts to the right of the coupon's column
        Path p = whisker_path(kE, S, X);
        p.factors.push_back({end, g.name, kE});
        Diagram lhs{p, column(S, true)};
        lhs.levels.push_back(gen_at(1, kE, al.name, Y));
        Diagram rhs{p, {gen_at(0, kE, al.name, X)}};
        auto tc = column(T, true);
        rhs.levels.insert(rhs.levels.end(), tc.begin(), tc.end());
        return {id, "", std::move(lhs), std::move(rhs)};
    }
    // the wire starts to the left of the coupon's column
    Path p = whisker_path(X, S, kE);
    p.factors.push_back({kE, g.name, end});
    Diagram lhs{p, column(S, false)};
    lhs.levels.push_back(gen_at(1, Y, al.name, kE));
    Diagram rhs{p, {gen_at(0, X, al.name, kE)}};
    auto tc = column(T, false);
    rhs.levels.insert(rhs.levels.end(), tc.begin(), tc.end());
    return {id, "", std::move(lhs), std::move(rhs)};
}

std::vector<RewriteRule> interchanger_rules(const Signature& sig) {
    std::vector<RewriteRule> out;
    for (const auto& x : sig.one_cells)
        for (const auto& y : sig.one_cells)
            for (auto& r : interchanger_inverse_rules(sig, x.name, y.name))
                out.push_back(std::move(r));
    for (const auto& al : sig.two_cells)
        for (const auto& g : sig.one_cells) {
            out.push_back(interchanger_slide_rule(sig, al.name, g.name, 'r'));
            out.push_back(interchanger_slide_rule(sig, al.name, g.name, 'l'));
        }
    return out;
}

} // namespace twocat
