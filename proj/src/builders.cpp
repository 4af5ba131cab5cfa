#include "twocat/builders.hpp"

namespace twocat {

namespace {

const Word kE;

Level gen_at(std::size_t pre, Word lw, const std::string& name, Word rw,
             bool inv = false) {
    return Level{pre, std::move(lw), std::move(rw), TwoCellRef::gen(name, inv)};
}

Level cross_at(std::size_t pre, Word lw, const std::string& l, Word mid,
               const std::string& r, Word rw, bool inv) {
    return Level{pre, std::move(lw), std::move(rw),
                 TwoCellRef::crossing(l, std::move(mid), r, inv)};
}

Diagram checked(const Signature& sig, Diagram d, const char* what) {
    auto faults = validate(sig, d);
    if (!faults.empty())
        throw type_error(std::string(what) + ": " + faults.front());
    return d;
}

} // namespace

Path build_pM(const Signature& sig, const RightModuleNames& mod,
              const RigidNames& rig) {
    const std::string &M = mod.obj, &A = mod.alg.obj;
    Path p{Word{M},
           {{Word{M}, mod.alg.unit, kE},
            {Word{M}, rig.dual, kE},
            {kE, mod.act, Word{A}}}};
    check_path(sig, p); // throws type_error if the names do not fit
    return p;
}

Diagram build_eps_M(const Signature& sig, const RightModuleNames& mod,
                    const RigidNames& rig) {
    Path src = build_pM(sig, mod, rig);
    src.factors.push_back({kE, mod.act, kE});
    const Word wM{mod.obj};
    Diagram d{src,
              {gen_at(2, kE, mod.act_assoc, kE),
               gen_at(1, wM, rig.adj_counit, kE),
               gen_at(0, kE, mod.act_unit, kE)}};
    return checked(sig, std::move(d), "build_eps_M");
}

Diagram build_eta_M(const Signature& sig, const RightModuleNames& mod,
                    const RigidNames& rig) {
    const std::string &M = mod.obj, &A = mod.alg.obj;
    const Word wM{M}, wA{A};
    Diagram d{id_path(Word{M, A}),
              {gen_at(0, kE, mod.act_unit, wA, true),
               gen_at(1, wM, rig.adj_unit, kE),
               gen_at(0, wM, mod.alg.left_unitor, kE),
               gen_at(0, wM, mod.alg.right_unitor, kE, true),
               gen_at(1, wM, rig.psi_l, kE, true),
               gen_at(2, kE, mod.act_assoc, wA, true),
               cross_at(1, kE, mod.act, kE, rig.dual, kE, false),
               cross_at(0, kE, mod.act, kE, mod.alg.unit, kE, false)}};
    return checked(sig, std::move(d), "build_eta_M");
}

Diagram build_psi_p(const Signature& sig, const RightModuleNames& mod,
                    const RigidNames& rig) {
    const std::string &M = mod.obj, &A = mod.alg.obj;
    const Word wM{M}, wA{A};
    Path src{Word{M, A},
             {{wM, mod.alg.unit, wA},
              {wM, rig.dual, wA},
              {kE, mod.act, Word{A, A}},
              {wM, mod.alg.mult, kE}}};
    Diagram d{src,
              {cross_at(2, kE, mod.act, kE, mod.alg.mult, kE, true),
               gen_at(1, wM, rig.psi_r, kE),
               gen_at(0, wM, mod.alg.left_unitor, kE),
               gen_at(0, wM, mod.alg.right_unitor, kE, true),
               gen_at(1, wM, rig.psi_l, kE, true),
               gen_at(2, kE, mod.act_assoc, wA, true),
               cross_at(1, kE, mod.act, kE, rig.dual, kE, false),
               cross_at(0, kE, mod.act, kE, mod.alg.unit, kE, false)}};
    return checked(sig, std::move(d), "build_psi_p");
}

Diagram build_gamma_M(const Signature& sig, const RightModuleNames& mod,
                      const SeparableNames& sep) {
    const Word wM{mod.obj};
    Diagram d{id_path(wM),
              {gen_at(0, kE, mod.act_unit, kE, true),
               gen_at(1, wM, sep.section, kE),
               gen_at(2, kE, mod.act_assoc, kE, true)}};
    return checked(sig, std::move(d), "build_gamma_M");
}

Diagram build_zeta_f(const Signature& sig, const ModuleMapNames& mmap,
                     const RigidNames& rig) {
    const std::string &N = mmap.tgt_mod.obj, &A = mmap.src_mod.alg.obj;
    const Word wN{N}, wA{A};
    Path src{Word{mmap.src_mod.obj},
             {{kE, mmap.map, kE},
              {wN, mmap.src_mod.alg.unit, kE},
              {wN, rig.dual, kE},
              {kE, mmap.tgt_mod.act, wA}}};
    Diagram d{src,
              {cross_at(0, kE, mmap.map, kE, mmap.src_mod.alg.unit, kE, true),
               cross_at(1, kE, mmap.map, kE, rig.dual, kE, true),
               gen_at(2, kE, mmap.psi, wA)}};
    return checked(sig, std::move(d), "build_zeta_f");
}

Diagram build_xi_f(const Signature& sig, const MapAdjointNames& adj) {
    const ModuleMapNames& f = adj.map;
    const std::string& A = f.src_mod.alg.obj;
    const Word wA{A};
    Path src{Word{f.tgt_mod.obj, A},
             {{kE, f.tgt_mod.act, kE}, {kE, adj.dual, kE}}};
    Diagram d{src,
              {gen_at(0, kE, adj.adj_unit, wA), gen_at(1, kE, f.psi, kE),
               gen_at(2, kE, adj.adj_counit, kE)}};
    return checked(sig, std::move(d), "build_xi_f");
}

Diagram build_theta_f(const Signature& sig, const LeftModuleMapNames& lmap,
                      const MapAdjointNames& adj) {
    const std::string& A = lmap.src_mod.alg.obj;
    const Word wA{A};
    Path src{Word{A, lmap.tgt_mod.obj},
             {{kE, lmap.tgt_mod.act, kE}, {kE, adj.dual, kE}}};
    Diagram d{src,
              {gen_at(0, wA, adj.adj_unit, kE), gen_at(1, kE, lmap.chi, kE),
               gen_at(2, kE, adj.adj_counit, kE)}};
    return checked(sig, std::move(d), "build_theta_f");
}

Diagram build_psi_fstar(const Signature& sig, const MapAdjointNames& adj,
                        const RigidNames& rig) {
    const ModuleMapNames& f = adj.map;
    const std::string &N = f.tgt_mod.obj, &A = f.src_mod.alg.obj;
    const Word wA{A};

    Path src{Word{N, A}, {{kE, adj.dual, wA}, {kE, f.src_mod.act, kE}}};
    Diagram d{src, {}};

    // open the unit square of the target module's adjoint action
    Diagram etaN = build_eta_M(sig, f.tgt_mod, rig);
    d.levels.insert(d.levels.end(), etaN.levels.begin(), etaN.levels.end());
    // split the identity on N into the f-adjunction
    d.levels.push_back(gen_at(1, kE, adj.adj_unit, kE));
    // carry f across the adjoint-action path of N
    Diagram zf = build_zeta_f(sig, f, rig);
    for (Level lv : zf.levels) {
        lv.pre += 2;
        d.levels.push_back(std::move(lv));
    }
    // close the f-adjunction next to the original wires
    d.levels.push_back(gen_at(5, kE, adj.adj_counit, wA));
    // collapse the source module's adjoint-action path
    Diagram epsM = build_eps_M(sig, f.src_mod, rig);
    for (Level lv : epsM.levels) {
        lv.pre += 2;
        d.levels.push_back(std::move(lv));
    }
    return checked(sig, std::move(d), "build_psi_fstar");
}

Diagram build_tau(const Signature& sig, const TraceNames& n) {
    const Word wA{n.rigid.alg.obj};
    Diagram d{id_path(wA),
              {gen_at(0, kE, n.adj_unit, kE), gen_at(1, kE, n.mu_iso, kE),
               gen_at(0, kE, n.rigid.adj_counit, kE)}};
    return checked(sig, std::move(d), "build_tau");
}

Diagram build_trace(const Signature& sig, const TraceNames& n) {
    const std::string& A = n.rigid.alg.obj;
    Path src{Word{A, A}, {{kE, n.rigid.alg.mult, kE}}};
    Diagram d{src,
              {gen_at(1, kE, n.adj_unit, kE), gen_at(2, kE, n.mu_iso, kE),
               gen_at(1, kE, n.rigid.adj_counit, kE)}};
    return checked(sig, std::move(d), "build_trace");
}

Diagram build_trace_star(const Signature& sig, const TraceNames& n) {
    const std::string& A = n.rigid.alg.obj;
    Path src{Word{A, A}, {{kE, n.rigid.alg.mult, kE}}};
    Diagram d{src,
              {gen_at(0, kE, n.rigid.adj_unit, kE),
               gen_at(0, kE, n.mu_iso, kE, true),
               gen_at(0, kE, n.adj_counit, kE)}};
    return checked(sig, std::move(d), "build_trace_star");
}

} // namespace twocat
