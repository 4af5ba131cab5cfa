#pragma once

// Generator signatures and named rewrite rules for algebra, module,
// bimodule, rigidity, separability, and trace theories, plus the ground
// interchanger rules (crossing cancellation and coupon/crossing slides).

#include "twocat/diagram.hpp"

#include <string>
#include <vector>

namespace twocat {

/// A named bidirectional rewrite rule between two parallel diagrams.
struct RewriteRule {
    std::string id;    ///< short structured id, e.g. "ALG.assoc"
    std::string alias; ///< long descriptive alias, e.g. "algebraassociativity"
    Diagram lhs;
    Diagram rhs;
};

/// A signature together with the rules that quotient it.
struct Theory {
    std::string name;
    Signature sig;
    std::vector<RewriteRule> rules;

    /// Adds a rule after checking lhs/rhs are valid parallel diagrams.
    /// Throws boundary_mismatch or type_error naming the rule on failure.
    void add_rule(RewriteRule r);

    /// Looks a rule up by id or alias; nullptr if absent.
    const RewriteRule* find_rule(const std::string& id_or_alias) const;

    /// Merges another theory in. Identical redeclarations are tolerated;
    /// conflicting cells or same-id rules with different content throw.
    void merge(const Theory& other);
};

// ---------------------------------------------------------------------------
// Name bundles. Every preset is parameterized over the names it declares so
// the same construction can be instantiated several times in one signature
// (a second algebra, a second module, a module structure on the algebra
// itself, ...). `tag` suffixes the preset's rule ids as "ID[tag]" so
// instances coexist; empty tag means the canonical instance.

struct AlgebraNames {
    std::string obj = "A";
    std::string mult = "m"; ///< 1-cell  A A -> A
    std::string unit = "i"; ///< 1-cell  I -> A
    std::string assoc = "mu";
    std::string left_unitor = "lambda";
    std::string right_unitor = "rho";
    std::string tag;
};

/// The second algebra of a bimodule: object B, cells mB, iB, muB, ...
AlgebraNames algebra_names_b();

struct RightModuleNames {
    AlgebraNames alg{};
    std::string obj = "M";
    std::string act = "nM"; ///< 1-cell  M A -> M
    std::string act_assoc = "nuM";
    std::string act_unit = "rhoM";
    std::string tag;
};

/// The target module of a module map: object N, cells nN, nuN, rhoN.
RightModuleNames right_module_names_n();

struct LeftModuleNames {
    AlgebraNames alg{};
    std::string obj = "M";
    std::string act = "lM"; ///< 1-cell  A M -> M
    std::string act_assoc = "kapM";
    std::string act_unit = "lamM";
    std::string tag;
};

struct BimoduleNames {
    AlgebraNames alg_a{};  ///< acts on the left
    AlgebraNames alg_b;    ///< acts on the right
    std::string obj = "P";
    RightModuleNames right; ///< right alg_b-action on obj
    LeftModuleNames left;   ///< left alg_a-action on obj
    std::string compat = "beta"; ///< action-compatibility 2-iso
    std::string tag;
    BimoduleNames();
};

/// The target bimodule of a bimodule map: object Q, cells nQ, lQ, betaQ, ...
BimoduleNames bimodule_names_q();

struct ModuleMapNames {
    RightModuleNames src_mod{};
    RightModuleNames tgt_mod;
    std::string map = "f";    ///< 1-cell  M -> N
    std::string psi = "psi_f"; ///< 2-iso  nN . (f # id:A)  =>  f . nM
    std::string tag;
    ModuleMapNames();
};

struct LeftModuleMapNames {
    LeftModuleNames src_mod{};
    LeftModuleNames tgt_mod;
    std::string map = "f";
    std::string chi = "chi_f"; ///< 2-iso  lN . (id:A # f)  =>  f . lM
    std::string tag;
    LeftModuleMapNames();
};

struct BimoduleMapNames {
    BimoduleNames src_bim{};
    BimoduleNames tgt_bim;
    std::string map = "f"; ///< 1-cell  P -> Q
    std::string psi = "psi_f";
    std::string chi = "chi_f";
    std::string tag;
    BimoduleMapNames();
};

struct MapAdjointNames {
    ModuleMapNames map{};
    std::string dual = "fstar";      ///< *f : N -> M, left adjoint of f
    std::string adj_unit = "eta_f";  ///< id:N => f . *f
    std::string adj_counit = "eps_f"; ///< *f . f => id:M
    std::string tag;
};

struct RigidNames {
    AlgebraNames alg{};
    std::string dual = "mstar"; ///< m* : A -> A A, right adjoint of m
    std::string adj_unit = "eta_m";
    std::string adj_counit = "eps_m";
    std::string psi_l = "psi_l"; ///< (m # id:A) . (id:A # m*)  =>  m* . m
    std::string psi_r = "psi_r"; ///< (id:A # m) . (m* # id:A)  =>  m* . m
    std::string tag;
};

struct SeparableNames {
    RigidNames rigid{};
    std::string section = "gamma_m"; ///< id:A => m . m*, section of eps_m
    std::string tag;
};

struct TraceNames {
    RigidNames rigid{};
    std::string ddual = "mstar2"; ///< m** : A A -> A, right adjoint of m*
    std::string adj_unit = "eta_mstar";
    std::string adj_counit = "eps_mstar";
    std::string mu_iso = "mudim"; ///< declared invertible 2-cell m** => m
    std::string tag;
};

// ---------------------------------------------------------------------------
// Presets. Each returns a self-contained theory (its prerequisites are
// merged in), so disjoint presets can be combined freely with Theory::merge.

/// m, i, mu, lambda, rho; rules ALG.assoc, ALG.unit, COH.left, COH.mid,
/// COH.right (the self-action instance of the module coherence rule).
Theory algebra_theory(const AlgebraNames& n = {});

/// nM, nuM, rhoM over the algebra; rules MOD.assoc, MOD.unit.
Theory right_module_theory(const RightModuleNames& n = {});

/// lM, kapM, lamM; rules LMOD.assoc, LMOD.unit.
Theory left_module_theory(const LeftModuleNames& n = {});

/// Two algebras, both one-sided structures on obj, and the compatibility
/// 2-iso beta; rules BIMOD.l, BIMOD.r plus the one-sided instances.
Theory bimodule_theory(const BimoduleNames& n = BimoduleNames{});

/// f : M -> N with psi_f; rules MODMAP.assoc, MODMAP.unit.
Theory module_map_theory(const ModuleMapNames& n = ModuleMapNames{});

/// f with chi_f between left modules; rules LMODMAP.assoc, LMODMAP.unit.
Theory left_module_map_theory(const LeftModuleMapNames& n = LeftModuleMapNames{});

/// f : P -> Q with psi_f and chi_f; BIMODMAP.compat plus one-sided axioms.
Theory bimodule_map_theory(const BimoduleMapNames& n = BimoduleMapNames{});

/// Adds *f -| f with unit/counit and the snake rules SNAKE.f-1/2.
Theory module_map_adjoint_theory(const MapAdjointNames& n = MapAdjointNames{});

/// m -| m* with eta_m/eps_m, bimodule structure psi_l/psi_r on m*;
/// rules RIG.l-assoc/l-unit/r-assoc/r-unit/bimod/eps-l/eps-r/eta-l/eta-r
/// and SNAKE.m-1/2.
Theory rigid_theory(const RigidNames& n = {});

/// gamma_m with SEP.section, SEP.gamma-l, SEP.gamma-r.
Theory separable_theory(const SeparableNames& n = {});

/// m* -| m** with snakes SNAKE.mstar-1/2 and the invertible mudim: m** => m.
Theory trace_theory(const TraceNames& n = {});

/// The naturality equation of a module 2-morphism gamma : f => g as a rule
/// MOD2[gamma]. f and g must share source and target modules.
RewriteRule module_2morphism_equation(const std::string& gamma,
                                      const ModuleMapNames& f,
                                      const ModuleMapNames& g);

/// Ground interchanger rules over a signature:
///  - INT.inv[x,y,a|b]: a crossing of 1-cells x,y (empty middle) composed
///    with its inverse, in either order, rewrites to the identity;
///  - NAT.slide[alpha,g,l|r]: a coupon alpha slides through the column of
///    crossings that carries a disjoint wire g past it, on either side.
std::vector<RewriteRule> interchanger_rules(const Signature& sig);

/// The pair {INT.inv[x,y,a], INT.inv[x,y,b]} for two named 1-cells.
/// Throws type_error when either cell is undeclared.
std::vector<RewriteRule> interchanger_inverse_rules(const Signature& sig,
                                                    const std::string& x,
                                                    const std::string& y);

/// NAT.slide[alpha,g,side]: side 'r' starts the wire on the coupon's right,
/// 'l' on its left. Throws type_error for unknown names or a bad side.
RewriteRule interchanger_slide_rule(const Signature& sig, const std::string& alpha,
                                    const std::string& g, char side);

} // namespace twocat
