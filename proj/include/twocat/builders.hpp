#pragma once

// Derived diagrams: the internal-hom module structure carried by the dual
// of the action map, the adjunction data it supports, and the trace loops.
// Every builder returns a validated diagram over the given signature and
// throws type_error if the supplied names do not fit together.

#include "twocat/theories.hpp"

namespace twocat {

/// The path  (id:M # i) . (id:M # mstar) . (nM # id:A) : M -> M A
/// underlying the right adjoint of the action 1-cell.
Path build_pM(const Signature& sig, const RightModuleNames& mod,
              const RigidNames& rig);

/// Counit candidate  nM . (pM # id) => id:M  (3 levels).
Diagram build_eps_M(const Signature& sig, const RightModuleNames& mod,
                    const RigidNames& rig);

/// Unit candidate  id:(M A) => pM . nM  (8 levels).
Diagram build_eta_M(const Signature& sig, const RightModuleNames& mod,
                    const RigidNames& rig);

/// Module-map square for pM:  nMA . (pM # id:A) => pM . nM  (8 levels),
/// exhibiting pM as a map of right modules M -> M A.
Diagram build_psi_p(const Signature& sig, const RightModuleNames& mod,
                    const RigidNames& rig);

/// Section candidate  id:M => nM . pM  induced by the algebra section
/// (3 levels).
Diagram build_gamma_M(const Signature& sig, const RightModuleNames& mod,
                      const SeparableNames& sep);

/// Comparison cell  fstar-side transport of pN across f  (3 levels):
///   f . pN  =>  pM-shape . (f # id:A).
Diagram build_zeta_f(const Signature& sig, const ModuleMapNames& mmap,
                     const RigidNames& rig);

/// Mate of psi_f under fstar -| f:  nN . fstar => (fstar # id:A) . nM
/// (3 levels).
Diagram build_xi_f(const Signature& sig, const MapAdjointNames& adj);

/// Left-handed mate of chi_f under fstar -| f:
///   lQ-then-fstar => (id:A # fstar)-then-lP  (3 levels).
Diagram build_theta_f(const Signature& sig, const LeftModuleMapNames& lmap,
                      const MapAdjointNames& adj);

/// Module-map square for fstar, assembled from eta_N, eta_f, zeta_f,
/// eps_f, and eps_M (16 levels). Inverse-up-to-rewriting of xi_f.
Diagram build_psi_fstar(const Signature& sig, const MapAdjointNames& adj,
                        const RigidNames& rig);

/// Dimension loop  id:A => id:A  through mstar2 and the comparison mudim.
Diagram build_tau(const Signature& sig, const TraceNames& n);

/// Trace of the comparison on the multiplication wire: an endo-cell of m.
Diagram build_trace(const Signature& sig, const TraceNames& n);

/// Trace of the inverse comparison taken through the other adjunction;
/// also an endo-cell of m.
Diagram build_trace_star(const Signature& sig, const TraceNames& n);

} // namespace twocat
