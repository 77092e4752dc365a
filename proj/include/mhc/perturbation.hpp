#pragma once

#include "mhc/check.hpp"
#include "mhc/cyclic.hpp"

namespace mhc {

/// Deformation retract between a big complex L and a small complex M:
///   i_N : M_N -> L_N, p_N : L_N -> M_N, h_N : L_N -> L_{N+1},
/// with p i = id and d h + h d = i p - id. Boundary vectors follow the
/// ChainComplex convention (index N, entry 0 a placeholder). h may be one
/// degree shorter than the complexes.
struct Retract {
    ChainComplex big, small;
    std::vector<SparseMatrix> i, p, h;
};

/// Checks d^2 = 0 on both sides, p i = id, both chain-map identities, the
/// homotopy identity and, with `special`, h h = 0, p h = 0, h i = 0, over
/// every degree where the needed maps exist.
std::vector<CheckResult> retract_checks(const Retract& r, bool special, const std::string& prefix);

/// Perturbation lemma for a perturbation delta_N : L_N -> L_{N-1} of the big
/// differential. With Delta_N = sum_k (delta_N h_{N-1})^k delta_N:
///   d1 = d_M + p Delta i,  i1 = i + h Delta i,  p1 = p + p Delta h,  h1 = h + h Delta h.
/// The perturbed big complex carries d_L + delta. Throws std::runtime_error
/// if delta h is not nilpotent within dim L_{N-1} + 1 steps.
Retract perturb(const Retract& r, const std::vector<SparseMatrix>& delta);

/// Retract of BC totals: bar side (b only) onto the small complex (d only),
/// with phi, psi, omega applied columnwise, degrees 0..N.
struct BcRetract {
    Retract retract;
    std::vector<SparseMatrix> delta;  // bar Connes B, column p -> p-1
    MixedComplex small_mixed;         // (C^S, d, D) for comparison
};
BcRetract bc_retract(const BarComplex& bar, const MixedComplex& small, std::size_t N);

/// Perturbs the bar/C^S retract by B and checks the special-retract
/// identities of the result, that d1 equals the BC total of (C^S, d, D), and
/// that its homology equals the bar-oracle HC, for degrees <= N.
std::vector<CheckResult> perturbation_checks(const MonogenicAlgebra& a, std::size_t N);

}  // namespace mhc
