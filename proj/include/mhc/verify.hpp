#pragma once

#include "mhc/check.hpp"
#include "mhc/monogenic.hpp"

#include <cstdint>

namespace mhc {

struct VerifyOptions {
    std::size_t max_degree = 6;
    std::size_t degree_bound_exhaustive = 3;  // degree bound on omega', every basis tensor up to this arity
    std::size_t degree_bound_samples = 200;   // random basis tensors at the next arity
    std::uint32_t seed = 20260;
    std::size_t vanishing_j = 2;
    std::size_t vanishing_r = 3;
};

/// Runs every identity check on A = M (regular bimodule):
/// resolution level (d'd', b'b', psi'phi', chain maps, homotopy), bar level
/// (bb, BB, bB + Bb, psi phi, chain maps, homotopy), the small complex (dd,
/// displayed d = transferred d), D = psi B phi and the mixed identities, the
/// degree bound for omega', the vanishing of psi (B omega)^j B phi, and the
/// perturbation lemma on the BC totals.
std::vector<CheckResult> run_identity_suite(const MonogenicAlgebra& a, const VerifyOptions& opt = {});

}  // namespace mhc
