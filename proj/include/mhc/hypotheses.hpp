#pragma once

#include "mhc/monogenic.hpp"

#include <string>
#include <vector>

namespace mhc {

/// Spanning set {m_s alpha^j(lambda_t) - lambda_t m_s} of [M,K]_{alpha^j}.
std::vector<Vec> twisted_commutator_subspace(const MonogenicAlgebra& a, const Bimodule& m, unsigned j);
/// Same for M = K.
std::vector<Vec> k_twisted_commutators(const MonogenicAlgebra& a, unsigned j);
/// [K,K]_{alpha^j} as an echelonized subspace of K.
Subspace k_commutator_space(const MonogenicAlgebra& a, unsigned j);

struct CollapseReport {
    struct Entry {
        unsigned j;
        std::size_t commutator_dim;
        bool full;
    };
    std::vector<Entry> entries;  // one per j <= max_j with j not divisible by n
    bool holds = true;
};

/// Whether [K,K]_{alpha^j} = K for every j <= max_j not divisible by n.
CollapseReport check_collapse(const MonogenicAlgebra& a, unsigned max_j);
/// Window long enough to cover every C^S degree up to max_degree.
unsigned collapse_window(const MonogenicAlgebra& a, std::size_t max_degree);

struct LambdaBreveReport {
    bool ok = false;
    std::string failure;
};

/// Checks centrality, alpha^n-fixedness and invertibility of
/// candidate - alpha^i(candidate) for 1 <= i < n.
LambdaBreveReport verify_lambda_breve(const MonogenicAlgebra& a, const Vec& candidate);

struct EigenComponent {
    Scalar eigenvalue;
    std::vector<std::size_t> basis;  // indices of K-basis elements
};

/// Splits K into alpha-eigenspaces for a basis-diagonal alpha; eigenvalue 1
/// comes first (empty basis if 1 does not occur). Throws
/// std::invalid_argument when alpha is not diagonal on the basis.
std::vector<EigenComponent> eigen_split(const BaseAlgebra& k, const AlgebraEndomorphism& alpha);

/// Restriction of a K-subspace to the coordinates of a component, assuming the
/// subspace is spanned by vectors supported on single components.
Subspace restrict_to(const Subspace& s, const std::vector<std::size_t>& coords);
/// Subspace of K spanned by the component's basis vectors.
Subspace component_space(const BaseAlgebra& k, const std::vector<std::size_t>& coords);

}  // namespace mhc
