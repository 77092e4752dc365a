#include "mhc/hypotheses.hpp"

#include <stdexcept>

namespace mhc {

std::vector<Vec> twisted_commutator_subspace(const MonogenicAlgebra& a, const Bimodule& m, unsigned j) {
    std::vector<Vec> out;
    const BaseAlgebra& k = a.base();
    std::vector<Vec> twisted;
    for (std::size_t t = 0; t < k.dim(); ++t) twisted.push_back(a.kalpha(k.basis(t), j));
    for (std::size_t s = 0; s < m.dim(); ++s) {
        Vec ms = unit_vec(m.dim(), s, a.field());
        for (std::size_t t = 0; t < k.dim(); ++t) {
            Vec v = m.right_k(ms, twisted[t]) - m.left_basis(t, ms);
            if (!is_zero(v)) out.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<Vec> k_twisted_commutators(const MonogenicAlgebra& a, unsigned j) {
    std::vector<Vec> out;
    const BaseAlgebra& k = a.base();
    for (std::size_t s = 0; s < k.dim(); ++s)
        for (std::size_t t = 0; t < k.dim(); ++t) {
            Vec v = k.multiply(k.basis(s), a.kalpha(k.basis(t), j)) - k.multiply(k.basis(t), k.basis(s));
            if (!is_zero(v)) out.push_back(std::move(v));
        }
    return out;
}

Subspace k_commutator_space(const MonogenicAlgebra& a, unsigned j) {
    return Subspace::span(a.dim_k(), k_twisted_commutators(a, j), a.field());
}

CollapseReport check_collapse(const MonogenicAlgebra& a, unsigned max_j) {
    CollapseReport r;
    for (unsigned j = 1; j <= max_j; ++j) {
        if (j % a.n() == 0) continue;
        std::size_t d = k_commutator_space(a, j).dim();
        bool full = d == a.dim_k();
        r.entries.push_back({j, d, full});
        r.holds = r.holds && full;
    }
    return r;
}

unsigned collapse_window(const MonogenicAlgebra& a, std::size_t max_degree) {
    // C^S_r for r <= max_degree + 1 touches twists up to (m+1)n + n - 1
    return static_cast<unsigned>((max_degree / 2 + 2) * a.n());
}

LambdaBreveReport verify_lambda_breve(const MonogenicAlgebra& a, const Vec& c) {
    const BaseAlgebra& k = a.base();
    LambdaBreveReport r;
    for (std::size_t b = 0; b < k.dim(); ++b)
        if (k.multiply(c, k.basis(b)) != k.multiply(k.basis(b), c)) {
            r.failure = "not central: does not commute with " + k.labels()[b];
            return r;
        }
    if (a.kalpha(c, static_cast<unsigned>(a.n())) != c) {
        r.failure = "alpha^n does not fix the candidate";
        return r;
    }
    for (unsigned i = 1; i < a.n(); ++i) {
        Vec d = c - a.kalpha(c, i);
        if (rank(k.left_matrix(d)) != k.dim()) {
            r.failure = "candidate - alpha^" + std::to_string(i) + "(candidate) = " + k.format(d) + " is not invertible";
            return r;
        }
    }
    r.ok = true;
    return r;
}

std::vector<EigenComponent> eigen_split(const BaseAlgebra& k, const AlgebraEndomorphism& alpha) {
    if (!alpha.is_diagonal())
        throw std::invalid_argument("decomposition unavailable: alpha is not diagonal on the basis, generic path required");
    std::vector<EigenComponent> comps;
    comps.push_back({Scalar::one(k.field()), {}});
    for (std::size_t i = 0; i < k.dim(); ++i) {
        const Scalar& w = alpha.matrix()(i, i);
        bool placed = false;
        for (auto& c : comps)
            if (c.eigenvalue == w) {
                c.basis.push_back(i);
                placed = true;
                break;
            }
        if (!placed) comps.push_back({w, {i}});
    }
    return comps;
}

Subspace component_space(const BaseAlgebra& k, const std::vector<std::size_t>& coords) {
    std::vector<Vec> vs;
    for (auto i : coords) vs.push_back(k.basis(i));
    return Subspace::span(k.dim(), vs, k.field());
}

Subspace restrict_to(const Subspace& s, const std::vector<std::size_t>& coords) {
    const Field* f = s.basis().empty() ? rationals() : s.basis()[0][0].field();
    std::vector<Vec> units;
    for (auto i : coords) units.push_back(unit_vec(s.ambient(), i, f));
    Subspace inter = s.intersect(Subspace::span(s.ambient(), units, f));
    std::vector<Vec> out;
    for (const auto& v : inter.basis()) {
        Vec w;
        for (auto i : coords) w.push_back(v[i]);
        out.push_back(std::move(w));
    }
    return Subspace::span(coords.size(), out, f);
}

}  // namespace mhc
