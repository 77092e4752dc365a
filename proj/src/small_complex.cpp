#include "mhc/small_complex.hpp"

#include <numeric>
#include <sstream>

namespace mhc {

namespace {

unsigned cs_twist(const MonogenicAlgebra& a, std::size_t r) {
    return static_cast<unsigned>((r / 2) * a.n() + (r % 2));
}

SparseMatrix matrix_from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    SparseMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, to_sparse(cols[j]));
    return m;
}

void assert_square_zero(const ChainComplex& c, const char* what) {
    auto bad = c.square_zero_failures();
    if (!bad.empty())
        throw std::logic_error(std::string(what) + ": d d != 0 at degree " + std::to_string(bad.front()));
}

Vec sub_vec(const Vec& v, const std::vector<std::size_t>& coords) {
    Vec out;
    for (auto i : coords) out.push_back(v[i]);
    return out;
}

// K-subquotient spaces (K/[K,K]_{alpha^t}) keyed by t.
SubquotientSpace k_quotient(const MonogenicAlgebra& a, unsigned t) {
    return subquotient(a.dim_k(), k_twisted_commutators(a, t), a.field());
}

}  // namespace

ChainComplex build_cs(const MonogenicAlgebra& a, const Bimodule& m, std::size_t max_degree) {
    ChainComplex c;
    std::size_t n = a.n();
    for (std::size_t r = 0; r <= max_degree; ++r) {
        unsigned t = cs_twist(a, r);
        c.spaces.push_back(subquotient(m.dim(), twisted_commutator_subspace(a, m, t), a.field()));
        c.twists.push_back(t);
        c.dims.push_back(c.spaces.back().quotient_dim);
    }
    c.boundaries.push_back(SparseMatrix(0, c.dims[0]));
    for (std::size_t r = 1; r <= max_degree; ++r) {
        const SubquotientSpace& src = c.spaces[r];
        const SubquotientSpace& dst = c.spaces[r - 1];
        std::vector<Vec> cols;
        for (std::size_t q = 0; q < src.quotient_dim; ++q) {
            Vec v = src.lift(unit_vec(src.quotient_dim, q, a.field()));
            Vec img = zero_vec(m.dim(), a.field());
            if (r % 2 == 1) {
                img = m.right_x(v, 1) - m.left_x(1, v);
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    const Vec& lam = a.lambda(n - i);
                    if (is_zero(lam)) continue;
                    for (std::size_t l = 0; l < i; ++l)
                        axpy(img, Scalar(1), m.left_k(lam, m.left_x(i - l - 1, m.right_x(v, l))));
                }
            }
            cols.push_back(dst.project(img));
        }
        c.boundaries.push_back(matrix_from_columns(dst.quotient_dim, cols));
    }
    assert_square_zero(c, "build_cs");
    return c;
}

ChainComplex build_cs_collapsed(const MonogenicAlgebra& a, std::size_t max_degree) {
    CollapseReport rep = check_collapse(a, collapse_window(a, max_degree));
    if (!rep.holds) {
        for (const auto& e : rep.entries)
            if (!e.full)
                throw HypothesisRefused("collapse fails: [K,K]_{alpha^" + std::to_string(e.j) + "} has dimension " +
                                        std::to_string(e.commutator_dim) + " < dim K = " +
                                        std::to_string(a.dim_k()) + "; use the generic small complex");
    }
    std::size_t n = a.n();
    ChainComplex c;
    for (std::size_t r = 0; r <= max_degree; ++r) {
        unsigned t = static_cast<unsigned>(r % 2 == 0 ? (r / 2) * n : (r / 2 + 1) * n);
        c.spaces.push_back(k_quotient(a, t));
        c.twists.push_back(t);
        c.dims.push_back(c.spaces.back().quotient_dim);
    }
    c.boundaries.push_back(SparseMatrix(0, c.dims[0]));
    const BaseAlgebra& k = a.base();
    for (std::size_t r = 1; r <= max_degree; ++r) {
        const SubquotientSpace& src = c.spaces[r];
        const SubquotientSpace& dst = c.spaces[r - 1];
        std::vector<Vec> cols;
        for (std::size_t q = 0; q < src.quotient_dim; ++q) {
            Vec lam = src.lift(unit_vec(src.quotient_dim, q, a.field()));
            Vec img;
            if (r % 2 == 1) {
                img = k.multiply(a.kalpha(lam, 1) - lam, a.lambda(n));
            } else {
                img = k.zero();
                for (std::size_t l = 0; l < n; ++l) axpy(img, Scalar(1), a.kalpha(lam, static_cast<unsigned>(l)));
            }
            cols.push_back(dst.project(img));
        }
        c.boundaries.push_back(matrix_from_columns(dst.quotient_dim, cols));
    }
    assert_square_zero(c, "build_cs_collapsed");
    return c;
}

namespace detail {

Subspace component_commutators(const MonogenicAlgebra& a, const std::vector<std::size_t>& coords, unsigned j) {
    return restrict_to(k_commutator_space(a, j), coords);
}

Matrix component_right_mult(const MonogenicAlgebra& a, const std::vector<std::size_t>& coords, const Vec& c) {
    std::vector<Vec> cols;
    for (auto i : coords) cols.push_back(sub_vec(a.kmul(a.base().basis(i), c), coords));
    return Matrix::from_columns(cols, coords.size(), a.field());
}

Subspace component_times(const MonogenicAlgebra& a, const std::vector<std::size_t>& coords, const Vec& c) {
    return image(component_right_mult(a, coords, c), Subspace::whole(coords.size(), a.field()));
}

Vec k_power(const MonogenicAlgebra& a, const Vec& c, unsigned e) {
    Vec out = a.base().unit();
    for (unsigned i = 0; i < e; ++i) out = a.kmul(out, c);
    return out;
}

bool is_nth_root_of_unity(const Scalar& w, std::size_t n) { return w.pow(static_cast<long>(n)).is_one(); }

}  // namespace detail

std::vector<ComponentComplex> decompose(const MonogenicAlgebra& a, std::size_t max_degree) {
    auto comps = eigen_split(a.base(), a.alpha());  // throws for non-diagonal alpha
    CollapseReport rep = check_collapse(a, collapse_window(a, max_degree));
    if (!rep.holds) throw HypothesisRefused("decomposition needs the collapse hypothesis, which fails");
    std::size_t n = a.n();
    const Field* f = a.field();
    std::vector<ComponentComplex> out;
    for (const auto& comp : comps) {
        if (comp.basis.empty()) continue;
        ComponentComplex cc{comp.eigenvalue, comp.basis, {}};
        const auto& coords = comp.basis;
        std::size_t c = coords.size();
        for (std::size_t r = 0; r <= max_degree; ++r) {
            unsigned t = static_cast<unsigned>(r % 2 == 0 ? (r / 2) * n : (r / 2 + 1) * n);
            Subspace kk = detail::component_commutators(a, coords, t);
            cc.complex.spaces.push_back(subquotient(c, kk.basis(), f));
            cc.complex.twists.push_back(t);
            cc.complex.dims.push_back(cc.complex.spaces.back().quotient_dim);
        }
        Scalar geo = Scalar::zero(f);
        for (std::size_t l = 0; l < n; ++l) geo += comp.eigenvalue.pow(static_cast<long>(l));
        Matrix times_ln = detail::component_right_mult(a, coords, a.lambda(n));
        cc.complex.boundaries.push_back(SparseMatrix(0, cc.complex.dims[0]));
        for (std::size_t r = 1; r <= max_degree; ++r) {
            const SubquotientSpace& src = cc.complex.spaces[r];
            const SubquotientSpace& dst = cc.complex.spaces[r - 1];
            std::vector<Vec> cols;
            for (std::size_t q = 0; q < src.quotient_dim; ++q) {
                Vec lam = src.lift(unit_vec(src.quotient_dim, q, f));
                Vec img = r % 2 == 1 ? scaled(times_ln.apply(lam), comp.eigenvalue - Scalar(1)) : scaled(lam, geo);
                cols.push_back(dst.project(img));
            }
            cc.complex.boundaries.push_back(matrix_from_columns(dst.quotient_dim, cols));
        }
        assert_square_zero(cc.complex, "decompose");
        out.push_back(std::move(cc));
    }
    return out;
}

std::string to_string(ClosedFormKind k) {
    switch (k) {
        case ClosedFormKind::collapsed: return "collapsed";
        case ClosedFormKind::eigencomponents: return "eigencomponents";
        case ClosedFormKind::alpha_identity: return "alpha-identity";
        case ClosedFormKind::rank1: return "rank1";
        case ClosedFormKind::dihedral_display: return "dihedral-display";
    }
    return "?";
}

namespace {


// {l in K^w : l c in target}
Subspace component_colon(const MonogenicAlgebra& a, const std::vector<std::size_t>& coords, const Vec& c,
                         const Subspace& target) {
    return preimage(detail::component_right_mult(a, coords, c), target);
}

ClosedForm collapsed_form(const MonogenicAlgebra& a, std::size_t max_degree) {
    ClosedForm cf{ClosedFormKind::collapsed, true, "", {}, {}};
    CollapseReport rep = check_collapse(a, collapse_window(a, max_degree));
    if (!rep.holds) throw HypothesisRefused("collapsed formula: collapse hypothesis fails");
    cf.hypothesis_note = "collapse verified for j <= " + std::to_string(collapse_window(a, max_degree));
    std::size_t n = a.n(), dk = a.dim_k();
    const Field* f = a.field();
    std::vector<std::size_t> all(dk);
    std::iota(all.begin(), all.end(), 0);
    Matrix odd_map(dk, dk, f), even_map(dk, dk, f);
    for (std::size_t b = 0; b < dk; ++b) {
        Vec lam = a.base().basis(b);
        Vec o = a.kmul(a.kalpha(lam, 1) - lam, a.lambda(n));
        Vec e = a.base().zero();
        for (std::size_t l = 0; l < n; ++l) axpy(e, Scalar(1), a.kalpha(lam, static_cast<unsigned>(l)));
        for (std::size_t i = 0; i < dk; ++i) {
            odd_map(i, b) = o[i];
            even_map(i, b) = e[i];
        }
    }
    Subspace whole = Subspace::whole(dk, f);
    Subspace im_odd = image(odd_map, whole), im_even = image(even_map, whole);
    for (std::size_t r = 0; r <= max_degree; ++r) {
        std::size_t m = r / 2;
        if (r == 0) {
            cf.dims.push_back(dk - (k_commutator_space(a, 0) + im_odd).dim());
        } else if (r % 2 == 1) {
            Subspace num = preimage(odd_map, k_commutator_space(a, static_cast<unsigned>(m * n)));
            Subspace den = k_commutator_space(a, static_cast<unsigned>((m + 1) * n)) + im_even;
            cf.dims.push_back(quotient_dim(num, den));
        } else {
            unsigned t = static_cast<unsigned>(m * n);  // r = 2(m-1) + 2
            Subspace num = preimage(even_map, k_commutator_space(a, t));
            Subspace den = k_commutator_space(a, t) + im_odd;
            cf.dims.push_back(quotient_dim(num, den));
        }
    }
    return cf;
}

ClosedForm eigen_form(const MonogenicAlgebra& a, std::size_t max_degree) {
    ClosedForm cf{ClosedFormKind::eigencomponents, true, "", {}, {}};
    std::vector<EigenComponent> comps;
    try {
        comps = eigen_split(a.base(), a.alpha());
    } catch (const std::invalid_argument& e) {
        throw HypothesisRefused(std::string("eigencomponent formula: ") + e.what());
    }
    if (!check_collapse(a, collapse_window(a, max_degree)).holds)
        throw HypothesisRefused("eigencomponent formula: collapse hypothesis fails");
    cf.hypothesis_note = "alpha diagonal on the basis; collapse verified";
    std::size_t n = a.n();
    cf.dims.assign(max_degree + 1, 0);
    for (const auto& comp : comps) {
        const auto& co = comp.basis;
        if (co.empty()) continue;
        std::size_t c = co.size();
        Subspace kk0 = detail::component_commutators(a, co, 0);
        if (comp.eigenvalue.is_one()) {
            cf.dims[0] += c - kk0.dim();
            continue;
        }
        Subspace ln = detail::component_times(a, co, a.lambda(n));
        cf.dims[0] += c - (kk0 + ln).dim();
        if (!detail::is_nth_root_of_unity(comp.eigenvalue, n)) continue;
        for (std::size_t r = 1; r <= max_degree; ++r) {
            std::size_t m = (r - 1) / 2;
            unsigned next = static_cast<unsigned>((m + 1) * n);
            Subspace kk_next = detail::component_commutators(a, co, next);
            if (r % 2 == 1) {
                Subspace num = component_colon(a, co, a.lambda(n),
                                               detail::component_commutators(a, co, static_cast<unsigned>(m * n)));
                cf.dims[r] += quotient_dim(num, kk_next);
            } else {
                cf.dims[r] += c - (kk_next + ln).dim();
            }
        }
    }
    return cf;
}

// A/[A,A], A/([A,A] + f'A), ([A,A]:f')/[A,A]
ClosedForm alpha_identity_form(const MonogenicAlgebra& a, std::size_t max_degree) {
    if (!a.alpha().is_identity()) throw HypothesisRefused("alpha-identity formula: alpha is not the identity");
    ClosedForm cf{ClosedFormKind::alpha_identity, true, "alpha = id", {}, {}};
    std::size_t n = a.n(), da = a.dim_a();
    const Field* f = a.field();
    std::vector<Vec> comm;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = i + 1; j < da; ++j) {
            Vec ei = unit_vec(da, i, f), ej = unit_vec(da, j, f);
            Vec v = a.a_multiply(ei, ej) - a.a_multiply(ej, ei);
            if (!is_zero(v)) comm.push_back(v);
        }
    Subspace aa = Subspace::span(da, comm, f);
    Vec fprime = a.a_zero();
    for (std::size_t i = 0; i < n; ++i)
        axpy(fprime, Scalar(static_cast<long>(n - i)), a.embed(a.lambda(i), n - i - 1));
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < da; ++j) cols.push_back(a.a_multiply(fprime, unit_vec(da, j, f)));
    Matrix mult = Matrix::from_columns(cols, da, f);
    Subspace fa = image(mult, Subspace::whole(da, f));
    Subspace colon = preimage(mult, aa);
    cf.notes.push_back("f' = " + a.format(fprime));
    for (std::size_t r = 0; r <= max_degree; ++r) {
        if (r == 0) cf.dims.push_back(da - aa.dim());
        else if (r % 2 == 1) cf.dims.push_back(da - (aa + fa).dim());
        else cf.dims.push_back(quotient_dim(colon, aa));
    }
    return cf;
}

struct Rank1Parts {
    std::vector<EigenComponent> comps;
    Vec g1n_minus_1;
};

Rank1Parts rank1_parts(const MonogenicAlgebra& a) {
    const Rank1Info& info = *a.rank1;
    const BaseAlgebra& k = a.base();
    const GroupData& g = *k.group();
    Rank1Parts p{eigen_split(k, a.alpha()), k.zero()};
    std::size_t g1n = g.power(info.g1, static_cast<unsigned>(a.n()));
    p.g1n_minus_1[g1n] += Scalar(1);
    p.g1n_minus_1[g.identity] -= Scalar(1);
    return p;
}

void check_rank1(const MonogenicAlgebra& a, std::size_t max_degree, ClosedForm& cf) {
    if (!a.rank1 || !a.base().group()) throw HypothesisRefused("rank1 formula: algebra is not given as rank-1 data");
    if (!check_collapse(a, collapse_window(a, max_degree)).holds)
        throw HypothesisRefused("rank1 formula: collapse hypothesis fails");
    cf.hypothesis_note = "rank-1 case '" + to_string(a.rank1->kase) + "'; collapse verified";
    if (!a.rank1->rewrite_log.empty()) cf.notes.push_back(a.rank1->rewrite_log);
}

ClosedForm rank1_hh(const MonogenicAlgebra& a, std::size_t max_degree) {
    ClosedForm cf{ClosedFormKind::rank1, true, "", {}, {}};
    check_rank1(a, max_degree, cf);
    Rank1Parts p = rank1_parts(a);
    std::size_t n = a.n(), dk = a.dim_k();
    cf.dims.assign(max_degree + 1, 0);
    bool twisted = a.rank1->kase != Rank1Info::Case::chi_n_trivial;
    if (twisted) cf.dims[0] = dk - k_commutator_space(a, 0).dim();
    for (const auto& comp : p.comps) {
        const auto& co = comp.basis;
        if (co.empty()) continue;
        std::size_t c = co.size();
        Subspace kk0 = detail::component_commutators(a, co, 0);
        bool root = !comp.eigenvalue.is_one() && detail::is_nth_root_of_unity(comp.eigenvalue, n);
        if (!twisted) {
            if (comp.eigenvalue.is_one()) cf.dims[0] += c - kk0.dim();
            else if (root) cf.dims[0] += c - (kk0 + detail::component_times(a, co, p.g1n_minus_1)).dim();
        }
        if (!root) continue;
        for (std::size_t r = 1; r <= max_degree; ++r) {
            std::size_t m = (r - 1) / 2;
            if (twisted) {
                cf.dims[r] += c - detail::component_commutators(a, co, static_cast<unsigned>((m + 1) * n)).dim();
            } else if (r % 2 == 1) {
                cf.dims[r] += quotient_dim(component_colon(a, co, p.g1n_minus_1, kk0), kk0);
            } else {
                cf.dims[r] += c - (kk0 + detail::component_times(a, co, p.g1n_minus_1)).dim();
            }
        }
    }
    return cf;
}

}  // namespace

namespace detail {

// C[g]/span(g^j - g^{u-j}) and C[g]h/C[g](g^2-1)h, as displayed for D_{2u}.
std::pair<std::size_t, std::size_t> dihedral_display_parts(const MonogenicAlgebra& a) {
    if (a.family != "dihedral") throw HypothesisRefused("dihedral display: algebra is not in the dihedral family");
    const BaseAlgebra& k = a.base();
    auto gi = k.label_index("g"), hi = k.label_index("h");
    if (!k.group() || !gi || !hi) throw HypothesisRefused("dihedral display: needs group elements labelled g and h");
    const GroupData& g = *k.group();
    unsigned u = static_cast<unsigned>(g.order_of(*gi));
    const Field* f = a.field();
    std::size_t dk = k.dim();
    std::vector<Vec> rot_rel;
    for (unsigned j = 1; j <= (u - 1) / 2; ++j) {
        Vec v = k.zero();
        v[g.power(*gi, j)] += Scalar(1);
        v[g.power(*gi, u - j)] -= Scalar(1);
        rot_rel.push_back(v);
    }
    std::vector<Vec> refl_rel;
    for (unsigned j = 0; j < u; ++j) {
        // g^j (g^2 - 1) h
        Vec v = k.zero();
        v[g.mul(g.power(*gi, j + 2), *hi)] += Scalar(1);
        v[g.mul(g.power(*gi, j), *hi)] -= Scalar(1);
        refl_rel.push_back(v);
    }
    std::size_t first = u - Subspace::span(dk, rot_rel, f).dim();
    std::size_t second = u - Subspace::span(dk, refl_rel, f).dim();
    return {first, second};
}

}  // namespace detail

ClosedForm hh_closed_form(const MonogenicAlgebra& a, ClosedFormKind kind, std::size_t max_degree) {
    switch (kind) {
        case ClosedFormKind::collapsed: return collapsed_form(a, max_degree);
        case ClosedFormKind::eigencomponents: return eigen_form(a, max_degree);
        case ClosedFormKind::alpha_identity: return alpha_identity_form(a, max_degree);
        case ClosedFormKind::rank1: return rank1_hh(a, max_degree);
        case ClosedFormKind::dihedral_display: {
            ClosedForm cf{kind, false, "", {}, {}};
            auto [rot, refl] = detail::dihedral_display_parts(a);
            CollapseReport rep = check_collapse(a, collapse_window(a, max_degree));
            cf.hypotheses_verified = rep.holds;
            std::ostringstream note;
            note << "collapse " << (rep.holds ? "holds" : "fails");
            for (const auto& e : rep.entries)
                if (!e.full) {
                    note << " ([K,K]_{alpha^" << e.j << "} has dim " << e.commutator_dim << " < " << a.dim_k() << ")";
                    break;
                }
            cf.hypothesis_note = note.str();
            for (std::size_t r = 0; r <= max_degree; ++r) cf.dims.push_back(r == 0 ? rot + refl : refl);
            return cf;
        }
    }
    throw std::logic_error("unknown closed form");
}

std::vector<ClosedFormKind> applicable_hh_forms(const MonogenicAlgebra& a) {
    std::vector<ClosedFormKind> out;
    bool collapse = check_collapse(a, collapse_window(a, 8)).holds;
    if (collapse) out.push_back(ClosedFormKind::collapsed);
    if (collapse && a.alpha().is_diagonal()) out.push_back(ClosedFormKind::eigencomponents);
    if (a.alpha().is_identity()) out.push_back(ClosedFormKind::alpha_identity);
    if (collapse && a.rank1 && a.base().group()) out.push_back(ClosedFormKind::rank1);
    if (a.family == "dihedral") out.push_back(ClosedFormKind::dihedral_display);
    return out;
}

std::optional<unsigned> alpha_n_order(const MonogenicAlgebra& a) {
    auto ord = a.alpha_order();
    if (!ord) return std::nullopt;
    return *ord / std::gcd(*ord, static_cast<unsigned>(a.n()));
}

bool periodicity_holds(const std::vector<std::size_t>& dims, unsigned v, unsigned max_m) {
    if (dims.size() < 2 * (max_m + v) + 3) throw std::invalid_argument("periodicity: not enough degrees computed");
    for (unsigned m = 0; m <= max_m; ++m) {
        if (dims[2 * m + 1] != dims[2 * (m + v) + 1]) return false;
        if (dims[2 * m + 2] != dims[2 * (m + v) + 2]) return false;
    }
    return true;
}

bool periodicity_check(const MonogenicAlgebra& a, unsigned v, unsigned max_m) {
    const Matrix& an = a.alpha_power(static_cast<unsigned>(a.n() * v));
    if (!an.is_identity()) throw std::invalid_argument("periodicity: alpha^{nv} != id for v = " + std::to_string(v));
    std::size_t top = 2 * (max_m + v) + 2;
    ChainComplex c = build_cs(a, Bimodule::regular(a), top + 1);
    return periodicity_holds(homology_dims(c, top), v, max_m);
}

}  // namespace mhc
