#include "mhc/cyclic.hpp"

#include <sstream>

namespace mhc {

namespace {

SparseVec shifted(const SparseVec& v, std::size_t by) {
    SparseVec out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) out.emplace_back(static_cast<std::uint32_t>(i + by), x);
    return out;
}

// entries of v in [lo, lo + len), re-indexed from 0
SparseVec window(const SparseVec& v, std::size_t lo, std::size_t len) {
    SparseVec out;
    for (const auto& [i, x] : v)
        if (i >= lo && i < lo + len) out.emplace_back(static_cast<std::uint32_t>(i - lo), x);
    return out;
}

Vec k_alpha_sum(const MonogenicAlgebra& a, const Vec& lam, unsigned start, unsigned step, unsigned count) {
    Vec s = a.base().zero();
    for (unsigned u = 0; u < count; ++u) axpy(s, Scalar(1), a.kalpha(lam, start + u * step));
    return s;
}

}  // namespace

std::vector<std::string> MixedComplex::identity_failures() const {
    std::vector<std::string> out;
    for (auto r : complex.square_zero_failures()) out.push_back("bb != 0 at degree " + std::to_string(r + 1));
    std::size_t top = max_degree();
    for (std::size_t r = 0; r + 1 < B.size(); ++r)
        if (!(B[r + 1] * B[r]).is_zero()) out.push_back("BB != 0 at degree " + std::to_string(r));
    for (std::size_t r = 0; r < B.size() && r + 1 <= top; ++r) {
        SparseMatrix s = b(r + 1) * B[r];
        if (r >= 1) s = s + B[r - 1] * b(r);
        if (!s.is_zero()) out.push_back("bB + Bb != 0 at degree " + std::to_string(r));
    }
    return out;
}

SparseMatrix connes_D(const MonogenicAlgebra& a, const ChainComplex& cs, std::size_t r) {
    if (r + 1 >= cs.spaces.size()) throw std::out_of_range("connes_D: degree beyond the complex");
    const SubquotientSpace& src = cs.spaces[r];
    const SubquotientSpace& dst = cs.spaces[r + 1];
    const std::size_t n = a.n(), dk = a.dim_k();
    SparseMatrix out(dst.quotient_dim, src.quotient_dim);
    for (std::size_t q = 0; q < src.quotient_dim; ++q) {
        std::size_t p = src.free_coords[q], j = p / dk;
        Vec lam = a.base().basis(p % dk);
        Vec img = a.a_zero();
        if (r % 2 == 0) {
            unsigned m = static_cast<unsigned>(r / 2);
            if (j >= 1) axpy(img, Scalar(1), a.embed(k_alpha_sum(a, lam, m * n, 1, j), j - 1));
            for (unsigned u = 0; u < m; ++u) {
                KPoly poly(j + n, a.base().zero());
                for (std::size_t i = 1; i <= n; ++i) {
                    Vec inner = k_alpha_sum(a, lam, static_cast<unsigned>(n * u), 1, static_cast<unsigned>(i));
                    axpy(poly[j + i - 1], Scalar(1), a.kmul(a.lambda(n - i), inner));
                }
                axpy(img, Scalar(1), a.reduce(a.divide_by_f(poly).first));
            }
        } else if (j == n - 1) {
            unsigned m = static_cast<unsigned>(r / 2);
            Vec s = k_alpha_sum(a, lam, 0, static_cast<unsigned>(n), m + 1);
            img = a.embed(s - a.kalpha(s, 1), 0);
        }
        out.set_col(q, to_sparse(dst.project(img)));
    }
    return out;
}

SparseMatrix connes_D_collapsed(const MonogenicAlgebra& a, const ChainComplex& cs, std::size_t r) {
    if (r + 1 >= cs.spaces.size()) throw std::out_of_range("connes_D: degree beyond the complex");
    const SubquotientSpace& src = cs.spaces[r];
    const SubquotientSpace& dst = cs.spaces[r + 1];
    SparseMatrix out(dst.quotient_dim, src.quotient_dim);
    if (r % 2 == 0) return out;
    unsigned m = static_cast<unsigned>(r / 2);
    for (std::size_t q = 0; q < src.quotient_dim; ++q) {
        Vec s = k_alpha_sum(a, a.base().basis(src.free_coords[q]), 0, static_cast<unsigned>(a.n()), m + 1);
        out.set_col(q, to_sparse(dst.project(s - a.kalpha(s, 1))));
    }
    return out;
}

SparseMatrix connes_D_component(const MonogenicAlgebra& a, const ComponentComplex& c, std::size_t r) {
    const auto& sp = c.complex.spaces;
    if (r + 1 >= sp.size()) throw std::out_of_range("connes_D: degree beyond the complex");
    SparseMatrix out(sp[r + 1].quotient_dim, sp[r].quotient_dim);
    if (r % 2 == 0) return out;
    std::size_t m = r / 2;
    Scalar geo = Scalar::zero(a.field());
    for (std::size_t u = 0; u <= m; ++u) geo += c.eigenvalue.pow(static_cast<long>(a.n() * u));
    Scalar k = (Scalar(1) - c.eigenvalue) * geo;
    for (std::size_t q = 0; q < sp[r].quotient_dim; ++q) {
        Vec lam = unit_vec(c.basis.size(), sp[r].free_coords[q], a.field());
        out.set_col(q, to_sparse(sp[r + 1].project(scaled(lam, k))));
    }
    return out;
}

SparseMatrix connes_D_transferred(const BarComplex& bar, std::size_t r) {
    return bar.psi(r + 1) * bar.connes_B(r) * bar.phi(r);
}

namespace {

void require_mixed(const MixedComplex& m, const char* what) {
    auto bad = m.identity_failures();
    if (!bad.empty()) throw IdentityFailure(std::string(what) + ": " + bad.front());
}

}  // namespace

MixedComplex build_mixed(const MonogenicAlgebra& a, std::size_t max_degree, bool cross_check) {
    MixedComplex mc;
    mc.complex = build_cs(a, Bimodule::regular(a), max_degree);
    for (std::size_t r = 0; r < max_degree; ++r) mc.B.push_back(connes_D(a, mc.complex, r));
    require_mixed(mc, "build_mixed");
    if (cross_check) {
        Resolution res(a);
        Bimodule reg = Bimodule::regular(a);
        BarComplex bar(res, reg);
        for (std::size_t r = 0; r < max_degree; ++r)
            if (!(mc.B[r] == connes_D_transferred(bar, r)))
                throw IdentityFailure("build_mixed: D_" + std::to_string(r) + " differs from psi B phi");
    }
    return mc;
}

MixedComplex build_mixed_collapsed(const MonogenicAlgebra& a, std::size_t max_degree) {
    MixedComplex mc;
    mc.complex = build_cs_collapsed(a, max_degree);
    for (std::size_t r = 0; r < max_degree; ++r) mc.B.push_back(connes_D_collapsed(a, mc.complex, r));
    require_mixed(mc, "build_mixed_collapsed");
    return mc;
}

std::vector<ComponentMixed> build_mixed_components(const MonogenicAlgebra& a, std::size_t max_degree) {
    std::vector<ComponentMixed> out;
    for (auto& c : decompose(a, max_degree)) {
        MixedComplex mc;
        mc.complex = c.complex;
        for (std::size_t r = 0; r < max_degree; ++r) mc.B.push_back(connes_D_component(a, c, r));
        require_mixed(mc, "build_mixed_components");
        out.push_back({std::move(c), std::move(mc)});
    }
    return out;
}

MixedComplex bar_mixed(const BarComplex& bar, std::size_t max_degree) {
    MixedComplex mc;
    mc.complex = bar.complex(max_degree);
    for (std::size_t r = 0; r < max_degree; ++r) mc.B.push_back(bar.connes_B(r));
    return mc;
}

std::vector<std::size_t> total_offsets(const MixedComplex& m, std::size_t N) {
    std::vector<std::size_t> off{0};
    for (std::size_t p = 0; 2 * p <= N; ++p) off.push_back(off.back() + m.complex.dims.at(N - 2 * p));
    return off;
}

ChainComplex bc_total(const MixedComplex& m, std::size_t N) {
    if (N > m.max_degree()) throw std::out_of_range("bc_total: degree beyond the mixed complex");
    ChainComplex t;
    for (std::size_t k = 0; k <= N; ++k) t.dims.push_back(total_offsets(m, k).back());
    t.boundaries.push_back(SparseMatrix(0, t.dims[0]));
    for (std::size_t k = 1; k <= N; ++k) {
        auto src = total_offsets(m, k), dst = total_offsets(m, k - 1);
        SparseMatrix d(t.dims[k - 1], t.dims[k]);
        for (std::size_t p = 0; 2 * p <= k; ++p) {
            std::size_t deg = k - 2 * p;
            for (std::size_t c = 0; c < m.complex.dims[deg]; ++c) {
                SparseBuilder col;
                if (deg >= 1) col.add(shifted(m.b(deg).col(c), dst[p]));
                if (p >= 1) col.add(shifted(m.B.at(deg).col(c), dst[p - 1]));
                d.set_col(src[p] + c, col.finish());
            }
        }
        t.boundaries.push_back(std::move(d));
    }
    return t;
}

std::vector<std::size_t> hc_dims(const MixedComplex& m, std::size_t upto) {
    if (upto + 1 > m.max_degree()) throw std::out_of_range("hc_dims: need one more degree of the mixed complex");
    return homology_dims(bc_total(m, upto + 1), upto);
}

// ---------------------------------------------------------------- closed forms

namespace {

Subspace colon(const MonogenicAlgebra& a, const std::vector<std::size_t>& co, const Vec& c, const Subspace& target) {
    return preimage(detail::component_right_mult(a, co, c), target);
}

void finish_readings(CyclicClosedForm& cf) {
    cf.readings_differ = cf.dims != cf.displayed_dims;
    if (cf.readings_differ) {
        std::ostringstream s;
        s << "odd-degree numerator: displayed exponent m gives";
        for (auto d : cf.displayed_dims) s << ' ' << d;
        s << "; cycle-condition exponent m+1 gives";
        for (auto d : cf.dims) s << ' ' << d;
        cf.notes.push_back(s.str());
    }
}

CyclicClosedForm eigen_hc(const MonogenicAlgebra& a, std::size_t max_degree) {
    CyclicClosedForm cf{ClosedFormKind::eigencomponents, true, "", {}, {}, false, {}};
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
    cf.displayed_dims.assign(max_degree + 1, 0);
    for (const auto& comp : comps) {
        const auto& co = comp.basis;
        if (co.empty()) continue;
        std::size_t c = co.size();
        Subspace kk0 = detail::component_commutators(a, co, 0);
        bool root = !comp.eigenvalue.is_one() && detail::is_nth_root_of_unity(comp.eigenvalue, n);
        for (std::size_t r = 0; r <= max_degree; ++r) {
            std::size_t m = r / 2, v = 0, vd = 0;
            if (comp.eigenvalue.is_one()) {
                v = vd = r % 2 == 0 ? c - kk0.dim() : 0;
            } else if (!root) {
                v = vd = r % 2 == 0 ? c - (kk0 + detail::component_times(a, co, a.lambda(n))).dim() : 0;
            } else if (r % 2 == 0) {
                Vec ln = detail::k_power(a, a.lambda(n), static_cast<unsigned>(m + 1));
                v = vd = c - (kk0 + detail::component_times(a, co, ln)).dim();
            } else {
                Subspace den = detail::component_commutators(a, co, static_cast<unsigned>((m + 1) * n));
                v = quotient_dim(colon(a, co, detail::k_power(a, a.lambda(n), static_cast<unsigned>(m + 1)), kk0), den);
                vd = quotient_dim(colon(a, co, detail::k_power(a, a.lambda(n), static_cast<unsigned>(m)), kk0), den);
            }
            cf.dims[r] += v;
            cf.displayed_dims[r] += vd;
        }
    }
    finish_readings(cf);
    return cf;
}

CyclicClosedForm rank1_hc(const MonogenicAlgebra& a, std::size_t max_degree) {
    CyclicClosedForm cf{ClosedFormKind::rank1, true, "", {}, {}, false, {}};
    if (!a.rank1 || !a.base().group()) throw HypothesisRefused("rank1 formula: algebra is not given as rank-1 data");
    if (!check_collapse(a, collapse_window(a, max_degree)).holds)
        throw HypothesisRefused("rank1 formula: collapse hypothesis fails");
    const Rank1Info& info = *a.rank1;
    cf.hypothesis_note = "rank-1 case '" + to_string(info.kase) + "'; collapse verified";
    if (!info.rewrite_log.empty()) cf.notes.push_back(info.rewrite_log);
    const BaseAlgebra& k = a.base();
    const GroupData& g = *k.group();
    std::size_t n = a.n(), dk = a.dim_k();
    Vec t = k.zero();
    t[g.power(info.g1, static_cast<unsigned>(n))] += Scalar(1);
    t[g.identity] -= Scalar(1);
    auto comps = eigen_split(k, a.alpha());
    bool twisted = info.kase != Rank1Info::Case::chi_n_trivial;
    cf.dims.assign(max_degree + 1, 0);
    for (std::size_t r = 0; r <= max_degree; r += 2) cf.dims[r] = twisted ? dk - k_commutator_space(a, 0).dim() : 0;
    cf.displayed_dims = cf.dims;
    for (const auto& comp : comps) {
        const auto& co = comp.basis;
        if (co.empty()) continue;
        std::size_t c = co.size();
        Subspace kk0 = detail::component_commutators(a, co, 0);
        bool root = !comp.eigenvalue.is_one() && detail::is_nth_root_of_unity(comp.eigenvalue, n);
        for (std::size_t r = 0; r <= max_degree; ++r) {
            std::size_t m = r / 2, v = 0, vd = 0;
            if (twisted) {
                if (r % 2 == 1 && root)
                    v = vd = c - detail::component_commutators(a, co, static_cast<unsigned>((m + 1) * n)).dim();
            } else if (r % 2 == 0) {
                if (comp.eigenvalue.is_one()) v = vd = c - kk0.dim();
                else if (root) {
                    Vec tp = detail::k_power(a, t, static_cast<unsigned>(m + 1));
                    v = vd = c - (kk0 + detail::component_times(a, co, tp)).dim();
                }
            } else if (root) {
                v = quotient_dim(colon(a, co, detail::k_power(a, t, static_cast<unsigned>(m + 1)), kk0), kk0);
                vd = quotient_dim(colon(a, co, detail::k_power(a, t, static_cast<unsigned>(m)), kk0), kk0);
            }
            cf.dims[r] += v;
            cf.displayed_dims[r] += vd;
        }
    }
    finish_readings(cf);
    return cf;
}

}  // namespace

CyclicClosedForm hc_closed_form(const MonogenicAlgebra& a, ClosedFormKind kind, std::size_t max_degree) {
    switch (kind) {
        case ClosedFormKind::eigencomponents: return eigen_hc(a, max_degree);
        case ClosedFormKind::rank1: return rank1_hc(a, max_degree);
        case ClosedFormKind::dihedral_display: {
            ClosedForm hh = hh_closed_form(a, kind, max_degree);
            CyclicClosedForm cf{kind, hh.hypotheses_verified, hh.hypothesis_note, {}, {}, false, {}};
            auto [rot, refl] = detail::dihedral_display_parts(a);
            for (std::size_t r = 0; r <= max_degree; ++r) cf.dims.push_back(r % 2 == 0 ? rot + refl : refl);
            cf.displayed_dims = cf.dims;
            return cf;
        }
        default:
            throw HypothesisRefused("no cyclic closed form of kind " + to_string(kind));
    }
}

std::vector<ClosedFormKind> applicable_hc_forms(const MonogenicAlgebra& a) {
    std::vector<ClosedFormKind> out;
    for (auto k : applicable_hh_forms(a))
        if (k == ClosedFormKind::eigencomponents || k == ClosedFormKind::rank1 || k == ClosedFormKind::dihedral_display)
            out.push_back(k);
    return out;
}

// ---------------------------------------------------------------- SBI

bool SbiReport::all_pass(const std::string& item) const {
    for (const auto& i : items)
        if (i.item == item && !i.pass) return false;
    return true;
}

namespace {

// Homology bookkeeping for one component's mixed complex.
class SbiContext {
public:
    SbiContext(const MonogenicAlgebra& a, const ComponentMixed& cm, std::size_t top)
        : a_(a), cm_(cm), x_(cm.mixed), tot_(bc_total(x_, top)) {}

    const MixedComplex& x() const { return x_; }
    const ChainComplex& tot() const { return tot_; }

    HomologyCoordinates hc(std::size_t N) const {
        return HomologyCoordinates(tot_.dims[N], N >= 1 ? &tot_.d(N) : nullptr, &tot_.d(N + 1));
    }
    HomologyCoordinates hh(std::size_t r) const {
        return HomologyCoordinates(x_.complex.dims[r], r >= 1 ? &x_.b(r) : nullptr, &x_.b(r + 1));
    }
    // v in X_{N-2p} placed in column p of Tot_N
    SparseVec place(const SparseVec& v, std::size_t N, std::size_t p) const {
        return shifted(v, total_offsets(x_, N)[p]);
    }
    SparseVec column(const SparseVec& v, std::size_t N, std::size_t p) const {
        auto off = total_offsets(x_, N);
        return window(v, off[p], off[p + 1] - off[p]);
    }
    // Drop column 0: Tot_N -> Tot_{N-2}
    SparseVec S(const SparseVec& v, std::size_t N) const {
        auto off = total_offsets(x_, N);
        SparseVec out;
        for (const auto& [i, s] : v)
            if (i >= off[1]) out.emplace_back(static_cast<std::uint32_t>(i - off[1]), s);
        return out;
    }
    SparseMatrix S_matrix(std::size_t N) const {
        SparseMatrix m(tot_.dims[N - 2], tot_.dims[N]);
        for (std::size_t c = 0; c < tot_.dims[N]; ++c) m.set_col(c, S(sparse_unit(static_cast<std::uint32_t>(c)), N));
        return m;
    }
    // [lift(v) * c] re-projected from X_from to X_to
    SparseVec times(const SparseVec& v, std::size_t from, std::size_t to, const Vec& c, const Scalar& s) const {
        const auto& sp = x_.complex.spaces;
        const auto& co = cm_.component.basis;
        Vec lam = sp[from].lift(to_dense(v, sp[from].quotient_dim, a_.field()));
        Vec img = detail::component_right_mult(a_, co, c).apply(lam);
        return to_sparse(sp[to].project(scaled(img, s)));
    }
    bool in_span(const SparseVec& v, const std::vector<const SparseMatrix*>& ms) const {
        SparseEchelon e;
        for (auto* m : ms)
            for (std::size_t j = 0; j < m->cols(); ++j) e.insert(m->col(j));
        return e.contains(v);
    }

private:
    const MonogenicAlgebra& a_;
    const ComponentMixed& cm_;
    const MixedComplex& x_;
    ChainComplex tot_;
};

Scalar factorial_inverse(std::size_t m) {
    mpz_class f = 1;
    for (std::size_t i = 2; i <= m; ++i) f *= static_cast<unsigned long>(i);
    return Scalar(mpq_class(1, f));
}

}  // namespace

SbiReport sbi_check(const MonogenicAlgebra& a, std::size_t max_m) {
    SbiReport rep;
    const std::size_t n = a.n(), top = 2 * max_m + 6;
    const Vec& ln = a.lambda(n);
    auto comps = build_mixed_components(a, top);
    for (const auto& cm : comps) {
        SbiContext ctx(a, cm, top - 1);
        const Scalar& w = cm.component.eigenvalue;
        std::string wname = w.str();
        auto add = [&](const std::string& item, std::size_t m, bool pass, std::string detail) {
            rep.items.push_back({item, wname, m, pass, std::move(detail)});
        };
        bool special = !w.is_one() && detail::is_nth_root_of_unity(w, n);
        for (std::size_t m = 0; m <= max_m; ++m) {
            if (!special) {
                // S: HC_{2m+2} -> HC_{2m} is an isomorphism
                auto src = ctx.hc(2 * m + 2), dst = ctx.hc(2 * m);
                auto ind = induced_on_homology(src, dst, ctx.S_matrix(2 * m + 2));
                bool ok = ind && src.dim() == dst.dim() && rank(*ind) == src.dim();
                add("1", m, ok, "dim HC_" + std::to_string(2 * m + 2) + " = " + std::to_string(src.dim()) +
                                    ", dim HC_" + std::to_string(2 * m) + " = " + std::to_string(dst.dim()));
                continue;
            }
            const std::size_t N = 2 * m;
            const std::size_t x0 = ctx.x().complex.dims[0];
            // (a) iota_{2m}: X_0 -> column m of Tot_{2m} lands on cycles, S iota_{2m+2} = iota_{2m}, onto HC_{2m}
            {
                auto hcN = ctx.hc(N);
                bool ok = true;
                std::vector<Vec> coords;
                for (std::size_t q = 0; q < x0; ++q) {
                    SparseVec e = sparse_unit(static_cast<std::uint32_t>(q));
                    SparseVec v = ctx.place(e, N, m);
                    if (!(ctx.S(ctx.place(e, N + 2, m + 1), N + 2) == v)) ok = false;
                    auto c = hcN.coordinates(v);
                    if (!c) {
                        ok = false;
                        continue;
                    }
                    coords.push_back(*c);
                }
                std::size_t rk = coords.empty() ? 0 : rank(Matrix::from_columns(coords, hcN.dim(), a.field()));
                ok = ok && rk == hcN.dim();
                add("a", m, ok, "image rank " + std::to_string(rk) + " of dim HC_" + std::to_string(N) + " = " +
                                    std::to_string(hcN.dim()));
            }
            // (b) i([l]) = (1/m!) [l lambda_n^m] in column m
            {
                auto hhN = ctx.hh(N);
                auto hcN = ctx.hc(N);
                bool ok = true;
                Vec lnm = detail::k_power(a, ln, static_cast<unsigned>(m));
                for (const auto& z : hhN.representatives()) {
                    SparseVec lhs = ctx.place(z, N, 0);
                    SparseVec rhs = ctx.place(ctx.times(z, N, 0, lnm, factorial_inverse(m)), N, m);
                    SparseVec diff = sparse_add(lhs, Scalar(-1), rhs);
                    if (!hcN.is_cycle(diff) || !hcN.is_boundary(diff)) ok = false;
                }
                add("b", m, ok, std::to_string(hhN.dim()) + " HH_" + std::to_string(N) + " representatives");
            }
            // (c) B: HC_{2m} -> HH_{2m+1} vanishes
            {
                auto hcN = ctx.hc(N);
                bool ok = true;
                for (const auto& y : hcN.representatives()) {
                    SparseVec img = ctx.x().B[N].apply(ctx.column(y, N, 0));
                    if (!ctx.in_span(img, {&ctx.x().b(N + 2)})) ok = false;
                }
                add("c", m, ok, std::to_string(hcN.dim()) + " HC_" + std::to_string(N) + " representatives");
            }
            // (d) S([l] x^{n-1}) = (1/(m+1)) [l lambda_n] x^{n-1}, HC_{2m+3} -> HC_{2m+1}
            {
                const std::size_t M = 2 * m + 3;
                auto hcM = ctx.hc(M);
                bool ok = true;
                for (const auto& z : hcM.representatives()) {
                    SparseVec lhs = ctx.column(ctx.S(z, M), M - 2, 0);
                    SparseVec rhs = ctx.times(ctx.column(z, M, 0), M, M - 2, ln, Scalar(mpq_class(1, m + 1)));
                    SparseVec diff = sparse_add(lhs, Scalar(-1), rhs);
                    if (!ctx.in_span(diff, {&ctx.x().b(M - 1), &ctx.x().B[M - 3]})) ok = false;
                }
                add("d", m, ok, std::to_string(hcM.dim()) + " HC_" + std::to_string(M) + " representatives");
            }
            // (e) i: HH_{2m+1} -> HC_{2m+1} is injective
            {
                const std::size_t M = N + 1;
                auto hhM = ctx.hh(M);
                auto hcM = ctx.hc(M);
                bool ok = true;
                std::vector<Vec> coords;
                for (const auto& z : hhM.representatives()) {
                    auto c = hcM.coordinates(ctx.place(z, M, 0));
                    if (!c) ok = false;
                    else coords.push_back(*c);
                }
                std::size_t rk = coords.empty() ? 0 : rank(Matrix::from_columns(coords, hcM.dim(), a.field()));
                ok = ok && rk == hhM.dim();
                add("e", m, ok, "rank " + std::to_string(rk) + " of dim HH_" + std::to_string(M) + " = " +
                                    std::to_string(hhM.dim()));
            }
            // (f) B([l] x^{n-1}) = (m+1)(1-w) [l], HC_{2m+1} -> HH_{2m+2}
            {
                const std::size_t M = N + 1;
                auto hcM = ctx.hc(M);
                bool ok = true;
                Scalar k = Scalar(static_cast<long>(m + 1)) * (Scalar(1) - w);
                for (const auto& z : hcM.representatives()) {
                    SparseVec t = ctx.column(z, M, 0);
                    SparseVec lhs = ctx.x().B[M].apply(t);
                    SparseVec rhs = ctx.times(t, M, M + 1, a.base().unit(), k);
                    if (!ctx.in_span(sparse_add(lhs, Scalar(-1), rhs), {&ctx.x().b(M + 2)})) ok = false;
                }
                add("f", m, ok, std::to_string(hcM.dim()) + " HC_" + std::to_string(M) + " representatives");
            }
        }
    }
    return rep;
}

}  // namespace mhc
