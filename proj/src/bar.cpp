#include "mhc/bar.hpp"

#include "mhc/hypotheses.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mhc {

namespace {
enum Kind { kB = 0, kConnes, kDSmall, kPhi, kPsi, kOmega };
}

BarComplex::BarComplex(const Resolution& res, const Bimodule& m)
    : res_(&res), m_(&m), cache_(std::make_unique<Cache>()) {}

const SubquotientSpace& BarComplex::quotient(unsigned s) const {
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->quotients.find(s);
        if (it != cache_->quotients.end()) return *it->second;
    }
    auto q = std::make_unique<SubquotientSpace>(
        subquotient(m_->dim(), twisted_commutator_subspace(algebra(), *m_, s), algebra().field()));
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto& slot = cache_->quotients[s];
    if (!slot) slot = std::move(q);
    return *slot;
}

std::size_t BarComplex::tuple_count(std::size_t r) const {
    std::size_t c = 1;
    for (std::size_t i = 0; i < r; ++i) c *= algebra().n() - 1;
    return c;
}

Exps BarComplex::tuple(std::size_t r, std::size_t ord) const {
    std::size_t base = algebra().n() - 1;
    Exps t(r);
    for (std::size_t k = r; k-- > 0;) {
        t[k] = static_cast<std::uint8_t>(1 + ord % base);
        ord /= base;
    }
    return t;
}

std::size_t BarComplex::ordinal(const Exps& t) const {
    std::size_t base = algebra().n() - 1, ord = 0;
    for (auto e : t) ord = ord * base + (e - 1);
    return ord;
}

const std::vector<std::size_t>& BarComplex::offsets(std::size_t r) const {
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->offsets.find(r);
        if (it != cache_->offsets.end()) return it->second;
    }
    std::size_t tc = tuple_count(r);
    std::vector<std::size_t> off(tc + 1, 0);
    for (std::size_t o = 0; o < tc; ++o) {
        unsigned s = 0;
        for (auto e : tuple(r, o)) s += e;
        off[o + 1] = off[o] + quotient(s).quotient_dim;
    }
    std::lock_guard<std::mutex> lk(cache_->mu);
    return cache_->offsets.emplace(r, std::move(off)).first->second;
}

std::size_t BarComplex::offset(std::size_t r, std::size_t ord) const { return offsets(r)[ord]; }
std::size_t BarComplex::dim(std::size_t r) const { return offsets(r).back(); }

std::pair<std::size_t, std::size_t> BarComplex::locate(std::size_t r, std::size_t coord) const {
    const auto& off = offsets(r);
    auto it = std::upper_bound(off.begin(), off.end(), coord);
    std::size_t ord = static_cast<std::size_t>(it - off.begin()) - 1;
    return {ord, coord - off[ord]};
}

SparseVec BarComplex::project(const Exps& t, const Vec& m) const {
    unsigned s = 0;
    for (auto e : t) s += e;
    const SubquotientSpace& q = quotient(s);
    std::size_t base = offset(t.size(), ordinal(t));
    SparseBuilder b;
    Vec p = q.project(m);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) b.add(static_cast<std::uint32_t>(base + i), p[i]);
    return b.finish();
}

Vec BarComplex::lift(std::size_t r, std::size_t coord) const {
    auto [ord, qc] = locate(r, coord);
    unsigned s = 0;
    for (auto e : tuple(r, ord)) s += e;
    const SubquotientSpace& q = quotient(s);
    return unit_vec(m_->dim(), q.free_coords[qc], algebra().field());
}

Vec BarComplex::move_right(const Vec& m, const Vec& a) const {
    if (m_->is_regular()) return algebra().a_multiply(m, a);
    return m_->right_a(m, a);
}

Vec BarComplex::move_left_x(std::size_t e, const Vec& m) const {
    if (e == 0) return m;
    if (m_->is_regular()) return algebra().a_multiply(algebra().x_power(e), m);
    return m_->left_x(e, m);
}

SparseVec BarComplex::transfer_bar(std::size_t r, const Vec& m, const Tensor& g) const {
    // group by tuple so each quotient projection happens once
    std::map<Exps, Vec> acc;
    for (const auto& [ex, head] : g.terms) {
        if (ex.size() != r + 1) throw std::logic_error("transfer_bar: wrong tensor length");
        Vec v = move_left_x(ex.back(), move_right(m, head));
        if (is_zero(v)) continue;
        Exps t(ex.begin(), ex.end() - 1);
        auto it = acc.find(t);
        if (it == acc.end()) acc.emplace(t, std::move(v));
        else axpy(it->second, Scalar(1), v);
    }
    SparseBuilder b;
    for (const auto& [t, v] : acc) b.add(project(t, v));
    return b.finish();
}

SparseVec BarComplex::transfer_small(std::size_t r, const Vec& m, const Tensor& g) const {
    Vec acc = zero_vec(m_->dim(), algebra().field());
    for (const auto& [ex, head] : g.terms) {
        if (ex.size() != 1) throw std::logic_error("transfer_small: not an element of C'");
        axpy(acc, Scalar(1), move_left_x(ex[0], move_right(m, head)));
    }
    return to_sparse(small_space(r).project(acc));
}

const SparseMatrix& BarComplex::cached(int kind, std::size_t r, const std::function<SparseMatrix()>& make) const {
    Key key{kind, r};
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->matrices.find(key);
        if (it != cache_->matrices.end()) return *it->second;
    }
    auto mat = std::make_unique<SparseMatrix>(make());
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto& slot = cache_->matrices[key];
    if (!slot) slot = std::move(mat);
    return *slot;
}

const SparseMatrix& BarComplex::b(std::size_t r) const {
    return cached(kB, r, [&] {
        if (r == 0) return SparseMatrix(0, dim(0));
        SparseMatrix out(dim(r - 1), dim(r));
        for (std::size_t c = 0; c < dim(r); ++c) {
            Exps t = tuple(r, locate(r, c).first);
            out.set_col(c, transfer_bar(r - 1, lift(r, c), res_->b_bar_generator(t)));
        }
        return out;
    });
}

const SparseMatrix& BarComplex::connes_B(std::size_t r) const {
    return cached(kConnes, r, [&] {
        if (!m_->is_regular()) throw std::logic_error("Connes B needs M = A");
        const MonogenicAlgebra& a = algebra();
        std::size_t dk = a.dim_k();
        SparseMatrix out(dim(r + 1), dim(r));
        for (std::size_t c = 0; c < dim(r); ++c) {
            Exps t = tuple(r, locate(r, c).first);
            Vec m = lift(r, c);
            SparseBuilder acc;
            for (std::size_t p = 0; p < m.size(); ++p) {
                if (m[p].is_zero()) continue;
                std::size_t i0 = p / dk, bidx = p % dk;
                if (i0 == 0) continue;  // a_0 in K vanishes in Abar
                for (std::size_t i = 0; i <= r; ++i) {
                    // 1 (x) a_i .. a_r (x) a_0 (x) a_1 .. a_{i-1}
                    Exps nt;
                    unsigned shift = 0;
                    if (i == 0) {
                        nt.push_back(static_cast<std::uint8_t>(i0));
                        nt.insert(nt.end(), t.begin(), t.end());
                    } else {
                        for (std::size_t k = i - 1; k < r; ++k) {
                            nt.push_back(t[k]);
                            shift += t[k];
                        }
                        nt.push_back(static_cast<std::uint8_t>(i0));
                        nt.insert(nt.end(), t.begin(), t.begin() + (i - 1));
                    }
                    Scalar sign = (i * r) % 2 ? Scalar(-1) : Scalar(1);
                    Vec head = a.embed(a.kalpha(a.base().basis(bidx), shift), 0);
                    acc.add(project(nt, head), sign * m[p]);
                }
            }
            out.set_col(c, acc.finish());
        }
        return out;
    });
}

const SparseMatrix& BarComplex::d_small(std::size_t r) const {
    return cached(kDSmall, r, [&] {
        if (r == 0) return SparseMatrix(0, small_dim(0));
        const SubquotientSpace& q = small_space(r);
        SparseMatrix out(small_dim(r - 1), small_dim(r));
        Tensor g = res_->d_small_generator(r);
        for (std::size_t c = 0; c < q.quotient_dim; ++c)
            out.set_col(c, transfer_small(r - 1, unit_vec(m_->dim(), q.free_coords[c], algebra().field()), g));
        return out;
    });
}

const SparseMatrix& BarComplex::phi(std::size_t r) const {
    return cached(kPhi, r, [&] {
        const SubquotientSpace& q = small_space(r);
        SparseMatrix out(dim(r), q.quotient_dim);
        const Tensor& g = res_->phi_generator(r);
        for (std::size_t c = 0; c < q.quotient_dim; ++c)
            out.set_col(c, transfer_bar(r, unit_vec(m_->dim(), q.free_coords[c], algebra().field()), g));
        return out;
    });
}

const SparseMatrix& BarComplex::psi(std::size_t r) const {
    return cached(kPsi, r, [&] {
        SparseMatrix out(small_dim(r), dim(r));
        for (std::size_t c = 0; c < dim(r); ++c) {
            Exps t = tuple(r, locate(r, c).first);
            out.set_col(c, transfer_small(r, lift(r, c), res_->psi_generator(t)));
        }
        return out;
    });
}

const SparseMatrix& BarComplex::omega(std::size_t r) const {
    return cached(kOmega, r, [&] {
        SparseMatrix out(dim(r + 1), dim(r));
        for (std::size_t c = 0; c < dim(r); ++c) {
            Exps t = tuple(r, locate(r, c).first);
            out.set_col(c, transfer_bar(r + 1, lift(r, c), res_->omega_generator(t)));
        }
        return out;
    });
}

ChainComplex BarComplex::complex(std::size_t max_r) const {
    ChainComplex c;
    for (std::size_t r = 0; r <= max_r; ++r) {
        c.dims.push_back(dim(r));
        c.boundaries.push_back(b(r));
    }
    return c;
}

int BarComplex::basis_degree(std::size_t r, std::size_t coord) const {
    auto [ord, qc] = locate(r, coord);
    int s = 0;
    for (auto e : tuple(r, ord)) s += e;
    const SubquotientSpace& q = quotient(static_cast<unsigned>(s));
    if (!m_->is_regular()) return s;
    return s + static_cast<int>(q.free_coords[qc] / algebra().dim_k());
}

int BarComplex::degree(std::size_t r, const SparseVec& v) const {
    int best = kNegInfDegree;
    for (const auto& [i, x] : v) best = std::max(best, basis_degree(r, i));
    return best;
}

}  // namespace mhc
