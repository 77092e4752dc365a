#include "mhc/resolution.hpp"

#include <functional>
#include <stdexcept>

namespace mhc {

namespace {

Exps with_last(Exps e, std::size_t last) {
    e.back() = static_cast<std::uint8_t>(last);
    return e;
}

}  // namespace

Resolution::Resolution(const MonogenicAlgebra& a) : a_(&a), cache_(std::make_unique<Cache>()) {}

unsigned Resolution::twist(std::size_t r) const {
    unsigned m = static_cast<unsigned>(r / 2);
    return static_cast<unsigned>(m * a_->n() + (r % 2));
}

std::size_t Resolution::small_dim() const { return a_->dim_a() * a_->n(); }

std::size_t Resolution::bar_dim(std::size_t r) const {
    std::size_t d = a_->dim_a() * a_->n();
    for (std::size_t i = 0; i < r; ++i) d *= a_->n() - 1;
    return d;
}

Tensor Resolution::small_basis(std::size_t idx) const {
    std::size_t n = a_->n();
    Tensor t;
    t.add(Exps{static_cast<std::uint8_t>(idx % n)}, unit_vec(a_->dim_a(), idx / n, a_->field()));
    return t;
}

// idx = (p * T + tuple) * n + e, tuple read in mixed radix n-1 with i_1 most significant
Tensor Resolution::bar_basis(std::size_t r, std::size_t idx) const {
    std::size_t n = a_->n();
    Exps ex(r + 1);
    ex[r] = static_cast<std::uint8_t>(idx % n);
    idx /= n;
    for (std::size_t k = r; k-- > 0;) {
        ex[k] = static_cast<std::uint8_t>(1 + idx % (n - 1));
        idx /= n - 1;
    }
    Tensor t;
    t.add(ex, unit_vec(a_->dim_a(), idx, a_->field()));
    return t;
}

SparseVec Resolution::small_coords(const Tensor& t) const {
    SparseBuilder b;
    std::size_t n = a_->n();
    for (const auto& [e, h] : t.terms) {
        if (e.size() != 1) throw std::logic_error("small_coords: not an element of C'");
        for (std::size_t p = 0; p < h.size(); ++p)
            if (!h[p].is_zero()) b.add(static_cast<std::uint32_t>(p * n + e[0]), h[p]);
    }
    return b.finish();
}

SparseVec Resolution::bar_coords(std::size_t r, const Tensor& t) const {
    SparseBuilder b;
    std::size_t n = a_->n(), T = bar_dim(r) / (a_->dim_a() * n);
    for (const auto& [e, h] : t.terms) {
        if (e.size() != r + 1) throw std::logic_error("bar_coords: wrong tensor length");
        std::size_t tuple = 0;
        for (std::size_t k = 0; k < r; ++k) tuple = tuple * (n - 1) + (e[k] - 1);
        for (std::size_t p = 0; p < h.size(); ++p)
            if (!h[p].is_zero()) b.add(static_cast<std::uint32_t>(((p * T + tuple) * n) + e[r]), h[p]);
    }
    return b.finish();
}

Tensor Resolution::extend(const Vec& a, const Tensor& g, std::size_t e, unsigned shift0) const {
    Tensor out;
    std::size_t n = a_->n(), dk = a_->dim_k();
    bool a_is_one = a == a_->a_one();
    for (const auto& [ex, gh] : g.terms) {
        Vec head = a_is_one ? gh : a_->a_multiply(a, gh);
        if (is_zero(head)) continue;
        std::size_t last = ex.back() + e;
        if (last < n) {
            out.add(with_last(ex, last), head);
            continue;
        }
        // x^last is not a monomial in A: move its K-coefficients into the head
        unsigned shift = shift0;
        for (std::size_t j = 0; j + 1 < ex.size(); ++j) shift += ex[j];
        Vec xp = a_->x_power(last);
        for (std::size_t i = 0; i < n; ++i) {
            Vec c(xp.begin() + i * dk, xp.begin() + (i + 1) * dk);
            if (is_zero(c)) continue;
            Vec h2 = a_->is_k_unit(c) && shift == 0 ? head : a_->a_right_k(head, a_->kalpha(c, shift));
            out.add(with_last(ex, i), h2);
        }
    }
    return out;
}

Tensor Resolution::d_small_generator(std::size_t r) const {
    if (r == 0) throw std::logic_error("d'_0 is not defined");
    Tensor t;
    Vec one = a_->a_one();
    if (r % 2 == 1) {
        // x (x) 1 - 1 (x) x
        t.add(Exps{0}, a_->x_power(1));
        t.add(Exps{1}, one, Scalar(-1));
        return t;
    }
    // sum_i lambda_{n-i} sum_{l < i} x^l (x) x^{i-l-1}; coefficients move into the head
    // through the twist of the target
    std::size_t n = a_->n();
    for (std::size_t i = 1; i <= n; ++i) {
        const Vec& lam = a_->lambda(n - i);
        if (is_zero(lam)) continue;
        for (std::size_t l = 0; l < i; ++l) {
            Vec head = a_->k_left_a(lam, a_->x_power(l));
            Tensor g;
            g.add(Exps{0}, head);
            t.add(extend(a_->a_one(), g, i - l - 1, twist(r - 1)));
        }
    }
    return t;
}

Tensor Resolution::b_bar_generator(const Exps& tuple) const {
    std::size_t r = tuple.size();
    if (r == 0) throw std::logic_error("b'_0 is not defined");
    Tensor t;
    Vec one = a_->a_one();
    // i = 0: x^{e_1} (x) x^{e_2} .. x^{e_r} (x) 1
    {
        Exps ex(tuple.begin() + 1, tuple.end());
        ex.push_back(0);
        t.add(ex, a_->x_power(tuple[0]));
    }
    for (std::size_t i = 1; i < r; ++i) {
        Scalar sign = (i % 2) ? Scalar(-1) : Scalar(1);
        Vec prod = a_->x_power(tuple[i - 1] + tuple[i]);
        unsigned shift = 0;
        for (std::size_t j = 0; j + 1 < i; ++j) shift += tuple[j];
        std::size_t dk = a_->dim_k();
        for (std::size_t k = 1; k < a_->n(); ++k) {
            Vec c(prod.begin() + k * dk, prod.begin() + (k + 1) * dk);
            if (is_zero(c)) continue;
            Exps ex;
            for (std::size_t j = 0; j + 1 < i; ++j) ex.push_back(tuple[j]);
            ex.push_back(static_cast<std::uint8_t>(k));
            for (std::size_t j = i + 1; j < r; ++j) ex.push_back(tuple[j]);
            ex.push_back(0);
            t.add(ex, a_->embed(a_->kalpha(c, shift), 0), sign);
        }
    }
    {
        Scalar sign = (r % 2) ? Scalar(-1) : Scalar(1);
        Exps ex(tuple.begin(), tuple.end());
        t.add(ex, one, sign);
    }
    return t;
}

const Tensor& Resolution::phi_generator(std::size_t r) const {
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->phi.find(r);
        if (it != cache_->phi.end()) return *it->second;
    }
    std::size_t n = a_->n(), m = r / 2;
    auto t = std::make_unique<Tensor>();
    std::vector<std::size_t> i(m, 1), l(m, 1);
    // enumerate i in [1,n]^m and l_j in [1, i_j)
    std::function<void(std::size_t, Vec, std::size_t, std::size_t)> rec =
        [&](std::size_t j, Vec coef, std::size_t isum, std::size_t lsum) {
            if (j == m) {
                Vec head = a_->k_left_a(coef, a_->x_power(isum - lsum - m));
                Exps ex;
                for (std::size_t k = m; k-- > 0;) {
                    ex.push_back(1);
                    ex.push_back(static_cast<std::uint8_t>(l[k]));
                }
                if (r % 2 == 1) ex.push_back(1);
                ex.push_back(0);
                t->add(ex, head);
                return;
            }
            for (std::size_t ij = 1; ij <= n; ++ij) {
                const Vec& lam = a_->lambda(n - ij);
                if (is_zero(lam)) continue;
                Vec c2 = a_->kmul(coef, lam);
                if (is_zero(c2)) continue;
                for (std::size_t lj = 1; lj < ij; ++lj) {
                    i[j] = ij;
                    l[j] = lj;
                    rec(j + 1, c2, isum + ij, lsum + lj);
                }
            }
        };
    rec(0, a_->base().unit(), 0, 0);
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto& slot = cache_->phi[r];
    if (!slot) slot = std::move(t);
    return *slot;
}

Tensor Resolution::psi_generator(const Exps& tuple) const {
    std::size_t r = tuple.size();
    Vec prod = a_->a_one();
    for (std::size_t k = 0; k + 1 < r; k += 2) prod = a_->a_multiply(prod, a_->x_quotient(tuple[k] + tuple[k + 1]));
    Tensor t;
    if (r % 2 == 0) {
        t.add(Exps{0}, prod);
        return t;
    }
    std::size_t last = tuple[r - 1];
    for (std::size_t l = 0; l < last; ++l)
        t.add(Exps{static_cast<std::uint8_t>(last - l - 1)}, a_->a_multiply(prod, a_->x_power(l)));
    return t;
}

const Tensor& Resolution::omega_generator(const Exps& tuple) const {
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->omega.find(tuple);
        if (it != cache_->omega.end()) return *it->second;
    }
    std::size_t r = tuple.size();
    auto res = std::make_unique<Tensor>();
    if (r > 0) {
        // Z = phi'psi'(g) - g - omega'_{r-1}(b'(g)) is a cycle; s(Z) appends (x) 1
        Exps gex = tuple;
        gex.push_back(0);
        Tensor z = phi(r, psi_generator(tuple));
        z.add(gex, a_->a_one(), Scalar(-1));
        z.add(omega(r - 1, b_bar_generator(tuple)), Scalar(-1));
        Scalar sign = ((r + 1) % 2) ? Scalar(-1) : Scalar(1);
        for (const auto& [ex, h] : z.terms) {
            if (ex.back() == 0 || is_zero(h)) continue;
            Exps e2 = ex;
            e2.push_back(0);
            res->add(e2, h, sign);
        }
    }
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto& slot = cache_->omega[tuple];
    if (!slot) slot = std::move(res);
    return *slot;
}

Tensor Resolution::d_small(std::size_t r, const Tensor& t) const {
    Tensor g = d_small_generator(r), out;
    for (const auto& [e, h] : t.terms) out.add(extend(h, g, e[0], twist(r - 1)));
    return out;
}

Tensor Resolution::b_bar(std::size_t r, const Tensor& t) const {
    Tensor out;
    for (const auto& [e, h] : t.terms) {
        Exps tuple(e.begin(), e.end() - 1);
        out.add(extend(h, b_bar_generator(tuple), e.back(), 0));
    }
    (void)r;
    return out;
}

Tensor Resolution::phi(std::size_t r, const Tensor& t) const {
    const Tensor& g = phi_generator(r);
    Tensor out;
    for (const auto& [e, h] : t.terms) out.add(extend(h, g, e[0], 0));
    return out;
}

Tensor Resolution::psi(std::size_t r, const Tensor& t) const {
    Tensor out;
    for (const auto& [e, h] : t.terms) {
        Exps tuple(e.begin(), e.end() - 1);
        out.add(extend(h, psi_generator(tuple), e.back(), twist(r)));
    }
    return out;
}

Tensor Resolution::omega(std::size_t r, const Tensor& t) const {
    Tensor out;
    for (const auto& [e, h] : t.terms) {
        Exps tuple(e.begin(), e.end() - 1);
        if (tuple.size() != r) throw std::logic_error("omega: wrong tensor length");
        out.add(extend(h, omega_generator(tuple), e.back(), 0));
    }
    return out;
}

}  // namespace mhc
