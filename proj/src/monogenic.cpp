#include "mhc/monogenic.hpp"

#include <sstream>

namespace mhc {

std::string to_string(Rank1Info::Case c) {
    switch (c) {
        case Rank1Info::Case::xi_zero: return "xi = 0";
        case Rank1Info::Case::chi_n_trivial: return "xi != 0, chi^n = id";
        case Rank1Info::Case::chi_n_nontrivial: return "chi^n != id";
    }
    return "?";
}

Vec apply_sparse(const SparseMatrix& m, const Vec& v, const Field* f) {
    Vec r = zero_vec(m.rows(), f);
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        for (const auto& [i, s] : m.col(j)) r[i] += s * v[j];
    }
    return r;
}

// ---------------------------------------------------------------- K and alpha

const Matrix& MonogenicAlgebra::alpha_power(unsigned s) const {
    if (alpha_order_) return alpha_powers_[s % *alpha_order_];
    std::lock_guard<std::mutex> lock(*mu_);
    if (extra_powers_.empty()) extra_powers_.push_back(Matrix::identity(dim_k(), field()));
    while (extra_powers_.size() <= s) extra_powers_.push_back(alpha_.matrix() * extra_powers_.back());
    return extra_powers_[s];
}

Vec MonogenicAlgebra::kalpha(const Vec& v, unsigned s) const {
    if (s == 0 || alpha_.is_identity()) return v;
    return alpha_power(s).apply(v);
}

// ---------------------------------------------------------------- A arithmetic

Vec MonogenicAlgebra::embed(const Vec& c, std::size_t i) const {
    Vec a = a_zero();
    for (std::size_t b = 0; b < dim_k(); ++b) a[i * dim_k() + b] = c[b];
    return a;
}

Vec MonogenicAlgebra::coeff(const Vec& a, std::size_t i) const {
    return Vec(a.begin() + static_cast<long>(i * dim_k()), a.begin() + static_cast<long>((i + 1) * dim_k()));
}

Vec MonogenicAlgebra::x_power(std::size_t k) const {
    if (k < 2 * n_) return reduce(x_remainders_[k]);
    // x^k = x^{k-1} * x
    return a_multiply(x_power(k - 1), embed(base_.unit(), 1));
}

const Vec& MonogenicAlgebra::x_quotient(std::size_t k) const { return x_quotients_.at(k); }

Vec MonogenicAlgebra::a_multiply(const Vec& a, const Vec& b) const {
    Vec r = a_zero();
    for (std::size_t p = 0; p < a.size(); ++p) {
        if (a[p].is_zero()) continue;
        for (std::size_t q = 0; q < b.size(); ++q) {
            if (b[q].is_zero()) continue;
            Scalar c = a[p] * b[q];
            for (const auto& [i, s] : table_[p][q]) r[i] += c * s;
        }
    }
    return r;
}

Vec MonogenicAlgebra::a_right_k(const Vec& a, const Vec& c) const { return a_multiply(a, embed(c, 0)); }
Vec MonogenicAlgebra::k_left_a(const Vec& c, const Vec& a) const { return a_multiply(embed(c, 0), a); }

std::pair<KPoly, KPoly> MonogenicAlgebra::divide_by_f(const KPoly& p) const {
    KPoly rem = p;
    const std::size_t dk = dim_k();
    KPoly quo;
    if (rem.size() > n_) quo.assign(rem.size() - n_, base_.zero());
    // alpha fixes every lambda_i, so c x^j f = sum_i c lambda_i x^{j+n-i}
    for (std::size_t k = rem.size(); k-- > n_;) {
        Vec c = rem[k];
        if (is_zero(c)) continue;
        quo[k - n_] = quo[k - n_] + c;
        for (std::size_t i = 0; i <= n_; ++i) {
            Vec t = kmul(c, lambdas_[i]);
            rem[k - i] = rem[k - i] - t;
        }
    }
    rem.resize(n_, zero_vec(dk, field()));
    return {quo, rem};
}

Vec MonogenicAlgebra::reduce(const KPoly& p) const {
    KPoly r = p.size() > n_ ? divide_by_f(p).second : p;
    Vec a = a_zero();
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t b = 0; b < dim_k(); ++b) a[i * dim_k() + b] = r[i][b];
    return a;
}

KPoly MonogenicAlgebra::f_poly() const {
    KPoly f(n_ + 1);
    for (std::size_t i = 0; i <= n_; ++i) f[n_ - i] = lambdas_[i];
    return f;
}

int MonogenicAlgebra::x_degree(const Vec& a) const {
    for (std::size_t p = a.size(); p-- > 0;)
        if (!a[p].is_zero()) return static_cast<int>(p / dim_k());
    return -1;
}

std::string MonogenicAlgebra::format(const Vec& a) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < n_; ++i) {
        Vec c = coeff(a, i);
        if (is_zero(c)) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << base_.format(c) << ")";
        if (i == 1) os << "x";
        if (i > 1) os << "x^" << i;
    }
    if (first) os << "0";
    return os.str();
}

void MonogenicAlgebra::precompute() {
    const std::size_t dk = dim_k();
    alpha_order_ = alpha_.order(1024);
    if (alpha_order_) {
        alpha_powers_.push_back(Matrix::identity(dk, field()));
        for (unsigned s = 1; s < *alpha_order_; ++s) alpha_powers_.push_back(alpha_.matrix() * alpha_powers_.back());
    }
    for (std::size_t k = 0; k < 2 * n_; ++k) {
        KPoly p(k + 1, base_.zero());
        p[k] = base_.unit();
        auto [q, r] = divide_by_f(p);
        x_remainders_.push_back(r);
        Vec qa = a_zero();
        for (std::size_t i = 0; i < q.size() && i < n_; ++i)
            for (std::size_t b = 0; b < dk; ++b) qa[i * dk + b] = q[i][b];
        x_quotients_.push_back(qa);
    }
    const std::size_t da = dim_a();
    table_.assign(da, std::vector<SparseVec>(da));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t b = 0; b < dk; ++b)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t c = 0; c < dk; ++c) {
                    // (b x^i)(c x^j) = b alpha^i(c) x^{i+j}
                    Vec e = kmul(base_.basis(b), kalpha(base_.basis(c), static_cast<unsigned>(i)));
                    Vec out = a_zero();
                    const KPoly& rem = x_remainders_[i + j];
                    for (std::size_t k = 0; k < n_; ++k) {
                        if (is_zero(rem[k])) continue;
                        Vec t = kmul(e, rem[k]);
                        for (std::size_t t_b = 0; t_b < dk; ++t_b) out[k * dk + t_b] += t[t_b];
                    }
                    table_[i * dk + b][j * dk + c] = to_sparse(out);
                }
}

MonogenicAlgebra validate_monogenic(BaseAlgebra k, AlgebraEndomorphism alpha, std::size_t n,
                                    std::vector<Vec> lambdas) {
    std::vector<std::string> problems;
    if (n < 2) throw ValidationError("degree n >= 2 required (got n = " + std::to_string(n) + ")");
    if (lambdas.size() == n) lambdas.insert(lambdas.begin(), k.unit());
    if (lambdas.size() != n + 1)
        throw ValidationError("expected " + std::to_string(n) + " coefficients lambda_1..lambda_n, got " +
                              std::to_string(lambdas.size()));
    for (std::size_t i = 0; i <= n; ++i)
        if (lambdas[i].size() != k.dim())
            throw ValidationError("lambda_" + std::to_string(i) + " has wrong length");
    Matrix power = Matrix::identity(k.dim(), k.field());
    for (std::size_t i = 1; i <= n; ++i) {
        power = alpha.matrix() * power;  // alpha^i
        const Vec& li = lambdas[i];
        if (alpha.apply(li) != li)
            problems.push_back("alpha(lambda_" + std::to_string(i) + ") = " + k.format(alpha.apply(li)) +
                               " != lambda_" + std::to_string(i) + " = " + k.format(li));
        for (std::size_t b = 0; b < k.dim(); ++b) {
            Vec lhs = k.multiply(li, k.basis(b));
            Vec rhs = k.multiply(power.column(b), li);
            if (lhs != rhs)
                problems.push_back("lambda_" + std::to_string(i) + " * " + k.labels()[b] + " != alpha^" +
                                   std::to_string(i) + "(" + k.labels()[b] + ") * lambda_" + std::to_string(i));
        }
    }
    if (!problems.empty()) throw ValidationError(problems);
    MonogenicAlgebra a;
    a.base_ = std::move(k);
    a.alpha_ = std::move(alpha);
    a.n_ = n;
    a.lambdas_ = std::move(lambdas);
    a.precompute();
    return a;
}

// ---------------------------------------------------------------- bimodules

Bimodule::Bimodule(const MonogenicAlgebra& a, std::size_t dim, std::vector<Matrix> left_k,
                   std::vector<Matrix> right_k, Matrix left_x, Matrix right_x)
    : alg_(&a), dim_(dim) {
    if (left_k.size() != a.dim_k() || right_k.size() != a.dim_k())
        throw ValidationError("bimodule needs one action matrix per K-basis element on each side");
    auto check = [&](const Matrix& m, const std::string& what) {
        if (m.rows() != dim || m.cols() != dim) throw ValidationError("bimodule " + what + " matrix has wrong shape");
        return SparseMatrix::from_dense(m);
    };
    for (std::size_t b = 0; b < a.dim_k(); ++b) {
        left_k_.push_back(check(left_k[b], "left action"));
        right_k_.push_back(check(right_k[b], "right action"));
    }
    left_x_ = check(left_x, "left x");
    right_x_ = check(right_x, "right x");
    validate(a);
}

Bimodule Bimodule::regular(const MonogenicAlgebra& a) {
    Bimodule m;
    m.alg_ = &a;
    m.dim_ = a.dim_a();
    m.regular_ = true;
    auto left = [&](const Vec& e) {
        SparseMatrix s(m.dim_, m.dim_);
        for (std::size_t j = 0; j < m.dim_; ++j) s.set_col(j, to_sparse(a.a_multiply(e, unit_vec(m.dim_, j, a.field()))));
        return s;
    };
    auto right = [&](const Vec& e) {
        SparseMatrix s(m.dim_, m.dim_);
        for (std::size_t j = 0; j < m.dim_; ++j) s.set_col(j, to_sparse(a.a_multiply(unit_vec(m.dim_, j, a.field()), e)));
        return s;
    };
    for (std::size_t b = 0; b < a.dim_k(); ++b) {
        m.left_k_.push_back(left(a.embed(a.base().basis(b), 0)));
        m.right_k_.push_back(right(a.embed(a.base().basis(b), 0)));
    }
    m.left_x_ = left(a.embed(a.base().unit(), 1));
    m.right_x_ = right(a.embed(a.base().unit(), 1));
    return m;
}

Vec Bimodule::left_basis(std::size_t b, const Vec& m) const { return apply_sparse(left_k_[b], m, alg_->field()); }
Vec Bimodule::right_basis(const Vec& m, std::size_t b) const { return apply_sparse(right_k_[b], m, alg_->field()); }

Vec Bimodule::left_k(const Vec& lam, const Vec& m) const {
    Vec r = zero_vec(dim_, alg_->field());
    for (std::size_t b = 0; b < lam.size(); ++b)
        if (!lam[b].is_zero()) axpy(r, lam[b], left_basis(b, m));
    return r;
}

Vec Bimodule::right_k(const Vec& m, const Vec& lam) const {
    Vec r = zero_vec(dim_, alg_->field());
    for (std::size_t b = 0; b < lam.size(); ++b)
        if (!lam[b].is_zero()) axpy(r, lam[b], right_basis(m, b));
    return r;
}

Vec Bimodule::left_x(std::size_t e, const Vec& m) const {
    Vec r = m;
    for (std::size_t i = 0; i < e; ++i) r = apply_sparse(left_x_, r, alg_->field());
    return r;
}

Vec Bimodule::right_x(const Vec& m, std::size_t e) const {
    Vec r = m;
    for (std::size_t i = 0; i < e; ++i) r = apply_sparse(right_x_, r, alg_->field());
    return r;
}

Vec Bimodule::left_a(const Vec& a, const Vec& m) const {
    Vec r = zero_vec(dim_, alg_->field());
    for (std::size_t i = 0; i < alg_->n(); ++i) {
        Vec c = alg_->coeff(a, i);
        if (mhc::is_zero(c)) continue;
        r = r + left_k(c, left_x(i, m));
    }
    return r;
}

Vec Bimodule::right_a(const Vec& m, const Vec& a) const {
    Vec r = zero_vec(dim_, alg_->field());
    for (std::size_t i = 0; i < alg_->n(); ++i) {
        Vec c = alg_->coeff(a, i);
        if (mhc::is_zero(c)) continue;
        r = r + right_x(right_k(m, c), i);
    }
    return r;
}

void Bimodule::validate(const MonogenicAlgebra& a) const {
    const BaseAlgebra& k = a.base();
    std::vector<std::string> problems;
    const std::size_t dk = k.dim();
    for (std::size_t s = 0; s < dim_; ++s) {
        Vec m = unit_vec(dim_, s, a.field());
        std::string ms = "m" + std::to_string(s);
        if (left_k(k.unit(), m) != m || right_k(m, k.unit()) != m) problems.push_back("unit does not act trivially on " + ms);
        for (std::size_t i = 0; i < dk; ++i) {
            for (std::size_t j = 0; j < dk; ++j) {
                if (left_basis(i, left_basis(j, m)) != left_k(k.product(i, j), m))
                    problems.push_back("left action not associative at (" + k.labels()[i] + ", " + k.labels()[j] + ", " + ms + ")");
                if (right_basis(right_basis(m, i), j) != right_k(m, k.product(i, j)))
                    problems.push_back("right action not associative at (" + ms + ", " + k.labels()[i] + ", " + k.labels()[j] + ")");
                if (left_basis(i, right_basis(m, j)) != right_basis(left_basis(i, m), j))
                    problems.push_back("left and right actions do not commute at " + ms);
            }
            // x lambda = alpha(lambda) x on both sides
            Vec al = a.kalpha(k.basis(i), 1);
            if (left_x(1, left_basis(i, m)) != left_k(al, left_x(1, m)))
                problems.push_back("left x action violates x lambda = alpha(lambda) x at (" + k.labels()[i] + ", " + ms + ")");
            if (right_basis(right_x(m, 1), i) != right_x(right_k(m, al), 1))
                problems.push_back("right x action violates x lambda = alpha(lambda) x at (" + ms + ", " + k.labels()[i] + ")");
            if (left_x(1, right_basis(m, i)) != right_basis(left_x(1, m), i))
                problems.push_back("left x and right K actions do not commute at " + ms);
            if (left_basis(i, right_x(m, 1)) != right_x(left_basis(i, m), 1))
                problems.push_back("left K and right x actions do not commute at " + ms);
        }
        if (left_x(1, right_x(m, 1)) != right_x(left_x(1, m), 1)) problems.push_back("x actions do not commute at " + ms);
        // f acts as zero on both sides
        Vec lf = zero_vec(dim_, a.field()), rf = zero_vec(dim_, a.field());
        for (std::size_t i = 0; i <= a.n(); ++i) {
            lf = lf + left_k(a.lambda(i), left_x(a.n() - i, m));
            rf = rf + right_x(right_k(m, a.lambda(i)), a.n() - i);
        }
        if (!mhc::is_zero(lf) || !mhc::is_zero(rf)) problems.push_back("f does not act as zero on " + ms);
        if (problems.size() > 8) break;
    }
    if (!problems.empty()) throw ValidationError(problems);
}

}  // namespace mhc
