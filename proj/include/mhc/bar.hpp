#pragma once

#include "mhc/chain.hpp"
#include "mhc/resolution.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace mhc {

/// The normalized relative bar complex M (x) Abar^{(x)r} (x) (cyclic quotient)
/// realized as the direct sum over tuples (i_1..i_r) in [1, n)^r of
/// M/[M,K]_{alpha^s}, s = i_1 + ... + i_r, together with C^S(A, M) spaces
/// M/[M,K]_{alpha^{t(r)}} and the maps induced from the resolution level.
///
/// Tuples in degree r are ordered in mixed radix n-1 (i_1 most significant).
class BarComplex {
public:
    /// Both arguments must outlive the complex.
    BarComplex(const Resolution& res, const Bimodule& m);

    const Resolution& resolution() const { return *res_; }
    const MonogenicAlgebra& algebra() const { return res_->algebra(); }
    const Bimodule& module() const { return *m_; }

    /// M/[M,K]_{alpha^s}.
    const SubquotientSpace& quotient(unsigned s) const;
    /// C^S_r(A, M).
    const SubquotientSpace& small_space(std::size_t r) const { return quotient(res_->twist(r)); }
    std::size_t small_dim(std::size_t r) const { return small_space(r).quotient_dim; }

    std::size_t tuple_count(std::size_t r) const;
    Exps tuple(std::size_t r, std::size_t ordinal) const;
    std::size_t ordinal(const Exps& tuple) const;
    std::size_t offset(std::size_t r, std::size_t ordinal) const;
    std::size_t dim(std::size_t r) const;
    /// Degree-r coordinate -> (tuple ordinal, quotient coordinate).
    std::pair<std::size_t, std::size_t> locate(std::size_t r, std::size_t coord) const;

    /// Class of m (x) x^{tuple} in bar coordinates.
    SparseVec project(const Exps& tuple, const Vec& m) const;
    /// Representative m of a bar basis vector.
    Vec lift(std::size_t r, std::size_t coord) const;

    /// M (x)_{A^e} applied to a resolution element: a (x) t (x) x^e -> [x^e m a (x) t].
    SparseVec transfer_bar(std::size_t r, const Vec& m, const Tensor& g) const;
    /// a (x) x^e -> [x^e m a] in C^S_r.
    SparseVec transfer_small(std::size_t r, const Vec& m, const Tensor& g) const;

    const SparseMatrix& b(std::size_t r) const;         // X_r -> X_{r-1}
    const SparseMatrix& connes_B(std::size_t r) const;  // X_r -> X_{r+1}, M = A only
    const SparseMatrix& d_small(std::size_t r) const;   // C^S_r -> C^S_{r-1}, transferred from d'
    const SparseMatrix& phi(std::size_t r) const;       // C^S_r -> X_r
    const SparseMatrix& psi(std::size_t r) const;       // X_r -> C^S_r
    const SparseMatrix& omega(std::size_t r) const;     // X_r -> X_{r+1}

    /// Bar chain complex in degrees 0..max_r.
    ChainComplex complex(std::size_t max_r) const;
    /// Degree of a bar basis vector: i_0 of its representative plus the tuple sum.
    int basis_degree(std::size_t r, std::size_t coord) const;
    /// Max basis degree over the support of v (kNegInfDegree for 0).
    int degree(std::size_t r, const SparseVec& v) const;

private:
    using Key = std::pair<int, std::size_t>;
    const SparseMatrix& cached(int kind, std::size_t r, const std::function<SparseMatrix()>& make) const;

    const Resolution* res_;
    const Bimodule* m_;
    struct Cache {
        std::mutex mu;
        std::map<unsigned, std::unique_ptr<SubquotientSpace>> quotients;
        std::map<Key, std::unique_ptr<SparseMatrix>> matrices;
        std::map<std::size_t, std::vector<std::size_t>> offsets;
    };
    std::unique_ptr<Cache> cache_;
    const std::vector<std::size_t>& offsets(std::size_t r) const;
    Vec move_right(const Vec& m, const Vec& a) const;  // m a
    Vec move_left_x(std::size_t e, const Vec& m) const;  // x^e m
};

}  // namespace mhc
