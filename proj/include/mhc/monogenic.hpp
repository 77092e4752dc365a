#pragma once

#include "mhc/algebra.hpp"
#include "mhc/sparse.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace mhc {

/// Polynomial in x with left coefficients in K, constant term first.
using KPoly = std::vector<Vec>;

/// Rank-one Hopf data k[G][x, chi]/(x^n - xi(g1^n - 1)), kept for the
/// closed-form evaluators.
struct Rank1Info {
    enum class Case { xi_zero, chi_n_trivial, chi_n_nontrivial };
    Case kase = Case::xi_zero;
    std::size_t g1 = 0;             // index of g1 in the (possibly rewritten) group
    Scalar xi;
    std::vector<Scalar> chi;        // character on the (possibly rewritten) group
    std::string rewrite_log;        // non-empty when G was replaced by G/<g1^n>
};

std::string to_string(Rank1Info::Case c);

/// A = K[x, alpha]/(f) with f = x^n + lambda_1 x^{n-1} + ... + lambda_n.
/// Elements of A are vectors of length n*dim K, index i*dimK + b standing
/// for basis_b x^i.
class MonogenicAlgebra {
public:
    const BaseAlgebra& base() const { return base_; }
    const AlgebraEndomorphism& alpha() const { return alpha_; }
    const Field* field() const { return base_.field(); }
    std::size_t n() const { return n_; }
    std::size_t dim_k() const { return base_.dim(); }
    std::size_t dim_a() const { return n_ * base_.dim(); }
    /// lambda_i for 0 <= i <= n (lambda_0 = 1).
    const Vec& lambda(std::size_t i) const { return lambdas_[i]; }
    /// Order of alpha as a matrix, if finite.
    std::optional<unsigned> alpha_order() const { return alpha_order_; }

    // K arithmetic
    Vec kmul(const Vec& a, const Vec& b) const { return base_.multiply(a, b); }
    Vec kalpha(const Vec& v, unsigned s) const;
    const Matrix& alpha_power(unsigned s) const;
    bool is_k_unit(const Vec& v) const { return v == base_.unit(); }

    // A arithmetic
    Vec a_zero() const { return zero_vec(dim_a(), field()); }
    Vec a_one() const { return embed(base_.unit(), 0); }
    Vec embed(const Vec& c, std::size_t i) const;      // c x^i
    Vec coeff(const Vec& a, std::size_t i) const;      // K-coefficient of x^i
    Vec x_power(std::size_t k) const;                  // normal form of x^k
    Vec a_multiply(const Vec& a, const Vec& b) const;
    Vec a_right_k(const Vec& a, const Vec& c) const;   // a*c, c in K
    Vec k_left_a(const Vec& c, const Vec& a) const;    // c*a, c in K
    Vec reduce(const KPoly& p) const;
    /// P = quotient*f + remainder with deg(remainder) < n.
    std::pair<KPoly, KPoly> divide_by_f(const KPoly& p) const;
    /// Division quotient of x^k, as an element of A.
    const Vec& x_quotient(std::size_t k) const;
    /// Sum over i of lambda_i x^{n-i}, i.e. f with the leading term included.
    KPoly f_poly() const;
    /// Degree of an element of A in x, or -1 for zero.
    int x_degree(const Vec& a) const;
    std::string format(const Vec& a) const;

    std::optional<Rank1Info> rank1;
    /// Free-form family tag from the spec file ("dihedral", "trunc", ...) and its parameter.
    std::string family;
    unsigned family_param = 0;
    std::vector<std::string> notes;

private:
    friend MonogenicAlgebra validate_monogenic(BaseAlgebra k, AlgebraEndomorphism alpha, std::size_t n,
                                               std::vector<Vec> lambdas);
    void precompute();

    BaseAlgebra base_;
    AlgebraEndomorphism alpha_;
    std::size_t n_ = 0;
    std::vector<Vec> lambdas_;
    std::optional<unsigned> alpha_order_;
    std::vector<Matrix> alpha_powers_;               // 0..order-1 when finite
    std::vector<KPoly> x_remainders_;                // remainder of x^k, k < 2n
    std::vector<Vec> x_quotients_;                   // quotient of x^k, k < 2n
    std::vector<std::vector<SparseVec>> table_;      // A structure constants
    mutable std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
    mutable std::vector<Matrix> extra_powers_;       // used when alpha has no small order
};

/// Checks alpha(lambda_i) = lambda_i, lambda_i lambda = alpha^i(lambda) lambda_i
/// for every basis lambda, and n >= 2. Throws ValidationError listing every
/// violation with its witness.
MonogenicAlgebra validate_monogenic(BaseAlgebra k, AlgebraEndomorphism alpha, std::size_t n,
                                    std::vector<Vec> lambdas);

/// An A-bimodule given by action matrices of the K-basis and of x on both sides.
class Bimodule {
public:
    Bimodule(const MonogenicAlgebra& a, std::size_t dim, std::vector<Matrix> left_k, std::vector<Matrix> right_k,
             Matrix left_x, Matrix right_x);
    static Bimodule regular(const MonogenicAlgebra& a);

    std::size_t dim() const { return dim_; }
    bool is_regular() const { return regular_; }

    Vec left_k(const Vec& lam, const Vec& m) const;
    Vec right_k(const Vec& m, const Vec& lam) const;
    Vec left_basis(std::size_t b, const Vec& m) const;
    Vec right_basis(const Vec& m, std::size_t b) const;
    Vec left_x(std::size_t e, const Vec& m) const;
    Vec right_x(const Vec& m, std::size_t e) const;
    Vec left_a(const Vec& a, const Vec& m) const;
    Vec right_a(const Vec& m, const Vec& a) const;

private:
    Bimodule() = default;
    void validate(const MonogenicAlgebra& a) const;

    const MonogenicAlgebra* alg_ = nullptr;
    std::size_t dim_ = 0;
    bool regular_ = false;
    std::vector<SparseMatrix> left_k_, right_k_;
    SparseMatrix left_x_, right_x_;
};

/// Dense vector times a sparse matrix column set: returns m v.
Vec apply_sparse(const SparseMatrix& m, const Vec& v, const Field* f);

}  // namespace mhc
