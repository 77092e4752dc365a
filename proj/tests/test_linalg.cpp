#include "doctest.h"
#include "mhc/sparse.hpp"

#include <random>

using namespace mhc;

namespace {

Matrix ints(const std::vector<std::vector<long>>& rows) {
    std::vector<Vec> vs;
    for (const auto& r : rows) {
        Vec v;
        for (long x : r) v.emplace_back(x);
        vs.push_back(v);
    }
    return Matrix::from_rows(vs, rows.empty() ? 0 : rows[0].size());
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, const Field* f) {
    std::uniform_int_distribution<int> coin(0, 2), val(-3, 3);
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            if (coin(rng) == 0) continue;
            std::vector<mpq_class> co;
            for (std::size_t k = 0; k < f->degree(); ++k) co.emplace_back(val(rng));
            m(i, j) = Scalar(f, co);
        }
    return m;
}

}  // namespace

TEST_CASE("rref examples") {
    Echelon e = rref(ints({{1, 2}, {2, 4}}));
    CHECK(e.rank() == 1);
    CHECK(e.pivots == std::vector<std::size_t>{0});

    Echelon id = rref(Matrix::identity(3));
    CHECK(id.form == Matrix::identity(3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

    const Field* f = make_field(FieldKind::cyclotomic, 4);
    Scalar z = Scalar::zeta(f);
    Matrix m(2, 2, f);
    m(0, 0) = z;
    m(0, 1) = Scalar(1);
    m(1, 0) = Scalar(1);
    m(1, 1) = -z;
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix(2, 3)).size() == 3);
    CHECK(kernel_basis(Matrix::identity(4)).empty());
    auto k = kernel_basis(ints({{1, 1, 0}}));
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(is_zero(ints({{1, 1, 0}}).apply(v)));
}

TEST_CASE("subquotient examples") {
    auto q = subquotient(3, {Vec{Scalar(1), Scalar(1), Scalar(0)}});
    CHECK(q.quotient_dim == 2);
    CHECK(q.project(Vec{Scalar(1), Scalar(1), Scalar(0)}) == zero_vec(2));

    auto full = subquotient(4, {});
    CHECK(full.quotient_dim == 4);
    CHECK(full.projection == Matrix::identity(4));

    auto none = subquotient(2, {Vec{Scalar(1), Scalar(0)}, Vec{Scalar(0), Scalar(1)}});
    CHECK(none.quotient_dim == 0);
}

TEST_CASE("rank-nullity and subquotient invariants on random matrices") {
    std::mt19937 rng(42);
    for (unsigned d : {1u, 3u, 4u}) {
        const Field* f = make_field(FieldKind::cyclotomic, d);
        for (int t = 0; t < 25; ++t) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
            Matrix m = random_matrix(rng, r, c, f);
            auto ker = kernel_basis(m);
            CHECK(rank(m) + ker.size() == c);
            for (const auto& v : ker) CHECK(is_zero(m.apply(v)));

            std::vector<Vec> rows;
            for (std::size_t i = 0; i < r; ++i) rows.push_back(m.row(i));
            auto q = subquotient(c, rows, f);
            CHECK(q.quotient_dim == c - rank(m));
            CHECK((q.projection * q.section).is_identity());
            for (const auto& v : rows) CHECK(is_zero(q.project(v)));
            // projection kills exactly the span: its kernel has dimension rank(m)
            CHECK(kernel_basis(q.projection).size() == rank(m));

            SparseMatrix s = SparseMatrix::from_dense(m);
            CHECK(mhc::rank(s) == rank(m));
            auto sk = kernel_basis(s);
            CHECK(sk.size() == ker.size());
            for (const auto& v : sk) CHECK(s.apply(v).empty());
        }
    }
}

TEST_CASE("subspace operations") {
    Subspace a = Subspace::span(3, {Vec{Scalar(1), Scalar(0), Scalar(0)}, Vec{Scalar(0), Scalar(1), Scalar(0)}});
    Subspace b = Subspace::span(3, {Vec{Scalar(0), Scalar(1), Scalar(1)}, Vec{Scalar(0), Scalar(0), Scalar(1)}});
    CHECK((a + b).dim() == 3);
    Subspace i = a.intersect(b);
    CHECK(i.dim() == 1);
    CHECK(i.contains(Vec{Scalar(0), Scalar(1), Scalar(0)}));
    CHECK(quotient_dim(a, i) == 1);
    Matrix proj = ints({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK(preimage(proj, Subspace(3)).dim() == 2);
    CHECK(image(proj, a).dim() == 1);
}

TEST_CASE("sparse products match dense") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        Matrix a = random_matrix(rng, 4, 3, rationals()), b = random_matrix(rng, 3, 5, rationals());
        SparseMatrix sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
        CHECK((sa * sb).to_dense() == a * b);
        CHECK((sa - sa).is_zero());
    }
}
