#pragma once

#include "mhc/matrix.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace mhc {

/// Sorted (index, value) pairs with no explicit zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

SparseVec sparse_add(const SparseVec& a, const Scalar& s, const SparseVec& b);  // a + s*b
SparseVec sparse_scale(const SparseVec& a, const Scalar& s);
SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n, const Field* f = rationals());
SparseVec sparse_unit(std::uint32_t i);
Scalar sparse_get(const SparseVec& v, std::uint32_t i);

/// Accumulator for building sparse vectors out of order.
class SparseBuilder {
public:
    void add(std::uint32_t i, const Scalar& s);
    void add(const SparseVec& v, const Scalar& s = Scalar(1));
    SparseVec finish();

private:
    std::map<std::uint32_t, Scalar> acc_;
};

/// Column-sparse matrix.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_dense(const Matrix& m);
    Matrix to_dense(const Field* f = rationals()) const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    const SparseVec& col(std::size_t j) const { return cols_[j]; }
    void set_col(std::size_t j, SparseVec v) { cols_[j] = std::move(v); }

    SparseVec apply(const SparseVec& v) const;
    bool is_zero() const;
    bool is_identity() const;
    std::size_t nnz() const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const Scalar& s, const SparseMatrix& a);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

private:
    std::size_t rows_ = 0;
    std::vector<SparseVec> cols_;
};

/// Incremental echelon basis keyed by each vector's leading index.
/// Optionally records every stored vector as a combination of the inputs.
class SparseEchelon {
public:
    explicit SparseEchelon(bool track = false) : track_(track) {}

    /// Returns true when v was independent of what is already stored.
    /// With tracking, `tag` names the input (used by kernel computations).
    bool insert(SparseVec v, std::uint32_t tag = 0);
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return rows_.size(); }

    /// After a failed insert with tracking: combination of inputs equal to zero.
    const SparseVec& last_relation() const { return relation_; }

private:
    struct Row {
        SparseVec v;
        SparseVec combo;
    };
    bool track_;
    std::map<std::uint32_t, Row> rows_;
    SparseVec relation_;
};

std::size_t rank(const SparseMatrix& m);
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

}  // namespace mhc
