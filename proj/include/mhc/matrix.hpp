#pragma once

#include "mhc/field.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mhc {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const Field* f = rationals());
Vec unit_vec(std::size_t n, std::size_t i, const Field* f = rationals());
bool is_zero(const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a*x
Vec scaled(const Vec& v, const Scalar& a);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
std::string to_string(const Vec& v);

/// Dense row-major matrix of Scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const Field* f = rationals());

    static Matrix identity(std::size_t n, const Field* f = rationals());
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field* f = rationals());
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows, const Field* f = rationals());

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field* field() const { return field_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    const Field* field_ = rationals();
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix form;                      // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);

/// Quotient of k^ambient by the span of some vectors. The section picks the
/// non-pivot coordinates, so quotient basis vectors lift to unit vectors.
struct SubquotientSpace {
    std::size_t ambient_dim = 0;
    Matrix sub_basis;                     // rref rows spanning the subspace
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> free_coords; // ambient index of each quotient coordinate
    std::vector<long> coord_of;           // ambient index -> quotient coordinate or -1
    std::size_t quotient_dim = 0;
    Matrix projection;                    // quotient_dim x ambient_dim
    Matrix section;                       // ambient_dim x quotient_dim

    Vec project(const Vec& v) const;
    Vec lift(const Vec& q) const;
};

SubquotientSpace subquotient(std::size_t ambient_dim, const std::vector<Vec>& spanning,
                             const Field* f = rationals());

/// Subspace of k^ambient kept in reduced echelon form.
class Subspace {
public:
    Subspace() = default;
    Subspace(std::size_t ambient, const Field* f = rationals());
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vecs, const Field* f = rationals());
    static Subspace whole(std::size_t ambient, const Field* f = rationals());

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& s) const;
    Vec reduce(const Vec& v) const;

    Subspace operator+(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

private:
    std::size_t ambient_ = 0;
    const Field* field_ = rationals();
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v in target}.
Subspace preimage(const Matrix& m, const Subspace& target);
/// m(domain).
Subspace image(const Matrix& m, const Subspace& domain);
/// dim((num + den)/den); equals dim(num/den) when den is inside num.
std::size_t quotient_dim(const Subspace& num, const Subspace& den);

/// Solves m x = b; returns false if inconsistent.
bool solve(const Matrix& m, const Vec& b, Vec& x);

}  // namespace mhc
