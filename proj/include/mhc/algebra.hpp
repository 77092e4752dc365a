#pragma once

#include "mhc/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhc {

/// Raised when input data violates an algebraic condition. The message
/// names the violated condition and a witness.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
    ValidationError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

struct GroupData {
    std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of g_i g_j
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;

    std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
    std::size_t power(std::size_t a, unsigned e) const;
    std::size_t order_of(std::size_t a) const;
};

/// Finite-dimensional associative unital algebra given by structure constants.
class BaseAlgebra {
public:
    BaseAlgebra() = default;
    /// products[i][j] = coordinates of basis_i * basis_j. Throws ValidationError
    /// on a non-associative or non-unital table.
    BaseAlgebra(const Field* f, std::vector<std::string> labels, std::vector<std::vector<Vec>> products, Vec unit);

    const Field* field() const { return field_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& product(std::size_t i, std::size_t j) const { return products_[i][j]; }
    const Vec& unit() const { return unit_; }
    bool unit_is_basis() const { return unit_index_.has_value(); }
    std::optional<std::size_t> unit_index() const { return unit_index_; }

    Vec basis(std::size_t i) const { return unit_vec(dim(), i, field_); }
    Vec zero() const { return zero_vec(dim(), field_); }
    Vec multiply(const Vec& a, const Vec& b) const;
    Matrix left_matrix(const Vec& a) const;   // v -> a v
    Matrix right_matrix(const Vec& a) const;  // v -> v a
    bool is_commutative() const;
    std::optional<std::size_t> label_index(const std::string& label) const;
    std::string format(const Vec& v) const;

    const std::optional<GroupData>& group() const { return group_; }
    void set_group(GroupData g) { group_ = std::move(g); }

private:
    const Field* field_ = rationals();
    std::vector<std::string> labels_;
    std::vector<std::vector<Vec>> products_;
    Vec unit_;
    std::optional<std::size_t> unit_index_;
    std::optional<GroupData> group_;
};

/// Group algebra k[G] from a multiplication table of labels.
BaseAlgebra group_algebra(const std::vector<std::string>& labels,
                          const std::vector<std::vector<std::string>>& table, const Field* f);

/// An algebra endomorphism given by its matrix on the basis (columns are images).
class AlgebraEndomorphism {
public:
    AlgebraEndomorphism() = default;
    /// Validates alpha(1) = 1 and multiplicativity on basis pairs.
    AlgebraEndomorphism(const BaseAlgebra& k, Matrix m);

    const Matrix& matrix() const { return matrix_; }
    Vec apply(const Vec& v) const { return matrix_.apply(v); }
    bool is_identity() const { return matrix_.is_identity(); }
    bool is_diagonal() const;
    /// Smallest v >= 1 with alpha^v = id, if one exists below `limit`.
    std::optional<unsigned> order(unsigned limit = 256) const;

private:
    Matrix matrix_;
};

AlgebraEndomorphism character_endomorphism(const BaseAlgebra& k, const std::vector<Scalar>& chi);

}  // namespace mhc
