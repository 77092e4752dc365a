#include "mhc/algebra.hpp"

#include <map>
#include <sstream>

namespace mhc {

namespace {

std::string join_lines(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i];
    return s;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : std::runtime_error(join_lines(problems)), problems_(std::move(problems)) {}

std::size_t GroupData::power(std::size_t a, unsigned e) const {
    std::size_t r = identity;
    for (unsigned i = 0; i < e; ++i) r = table[r][a];
    return r;
}

std::size_t GroupData::order_of(std::size_t a) const {
    std::size_t r = a;
    std::size_t k = 1;
    while (r != identity) {
        r = table[r][a];
        ++k;
    }
    return k;
}

// ---------------------------------------------------------------- BaseAlgebra

BaseAlgebra::BaseAlgebra(const Field* f, std::vector<std::string> labels, std::vector<std::vector<Vec>> products,
                         Vec unit)
    : field_(f ? f : rationals()), labels_(std::move(labels)), products_(std::move(products)), unit_(std::move(unit)) {
    const std::size_t d = labels_.size();
    if (d == 0) throw ValidationError("base algebra must have positive dimension");
    if (products_.size() != d || unit_.size() != d)
        throw ValidationError("structure constants do not match the number of basis labels");
    for (const auto& row : products_) {
        if (row.size() != d) throw ValidationError("structure constant table is not square");
        for (const auto& v : row)
            if (v.size() != d) throw ValidationError("structure constant vector has wrong length");
    }
    for (std::size_t i = 0; i < d; ++i) {
        Vec b = basis(i);
        if (multiply(unit_, b) != b || multiply(b, unit_) != b)
            throw ValidationError("unit is not a two-sided identity on basis element " + labels_[i]);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec l = multiply(products_[i][j], basis(k));
                Vec r = multiply(basis(i), products_[j][k]);
                if (l != r)
                    throw ValidationError("associativity fails on (" + labels_[i] + ", " + labels_[j] + ", " +
                                          labels_[k] + ")");
            }
    std::size_t nonzero = 0, where = 0;
    for (std::size_t i = 0; i < d; ++i)
        if (!unit_[i].is_zero()) {
            ++nonzero;
            where = i;
        }
    if (nonzero == 1 && unit_[where].is_one()) unit_index_ = where;
}

Vec BaseAlgebra::multiply(const Vec& a, const Vec& b) const {
    Vec r = zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            axpy(r, a[i] * b[j], products_[i][j]);
        }
    }
    return r;
}

Matrix BaseAlgebra::left_matrix(const Vec& a) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(a, basis(j)));
    return Matrix::from_columns(cols, dim(), field_);
}

Matrix BaseAlgebra::right_matrix(const Vec& a) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(basis(j), a));
    return Matrix::from_columns(cols, dim(), field_);
}

bool BaseAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (products_[i][j] != products_[j][i]) return false;
    return true;
}

std::optional<std::size_t> BaseAlgebra::label_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::string BaseAlgebra::format(const Vec& v) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (v[i].is_one()) {
            os << labels_[i];
        } else if (v[i].wide()) {
            os << "(" << v[i] << ")" << labels_[i];
        } else {
            os << v[i] << "*" << labels_[i];
        }
    }
    if (first) os << "0";
    return os.str();
}

BaseAlgebra group_algebra(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& table,
                          const Field* f) {
    const std::size_t d = labels.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i)
        if (!index.emplace(labels[i], i).second) throw ValidationError("duplicate group element label " + labels[i]);
    if (table.size() != d) throw ValidationError("multiplication table must have one row per element");
    GroupData g;
    g.table.assign(d, std::vector<std::size_t>(d));
    for (std::size_t i = 0; i < d; ++i) {
        if (table[i].size() != d) throw ValidationError("multiplication table row " + labels[i] + " has wrong length");
        std::vector<bool> seen(d, false);
        for (std::size_t j = 0; j < d; ++j) {
            auto it = index.find(table[i][j]);
            if (it == index.end()) throw ValidationError("unknown element '" + table[i][j] + "' in table");
            if (seen[it->second])
                throw ValidationError("row " + labels[i] + " repeats element " + table[i][j] + " (not a Latin square)");
            seen[it->second] = true;
            g.table[i][j] = it->second;
        }
    }
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<bool> seen(d, false);
        for (std::size_t i = 0; i < d; ++i) {
            if (seen[g.table[i][j]])
                throw ValidationError("column " + labels[j] + " repeats element " + labels[g.table[i][j]] +
                                      " (not a Latin square)");
            seen[g.table[i][j]] = true;
        }
    }
    std::optional<std::size_t> e;
    for (std::size_t i = 0; i < d && !e; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < d && ok; ++j) ok = g.table[i][j] == j && g.table[j][i] == j;
        if (ok) e = i;
    }
    if (!e) throw ValidationError("multiplication table has no identity element");
    g.identity = *e;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
                    throw ValidationError("associativity fails on (" + labels[a] + ", " + labels[b] + ", " +
                                          labels[c] + ")");
    g.inverse.resize(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            if (g.table[a][b] == g.identity) g.inverse[a] = b;

    std::vector<std::vector<Vec>> products(d, std::vector<Vec>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) products[i][j] = unit_vec(d, g.table[i][j], f);
    BaseAlgebra k(f, labels, std::move(products), unit_vec(d, g.identity, f));
    k.set_group(std::move(g));
    return k;
}

// ---------------------------------------------------------------- endomorphisms

AlgebraEndomorphism::AlgebraEndomorphism(const BaseAlgebra& k, Matrix m) : matrix_(std::move(m)) {
    const std::size_t d = k.dim();
    if (matrix_.rows() != d || matrix_.cols() != d) throw ValidationError("endomorphism matrix has wrong shape");
    if (matrix_.apply(k.unit()) != k.unit()) throw ValidationError("endomorphism does not fix the unit");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec l = matrix_.apply(k.product(i, j));
            Vec r = k.multiply(matrix_.column(i), matrix_.column(j));
            if (l != r)
                throw ValidationError("endomorphism is not multiplicative on (" + k.labels()[i] + ", " +
                                      k.labels()[j] + ")");
        }
}

bool AlgebraEndomorphism::is_diagonal() const {
    for (std::size_t i = 0; i < matrix_.rows(); ++i)
        for (std::size_t j = 0; j < matrix_.cols(); ++j)
            if (i != j && !matrix_(i, j).is_zero()) return false;
    return true;
}

std::optional<unsigned> AlgebraEndomorphism::order(unsigned limit) const {
    Matrix p = matrix_;
    for (unsigned v = 1; v <= limit; ++v) {
        if (p.is_identity()) return v;
        p = matrix_ * p;
    }
    return std::nullopt;
}

AlgebraEndomorphism character_endomorphism(const BaseAlgebra& k, const std::vector<Scalar>& chi) {
    if (!k.group()) throw ValidationError("character endomorphism needs a group algebra");
    const GroupData& g = *k.group();
    const std::size_t d = k.dim();
    if (chi.size() != d) throw ValidationError("character needs one value per group element");
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            if (chi[a] * chi[b] != chi[g.table[a][b]])
                throw ValidationError("character is not multiplicative on (" + k.labels()[a] + ", " +
                                      k.labels()[b] + "): " + chi[a].str() + " * " + chi[b].str() +
                                      " != " + chi[g.table[a][b]].str());
    Matrix m(d, d, k.field());
    for (std::size_t i = 0; i < d; ++i) m(i, i) = chi[i];
    return AlgebraEndomorphism(k, std::move(m));
}

}  // namespace mhc
