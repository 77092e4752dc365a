#include "mhc/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace mhc {

Vec zero_vec(std::size_t n, const Field* f) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(std::size_t n, std::size_t i, const Field* f) {
    Vec v = zero_vec(n, f);
    v[i] = Scalar::one(f);
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

Vec scaled(const Vec& v, const Scalar& a) {
    Vec r = v;
    for (auto& s : r)
        if (!s.is_zero()) s *= a;
    return r;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field* f)
    : rows_(rows), cols_(cols), field_(f ? f : rationals()), data_(rows * cols, Scalar::zero(field_)) {}

Matrix Matrix::identity(std::size_t n, const Field* f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field* f) {
    Matrix m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged row");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows, const Field* f) {
    Matrix m(rows, cols.size(), f);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("from_columns: ragged column");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    Vec r = zero_vec(rows_, field_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& a = (*this)(i, j);
            if (!a.is_zero()) r[i] += a * v[j];
        }
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = (*this)(i, j);
            if (i == j ? !a.is_one() : !a.is_zero()) return false;
        }
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix r(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) r(i, j) += x * y;
            }
        }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (a.data_[i] != b.data_[i]) return false;
    return true;
}

// ---------------------------------------------------------------- elimination

Echelon rref(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
        // smallest-height nonzero entry keeps intermediate fractions small
        std::size_t best = rows.size();
        std::size_t best_h = 0;
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            std::size_t h = rows[i][c].height();
            if (best == rows.size() || h < best_h) {
                best = i;
                best_h = h;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[r], rows[best]);
        Scalar inv = rows[r][c].inverse();
        for (auto& s : rows[r])
            if (!s.is_zero()) s *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar f = -rows[i][c];
            axpy(rows[i], f, rows[r]);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return Echelon{Matrix::from_rows(rows, m.cols(), m.field()), pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v = unit_vec(m.cols(), c, m.field());
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.form(i, c);
        out.push_back(std::move(v));
    }
    return out;
}

bool solve(const Matrix& m, const Vec& b, Vec& x) {
    Matrix aug(m.rows(), m.cols() + 1, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon e = rref(aug);
    x = zero_vec(m.cols(), m.field());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols()) return false;
        x[e.pivots[i]] = e.form(i, m.cols());
    }
    return true;
}

// ---------------------------------------------------------------- subquotient

SubquotientSpace subquotient(std::size_t ambient_dim, const std::vector<Vec>& spanning, const Field* f) {
    SubquotientSpace q;
    q.ambient_dim = ambient_dim;
    Echelon e = rref(Matrix::from_rows(spanning, ambient_dim, f));
    q.sub_basis = e.form;
    q.pivots = e.pivots;
    q.coord_of.assign(ambient_dim, -1);
    std::vector<long> pivot_row(ambient_dim, -1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) pivot_row[e.pivots[i]] = static_cast<long>(i);
    for (std::size_t j = 0; j < ambient_dim; ++j)
        if (pivot_row[j] < 0) {
            q.coord_of[j] = static_cast<long>(q.free_coords.size());
            q.free_coords.push_back(j);
        }
    q.quotient_dim = q.free_coords.size();
    q.projection = Matrix(q.quotient_dim, ambient_dim, f);
    q.section = Matrix(ambient_dim, q.quotient_dim, f);
    for (std::size_t k = 0; k < q.quotient_dim; ++k) {
        q.projection(k, q.free_coords[k]) = Scalar::one(f);
        q.section(q.free_coords[k], k) = Scalar::one(f);
    }
    // e_p for a pivot p equals -(rest of its row) modulo the subspace
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t k = 0; k < q.quotient_dim; ++k)
            q.projection(k, e.pivots[i]) = -e.form(i, q.free_coords[k]);
    return q;
}

Vec SubquotientSpace::project(const Vec& v) const { return projection.apply(v); }
Vec SubquotientSpace::lift(const Vec& c) const { return section.apply(c); }

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient, const Field* f) : ambient_(ambient), field_(f ? f : rationals()) {}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vecs, const Field* f) {
    Subspace s(ambient, f);
    if (vecs.empty()) return s;
    Echelon e = rref(Matrix::from_rows(vecs, ambient, f));
    for (std::size_t i = 0; i < e.rank(); ++i) s.basis_.push_back(e.form.row(i));
    s.pivots_ = e.pivots;
    return s;
}

Subspace Subspace::whole(std::size_t ambient, const Field* f) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vec(ambient, i, f));
    return span(ambient, vs, f);
}

Vec Subspace::reduce(const Vec& v) const {
    Vec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Scalar c = r[pivots_[i]];
        if (!c.is_zero()) axpy(r, -c, basis_[i]);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& s) const {
    for (const auto& v : s.basis_)
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
    std::vector<Vec> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(ambient_, all, field_);
}

Subspace Subspace::intersect(const Subspace& o) const {
    // kernel of [B_this^T | -B_o^T] gives the common vectors
    const std::size_t a = basis_.size(), b = o.basis_.size();
    if (a == 0 || b == 0) return Subspace(ambient_, field_);
    Matrix m(ambient_, a + b, field_);
    for (std::size_t j = 0; j < a; ++j)
        for (std::size_t i = 0; i < ambient_; ++i) m(i, j) = basis_[j][i];
    for (std::size_t j = 0; j < b; ++j)
        for (std::size_t i = 0; i < ambient_; ++i) m(i, a + j) = -o.basis_[j][i];
    std::vector<Vec> common;
    for (const auto& k : kernel_basis(m)) {
        Vec v = zero_vec(ambient_, field_);
        for (std::size_t j = 0; j < a; ++j) axpy(v, k[j], basis_[j]);
        common.push_back(std::move(v));
    }
    return span(ambient_, common, field_);
}

Subspace preimage(const Matrix& m, const Subspace& target) {
    // v with m v in target  <=>  (m v) reduced modulo target vanishes
    Matrix reduced(m.rows(), m.cols(), m.field());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Vec c = target.reduce(m.column(j));
        for (std::size_t i = 0; i < m.rows(); ++i) reduced(i, j) = c[i];
    }
    return Subspace::span(m.cols(), kernel_basis(reduced), m.field());
}

Subspace image(const Matrix& m, const Subspace& domain) {
    std::vector<Vec> vs;
    for (const auto& v : domain.basis()) vs.push_back(m.apply(v));
    return Subspace::span(m.rows(), vs, m.field());
}

std::size_t quotient_dim(const Subspace& num, const Subspace& den) {
    return (num + den).dim() - den.dim();
}

}  // namespace mhc
