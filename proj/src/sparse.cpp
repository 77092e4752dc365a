#include "mhc/sparse.hpp"

#include <stdexcept>

namespace mhc {

SparseVec sparse_add(const SparseVec& a, const Scalar& s, const SparseVec& b) {
    if (s.is_zero() || b.empty()) return a;
    SparseVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.emplace_back(b[j].first, s * b[j].second);
            ++j;
        } else {
            Scalar v = a[i].second + s * b[j].second;
            if (!v.is_zero()) r.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return r;
}

SparseVec sparse_scale(const SparseVec& a, const Scalar& s) {
    if (s.is_zero()) return {};
    SparseVec r = a;
    for (auto& e : r) e.second *= s;
    return r;
}

SparseVec to_sparse(const Vec& v) {
    SparseVec r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    return r;
}

Vec to_dense(const SparseVec& v, std::size_t n, const Field* f) {
    Vec r = zero_vec(n, f);
    for (const auto& [i, s] : v) r[i] = s;
    return r;
}

SparseVec sparse_unit(std::uint32_t i) { return {{i, Scalar(1)}}; }

Scalar sparse_get(const SparseVec& v, std::uint32_t i) {
    for (const auto& [k, s] : v)
        if (k == i) return s;
    return Scalar();
}

void SparseBuilder::add(std::uint32_t i, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = acc_.find(i);
    if (it == acc_.end()) acc_.emplace(i, s);
    else it->second += s;
}

void SparseBuilder::add(const SparseVec& v, const Scalar& s) {
    for (const auto& [i, x] : v) add(i, x * s);
}

SparseVec SparseBuilder::finish() {
    SparseVec r;
    r.reserve(acc_.size());
    for (auto& [i, s] : acc_)
        if (!s.is_zero()) r.emplace_back(i, std::move(s));
    acc_.clear();
    return r;
}

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.cols_[i] = sparse_unit(static_cast<std::uint32_t>(i));
    return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j) m.cols_[j] = to_sparse(d.column(j));
    return m;
}

Matrix SparseMatrix::to_dense(const Field* f) const {
    Matrix d(rows_, cols_.size(), f);
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (const auto& [i, s] : cols_[j]) d(i, j) = s;
    return d;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    SparseBuilder b;
    for (const auto& [j, s] : v) {
        if (j >= cols_.size()) throw std::out_of_range("sparse apply: index out of range");
        b.add(cols_[j], s);
    }
    return b.finish();
}

bool SparseMatrix::is_zero() const {
    for (const auto& c : cols_)
        if (!c.empty()) return false;
    return true;
}

bool SparseMatrix::is_identity() const {
    if (rows_ != cols_.size()) return false;
    for (std::size_t j = 0; j < cols_.size(); ++j)
        if (cols_[j].size() != 1 || cols_[j][0].first != j || !cols_[j][0].second.is_one()) return false;
    return true;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("sparse product: dimension mismatch");
    SparseMatrix r(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) r.cols_[j] = a.apply(b.cols_[j]);
    return r;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("sparse sum: dimension mismatch");
    SparseMatrix r(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) r.cols_[j] = sparse_add(a.cols_[j], Scalar(1), b.cols_[j]);
    return r;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("sparse difference: dimension mismatch");
    SparseMatrix r(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) r.cols_[j] = sparse_add(a.cols_[j], Scalar(-1), b.cols_[j]);
    return r;
}

SparseMatrix operator*(const Scalar& s, const SparseMatrix& a) {
    SparseMatrix r(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) r.cols_[j] = sparse_scale(a.cols_[j], s);
    return r;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto& x = a.cols_[j];
        const auto& y = b.cols_[j];
        if (x.size() != y.size()) return false;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k].first != y[k].first || x[k].second != y[k].second) return false;
    }
    return true;
}

// ---------------------------------------------------------------- elimination

SparseVec SparseEchelon::reduce(SparseVec v) const {
    // Eliminate leading entries in increasing index order; entries only
    // appear at larger indices, so one forward sweep suffices.
    std::size_t pos = 0;
    while (pos < v.size()) {
        auto it = rows_.find(v[pos].first);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        Scalar c = v[pos].second;
        v = sparse_add(v, -c, it->second.v);
    }
    return v;
}

bool SparseEchelon::insert(SparseVec v, std::uint32_t tag) {
    SparseVec combo;
    if (track_) combo = sparse_unit(tag);
    std::size_t pos = 0;
    while (pos < v.size()) {
        auto it = rows_.find(v[pos].first);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        Scalar c = v[pos].second;
        v = sparse_add(v, -c, it->second.v);
        if (track_) combo = sparse_add(combo, -c, it->second.combo);
    }
    if (v.empty()) {
        relation_ = std::move(combo);
        return false;
    }
    // normalize leading coefficient to 1
    Scalar inv = v[0].second.inverse();
    v = sparse_scale(v, inv);
    if (track_) combo = sparse_scale(combo, inv);
    std::uint32_t lead = v[0].first;
    rows_.emplace(lead, Row{std::move(v), std::move(combo)});
    return true;
}

std::size_t rank(const SparseMatrix& m) {
    SparseEchelon e;
    for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.col(j));
    return e.rank();
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
    SparseEchelon e(true);
    std::vector<SparseVec> out;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!e.insert(m.col(j), static_cast<std::uint32_t>(j))) out.push_back(e.last_relation());
    return out;
}

}  // namespace mhc
