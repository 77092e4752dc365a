#include "mhc/chain.hpp"

#include <stdexcept>

namespace mhc {

std::vector<std::size_t> ChainComplex::square_zero_failures() const {
    std::vector<std::size_t> bad;
    for (std::size_t r = 1; r < max_degree(); ++r)
        if (!(boundaries[r] * boundaries[r + 1]).is_zero()) bad.push_back(r);
    return bad;
}

HomologyReport homology(const ChainComplex& c, std::size_t r, bool with_reps) {
    if (r > c.max_degree()) throw std::out_of_range("homology degree beyond the complex window");
    HomologyReport h;
    h.degree = r;
    h.kernel_only = r == c.max_degree();
    const SparseMatrix* d_out = r >= 1 ? &c.d(r) : nullptr;
    const SparseMatrix* d_in = r < c.max_degree() ? &c.d(r + 1) : nullptr;
    if (!with_reps) {
        std::size_t ker = c.dims[r] - (d_out ? rank(*d_out) : 0);
        std::size_t im = d_in ? rank(*d_in) : 0;
        h.dimension = ker - im;
        return h;
    }
    HomologyCoordinates hc(c.dims[r], d_out, d_in);
    h.dimension = hc.dim();
    h.representatives = hc.representatives();
    if (r < c.spaces.size()) {
        const SubquotientSpace& q = c.spaces[r];
        for (const auto& v : h.representatives) {
            const Field* f = v.empty() ? rationals() : v[0].second.field();
            h.ambient_representatives.push_back(q.lift(to_dense(v, q.quotient_dim, f)));
        }
    }
    return h;
}

std::vector<std::size_t> homology_dims(const ChainComplex& c, std::size_t upto) {
    std::vector<std::size_t> ranks(c.max_degree() + 2, 0);
    for (std::size_t r = 1; r <= c.max_degree(); ++r) ranks[r] = rank(c.d(r));
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r <= upto && r <= c.max_degree(); ++r)
        out.push_back(c.dims[r] - ranks[r] - (r < c.max_degree() ? ranks[r + 1] : 0));
    return out;
}

// ---------------------------------------------------------------- HomologyCoordinates

HomologyCoordinates::HomologyCoordinates(std::size_t dim, const SparseMatrix* d_out, const SparseMatrix* d_in)
    : space_dim_(dim), d_out_(d_out) {
    if (d_in)
        for (std::size_t j = 0; j < d_in->cols(); ++j)
            if (boundaries_.insert(d_in->col(j))) boundary_basis_.push_back(d_in->col(j));
    std::vector<SparseVec> kernel;
    if (d_out) {
        kernel = kernel_basis(*d_out);
    } else {
        for (std::size_t i = 0; i < dim; ++i) kernel.push_back(sparse_unit(static_cast<std::uint32_t>(i)));
    }
    SparseEchelon span = boundaries_;
    for (auto& k : kernel)
        if (span.insert(k)) reps_.push_back(k);
}

bool HomologyCoordinates::is_cycle(const SparseVec& v) const { return !d_out_ || d_out_->apply(v).empty(); }

bool HomologyCoordinates::is_boundary(const SparseVec& v) const { return boundaries_.contains(v); }

std::optional<Vec> HomologyCoordinates::coordinates(const SparseVec& v) const {
    if (!is_cycle(v)) return std::nullopt;
    const std::size_t k = reps_.size();
    std::vector<Vec> cols;
    for (const auto& r : reps_) cols.push_back(to_dense(r, space_dim_));
    for (const auto& b : boundary_basis_) cols.push_back(to_dense(b, space_dim_));
    Matrix m = Matrix::from_columns(cols, space_dim_);
    Vec x;
    if (!solve(m, to_dense(v, space_dim_), x)) return std::nullopt;
    x.resize(k);
    return x;
}

std::optional<Matrix> induced_on_homology(const HomologyCoordinates& src, const HomologyCoordinates& dst,
                                          const SparseMatrix& map) {
    std::vector<Vec> cols;
    for (const auto& r : src.representatives()) {
        auto c = dst.coordinates(map.apply(r));
        if (!c) return std::nullopt;
        cols.push_back(*c);
    }
    return Matrix::from_columns(cols, dst.dim());
}

}  // namespace mhc
