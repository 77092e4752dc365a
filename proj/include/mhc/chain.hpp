#pragma once

#include "mhc/sparse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mhc {

/// Finite window of a chain complex: spaces 0..max_degree and boundaries
/// d_r : C_r -> C_{r-1} for 1 <= r <= max_degree.
struct ChainComplex {
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> boundaries;   // index r; entry 0 is a 0 x dims[0] placeholder
    std::vector<SubquotientSpace> spaces;   // optional ambient realization per degree
    std::vector<unsigned> twists;           // optional, twist exponent of each space

    std::size_t max_degree() const { return dims.size() - 1; }
    const SparseMatrix& d(std::size_t r) const { return boundaries.at(r); }
    /// Degrees r with d_r d_{r+1} != 0.
    std::vector<std::size_t> square_zero_failures() const;
};

struct HomologyReport {
    std::size_t degree = 0;
    std::size_t dimension = 0;
    bool kernel_only = false;                  // top degree: no incoming boundary available
    std::vector<SparseVec> representatives;    // in the complex's coordinates
    std::vector<Vec> ambient_representatives;  // lifted through the sections, when spaces exist
};

HomologyReport homology(const ChainComplex& c, std::size_t r, bool with_representatives = false);
std::vector<std::size_t> homology_dims(const ChainComplex& c, std::size_t upto);

/// Homology at one spot given the outgoing and incoming boundaries; expresses
/// cycles in terms of a fixed basis of representatives.
class HomologyCoordinates {
public:
    HomologyCoordinates(std::size_t dim, const SparseMatrix* d_out, const SparseMatrix* d_in);

    std::size_t dim() const { return reps_.size(); }
    const std::vector<SparseVec>& representatives() const { return reps_; }
    bool is_cycle(const SparseVec& v) const;
    bool is_boundary(const SparseVec& v) const;
    /// Coordinates of the class of a cycle; nullopt when v is not a cycle.
    std::optional<Vec> coordinates(const SparseVec& v) const;

private:
    std::size_t space_dim_;
    const SparseMatrix* d_out_;
    std::vector<SparseVec> boundary_basis_;
    std::vector<SparseVec> reps_;
    SparseEchelon boundaries_;
};

/// Matrix of the map induced on homology, in representative coordinates.
/// Returns nullopt if some image is not a cycle.
std::optional<Matrix> induced_on_homology(const HomologyCoordinates& src, const HomologyCoordinates& dst,
                                          const SparseMatrix& map);

}  // namespace mhc
