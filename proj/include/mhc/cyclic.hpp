#pragma once

#include "mhc/bar.hpp"
#include "mhc/small_complex.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhc {

/// Raised when a constructed object fails one of its defining identities.
/// These are self-tests and should never fire.
class IdentityFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// (X, b, B): complex.boundaries[r] = b_r : X_r -> X_{r-1} and
/// B[r] : X_r -> X_{r+1} for r < max_degree.
struct MixedComplex {
    ChainComplex complex;
    std::vector<SparseMatrix> B;

    std::size_t max_degree() const { return complex.max_degree(); }
    const SparseMatrix& b(std::size_t r) const { return complex.d(r); }
    /// Human-readable list of failed identities (bb, BB, bB + Bb), empty when fine.
    std::vector<std::string> identity_failures() const;
};

/// Connes operator on the generic small complex built by build_cs (M = A):
///   D_{2m}([l x^j])   = [sum_{h<j} alpha^{mn+h}(l) x^{j-1}]
///                       + sum_{u<m} [quot(sum_i lambda_{n-i} sum_{k<i} alpha^{nu+k}(l) x^{j+i-1})]
///   D_{2m+1}([l x^j]) = [(id - alpha) sum_{u<=m} alpha^{nu}(l)] if j = n-1, else 0
/// where quot is the quotient of division by f. Needs cs up to degree r+1.
SparseMatrix connes_D(const MonogenicAlgebra& a, const ChainComplex& cs, std::size_t r);
/// Same on build_cs_collapsed: zero in even degrees, and
/// D_{2m+1}([l] x^{n-1}) = [(id - alpha) sum_{u<=m} alpha^{nu}(l)].
SparseMatrix connes_D_collapsed(const MonogenicAlgebra& a, const ChainComplex& cs, std::size_t r);
/// Per-component version: D_{2m+1} = (1 - w) sum_{u<=m} w^{nu}, D_{2m} = 0.
SparseMatrix connes_D_component(const MonogenicAlgebra& a, const ComponentComplex& c, std::size_t r);

/// psi_{r+1} B_r phi_r through the bar complex.
SparseMatrix connes_D_transferred(const BarComplex& bar, std::size_t r);

/// (C^S, d, D) on the generic small complex. Throws IdentityFailure if a mixed
/// identity fails or, with cross_check, if D differs from psi B phi.
MixedComplex build_mixed(const MonogenicAlgebra& a, std::size_t max_degree, bool cross_check = true);
MixedComplex build_mixed_collapsed(const MonogenicAlgebra& a, std::size_t max_degree);
struct ComponentMixed {
    ComponentComplex component;
    MixedComplex mixed;
};
std::vector<ComponentMixed> build_mixed_components(const MonogenicAlgebra& a, std::size_t max_degree);
/// Normalized bar complex with Connes' B (the oracle).
MixedComplex bar_mixed(const BarComplex& bar, std::size_t max_degree);

/// Column offsets of Tot_N = X_N (+) X_{N-2} (+) ...; column p holds X_{N-2p}.
std::vector<std::size_t> total_offsets(const MixedComplex& m, std::size_t N);
/// BC total complex in degrees 0..N with d = b + B (B carries column p to p-1).
ChainComplex bc_total(const MixedComplex& m, std::size_t N);
/// HC_0..HC_upto; needs upto < m.max_degree().
std::vector<std::size_t> hc_dims(const MixedComplex& m, std::size_t upto);

/// Displayed HC dimensions. `dims` follows the cycle condition of the proof
/// (exponent m+1 in odd degrees); `displayed_dims` follows the displayed
/// exponent m. They are equal unless `readings_differ`.
struct CyclicClosedForm {
    ClosedFormKind kind;
    bool hypotheses_verified = false;
    std::string hypothesis_note;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> displayed_dims;
    bool readings_differ = false;
    std::vector<std::string> notes;
};

/// Supports eigencomponents, rank1 and dihedral_display. Throws HypothesisRefused otherwise.
CyclicClosedForm hc_closed_form(const MonogenicAlgebra& a, ClosedFormKind kind, std::size_t max_degree);
std::vector<ClosedFormKind> applicable_hc_forms(const MonogenicAlgebra& a);

struct SbiItem {
    std::string item;       // "a".."f" or "1"
    std::string component;  // eigenvalue as text
    std::size_t m = 0;
    bool pass = false;
    std::string detail;
};

struct SbiReport {
    std::vector<SbiItem> items;
    bool all_pass(const std::string& item) const;
};

/// Evaluates the SBI sequence formulas on homology representatives of each
/// eigencomponent's mixed complex, for m <= max_m. Needs collapse and a
/// basis-diagonal alpha.
SbiReport sbi_check(const MonogenicAlgebra& a, std::size_t max_m);

}  // namespace mhc
