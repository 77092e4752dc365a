#pragma once

#include "mhc/chain.hpp"
#include "mhc/hypotheses.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mhc {

/// Raised when a computation needs a hypothesis that did not verify.
class HypothesisRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// C^S(A, M): degree 2m is M/[M,K]_{alpha^{mn}}, degree 2m+1 is
/// M/[M,K]_{alpha^{mn+1}}, with
///   d_{2m+1}[v] = [v x - x v],
///   d_{2m}[v]   = sum_{i=1..n} sum_{l<i} [lambda_{n-i} x^{i-l-1} v x^l].
/// Throws std::logic_error if d d != 0.
ChainComplex build_cs(const MonogenicAlgebra& a, const Bimodule& m, std::size_t max_degree);

/// C^S(A) in collapsed form: even spaces K/[K,K]_{alpha^{mn}}, odd spaces
/// K/[K,K]_{alpha^{(m+1)n}} x^{n-1}, with
///   d_{2m+1}([l] x^{n-1}) = [(alpha(l) - l) lambda_n],
///   d_{2m+2}([l]) = [sum_{j<n} alpha^j(l)] x^{n-1}.
/// Refuses (HypothesisRefused) unless [K,K]_{alpha^j} = K for the needed j.
ChainComplex build_cs_collapsed(const MonogenicAlgebra& a, std::size_t max_degree);

struct ComponentComplex {
    Scalar eigenvalue;
    std::vector<std::size_t> basis;  // K-basis indices spanning K^omega
    ChainComplex complex;            // spaces in K^omega coordinates
};

/// Per-eigenvalue summands K^w/[K,K]^w_{alpha^t} with d_even = (sum_{l<n} w^l),
/// d_odd = (w - 1)[l lambda_n]. Needs collapse and a basis-diagonal alpha.
std::vector<ComponentComplex> decompose(const MonogenicAlgebra& a, std::size_t max_degree);

/// Which formula family a closed-form evaluation uses.
enum class ClosedFormKind { collapsed, eigencomponents, alpha_identity, rank1, dihedral_display };
std::string to_string(ClosedFormKind k);

struct ClosedForm {
    ClosedFormKind kind;
    bool hypotheses_verified = false;
    std::string hypothesis_note;      // what was checked, or why it failed
    std::vector<std::size_t> dims;    // predicted dims, degree 0..max_degree
    std::vector<std::string> notes;
};

/// Dimensions of the displayed HH quotients, computed by echelonizing their
/// numerator and denominator spans. Throws HypothesisRefused when the
/// formula's hypotheses fail; the dihedral display is always evaluated and
/// only flags hypotheses_verified.
ClosedForm hh_closed_form(const MonogenicAlgebra& a, ClosedFormKind kind, std::size_t max_degree);
/// Formula families whose hypotheses hold for this algebra (dihedral display
/// included for the dihedral family regardless).
std::vector<ClosedFormKind> applicable_hh_forms(const MonogenicAlgebra& a);

/// Order v of alpha^n as a matrix, if finite.
std::optional<unsigned> alpha_n_order(const MonogenicAlgebra& a);
/// dims[2m+1] == dims[2(m+v)+1] and dims[2m+2] == dims[2(m+v)+2] for m <= max_m.
/// Throws std::invalid_argument when dims is too short.
bool periodicity_holds(const std::vector<std::size_t>& dims, unsigned v, unsigned max_m);
/// HH dims up to 2(max_m + v) + 2 from the small complex, then the check above.
/// Throws std::invalid_argument unless alpha^{nv} = id.
bool periodicity_check(const MonogenicAlgebra& a, unsigned v, unsigned max_m);

// Helpers shared with the cyclic closed forms.
namespace detail {
/// Subspace of K^w (component coordinates) spanned by [K,K]_{alpha^j} in K^w.
Subspace component_commutators(const MonogenicAlgebra& a, const std::vector<std::size_t>& coords, unsigned j);
/// Matrix of l -> l * c on K^w (component coordinates), for c in K^1.
Matrix component_right_mult(const MonogenicAlgebra& a, const std::vector<std::size_t>& coords, const Vec& c);
/// K^w c as a subspace of K^w.
Subspace component_times(const MonogenicAlgebra& a, const std::vector<std::size_t>& coords, const Vec& c);
/// c^e in K.
Vec k_power(const MonogenicAlgebra& a, const Vec& c, unsigned e);
bool is_nth_root_of_unity(const Scalar& w, std::size_t n);
/// (dim C[g]/span(g^j - g^{u-j}), dim C[g]h/C[g](g^2-1)h) for the dihedral family.
std::pair<std::size_t, std::size_t> dihedral_display_parts(const MonogenicAlgebra& a);
}  // namespace detail

}  // namespace mhc
