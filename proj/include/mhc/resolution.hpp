#pragma once

#include "mhc/monogenic.hpp"
#include "mhc/sparse.hpp"
#include "mhc/tensor.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace mhc {

/// The small resolution C'_S(A) (free bimodules A_{alpha^t} (x) A), the
/// normalized bar resolution A (x) Abar^{(x)r} (x) A, the comparison maps
/// between them and the homotopy omega'.
///
/// Small elements: Tensor with exps = (e), meaning head (x) x^e.
/// Bar elements: exps = (e_1..e_r, e), meaning head (x) x^{e_1} .. x^{e_r} (x) x^e.
class Resolution {
public:
    explicit Resolution(const MonogenicAlgebra& a);

    const MonogenicAlgebra& algebra() const { return *a_; }
    /// alpha-twist of C'_r: mn for r = 2m, mn + 1 for r = 2m + 1.
    unsigned twist(std::size_t r) const;

    std::size_t small_dim() const;
    std::size_t bar_dim(std::size_t r) const;
    Tensor small_basis(std::size_t idx) const;
    Tensor bar_basis(std::size_t r, std::size_t idx) const;
    SparseVec small_coords(const Tensor& t) const;
    SparseVec bar_coords(std::size_t r, const Tensor& t) const;

    Tensor d_small(std::size_t r, const Tensor& t) const;  // C'_r -> C'_{r-1}
    Tensor b_bar(std::size_t r, const Tensor& t) const;    // R_r -> R_{r-1}
    Tensor phi(std::size_t r, const Tensor& t) const;      // C'_r -> R_r
    Tensor psi(std::size_t r, const Tensor& t) const;      // R_r -> C'_r
    Tensor omega(std::size_t r, const Tensor& t) const;    // R_r -> R_{r+1}

    /// Images of the free generators.
    Tensor d_small_generator(std::size_t r) const;
    Tensor b_bar_generator(const Exps& tuple) const;
    const Tensor& phi_generator(std::size_t r) const;
    Tensor psi_generator(const Exps& tuple) const;
    const Tensor& omega_generator(const Exps& tuple) const;

    /// a * g * x^e for a bimodule generator image g, renormalized.
    Tensor extend(const Vec& a, const Tensor& g, std::size_t e, unsigned shift0) const;

private:
    const MonogenicAlgebra* a_;
    struct Cache {
        std::mutex mu;
        std::map<std::size_t, std::unique_ptr<Tensor>> phi;
        std::map<Exps, std::unique_ptr<Tensor>> omega;
    };
    std::unique_ptr<Cache> cache_;
};

}  // namespace mhc
