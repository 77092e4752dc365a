#pragma once

#include "mhc/matrix.hpp"

#include <climits>
#include <cstdint>
#include <map>
#include <vector>

namespace mhc {

class MonogenicAlgebra;

using Exps = std::vector<std::uint8_t>;

/// Element of a tensor space in normal form: exponent tuple -> head vector.
/// All K-coefficients live in the head (an element of A, or of M).
struct Tensor {
    std::map<Exps, Vec> terms;

    void add(const Exps& e, const Vec& head, const Scalar& c = Scalar(1));
    void add(const Tensor& t, const Scalar& c = Scalar(1));
    void prune();
    bool is_zero() const;
    friend bool operator==(const Tensor& a, const Tensor& b);
};

constexpr int kNegInfDegree = INT_MIN;

/// Max of i_0 + i_1 + ... over monomial terms; kNegInfDegree for zero.
/// Heads are elements of A (index i_0*dimK + b).
int degree(const Tensor& t, const MonogenicAlgebra& a);

}  // namespace mhc
