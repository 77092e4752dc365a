#include "mhc/tensor.hpp"

#include "mhc/monogenic.hpp"

#include <algorithm>

namespace mhc {

void Tensor::add(const Exps& e, const Vec& head, const Scalar& c) {
    if (c.is_zero() || mhc::is_zero(head)) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c.is_one() ? head : scaled(head, c));
    } else {
        axpy(it->second, c, head);
    }
}

void Tensor::add(const Tensor& t, const Scalar& c) {
    for (const auto& [e, h] : t.terms) add(e, h, c);
}

void Tensor::prune() {
    for (auto it = terms.begin(); it != terms.end();) {
        if (mhc::is_zero(it->second)) it = terms.erase(it);
        else ++it;
    }
}

bool Tensor::is_zero() const {
    for (const auto& [e, h] : terms)
        if (!mhc::is_zero(h)) return false;
    return true;
}

bool operator==(const Tensor& a, const Tensor& b) {
    Tensor d = a;
    d.add(b, Scalar(-1));
    return d.is_zero();
}

int degree(const Tensor& t, const MonogenicAlgebra& a) {
    int best = kNegInfDegree;
    for (const auto& [e, h] : t.terms) {
        int s = 0;
        for (auto x : e) s += x;
        for (std::size_t p = 0; p < h.size(); ++p)
            if (!h[p].is_zero()) best = std::max(best, s + static_cast<int>(p / a.dim_k()));
    }
    return best;
}

}  // namespace mhc
