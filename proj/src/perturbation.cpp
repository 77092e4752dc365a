#include "mhc/perturbation.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace mhc {

namespace {

std::string upto(std::size_t n) { return "N <= " + std::to_string(n); }

CheckResult degreewise(const std::string& name, long lo, long hi, const std::function<bool(std::size_t)>& ok) {
    CheckResult c{name, hi >= lo ? upto(static_cast<std::size_t>(hi)) : "empty", true, ""};
    for (long N = lo; N <= hi; ++N)
        if (!ok(N)) {
            c.pass = false;
            c.detail = "fails at N = " + std::to_string(N);
            break;
        }
    return c;
}

SparseVec shifted(const SparseVec& v, std::size_t by) {
    SparseVec out;
    for (const auto& [i, x] : v) out.emplace_back(static_cast<std::uint32_t>(i + by), x);
    return out;
}

MixedComplex without_B(const MixedComplex& m) {
    MixedComplex out;
    out.complex = m.complex;
    for (const auto& B : m.B) out.B.push_back(SparseMatrix(B.rows(), B.cols()));
    return out;
}

// Columnwise map between totals: column p of Tot_N (degree N - 2p) goes to
// column p of the target total of degree N + shift through blocks[N - 2p].
SparseMatrix columnwise(const MixedComplex& src, const MixedComplex& dst, std::size_t N, int shift,
                        const std::function<const SparseMatrix&(std::size_t)>& block) {
    auto so = total_offsets(src, N);
    auto dt = total_offsets(dst, static_cast<std::size_t>(static_cast<int>(N) + shift));
    SparseMatrix out(dt.back(), so.back());
    for (std::size_t p = 0; 2 * p <= N; ++p) {
        const SparseMatrix& m = block(N - 2 * p);
        for (std::size_t c = 0; c < m.cols(); ++c) out.set_col(so[p] + c, shifted(m.col(c), dt[p]));
    }
    return out;
}

}  // namespace

std::vector<CheckResult> retract_checks(const Retract& r, bool special, const std::string& prefix) {
    std::vector<CheckResult> out;
    const std::size_t top = r.big.max_degree();
    auto sq = [](const ChainComplex& c) {
        auto bad = c.square_zero_failures();
        return CheckResult{"", upto(c.max_degree()), bad.empty(),
                           bad.empty() ? "" : "fails at N = " + std::to_string(bad.front())};
    };
    out.push_back(sq(r.big));
    out.back().name = prefix + "big d^2 = 0";
    out.push_back(sq(r.small));
    out.back().name = prefix + "small d^2 = 0";
    long ni = static_cast<long>(r.i.size()), np = static_cast<long>(r.p.size()), nh = static_cast<long>(r.h.size());
    long ip = std::min(ni, np);
    out.push_back(degreewise(prefix + "p i = id", 0, ip - 1, [&](std::size_t N) { return (r.p[N] * r.i[N]).is_identity(); }));
    out.push_back(degreewise(prefix + "d i = i d", 1, ni - 1, [&](std::size_t N) {
        return r.big.d(N) * r.i[N] == r.i[N - 1] * r.small.d(N);
    }));
    out.push_back(degreewise(prefix + "d p = p d", 1, np - 1, [&](std::size_t N) {
        return r.small.d(N) * r.p[N] == r.p[N - 1] * r.big.d(N);
    }));
    long hmax = std::min({nh, ip, static_cast<long>(top)});  // needs d_{N+1}
    out.push_back(degreewise(prefix + "d h + h d = i p - id", 0, hmax - 1, [&](std::size_t N) {
        SparseMatrix lhs = r.big.d(N + 1) * r.h[N];
        if (N >= 1) lhs = lhs + r.h[N - 1] * r.big.d(N);
        return lhs == r.i[N] * r.p[N] - SparseMatrix::identity(r.big.dims[N]);
    }));
    if (special) {
        out.push_back(degreewise(prefix + "h h = 0", 0, nh - 2, [&](std::size_t N) { return (r.h[N + 1] * r.h[N]).is_zero(); }));
        out.push_back(degreewise(prefix + "p h = 0", 0, std::min(nh, np - 1) - 1,
                                 [&](std::size_t N) { return (r.p[N + 1] * r.h[N]).is_zero(); }));
        out.push_back(degreewise(prefix + "h i = 0", 0, std::min(nh, ni) - 1,
                                 [&](std::size_t N) { return (r.h[N] * r.i[N]).is_zero(); }));
    }
    return out;
}

Retract perturb(const Retract& r, const std::vector<SparseMatrix>& delta) {
    const std::size_t top = r.big.max_degree();
    if (delta.size() != top + 1) throw std::invalid_argument("perturb: delta must cover degrees 0..max");
    // Delta_N for 1 <= N <= top, when h_{N-1} exists
    std::vector<std::optional<SparseMatrix>> Delta(top + 1);
    for (std::size_t N = 1; N <= top && N - 1 < r.h.size(); ++N) {
        SparseMatrix dh = delta[N] * r.h[N - 1];
        SparseMatrix term = delta[N], sum = delta[N];
        std::size_t steps = 0, limit = r.big.dims[N - 1] + 1;
        while (!term.is_zero()) {
            term = dh * term;
            sum = sum + term;
            if (++steps > limit) throw std::runtime_error("perturb: delta h is not nilpotent at N = " + std::to_string(N));
        }
        Delta[N] = std::move(sum);
    }
    Retract out;
    out.big = r.big;
    for (std::size_t N = 1; N <= top; ++N) out.big.boundaries[N] = r.big.d(N) + delta[N];
    out.small = r.small;
    for (std::size_t N = 1; N <= top; ++N) {
        if (!Delta[N]) {
            out.small.dims.resize(N);
            out.small.boundaries.resize(N);
            break;
        }
        out.small.boundaries[N] = r.small.d(N) + r.p[N - 1] * *Delta[N] * r.i[N];
    }
    for (std::size_t N = 0; N < r.i.size(); ++N) {
        if (N == 0) out.i.push_back(r.i[0]);
        else if (Delta[N]) out.i.push_back(r.i[N] + r.h[N - 1] * *Delta[N] * r.i[N]);
        else break;
    }
    for (std::size_t N = 0; N < r.h.size() && N + 1 <= top && Delta[N + 1]; ++N) {
        out.p.push_back(r.p[N] + r.p[N] * *Delta[N + 1] * r.h[N]);
        out.h.push_back(r.h[N] + r.h[N] * *Delta[N + 1] * r.h[N]);
    }
    return out;
}

BcRetract bc_retract(const BarComplex& bar, const MixedComplex& small, std::size_t N) {
    BcRetract out;
    MixedComplex big_full = bar_mixed(bar, N);
    MixedComplex big = without_B(big_full), sm = without_B(small);
    out.small_mixed = small;
    out.retract.big = bc_total(big, N);
    out.retract.small = bc_total(sm, N);
    ChainComplex full = bc_total(big_full, N);
    out.delta.push_back(SparseMatrix(0, full.dims[0]));
    for (std::size_t k = 1; k <= N; ++k) out.delta.push_back(full.d(k) - out.retract.big.d(k));
    for (std::size_t k = 0; k <= N; ++k) {
        out.retract.i.push_back(columnwise(sm, big, k, 0, [&](std::size_t r) -> const SparseMatrix& { return bar.phi(r); }));
        out.retract.p.push_back(columnwise(big, sm, k, 0, [&](std::size_t r) -> const SparseMatrix& { return bar.psi(r); }));
    }
    // h_k lands in Tot_{k+1}, which exists for k < N
    for (std::size_t k = 0; k < N; ++k)
        out.retract.h.push_back(columnwise(big, big, k, 1, [&](std::size_t r) -> const SparseMatrix& { return bar.omega(r); }));
    return out;
}

std::vector<CheckResult> perturbation_checks(const MonogenicAlgebra& a, std::size_t N) {
    Resolution res(a);
    Bimodule reg = Bimodule::regular(a);
    BarComplex bar(res, reg);
    MixedComplex small = build_mixed(a, N, false);
    BcRetract bc = bc_retract(bar, small, N);
    std::vector<CheckResult> out = retract_checks(bc.retract, true, "retract: ");
    Retract pr = perturb(bc.retract, bc.delta);
    for (auto& c : retract_checks(pr, true, "perturbed: ")) out.push_back(std::move(c));
    ChainComplex expect = bc_total(small, N);
    std::size_t have = pr.small.max_degree();
    out.push_back(degreewise("perturbed small differential = BC total of (C^S, d, D)", 1, static_cast<long>(have),
                             [&](std::size_t k) { return pr.small.d(k) == expect.d(k); }));
    auto got = homology_dims(pr.small, have - 1);
    auto want = hc_dims(bar_mixed(bar, N), N - 1);
    want.resize(got.size());
    out.push_back({"perturbed HC = bar-oracle HC", upto(have - 1), got == want, ""});
    return out;
}

}  // namespace mhc
