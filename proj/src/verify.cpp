#include "mhc/verify.hpp"

#include "mhc/cyclic.hpp"
#include "mhc/perturbation.hpp"

#include <functional>
#include <random>

namespace mhc {

namespace {

std::string window(std::size_t lo, std::size_t hi) {
    return std::to_string(lo) + " <= r <= " + std::to_string(hi);
}

CheckResult each_degree(const std::string& name, std::size_t lo, std::size_t hi,
                        const std::function<bool(std::size_t)>& ok) {
    CheckResult c{name, window(lo, hi), true, ""};
    for (std::size_t r = lo; r <= hi; ++r)
        if (!ok(r)) {
            c.pass = false;
            c.detail = "fails at r = " + std::to_string(r);
            break;
        }
    return c;
}

Tensor small_generator(const MonogenicAlgebra& a) {
    Tensor t;
    t.add(Exps{0}, a.a_one());
    return t;
}

Tensor bar_generator(const MonogenicAlgebra& a, const Exps& tuple) {
    Tensor t;
    Exps e = tuple;
    e.push_back(0);
    t.add(e, a.a_one());
    return t;
}

// every tuple in [1, n)^r
std::vector<Exps> all_tuples(std::size_t n, std::size_t r) {
    std::vector<Exps> out{Exps{}};
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<Exps> next;
        for (const auto& t : out)
            for (std::size_t i = 1; i < n; ++i) {
                Exps e = t;
                e.push_back(static_cast<std::uint8_t>(i));
                next.push_back(e);
            }
        out = std::move(next);
    }
    return out;
}

bool for_all_tuples(std::size_t n, std::size_t r, const std::function<bool(const Exps&)>& ok) {
    for (const auto& t : all_tuples(n, r))
        if (!ok(t)) return false;
    return true;
}

void resolution_checks(const MonogenicAlgebra& a, const Resolution& res, std::size_t R, std::vector<CheckResult>& out) {
    const std::size_t n = a.n();
    const Tensor g = small_generator(a);
    out.push_back(each_degree("resolution: d'd' = 0", 2, R, [&](std::size_t r) {
        return res.d_small(r - 1, res.d_small_generator(r)).is_zero();
    }));
    out.push_back(each_degree("resolution: b'b' = 0", 2, R, [&](std::size_t r) {
        return for_all_tuples(n, r, [&](const Exps& t) { return res.b_bar(r - 1, res.b_bar_generator(t)).is_zero(); });
    }));
    out.push_back(each_degree("resolution: psi'phi' = id", 0, R, [&](std::size_t r) {
        return res.psi(r, res.phi_generator(r)) == g;
    }));
    out.push_back(each_degree("resolution: b'phi' = phi'd'", 1, R, [&](std::size_t r) {
        return res.b_bar(r, res.phi_generator(r)) == res.phi(r - 1, res.d_small_generator(r));
    }));
    out.push_back(each_degree("resolution: d'psi' = psi'b'", 1, R, [&](std::size_t r) {
        return for_all_tuples(n, r, [&](const Exps& t) {
            return res.d_small(r, res.psi_generator(t)) == res.psi(r - 1, res.b_bar_generator(t));
        });
    }));
    out.push_back(each_degree("resolution: b'w' + w'b' = phi'psi' - id", 0, R - 1, [&](std::size_t r) {
        return for_all_tuples(n, r, [&](const Exps& t) {
            Tensor lhs = res.b_bar(r + 1, res.omega_generator(t));
            if (r >= 1) lhs.add(res.omega(r - 1, res.b_bar_generator(t)));
            Tensor rhs = res.phi(r, res.psi_generator(t));
            rhs.add(bar_generator(a, t), Scalar(-1));
            lhs.prune();
            rhs.prune();
            return lhs == rhs;
        });
    }));
}

void bar_checks(const BarComplex& bar, std::size_t R, std::vector<CheckResult>& out) {
    out.push_back(each_degree("bar: bb = 0", 2, R, [&](std::size_t r) { return (bar.b(r - 1) * bar.b(r)).is_zero(); }));
    out.push_back(each_degree("bar: BB = 0", 0, R - 2, [&](std::size_t r) {
        return (bar.connes_B(r + 1) * bar.connes_B(r)).is_zero();
    }));
    out.push_back(each_degree("bar: bB + Bb = 0", 0, R - 1, [&](std::size_t r) {
        SparseMatrix s = bar.b(r + 1) * bar.connes_B(r);
        if (r >= 1) s = s + bar.connes_B(r - 1) * bar.b(r);
        return s.is_zero();
    }));
    out.push_back(each_degree("bar: psi phi = id", 0, R, [&](std::size_t r) { return (bar.psi(r) * bar.phi(r)).is_identity(); }));
    out.push_back(each_degree("bar: b phi = phi d", 1, R, [&](std::size_t r) {
        return bar.b(r) * bar.phi(r) == bar.phi(r - 1) * bar.d_small(r);
    }));
    out.push_back(each_degree("bar: d psi = psi b", 1, R, [&](std::size_t r) {
        return bar.d_small(r) * bar.psi(r) == bar.psi(r - 1) * bar.b(r);
    }));
    out.push_back(each_degree("bar: b w + w b = phi psi - id", 0, R - 1, [&](std::size_t r) {
        SparseMatrix lhs = bar.b(r + 1) * bar.omega(r);
        if (r >= 1) lhs = lhs + bar.omega(r - 1) * bar.b(r);
        return lhs == bar.phi(r) * bar.psi(r) - SparseMatrix::identity(bar.dim(r));
    }));
}

void degree_bound_checks(const MonogenicAlgebra& a, const Resolution& res, const VerifyOptions& opt,
                         std::vector<CheckResult>& out) {
    auto ok_at = [&](std::size_t r, std::size_t idx) {
        Tensor t = res.bar_basis(r, idx);
        return degree(res.omega(r, t), a) <= degree(t, a);
    };
    out.push_back(each_degree("degree bound deg(w'(t)) <= deg(t), all basis tensors", 0, opt.degree_bound_exhaustive,
                              [&](std::size_t r) {
                                  for (std::size_t i = 0; i < res.bar_dim(r); ++i)
                                      if (!ok_at(r, i)) return false;
                                  return true;
                              }));
    std::size_t r = opt.degree_bound_exhaustive + 1;
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick(0, res.bar_dim(r) - 1);
    CheckResult c{"degree bound deg(w'(t)) <= deg(t), random basis tensors", "r = " + std::to_string(r), true,
                  std::to_string(opt.degree_bound_samples) + " samples, seed " + std::to_string(opt.seed)};
    for (std::size_t s = 0; s < opt.degree_bound_samples; ++s) {
        std::size_t idx = pick(rng);
        if (!ok_at(r, idx)) {
            c.pass = false;
            c.detail = "fails on basis tensor " + std::to_string(idx);
            break;
        }
    }
    out.push_back(c);
}

void vanishing_checks(const MonogenicAlgebra& a, const BarComplex& bar, const VerifyOptions& opt,
                      std::vector<CheckResult>& out) {
    const std::size_t n = a.n();
    CheckResult zero{"psi (B w)^j B phi = 0", "1 <= j <= " + std::to_string(opt.vanishing_j) + ", r <= " +
                                                  std::to_string(opt.vanishing_r), true, ""};
    CheckResult deg{"deg((B w)^j B phi_2m(v)) < mn + n", zero.window + ", r even", true, ""};
    for (std::size_t r = 0; r <= opt.vanishing_r; ++r) {
        SparseMatrix cur = bar.connes_B(r) * bar.phi(r);
        for (std::size_t j = 1; j <= opt.vanishing_j; ++j) {
            std::size_t top = r + 2 * j + 1;
            cur = bar.connes_B(top - 1) * (bar.omega(top - 2) * cur);
            if (zero.pass && !(bar.psi(top) * cur).is_zero()) {
                zero.pass = false;
                zero.detail = "fails at r = " + std::to_string(r) + ", j = " + std::to_string(j);
            }
            if (r % 2 == 0) {
                int bound = static_cast<int>((r / 2) * n + n);
                for (std::size_t c = 0; c < cur.cols() && deg.pass; ++c)
                    if (bar.degree(top, cur.col(c)) >= bound) {
                        deg.pass = false;
                        deg.detail = "fails at r = " + std::to_string(r) + ", j = " + std::to_string(j);
                    }
            }
        }
    }
    out.push_back(zero);
    out.push_back(deg);
}

}  // namespace

std::vector<CheckResult> run_identity_suite(const MonogenicAlgebra& a, const VerifyOptions& opt) {
    const std::size_t R = opt.max_degree;
    std::vector<CheckResult> out;
    Resolution res(a);
    Bimodule reg = Bimodule::regular(a);
    BarComplex bar(res, reg);
    resolution_checks(a, res, R, out);
    bar_checks(bar, R, out);

    ChainComplex cs = build_cs(a, reg, R);
    out.push_back(each_degree("small complex: dd = 0", 2, R, [&](std::size_t r) { return (cs.d(r - 1) * cs.d(r)).is_zero(); }));
    out.push_back(each_degree("small complex: displayed d = transferred d", 1, R,
                              [&](std::size_t r) { return cs.d(r) == bar.d_small(r); }));
    MixedComplex mc;
    mc.complex = cs;
    for (std::size_t r = 0; r < R; ++r) mc.B.push_back(connes_D(a, cs, r));
    out.push_back(each_degree("Connes D: formula = psi B phi", 0, R - 1,
                              [&](std::size_t r) { return mc.B[r] == connes_D_transferred(bar, r); }));
    auto bad = mc.identity_failures();
    out.push_back({"mixed complex (C^S, d, D): dd, DD, dD + Dd", window(0, R), bad.empty(), bad.empty() ? "" : bad.front()});

    degree_bound_checks(a, res, opt, out);
    vanishing_checks(a, bar, opt, out);
    for (auto& c : perturbation_checks(a, R)) {
        c.name = "perturbation: " + c.name;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace mhc
