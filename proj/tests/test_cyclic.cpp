#include "doctest.h"
#include "mhc/cyclic.hpp"
#include "support.hpp"

using namespace mhc;

namespace {

const std::vector<std::string> kFixtures = {"trunc3", "sweedler", "taft3", "rank1c4", "dihedral6", "rank1nc_c2xc4",
                                            "trunc2", "trunc4", "dihedral8", "rank1nc_c8"};

Vec d_image(const ChainComplex& cs, const SparseMatrix& D, std::size_t r, const Vec& v, const Field* f) {
    SparseVec q = to_sparse(cs.spaces[r].project(v));
    return cs.spaces[r + 1].lift(to_dense(D.apply(q), cs.spaces[r + 1].quotient_dim, f));
}

std::vector<std::size_t> hc_of(const std::string& name, std::size_t upto) {
    ParsedSpec p = load_spec(name);
    return hc_dims(build_mixed(*p.algebra, upto + 1), upto);
}

}  // namespace

TEST_CASE("D on collapsed complexes vanishes in even degrees") {
    for (std::string name : {"sweedler", "taft3", "rank1c4"}) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        ChainComplex cc = build_cs_collapsed(*p.algebra, 6);
        for (std::size_t r = 0; r <= 4; r += 2) CHECK(connes_D_collapsed(*p.algebra, cc, r).is_zero());
    }
}

TEST_CASE("sweedler: D_1([g]x) = [2g]") {
    ParsedSpec p = load_spec("sweedler");
    const MonogenicAlgebra& a = *p.algebra;
    ChainComplex cc = build_cs_collapsed(a, 4);
    Vec g = a.base().basis(*a.base().label_index("g"));
    CHECK(d_image(cc, connes_D_collapsed(a, cc, 1), 1, g, a.field()) == scaled(g, Scalar(2)));
}

TEST_CASE("trunc f = x^3: D_2m([x^j]) = (j + 3m)[x^(j-1)]") {
    ParsedSpec p = load_spec("trunc3");
    const MonogenicAlgebra& a = *p.algebra;
    ChainComplex cs = build_cs(a, Bimodule::regular(a), 6);
    for (std::size_t m = 0; m <= 2; ++m) {
        SparseMatrix D = connes_D(a, cs, 2 * m);
        CHECK(is_zero(d_image(cs, D, 2 * m, a.a_one(), a.field())));
        for (std::size_t j = 1; j < 3; ++j) {
            CAPTURE(m);
            CAPTURE(j);
            Vec expect = scaled(a.x_power(j - 1), Scalar(static_cast<long>(j + 3 * m)));
            CHECK(d_image(cs, D, 2 * m, a.x_power(j), a.field()) == expect);
        }
    }
}

TEST_CASE("closed D = psi B phi and mixed identities on every fixture") {
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        const MonogenicAlgebra& a = *p.algebra;
        Resolution res(a);
        Bimodule m = Bimodule::regular(a);
        BarComplex bar(res, m);
        ChainComplex cs = build_cs(a, m, 6);
        for (std::size_t r = 0; r <= 5; ++r) CHECK(connes_D(a, cs, r) == connes_D_transferred(bar, r));
        MixedComplex mc = build_mixed(a, 6);
        CHECK(mc.identity_failures().empty());
    }
}

TEST_CASE("total complex shape") {
    ParsedSpec p = load_spec("sweedler");
    MixedComplex mc = build_mixed(*p.algebra, 6);
    ChainComplex tot = bc_total(mc, 5);
    CHECK(tot.dims[0] == mc.complex.dims[0]);
    CHECK(tot.dims[1] == mc.complex.dims[1]);
    CHECK(tot.dims[2] == 4);
    CHECK(total_offsets(mc, 2) == std::vector<std::size_t>{0, 2, 4});
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        ParsedSpec q = load_spec(name);
        CHECK(bc_total(build_mixed(*q.algebra, 6), 5).square_zero_failures().empty());
    }
}

TEST_CASE("HC oracle equivalence against the bar mixed complex and the frozen values") {
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        const MonogenicAlgebra& a = *p.algebra;
        Resolution res(a);
        Bimodule m = Bimodule::regular(a);
        BarComplex bar(res, m);
        auto hc = hc_dims(build_mixed(a, 5), 4);
        CHECK(hc == hc_dims(bar_mixed(bar, 5), 4));
        CHECK(hc == test::frozen_dims(name, "hc"));
        // degree-0 columns coincide
        CHECK(hc[0] == homology_dims(build_cs(a, m, 2), 0)[0]);
    }
}

TEST_CASE("displayed HC dimensions") {
    CHECK(hc_of("sweedler", 3) == std::vector<std::size_t>{2, 1, 2, 1});
    CHECK(hc_of("rank1c4", 3) == std::vector<std::size_t>{3, 1, 3, 1});
    CHECK(hc_of("taft3", 2) == std::vector<std::size_t>{3, 2, 3});
}

TEST_CASE("collapsed and per-component HC agree with the generic computation") {
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        const MonogenicAlgebra& a = *p.algebra;
        if (!a.alpha().is_diagonal() || !check_collapse(a, collapse_window(a, 6)).holds) continue;
        auto hc = hc_dims(build_mixed(a, 6), 5);
        CHECK(hc_dims(build_mixed_collapsed(a, 6), 5) == hc);
        std::vector<std::size_t> total(6, 0);
        for (const auto& c : build_mixed_components(a, 6)) {
            auto h = hc_dims(c.mixed, 5);
            for (std::size_t r = 0; r <= 5; ++r) total[r] += h[r];
        }
        CHECK(total == hc);
    }
}

TEST_CASE("HC closed forms: cycle-condition reading matches, displayed reading is reported") {
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        const MonogenicAlgebra& a = *p.algebra;
        auto hc = hc_dims(build_mixed(a, 6), 5);
        for (auto k : applicable_hc_forms(a)) {
            CAPTURE(to_string(k));
            CyclicClosedForm cf = hc_closed_form(a, k, 5);
            if (cf.hypotheses_verified) CHECK(cf.dims == hc);
            CHECK(cf.readings_differ == (cf.dims != cf.displayed_dims));
        }
    }
    ParsedSpec r = load_spec("rank1c4");
    CyclicClosedForm cf = hc_closed_form(*r.algebra, ClosedFormKind::eigencomponents, 3);
    CHECK(cf.dims == std::vector<std::size_t>{3, 1, 3, 1});
    CHECK(cf.readings_differ);
    CHECK(cf.displayed_dims[1] == 0);
    CHECK_FALSE(cf.notes.empty());
}

TEST_CASE("taft:n HC alternates n and n - 1") {
    for (unsigned n = 2; n <= 3; ++n) {
        ParsedSpec p = parse_spec(example_spec("taft:" + std::to_string(n)));
        std::vector<std::size_t> expect;
        for (std::size_t r = 0; r <= 4; ++r) expect.push_back(r % 2 == 0 ? n : n - 1);
        CHECK(hc_dims(build_mixed(*p.algebra, 5), 4) == expect);
        CHECK(hc_closed_form(*p.algebra, ClosedFormKind::rank1, 4).dims == expect);
    }
}

TEST_CASE("HC periodicity with period v") {
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        unsigned v = *alpha_n_order(*p.algebra);
        std::size_t top = 2 * (2 + v) + 2;
        auto hc = hc_dims(build_mixed(*p.algebra, top + 1), top);
        CHECK(periodicity_holds(hc, v, 2));
    }
}

TEST_CASE("SBI sequence on taft:2 and taft:3") {
    for (unsigned n = 2; n <= 3; ++n) {
        CAPTURE(n);
        ParsedSpec p = parse_spec(example_spec("taft:" + std::to_string(n)));
        SbiReport rep = sbi_check(*p.algebra, 2);
        REQUIRE_FALSE(rep.items.empty());
        for (const char* item : {"a", "b", "c", "e", "1"}) {
            CAPTURE(item);
            CHECK(rep.all_pass(item));
        }
        for (const auto& it : rep.items) {
            CAPTURE(it.item);
            CAPTURE(it.detail);
            CHECK(it.pass);
        }
    }
}

TEST_CASE("SBI needs collapse") {
    ParsedSpec p = load_spec("trunc3");
    CHECK_THROWS_AS(sbi_check(*p.algebra, 1), HypothesisRefused);
}
