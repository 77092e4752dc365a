#include "doctest.h"
#include "mhc/bar.hpp"
#include "mhc/small_complex.hpp"
#include "support.hpp"

using namespace mhc;

namespace {

// d_r applied to the class of an ambient vector, lifted back to the ambient space.
Vec image(const ChainComplex& c, std::size_t r, const Vec& v, const Field* f) {
    SparseVec q = to_sparse(c.spaces[r].project(v));
    return c.spaces[r - 1].lift(to_dense(c.d(r).apply(q), c.spaces[r - 1].quotient_dim, f));
}

bool same_class(const SubquotientSpace& s, const Vec& a, const Vec& b) { return s.project(a) == s.project(b); }

Vec kvec(const MonogenicAlgebra& a, const std::vector<std::pair<std::string, Scalar>>& terms) {
    Vec v = a.base().zero();
    for (const auto& [label, c] : terms) v[*a.base().label_index(label)] += c;
    return v;
}

std::vector<std::size_t> sum_components(const std::vector<ComponentComplex>& comps, std::size_t upto) {
    std::vector<std::size_t> t(upto + 1, 0);
    for (const auto& c : comps) {
        auto h = homology_dims(c.complex, upto);
        for (std::size_t r = 0; r <= upto; ++r) t[r] += h[r];
    }
    return t;
}

const std::vector<std::string> kFixtures = {"trunc3", "sweedler", "taft3", "rank1c4", "dihedral6", "rank1nc_c2xc4",
                                            "rank1nc_c8", "trunc2", "trunc4", "dihedral8"};

}  // namespace

TEST_CASE("trunc f = x^3: spaces are A, d_odd = 0, d_even has rank 1") {
    ParsedSpec p = load_spec("trunc3");
    ChainComplex cs = build_cs(*p.algebra, Bimodule::regular(*p.algebra), 6);
    for (std::size_t r = 0; r <= 6; ++r) CHECK(cs.dims[r] == 3);
    for (std::size_t r = 1; r <= 6; r += 2) CHECK(cs.d(r).is_zero());
    for (std::size_t r = 2; r <= 6; r += 2) CHECK(rank(cs.d(r)) == 1);
    // d_2[1] = [f'] = [3x^2]
    const MonogenicAlgebra& a = *p.algebra;
    CHECK(image(cs, 2, a.a_one(), a.field()) == scaled(a.x_power(2), Scalar(3)));
}

TEST_CASE("sweedler: C_0 and C_1 have dimension 2") {
    ParsedSpec p = load_spec("sweedler");
    ChainComplex cs = build_cs(*p.algebra, Bimodule::regular(*p.algebra), 4);
    CHECK(cs.dims[0] == 2);
    CHECK(cs.dims[1] == 2);
}

TEST_CASE("dd = 0 and oracle equivalence of HH on every fixture") {
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        const MonogenicAlgebra& a = *p.algebra;
        Bimodule m = Bimodule::regular(a);
        ChainComplex cs = build_cs(a, m, 6);
        CHECK(cs.square_zero_failures().empty());
        auto hh = homology_dims(cs, 5);
        Resolution res(a);
        BarComplex bar(res, m);
        CHECK(homology_dims(bar.complex(6), 5) == hh);
        if (test::frozen().contains(test::frozen_key(name))) CHECK(hh == test::frozen_dims(name, "hh"));
    }
}

TEST_CASE("displayed HH dimensions") {
    auto hh = [](const char* name) {
        ParsedSpec p = load_spec(name);
        return homology_dims(build_cs(*p.algebra, Bimodule::regular(*p.algebra), 6), 5);
    };
    CHECK(hh("trunc3") == std::vector<std::size_t>{3, 2, 2, 2, 2, 2});
    CHECK(hh("sweedler") == std::vector<std::size_t>{2, 1, 1, 1, 1, 1});
    CHECK(hh("rank1c4") == std::vector<std::size_t>{3, 1, 1, 1, 1, 1});
    CHECK(hh("taft3") == std::vector<std::size_t>{3, 2, 2, 2, 2, 2});
}

TEST_CASE("top degree is flagged kernel-only") {
    ParsedSpec p = load_spec("sweedler");
    ChainComplex cs = build_cs(*p.algebra, Bimodule::regular(*p.algebra), 3);
    CHECK(homology(cs, 3).kernel_only);
    CHECK_FALSE(homology(cs, 2).kernel_only);
}

TEST_CASE("homology representatives are independent cycles modulo boundaries") {
    for (std::string name : {"sweedler", "trunc3", "rank1c4"}) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        ChainComplex cs = build_cs(*p.algebra, Bimodule::regular(*p.algebra), 5);
        for (std::size_t r = 1; r <= 4; ++r) {
            HomologyReport h = homology(cs, r, true);
            REQUIRE(h.representatives.size() == h.dimension);
            HomologyCoordinates hc(cs.dims[r], &cs.d(r), &cs.d(r + 1));
            SparseEchelon ech;
            for (const auto& v : h.representatives) {
                CHECK(cs.d(r).apply(v).empty());
                auto c = hc.coordinates(v);
                REQUIRE(c.has_value());
                CHECK(ech.insert(to_sparse(*c)));
            }
        }
    }
}

TEST_CASE("collapsed boundary formulas") {
    SUBCASE("sweedler: d_odd = 0, d_even[1] = 2[1]x, d_even[g] = 0") {
        ParsedSpec p = load_spec("sweedler");
        const MonogenicAlgebra& a = *p.algebra;
        ChainComplex cc = build_cs_collapsed(a, 6);
        for (std::size_t r = 1; r <= 6; r += 2) CHECK(cc.d(r).is_zero());
        CHECK(image(cc, 2, kvec(a, {{"1", 1}}), a.field()) == kvec(a, {{"1", 2}}));
        CHECK(is_zero(image(cc, 2, kvec(a, {{"g", 1}}), a.field())));
    }
    SUBCASE("taft3: d_even[g^a] = (1 + z^a + z^2a)[g^a]x^2, nonzero only for a = 0") {
        ParsedSpec p = load_spec("taft3");
        const MonogenicAlgebra& a = *p.algebra;
        ChainComplex cc = build_cs_collapsed(a, 4);
        CHECK(image(cc, 2, kvec(a, {{"1", 1}}), a.field()) == kvec(a, {{"1", 3}}));
        CHECK(is_zero(image(cc, 2, kvec(a, {{"g", 1}}), a.field())));
        CHECK(is_zero(image(cc, 2, kvec(a, {{"g^2", 1}}), a.field())));
    }
    SUBCASE("rank1c4: d_odd([g]x) = [2g^3 - 2g]") {
        ParsedSpec p = load_spec("rank1c4");
        const MonogenicAlgebra& a = *p.algebra;
        ChainComplex cc = build_cs_collapsed(a, 4);
        Vec got = image(cc, 1, kvec(a, {{"g", 1}}), a.field());
        CHECK(same_class(cc.spaces[0], got, kvec(a, {{"g^3", 2}, {"g", -2}})));
    }
    SUBCASE("alpha = id is refused") {
        ParsedSpec p = load_spec("trunc3");
        CHECK_THROWS_AS(build_cs_collapsed(*p.algebra, 4), HypothesisRefused);
        CHECK_THROWS_AS(decompose(*p.algebra, 4), HypothesisRefused);
    }
}

TEST_CASE("collapsed and generic complexes agree whenever collapse holds") {
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        const MonogenicAlgebra& a = *p.algebra;
        if (!check_collapse(a, collapse_window(a, 7)).holds) continue;
        ChainComplex cc = build_cs_collapsed(a, 7);
        CHECK(cc.square_zero_failures().empty());
        CHECK(homology_dims(cc, 6) == homology_dims(build_cs(a, Bimodule::regular(a), 7), 6));
    }
}

TEST_CASE("eigencomponents sum to the collapsed complex") {
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        const MonogenicAlgebra& a = *p.algebra;
        if (!a.alpha().is_diagonal() || !check_collapse(a, collapse_window(a, 7)).holds) continue;
        auto comps = decompose(a, 7);
        ChainComplex cc = build_cs_collapsed(a, 7);
        for (std::size_t r = 0; r <= 7; ++r) {
            std::size_t total = 0;
            for (const auto& c : comps) total += c.complex.dims[r];
            CHECK(total == cc.dims[r]);
        }
        CHECK(sum_components(comps, 6) == homology_dims(cc, 6));
        // components with w^n != 1 are acyclic in positive degrees
        for (const auto& c : comps) {
            if (detail::is_nth_root_of_unity(c.eigenvalue, a.n())) continue;
            auto h = homology_dims(c.complex, 6);
            for (std::size_t r = 1; r <= 6; ++r) CHECK(h[r] == 0);
        }
    }
}

TEST_CASE("sweedler components") {
    ParsedSpec p = load_spec("sweedler");
    auto comps = decompose(*p.algebra, 6);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].eigenvalue.str() == "1");
    CHECK(homology_dims(comps[0].complex, 5) == std::vector<std::size_t>{1, 0, 0, 0, 0, 0});
    CHECK(comps[1].eigenvalue.str() == "-1");
    CHECK(homology_dims(comps[1].complex, 5) == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("closed forms agree with the computation whenever their hypotheses verify") {
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        const MonogenicAlgebra& a = *p.algebra;
        auto hh = homology_dims(build_cs(a, Bimodule::regular(a), 7), 6);
        for (auto k : applicable_hh_forms(a)) {
            CAPTURE(to_string(k));
            ClosedForm cf = hh_closed_form(a, k, 6);
            if (cf.hypotheses_verified) CHECK(cf.dims == hh);
        }
    }
}

TEST_CASE("alpha = id closed form on trunc:n") {
    for (unsigned n = 2; n <= 4; ++n) {
        ParsedSpec p = parse_spec(example_spec("trunc:" + std::to_string(n)));
        ClosedForm cf = hh_closed_form(*p.algebra, ClosedFormKind::alpha_identity, 5);
        CHECK(cf.hypotheses_verified);
        std::vector<std::size_t> expect(6, n - 1);
        expect[0] = n;
        CHECK(cf.dims == expect);
    }
    ParsedSpec s = load_spec("sweedler");
    CHECK_THROWS_AS(hh_closed_form(*s.algebra, ClosedFormKind::alpha_identity, 5), HypothesisRefused);
}

TEST_CASE("taft:n and rank-1 closed forms") {
    for (unsigned n = 2; n <= 3; ++n) {
        ParsedSpec p = parse_spec(example_spec("taft:" + std::to_string(n)));
        ClosedForm cf = hh_closed_form(*p.algebra, ClosedFormKind::rank1, 5);
        std::vector<std::size_t> expect(6, n - 1);
        expect[0] = n;
        CHECK(cf.dims == expect);
    }
    ParsedSpec r = load_spec("rank1c4");
    CHECK(hh_closed_form(*r.algebra, ClosedFormKind::rank1, 5).dims == std::vector<std::size_t>{3, 1, 1, 1, 1, 1});
}

TEST_CASE("dihedral: collapse is reported as failing and the display is still evaluated") {
    for (std::string name : {"dihedral6", "dihedral8"}) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        const MonogenicAlgebra& a = *p.algebra;
        CHECK_FALSE(check_collapse(a, 6).holds);
        ClosedForm cf = hh_closed_form(a, ClosedFormKind::dihedral_display, 5);
        CHECK_FALSE(cf.hypotheses_verified);
        CHECK(cf.dims.size() == 6);
    }
}

TEST_CASE("periodicity with period v = order of alpha^n") {
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        auto v = alpha_n_order(*p.algebra);
        REQUIRE(v.has_value());
        CHECK(periodicity_check(*p.algebra, *v, 2));
    }
    ParsedSpec s = load_spec("sweedler");
    CHECK(*alpha_n_order(*s.algebra) == 1);
    ParsedSpec c = load_spec("rank1nc_c2xc4");
    CHECK(*alpha_n_order(*c.algebra) == 2);
    CHECK(periodicity_holds({3, 2, 2, 2, 2, 2, 2, 2, 2}, 1, 2));
    CHECK_FALSE(periodicity_holds({3, 2, 2, 2, 1, 2, 2, 2, 2}, 1, 2));
    CHECK_THROWS_AS(periodicity_holds({3, 2, 2, 2, 2, 2, 2, 2}, 1, 2), std::invalid_argument);
}

TEST_CASE("seeded random f over Q with alpha = id") {
    // f = x^n + c_1 x^{n-1} + ... + c_n over Q with seeded random coefficients
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int t = 0; t < 6; ++t) {
        unsigned n = 2 + t % 3;
        nlohmann::json doc = example_spec("trunc:" + std::to_string(n));
        nlohmann::json lam = nlohmann::json::array();
        for (unsigned i = 0; i < n; ++i) lam.push_back(nlohmann::json::array({std::to_string(val(rng))}));
        doc["extension"]["lambdas"] = lam;
        ParsedSpec p = parse_spec(doc);
        const MonogenicAlgebra& a = *p.algebra;
        Bimodule m = Bimodule::regular(a);
        ChainComplex cs = build_cs(a, m, 5);
        CHECK(cs.square_zero_failures().empty());
        Resolution res(a);
        BarComplex bar(res, m);
        CHECK(homology_dims(cs, 4) == homology_dims(bar.complex(5), 4));
        // alpha = id: HH agrees with the A/f'A, ann(f') description
        CHECK(hh_closed_form(a, ClosedFormKind::alpha_identity, 4).dims == homology_dims(cs, 4));
    }
}
