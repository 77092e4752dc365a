#include "doctest.h"
#include "mhc/resolution.hpp"
#include "support.hpp"

using namespace mhc;

namespace {

Tensor mono(const MonogenicAlgebra& a, std::size_t head_x, Exps exps, const Scalar& c = Scalar(1)) {
    Tensor t;
    t.add(exps, scaled(a.x_power(head_x), c));
    return t;
}

Tensor sum(std::initializer_list<Tensor> ts) {
    Tensor out;
    for (const auto& t : ts) out.add(t);
    out.prune();
    return out;
}

// random element of C'_r: sum of a (x) x^e with random a in A
Tensor random_small(std::mt19937& rng, const MonogenicAlgebra& a) {
    Tensor t;
    for (std::size_t e = 0; e < a.n(); ++e) t.add(Exps{static_cast<std::uint8_t>(e)}, test::random_vec(rng, a.dim_a(), a.field()));
    t.prune();
    return t;
}

// random element of the bar resolution in degree r
Tensor random_bar(std::mt19937& rng, const MonogenicAlgebra& a, std::size_t r) {
    std::uniform_int_distribution<int> part(1, static_cast<int>(a.n()) - 1), right(0, static_cast<int>(a.n()) - 1);
    Tensor t;
    for (int k = 0; k < 3; ++k) {
        Exps e;
        for (std::size_t i = 0; i < r; ++i) e.push_back(static_cast<std::uint8_t>(part(rng)));
        e.push_back(static_cast<std::uint8_t>(right(rng)));
        t.add(e, test::random_vec(rng, a.dim_a(), a.field()));
    }
    t.prune();
    return t;
}

Tensor minus(Tensor a, const Tensor& b) {
    a.add(b, Scalar(-1));
    a.prune();
    return a;
}

}  // namespace

TEST_CASE("d'_1(1 (x) 1) = x (x) 1 - 1 (x) x") {
    ParsedSpec p = load_spec("sweedler");
    const MonogenicAlgebra& a = *p.algebra;
    Resolution res(a);
    CHECK(res.d_small_generator(1) == sum({mono(a, 1, {0}), mono(a, 0, {1}, -1)}));
}

TEST_CASE("trunc f = x^3: d'_2(1 (x) 1) = 1 (x) x^2 + x (x) x + x^2 (x) 1") {
    ParsedSpec p = load_spec("trunc3");
    const MonogenicAlgebra& a = *p.algebra;
    Resolution res(a);
    CHECK(res.d_small_generator(2) == sum({mono(a, 0, {2}), mono(a, 1, {1}), mono(a, 2, {0})}));
}

TEST_CASE("phi'_1(1 (x) 1) = 1 (x) x (x) 1") {
    ParsedSpec p = load_spec("taft3");
    const MonogenicAlgebra& a = *p.algebra;
    Resolution res(a);
    CHECK(res.phi_generator(1) == mono(a, 0, {1, 0}));
}

TEST_CASE("sweedler: psi'_2(1 (x) x (x) x (x) 1) = 1 (x) 1") {
    ParsedSpec p = load_spec("sweedler");
    const MonogenicAlgebra& a = *p.algebra;
    Resolution res(a);
    CHECK(res.psi_generator(Exps{1, 1}) == mono(a, 0, {0}));
}

TEST_CASE("omega' vanishes on the degree-0 generator") {
    for (std::string name : {"sweedler", "trunc3", "rank1c4"}) {
        ParsedSpec p = load_spec(name);
        Resolution res(*p.algebra);
        CHECK(res.omega_generator(Exps{}).is_zero());
    }
}

TEST_CASE("degree of a tensor") {
    ParsedSpec p = load_spec("trunc3");
    const MonogenicAlgebra& a = *p.algebra;
    CHECK(degree(mono(a, 2, {1}), a) == 3);
    CHECK(degree(mono(a, 1, {2, 1, 0}), a) == 4);
    CHECK(degree(Tensor{}, a) == kNegInfDegree);
}

TEST_CASE("twists alternate mn and mn + 1") {
    ParsedSpec p = load_spec("taft3");
    Resolution res(*p.algebra);
    CHECK(res.twist(0) == 0);
    CHECK(res.twist(1) == 1);
    CHECK(res.twist(2) == 3);
    CHECK(res.twist(3) == 4);
    CHECK(res.twist(4) == 6);
}

TEST_CASE("comparison maps are chain maps and psi' phi' = id on seeded random elements") {
    std::mt19937 rng(4242);
    for (std::string name : {"sweedler", "trunc3", "taft3", "rank1c4", "dihedral6", "rank1nc_c2xc4"}) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        const MonogenicAlgebra& a = *p.algebra;
        Resolution res(a);
        for (std::size_t r = 1; r <= 5; ++r) {
            CAPTURE(r);
            Tensor s = random_small(rng, a);
            CHECK(res.psi(r, res.phi(r, s)) == s);
            CHECK(res.b_bar(r, res.phi(r, s)) == res.phi(r - 1, res.d_small(r, s)));
            if (r >= 2) CHECK(res.d_small(r - 1, res.d_small(r, s)).is_zero());
            Tensor t = random_bar(rng, a, r);
            CHECK(res.d_small(r, res.psi(r, t)) == res.psi(r - 1, res.b_bar(r, t)));
            if (r >= 2) CHECK(res.b_bar(r - 1, res.b_bar(r, t)).is_zero());
            // b' w' + w' b' = phi' psi' - id
            Tensor lhs = res.b_bar(r + 1, res.omega(r, t));
            lhs.add(res.omega(r - 1, res.b_bar(r, t)));
            lhs.prune();
            CHECK(lhs == minus(res.phi(r, res.psi(r, t)), t));
        }
    }
}

TEST_CASE("omega' does not raise the degree on seeded random monomials") {
    std::mt19937 rng(99);
    for (std::string name : {"sweedler", "trunc3", "taft3", "rank1c4"}) {
        CAPTURE(name);
        ParsedSpec p = load_spec(name);
        const MonogenicAlgebra& a = *p.algebra;
        Resolution res(a);
        std::uniform_int_distribution<int> part(1, static_cast<int>(a.n()) - 1), free(0, static_cast<int>(a.n()) - 1);
        for (int k = 0; k < 40; ++k) {
            std::size_t r = 1 + k % 3;
            Exps e;
            for (std::size_t i = 0; i < r; ++i) e.push_back(static_cast<std::uint8_t>(part(rng)));
            e.push_back(static_cast<std::uint8_t>(free(rng)));
            Tensor t = mono(a, static_cast<std::size_t>(free(rng)), e);
            CHECK(degree(res.omega(r, t), a) <= degree(t, a));
        }
    }
}
