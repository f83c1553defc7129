#include <doctest.h>

#include <random>

#include <vertexkernel/vla.hpp>

using namespace vk;

namespace
{

VlaElement random_element(const VlaPresentation &p, std::mt19937 &rng)
{
    std::uniform_int_distribution<int> coeff(-3, 3), d(0, 2), count(1, 3);
    std::uniform_int_distribution<int> gen(0, static_cast<int>(p.size()) - 1);
    VlaElement u;
    for (int i = count(rng); i > 0; --i) {
        u.add(DTerm{static_cast<GenId>(gen(rng)), d(rng)}, coeff(rng));
    }
    return p.normalize(u);
}

VlaElement d_divided(const VlaPresentation &p, VlaElement x, int j)
{
    for (int i = 0; i < j; ++i) {
        x = apply_D(p, x);
    }
    x *= inverse_factorial(j);
    return x;
}

} // namespace

TEST_CASE("builtin shapes")
{
    const auto a = builtin_abelian(2);
    CHECK(a.size() == 2);
    CHECK(a.products().empty());
    const auto v = builtin_virasoro();
    CHECK(v.size() == 2);
    CHECK(v.products().size() == 3);
    const auto h = builtin_heisenberg(2);
    CHECK(h.size() == 3);
    CHECK(h.products().size() == 2);
    CHECK(builtin_by_name("heisenberg:2").has_value());
    CHECK_FALSE(builtin_by_name("nonsense").has_value());
}

TEST_CASE("builtins pass every axiom")
{
    for (const auto &p : {builtin_virasoro(), builtin_heisenberg(1), builtin_heisenberg(3), builtin_abelian(2)}) {
        const auto r = validate_presentation(p);
        CHECK(r.passed());
    }
}

TEST_CASE("Virasoro products")
{
    const auto p = builtin_virasoro();
    const auto L = p.generator("L");
    const auto DL = p.generator("L", 1);
    CHECK(nth_product(p, L, 1, L) == 2 * L);
    CHECK(nth_product(p, DL, 2, L) == Rational(-4) * L);
    CHECK(nth_product(p, L, 5, L).empty());
    CHECK(nth_product(p, L, 0, L) == DL);
    CHECK(nth_product(p, L, 3, L) == Rational(1, 2) * p.generator("c"));
    CHECK(product_bound(p, L, L) == 4);
}

TEST_CASE("apply_D")
{
    const auto p = builtin_virasoro();
    const auto L = p.generator("L");
    const auto c = p.generator("c");
    CHECK(apply_D(p, L) == p.generator("L", 1));
    CHECK(apply_D(p, c).empty());
    CHECK(apply_D(p, 2 * L + c) == 2 * p.generator("L", 1));
}

TEST_CASE("element text round trip")
{
    const auto p = builtin_virasoro();
    const auto u = p.parse_element("2·D^2L + 1/2·c");
    CHECK(u.coeff(DTerm{p.id("L"), 2}) == 2);
    CHECK(u.coeff(DTerm{p.id("c"), 0}) == Rational(1, 2));
    CHECK(p.parse_element(p.format(u)) == u);
    CHECK(p.parse_element("2*D2L + 1/2*c") == u);
    CHECK_THROWS_AS(p.parse_element("X"), MalformedPresentation);
}

TEST_CASE("weights")
{
    const auto p = builtin_virasoro();
    CHECK(p.weight(p.generator("L", 2)) == 4);
    CHECK_FALSE(p.weight(p.generator("L") + p.generator("c")).has_value());
    CHECK_FALSE(p.weight(VlaElement{}).has_value());
}

TEST_CASE("set_product rejects bad input")
{
    auto p = builtin_abelian(1);
    CHECK_THROWS_AS(p.set_product("h", "h", -1, {}), MalformedPresentation);
    CHECK_THROWS_AS(p.set_product("h", "x", 0, {}), MalformedPresentation);
}

TEST_CASE("rescaling the central term of a valid table stays valid")
{
    // L_3L may be any multiple of c: it only changes the central charge.
    for (const Rational s : {Rational(1), Rational(3, 2), Rational(-2), Rational(0)}) {
        auto p = builtin_virasoro();
        p.set_product("L", "L", 3, s * p.generator("c"));
        CAPTURE(to_string(s));
        CHECK(validate_presentation(p).passed());
    }
}

TEST_CASE("a perturbed L_1L is caught with a witness")
{
    auto p = builtin_virasoro();
    p.set_product("L", "L", 1, Rational(3) * p.generator("L"));
    const auto r = validate_presentation(p);
    CHECK_FALSE(r.passed());
    const auto *f = r.first_failure();
    REQUIRE(f != nullptr);
    CHECK_FALSE(f->witness.empty());
}

TEST_CASE("a weight-breaking entry is caught")
{
    auto p = builtin_virasoro();
    p.set_product("L", "L", 2, p.generator("L"));
    const auto r = validate_presentation(p);
    CHECK_FALSE(r.passed());
    const auto *w = r.find("weight-homogeneity");
    REQUIRE(w != nullptr);
    CHECK_FALSE(w->passed);
}

TEST_CASE("a nonzero torsion row is caught")
{
    auto p = builtin_heisenberg(1);
    p.set_product("c", "h", 0, p.generator("h"));
    CHECK_FALSE(validate_presentation(p).passed());
}

TEST_CASE("skew-symmetry and D-rules hold on random elements")
{
    std::mt19937 rng(1018);
    for (const auto &p : {builtin_virasoro(), builtin_heisenberg(2)}) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto u = random_element(p, rng);
            const auto v = random_element(p, rng);
            const int bound = std::max(product_bound(p, u, v), product_bound(p, v, u));
            for (int n = 0; n <= bound + 1; ++n) {
                VlaElement rhs;
                for (int j = 0; n + j <= bound + 1; ++j) {
                    rhs.add_scaled(d_divided(p, nth_product(p, v, n + j, u), j), Rational(sign_power(n + j + 1)));
                }
                CHECK(nth_product(p, u, n, v) == rhs);
                // (Du)_n v = -n u_{n-1} v and u_n(Dv) = D(u_n v) + n u_{n-1} v
                if (n > 0) {
                    CHECK(nth_product(p, apply_D(p, u), n, v) == Rational(-n) * nth_product(p, u, n - 1, v));
                    CHECK(nth_product(p, u, n, apply_D(p, v)) ==
                          apply_D(p, nth_product(p, u, n, v)) + Rational(n) * nth_product(p, u, n - 1, v));
                } else {
                    CHECK(nth_product(p, apply_D(p, u), 0, v).empty());
                }
            }
        }
    }
}

TEST_CASE("products are bilinear")
{
    std::mt19937 rng(99);
    const auto p = builtin_virasoro();
    for (int trial = 0; trial < 40; ++trial) {
        const auto u = random_element(p, rng), v = random_element(p, rng), w = random_element(p, rng);
        for (int n = 0; n <= 4; ++n) {
            CHECK(nth_product(p, u + v, n, w) == nth_product(p, u, n, w) + nth_product(p, v, n, w));
            CHECK(nth_product(p, u, n, Rational(2) * w) == Rational(2) * nth_product(p, u, n, w));
        }
    }
}
