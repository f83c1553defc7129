#include <doctest.h>

#include <random>

#include <vertexkernel/coalgebra.hpp>

using namespace vk;

namespace
{

// Δ on a word of pairwise distinct commuting modes: sum over all 2^k subsets.
TensorState subset_delta_oracle(const PbwWord &w)
{
    TensorState out;
    const std::size_t k = w.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        PbwWord left, right;
        for (std::size_t i = 0; i < k; ++i) {
            ((mask >> i) & 1U ? left : right).push_back(w[i]);
        }
        out.add({left, right}, 1);
    }
    return out;
}

} // namespace

TEST_CASE("coproduct and counit on fixed states")
{
    const EnvelopingAlgebra V(builtin_virasoro());
    CHECK(delta(V, V.vacuum()) == tensor(V.vacuum(), V.vacuum()));
    const auto L = V.parse("L(-1)|0⟩");
    CHECK(delta(V, L) == tensor(L, V.vacuum()) + tensor(V.vacuum(), L));
    CHECK(counit(V, V.vacuum()) == 1);
    CHECK(counit(V, L) == 0);
    CHECK(counit(V, V.parse("3 + L(-2)|0⟩")) == 3);

    const EnvelopingAlgebra A(builtin_abelian(1));
    const auto h = A.parse("h(-1)|0⟩");
    const auto one = A.vacuum();
    const auto hh = A.parse("h(-1)h(-1)|0⟩");
    CHECK(delta(A, hh) == tensor(hh, one) + Rational(2) * tensor(h, h) + tensor(one, hh));
}

TEST_CASE("coproduct of distinct modes sums over subsets")
{
    const EnvelopingAlgebra V(builtin_virasoro());
    for (int d = 0; d <= 9; ++d) {
        for (const auto &w : V.graded_basis(d, 1)) {
            bool distinct = true;
            for (std::size_t i = 1; i < w.size(); ++i) {
                distinct = distinct && !(w[i] == w[i - 1]);
            }
            if (distinct) {
                CHECK(delta_basis(V, w) == subset_delta_oracle(w));
            }
        }
    }
}

TEST_CASE("coalgebra laws hold on a graded basis")
{
    const EnvelopingAlgebra V(builtin_heisenberg(1));
    const auto basis = V.basis_up_to(5, 1);
    const auto r = check_coalgebra_laws(V, basis, [&](const PbwWord &w) { return V.format_word(w); }, true);
    CHECK(r.passed());
    CHECK(check_d_coideal(V, basis).passed());
}

TEST_CASE("primitive subspaces")
{
    const EnvelopingAlgebra V(builtin_virasoro());
    auto p4 = primitive_subspace(V, V.graded_basis(4, 0), V.vacuum());
    REQUIRE(p4.size() == 1);
    CHECK(p4[0] == V.parse("L(-3)|0⟩"));
    auto p0 = primitive_subspace(V, V.graded_basis(0, 2), V.vacuum());
    REQUIRE(p0.size() == 1);
    CHECK(p0[0] == V.parse("c(-1)|0⟩"));
    const EnvelopingAlgebra A(builtin_abelian(1));
    auto a2 = primitive_subspace(A, A.graded_basis(2, 0), A.vacuum());
    REQUIRE(a2.size() == 1);
    CHECK(a2[0] == A.parse("h(-2)|0⟩"));
    CHECK(primitive_subspace(A, std::vector<PbwWord>{}, A.vacuum()).empty());
}

TEST_CASE("primitives are exactly the embedded generators")
{
    // Each D^j g contributes one primitive at weight wt(g) + j.
    const EnvelopingAlgebra V(builtin_heisenberg(2));
    for (int d = 1; d <= 5; ++d) {
        CHECK(primitive_subspace(V, V.graded_basis(d, 0), V.vacuum()).size() == 2);
    }
}

TEST_CASE("group-like detection")
{
    const EnvelopingAlgebra V(builtin_virasoro());
    CHECK(is_group_like(V, V.vacuum()));
    CHECK_FALSE(is_group_like(V, V.parse("L(-1)|0⟩")));
    const EnvelopingAlgebra A(builtin_abelian(1));
    CHECK_FALSE(is_group_like(A, A.parse("1 + h(-1)|0⟩")));
    CHECK(is_primitive(A, A.parse("h(-1)|0⟩"), A.vacuum()));
}

TEST_CASE("group-like scan inside V finds only the vacuum")
{
    const EnvelopingAlgebra A(builtin_abelian(1));
    std::vector<State> span = {A.vacuum(), A.parse("h(-1)|0⟩"), A.parse("h(-1)h(-1)|0⟩")};
    const auto s = scan_group_likes(A, span);
    CHECK(s.ambient_dim == 3);
    CHECK(s.group_like_count == 1);
    CHECK(s.cocommutative);
    const auto none = scan_group_likes(A, std::vector<State>{A.parse("h(-1)|0⟩")});
    CHECK(none.group_like_count == 0);
}

TEST_CASE("the coproduct is a vertex algebra morphism")
{
    const EnvelopingAlgebra V(builtin_virasoro());
    const auto L = V.parse("L(-1)|0⟩");
    CHECK(check_delta_morphism(V, L, 1, L).passed());
    CHECK(check_delta_morphism(V, V.vacuum(), -1, V.parse("L(-2)L(-1)|0⟩")).passed());
    CHECK(check_delta_morphism(V, L, -2, V.vacuum()).passed());
    std::mt19937 rng(8);
    const auto basis = V.basis_up_to(3, 1);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> n(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto u = State::term(basis[pick(rng)]);
        const auto v = State::term(basis[pick(rng)]);
        CHECK(check_delta_morphism(V, u, n(rng), v).passed());
    }
}

TEST_CASE("divided powers")
{
    auto [c1, k1] = dp_product({1}, {1});
    CHECK(c1 == 2);
    CHECK(k1 == DpKey{2});
    auto [c2, k2] = dp_product({0}, {3});
    CHECK(c2 == 1);
    CHECK(k2 == DpKey{3});
    auto [c3, k3] = dp_product({2}, {3});
    CHECK(c3 == 10);
    CHECK(k3 == DpKey{5});
    CHECK(dp_delta({2}).size() == 3);
    CHECK(dp_delta({0}) == Tensor2<DpKey>::term({{0}, {0}}));
    CHECK(dp_delta({1, 1}).size() == 4);
    CHECK(check_dp_bialgebra(DividedPowerBialgebra(2), 4).passed());
}

TEST_CASE("divided power products are binomial in every coordinate")
{
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= 6; ++b) {
            auto [c, k] = dp_product({a, b}, {b, a});
            CHECK(c == binom_general(a + b, b) * binom_general(a + b, a));
            CHECK(k == DpKey{a + b, a + b});
        }
    }
}

TEST_CASE("the divided power map into U(g)")
{
    const UniversalEnveloping ab(LieAlgebraTable::abelian(2));
    CHECK(psi_g(ab, {2, 0}) == UElement::term({0, 0}, Rational(1, 2)));
    const UniversalEnveloping aff(LieAlgebraTable::affine_line());
    CHECK(psi_g(aff, {1, 1}) == UElement::term({0, 1}));
    CHECK(check_psi_coalgebra_morphism(ab, 4).passed());
    CHECK(check_psi_coalgebra_morphism(aff, 4).passed());
}

TEST_CASE("straightening in U(g)")
{
    const UniversalEnveloping U(LieAlgebraTable::affine_line());
    // yx = xy - [x,y] = xy - y
    CHECK(U.straighten({1, 0}) == UElement::term({0, 1}) - UElement::term({1}));
    CHECK(LieAlgebraTable::affine_line().check().passed());
}
