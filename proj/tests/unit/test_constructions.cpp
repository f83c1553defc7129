#include <doctest.h>

#include <vertexkernel/constructions.hpp>

using namespace vk;

TEST_CASE("semigroup elements")
{
    const SemigroupL Z{1, true};
    CHECK(Z.elements(2).size() == 5);
    const SemigroupL N2{2, false};
    CHECK(N2.elements(1).size() == 4);
    CHECK_FALSE(N2.contains({-1, 0}));
    CHECK(add({1, 2}, {3, -2}) == Alpha{4, 0});
}

TEST_CASE("centrality of φ")
{
    const auto heis = builtin_heisenberg(1);
    CHECK_FALSE(check_phi_central(heis, PhiMap{{heis.generator("h")}}).passed());
    const auto ab = builtin_abelian(1);
    CHECK(check_phi_central(ab, PhiMap{{ab.generator("h")}}).passed());
    const auto vir = builtin_virasoro();
    CHECK(check_phi_central(vir, PhiMap{{vir.generator("c")}}).passed());
    CHECK_FALSE(check_phi_central(vir, PhiMap{{vir.generator("L")}}).passed());
}

TEST_CASE("exponential series of a central state")
{
    const EnvelopingAlgebra A(builtin_abelian(1));
    const auto h = A.parse("h(-1)|0⟩");
    const auto zero = eminus_apply(A, State{}, h, 3);
    REQUIRE(zero.size() == 4);
    CHECK(zero[0] == h);
    CHECK(zero[1].empty());
    CHECK(zero[3].empty());
    const auto e = eminus_apply(A, h, A.vacuum(), 2);
    REQUIRE(e.size() == 3);
    CHECK(e[0] == A.vacuum());
    CHECK(e[1] == h);
    CHECK(e[2] == A.parse("1/2·h(-1)h(-1)|0⟩ + 1/2·h(-2)|0⟩"));
    const auto f = eminus_apply(A, h, h, 1);
    CHECK(f[1] == A.parse("h(-1)h(-1)|0⟩"));
    // third coefficient: h3/3 + h2 h1/2 + h1^3/6
    const auto g = eminus_apply(A, h, A.vacuum(), 3);
    CHECK(g[3] == A.parse("1/3·h(-3)|0⟩ + 1/2·h(-2)h(-1)|0⟩ + 1/6·h(-1)h(-1)h(-1)|0⟩"));
}

TEST_CASE("conjugation by the exponential series")
{
    const EnvelopingAlgebra A(builtin_abelian(1));
    const auto h = A.parse("h(-1)|0⟩");
    std::vector<State> targets = {A.vacuum(), h};
    CHECK(check_eminus_conjugation(A, State{}, h, targets, 2).passed);
    CHECK(check_eminus_conjugation(A, h, A.vacuum(), targets, 2).passed);
    CHECK(check_eminus_conjugation(A, h, h, targets, 2).passed);
}

TEST_CASE("tensor twisted by φ")
{
    const EnvelopingAlgebra A(builtin_abelian(1));
    const auto &p = A.presentation();
    const TensorPhiAlgebra T(A, SemigroupL{1, true}, PhiMap{{p.generator("h")}});
    const auto ea = T.group_element({1});
    const auto eb = T.group_element({2});
    CHECK(T.mode(ea, -1, eb) == T.group_element({3}));
    CHECK(T.mode(ea, -2, T.vacuum()) == T.embed(A.parse("h(-1)|0⟩"), {1}));
    for (int n = 0; n <= 3; ++n) {
        CHECK(T.mode(ea, n, eb).empty());
    }
    CHECK(is_group_like(T, ea));
    CHECK(component_of(T.embed(A.parse("h(-1)h(-1)|0⟩"), {1}).begin()->first) == Alpha{1});
}

TEST_CASE("zero φ gives back V on each component")
{
    const EnvelopingAlgebra V(builtin_virasoro());
    const TensorPhiAlgebra T(V, SemigroupL{1, true}, PhiMap{{VlaElement{}}});
    const auto u = V.parse("L(-2)|0⟩"), w = V.parse("L(-1)L(-1)|0⟩");
    for (int n = -3; n <= 3; ++n) {
        CHECK(T.mode(T.embed(u, {0}), n, T.embed(w, {1})) == T.embed(V.mode(u, n, w), {1}));
    }
}

TEST_CASE("a non-central φ is refused")
{
    const EnvelopingAlgebra H(builtin_heisenberg(1));
    CHECK_THROWS_AS(TensorPhiAlgebra(H, SemigroupL{1, true}, PhiMap{{H.presentation().generator("h")}}),
                    std::invalid_argument);
    const EnvelopingAlgebra V(builtin_virasoro());
    const auto &p = V.presentation();
    CHECK_THROWS_AS(TensorPhiAlgebra(V, SemigroupL{1, true}, PhiMap{{p.generator("c") + p.generator("L", 1)}}),
                    std::exception);
}

TEST_CASE("twisted tensor satisfies the vertex axioms")
{
    const EnvelopingAlgebra A(builtin_abelian(1));
    const TensorPhiAlgebra T(A, SemigroupL{1, true}, PhiMap{{A.presentation().generator("h")}});
    const auto basis = T.basis(1, 0, 1);
    for (const auto &ku : basis) {
        for (const auto &kv : basis) {
            const auto u = TensorPhiState::term(ku), v = TensorPhiState::term(kv);
            CHECK(check_skew_symmetry(T, u, v, Window{-2, 2}).passed);
            CHECK(check_commutator_formula(T, u, v, T.group_element({1}), Window{-2, 1}, Window{-2, 1}).passed);
        }
    }
    auto fmt = [&](const TensorPhiKey &k) { return T.format_key(k); };
    CHECK(check_coalgebra_laws(T, T.basis(2, 0, 2), fmt, true).passed());
}

TEST_CASE("differential bialgebra B_L")
{
    const DiffBialgebra B(SemigroupL{1, true});
    const auto ea = B.e({1});
    CHECK(B.derivative(B.h(0, 2)) == Rational(2) * B.h(0, 3));
    CHECK(delta(B, ea) == tensor(ea, ea));
    CHECK(B.derivative(ea) == B.multiply(B.alpha_bar({1}), ea));
    const auto x = B.multiply(B.h(0, 1), ea);
    CHECK(B.derivative(x) == B.multiply(B.h(0, 2), ea) + B.multiply(B.multiply(B.h(0, 1), B.alpha_bar({1})), ea));
    CHECK(B.parse(B.format(x)) == x);
    CHECK(check_bl_bialgebra(B, 3, 2).passed());
    CHECK(check_bl_bialgebra(DiffBialgebra(SemigroupL{2, false}), 2, 1).passed());
}

TEST_CASE("Borcherds modes of B_L")
{
    const DiffBialgebra B(SemigroupL{1, true});
    const auto one = B.one();
    CHECK(borcherds_mode(B, B.h(0, 1), -2, one) == B.h(0, 2));
    CHECK(borcherds_mode(B, B.h(0, 1), -1, one) == B.h(0, 1));
    CHECK(borcherds_mode(B, B.e({1}), 0, B.e({2})).empty());
    CHECK(borcherds_mode(B, B.e({1}), -2, one) == B.multiply(B.alpha_bar({1}), B.e({1})));
}

TEST_CASE("logarithmic derivative of group-likes")
{
    const DiffBialgebra B(SemigroupL{2, true});
    CHECK(bl_phi(B, B.e({1, 0})) == B.alpha_bar({1, 0}));
    CHECK(bl_phi(B, B.e({0, 0})).empty());
    CHECK(bl_phi(B, B.e({1, -2})) == bl_phi(B, B.e({1, 0})) + bl_phi(B, B.e({0, -2})));
    CHECK_THROWS_AS(bl_phi(B, B.h(0, 1)), std::invalid_argument);
}

TEST_CASE("B_L agrees with the twisted tensor")
{
    CHECK(check_bl_equals_tensor_phi(SemigroupL{1, true}, 3, 2, Window{-3, 2}).passed());
    CHECK(check_bl_equals_tensor_phi(SemigroupL{1, false}, 3, 2, Window{-3, 2}).passed());
}

TEST_CASE("morphisms out of B_L")
{
    const DiffBialgebra B(SemigroupL{1, true});
    auto id = extend_universal_morphism(B, B, {{1}}, {B.h(0, 1)}, 3, 2);
    CHECK(id.morphism.has_value());
    CHECK(id.report.passed());
    const auto x = B.multiply(B.h(0, 2), B.e({-1}));
    CHECK(id.morphism->apply(x) == x);
    auto scaled = extend_universal_morphism(B, B, {{2}}, {Rational(2) * B.h(0, 1)}, 3, 2);
    CHECK(scaled.morphism.has_value());
    CHECK(scaled.report.passed());
    CHECK(scaled.morphism->apply(B.e({1})) == B.e({2}));
    auto bad = extend_universal_morphism(B, B, {{1}}, {Rational(2) * B.h(0, 1)}, 3, 2);
    CHECK_FALSE(bad.morphism.has_value());
    CHECK_FALSE(bad.report.passed());
}

TEST_CASE("morphisms induced from generator images")
{
    const EnvelopingAlgebra A(builtin_abelian(1));
    const DiffBialgebra B(SemigroupL{1, true});
    auto r = induced_vertex_morphism(A, B, {B.h(0, 1)}, 3, 0, Window{-3, 2});
    CHECK(r.report.passed());
    REQUIRE(r.morphism.has_value());
    auto power = B.one();
    State word = A.vacuum();
    for (int n = 1; n <= 3; ++n) {
        power = B.multiply(B.h(0, 1), power);
        word = A.mode(A.parse("h(-1)|0⟩"), -1, word);
        CHECK(r.morphism->apply(word) == power);
    }

    const EnvelopingAlgebra V(builtin_virasoro());
    auto self = induced_vertex_morphism(V, V, {V.generator_state("L"), V.generator_state("c")}, 3, 1, Window{-2, 2});
    CHECK(self.report.passed());

    const DiffBialgebra B2(SemigroupL{2, true});
    auto sum = induced_vertex_morphism(A, B2, {B2.h(0, 1) + B2.h(1, 1)}, 3, 0, Window{-2, 2});
    CHECK(sum.report.passed());
}

TEST_CASE("induced morphism rejects a non-morphism")
{
    const EnvelopingAlgebra H(builtin_heisenberg(1));
    const DiffBialgebra B(SemigroupL{1, true});
    // h_1 h = c must map to zero in the commutative target, but c -> 1 does not
    auto r = induced_vertex_morphism(H, B, {B.h(0, 1), B.one()}, 2, 1, Window{-2, 2});
    CHECK_FALSE(r.report.passed());
}

TEST_CASE("grading components and group-like semigroup of B_L")
{
    const DiffBialgebra B(SemigroupL{1, true});
    std::vector<DiffElement> groups;
    for (const auto &a : B.semigroup().elements(2)) {
        groups.push_back(B.e(a));
    }
    CHECK(check_components(B, B.basis(2, 1), groups, Window{-2, 1}).passed());
    std::vector<DiffElement> samples = {B.h(0, 1), B.multiply(B.h(0, 2), B.e({1}))};
    CHECK(check_group_like_semigroup(B, groups, samples, 3, Window{-2, 1}).passed());
    const auto k = DiffKey{{HSymbol{0, 1}, HSymbol{0, 1}}, Alpha{1}};
    CHECK(component_of(k) == Alpha{1});
}
