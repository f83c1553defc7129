// Derived constructions on top of the enveloping vertex algebra.
//
//   * E⁻(a,x) = exp(Σ_{n>=1} a_{-n} x^n / n) for central a
//   * V ⊗_φ C[L] with Y(v⊗e^α, x) = E⁻(φ(α), x) Y(v, x) ⊗ e^α
//   * B_L = S(ĥ⁻) ⊗ C[L] with ∂h(-n) = n h(-n-1), ∂e^α = ᾱ(-1) e^α, as a
//     vertex algebra by the construction Y(a,x)b = (e^{x∂}a) b
//   * morphisms out of B_L and out of V_C, with verification reports
//
// L is always Z^r or N^r; α is an integer vector of length r.

#ifndef VERTEXKERNEL_CONSTRUCTIONS_HPP
#define VERTEXKERNEL_CONSTRUCTIONS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <vertexkernel/checks.hpp>
#include <vertexkernel/coalgebra.hpp>
#include <vertexkernel/enveloping.hpp>
#include <vertexkernel/vla.hpp>

namespace vk
{

using Alpha = std::vector<int>;

struct SemigroupL {
    int rank = 1;
    bool group = true; // Z^r when true, N^r otherwise

    [[nodiscard]] Alpha zero() const { return Alpha(static_cast<std::size_t>(rank), 0); }
    [[nodiscard]] Alpha basis(int i) const;
    [[nodiscard]] bool contains(const Alpha &a) const;
    /// Every α with max |α_i| <= bound (nonnegative entries for N^r).
    [[nodiscard]] std::vector<Alpha> elements(int bound) const;
};

Alpha add(const Alpha &a, const Alpha &b);
std::string format_alpha(const Alpha &a);

/// Raised for inputs outside the supported class (e.g. mixed-weight φ).
class Unsupported : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// φ on the r directions of L, extended additively.
struct PhiMap {
    std::vector<VlaElement> targets;

    [[nodiscard]] VlaElement at(const Alpha &a) const;
};

/// φ(α)_n b = 0 for every direction, every generator b and every n >= 0.
ValidationReport check_phi_central(const VlaPresentation &p, const PhiMap &phi);

/// Coefficients of x^0..x^order in E⁻(a,x) v. The modes a_{-n} commute
/// when a is central, so e_j = (1/j) Σ_{n=1}^{j} a_{-n} e_{j-n}.
std::vector<State> eminus_apply(const EnvelopingAlgebra &V, const State &a, const State &v, int order);

/// Y(E⁻(a,x0) w, x2) t = E⁻(a, x2+x0) E⁻(-a, x2) Y(w, x2) t, compared on the
/// coefficients x0^i x2^e with 0 <= i <= order, |e| <= order + 1, for each t.
CheckResult check_eminus_conjugation(const EnvelopingAlgebra &V, const State &a, const State &w,
                                     const std::vector<State> &targets, int order);

using TensorPhiKey = std::pair<PbwWord, Alpha>;
using TensorPhiState = LinComb<TensorPhiKey>;

class TensorPhiAlgebra
{
public:
    using Key = TensorPhiKey;
    using Element = TensorPhiState;

    /// Throws std::invalid_argument when φ is not central (the message
    /// carries the witness) and Unsupported when a target is not
    /// weight-homogeneous.
    TensorPhiAlgebra(const EnvelopingAlgebra &V, SemigroupL L, PhiMap phi);

    [[nodiscard]] const EnvelopingAlgebra &base() const noexcept { return V_; }
    [[nodiscard]] const SemigroupL &semigroup() const noexcept { return L_; }
    [[nodiscard]] const PhiMap &phi() const noexcept { return phi_; }
    /// φ(α) as a state of V.
    [[nodiscard]] State phi_state(const Alpha &a) const;

    [[nodiscard]] Element vacuum() const { return Element::term({{}, L_.zero()}); }
    [[nodiscard]] Element embed(const State &v, const Alpha &a) const;
    [[nodiscard]] Element group_element(const Alpha &a) const { return embed(V_.vacuum(), a); }

    /// Res_x x^m E⁻(φ(α),x) Y(v,x) w ⊗ e^{α+β}
    [[nodiscard]] Element mode(const Element &u, int m, const Element &w) const;
    /// D(x⊗e^α) = (x⊗e^α)_{-2} (1⊗e^0)
    [[nodiscard]] Element derivative(const Element &x) const;
    [[nodiscard]] int truncation_bound(const Element &u, const Element &w) const;

    /// Words of weight <= max_weight (torsion degree <= torsion_bound) times
    /// every α with max |α_i| <= alpha_bound.
    [[nodiscard]] std::vector<Key> basis(int max_weight, int torsion_bound, int alpha_bound) const;

    [[nodiscard]] std::string format_key(const Key &k) const;
    [[nodiscard]] std::string format(const Element &x) const;

private:
    const EnvelopingAlgebra &V_;
    SemigroupL L_;
    PhiMap phi_;
    std::vector<State> phi_states_;
};

LinComb<std::pair<TensorPhiKey, TensorPhiKey>> delta_basis(const TensorPhiAlgebra &T, const TensorPhiKey &k);
Rational counit_basis(const TensorPhiAlgebra &T, const TensorPhiKey &k);

// B_L. A monomial is a sorted multiset of symbols h_i(-n), n >= 1.
struct HSymbol {
    int index = 0;
    int n = 1;
    friend auto operator<=>(const HSymbol &a, const HSymbol &b)
    {
        if (a.n != b.n) {
            return b.n <=> a.n;
        }
        return a.index <=> b.index;
    }
    friend bool operator==(const HSymbol &, const HSymbol &) = default;
};

using HMonomial = std::vector<HSymbol>;
using DiffKey = std::pair<HMonomial, Alpha>;
using DiffElement = LinComb<DiffKey>;

/// Y(a,x)b = (e^{x∂}a) b on a commutative differential algebra A:
/// a_n b = 0 for n >= 0, a_{-k-1} b = (1/k!) (∂^k a) b.
template <typename A>
typename A::Element borcherds_mode(const A &alg, const typename A::Element &a, int n, const typename A::Element &b)
{
    if (n >= 0) {
        return {};
    }
    const int k = -n - 1;
    auto x = a;
    for (int i = 0; i < k; ++i) {
        x = alg.derivative(x);
    }
    auto out = alg.multiply(x, b);
    out *= inverse_factorial(k);
    return out;
}

class DiffBialgebra
{
public:
    using Key = DiffKey;
    using Element = DiffElement;

    explicit DiffBialgebra(SemigroupL L);

    [[nodiscard]] const SemigroupL &semigroup() const noexcept { return L_; }
    [[nodiscard]] int rank() const noexcept { return L_.rank; }

    [[nodiscard]] Element one() const { return Element::term({{}, L_.zero()}); }
    [[nodiscard]] Element vacuum() const { return one(); }
    /// h_i(-n)
    [[nodiscard]] Element h(int i, int n) const;
    /// e^α
    [[nodiscard]] Element e(const Alpha &a) const;
    /// ᾱ(-1) = Σ α_i h_i(-1)
    [[nodiscard]] Element alpha_bar(const Alpha &a) const;

    [[nodiscard]] Element multiply(const Element &a, const Element &b) const;
    [[nodiscard]] Element derivative(const Element &x) const;

    [[nodiscard]] Element mode(const Element &a, int n, const Element &b) const { return borcherds_mode(*this, a, n, b); }
    [[nodiscard]] int truncation_bound(const Element &, const Element &) const { return 0; }

    /// Σ n over the symbols h_i(-n).
    [[nodiscard]] static int weight(const HMonomial &m);
    /// Monomials of weight <= max_weight times α with max |α_i| <= alpha_bound.
    [[nodiscard]] std::vector<Key> basis(int max_weight, int alpha_bound) const;

    [[nodiscard]] std::string symbol_name(int i) const;
    [[nodiscard]] std::string format_key(const Key &k) const;
    /// "h1(-2)^2·e^{(3)}"
    [[nodiscard]] std::string format(const Element &x) const;
    [[nodiscard]] Element parse(std::string_view text) const;

private:
    SemigroupL L_;
};

LinComb<std::pair<DiffKey, DiffKey>> delta_basis(const DiffBialgebra &B, const DiffKey &k);
Rational counit_basis(const DiffBialgebra &B, const DiffKey &k);

/// g^{-1} ∂g for a group-like g = e^α. Throws std::invalid_argument when g
/// is not of that form or has no inverse in L.
DiffElement bl_phi(const DiffBialgebra &B, const DiffElement &g);

/// Δ∂ = (∂⊗1 + 1⊗∂)Δ, ε∂ = 0, Δ and ε multiplicative, coalgebra laws, and
/// additivity of g ↦ g^{-1}∂g, all on the bounded basis.
ValidationReport check_bl_bialgebra(const DiffBialgebra &B, int max_weight, int alpha_bound);

/// The abelian V_C with generators h_1..h_r.
HMonomial monomial_of(const PbwWord &w);
PbwWord word_of(const HMonomial &m);

/// Borcherds modes of B_L against the modes of S(ĥ⁻) ⊗_φ C[L] with
/// φ(α) = ᾱ(-1), under h_i(-n)e^α ↔ h_i(-n)|0⟩⊗e^α; also ∂, Δ and ε.
ValidationReport check_bl_equals_tensor_phi(const SemigroupL &L, int max_weight, int alpha_bound, Window modes);

/// The unique differential bialgebra morphism f: B_L → B_{L'} with
/// f(e^α) = ψ(e^α) = e^{Mα} and f(ᾱ(-1)) = φ_B(ᾱ).
class UniversalMorphism
{
public:
    /// No validation; see extend_universal_morphism.
    UniversalMorphism(const DiffBialgebra &source, const DiffBialgebra &target, std::vector<Alpha> psi,
                      std::vector<DiffElement> phi_b);

    [[nodiscard]] const DiffBialgebra &source() const noexcept { return *source_; }
    [[nodiscard]] const DiffBialgebra &target() const noexcept { return *target_; }
    /// ψ on L: α ↦ Σ α_i psi[i]
    [[nodiscard]] Alpha psi(const Alpha &a) const;
    [[nodiscard]] DiffElement apply_key(const DiffKey &k) const;
    [[nodiscard]] DiffElement apply(const DiffElement &x) const;

private:
    const DiffBialgebra *source_;
    const DiffBialgebra *target_;
    std::vector<Alpha> psi_;
    std::vector<DiffElement> phi_b_;
};

struct MorphismResult {
    std::optional<UniversalMorphism> morphism; // empty on rejection
    ValidationReport report;
};

/// psi[i] is the image of the i-th direction of L in L'. phi_b[i] must be
/// primitive. Checks ∂ψ(e^α) = φ_B(ᾱ)ψ(e^α) on the directions first and
/// rejects with the failing α; otherwise verifies that f is an algebra, ∂,
/// Δ and ε morphism on the bounded basis.
MorphismResult extend_universal_morphism(const DiffBialgebra &source, const DiffBialgebra &target,
                                         std::vector<Alpha> psi, std::vector<DiffElement> phi_b,
                                         int max_weight, int alpha_bound);

/// Ψ: V_C → T, X|0⟩ ↦ X acting on the vacuum of T, induced by images of
/// the generators of C.
template <typename T>
class InducedMorphism
{
public:
    InducedMorphism(const EnvelopingAlgebra &V, const T &target, std::vector<typename T::Element> images)
        : V_(V), T_(target), images_(std::move(images))
    {
    }

    [[nodiscard]] const std::vector<typename T::Element> &images() const noexcept { return images_; }

    /// f on C: D^d g ↦ D^d f(g)
    [[nodiscard]] typename T::Element on_vla(const VlaElement &u) const
    {
        typename T::Element out;
        for (const auto &[t, c] : u) {
            auto x = images_.at(t.gen);
            for (int i = 0; i < t.d; ++i) {
                x = T_.derivative(x);
            }
            out.add_scaled(x, c);
        }
        return out;
    }

    [[nodiscard]] typename T::Element apply_word(const PbwWord &w) const
    {
        auto x = T_.vacuum();
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            x = T_.mode(images_.at(it->gen), it->n, x);
        }
        return x;
    }

    [[nodiscard]] typename T::Element apply(const State &v) const
    {
        typename T::Element out;
        for (const auto &[w, c] : v) {
            out.add_scaled(apply_word(w), c);
        }
        return out;
    }

private:
    const EnvelopingAlgebra &V_;
    const T &T_;
    std::vector<typename T::Element> images_;
};

template <typename T>
struct InducedResult {
    std::optional<InducedMorphism<T>> morphism;
    ValidationReport report;
};

/// Validates the generator images as a vertex Lie algebra morphism
/// (f(a_n b) = f(a)_n f(b) for n >= 0, D f(c) = 0 on torsion c), then checks
/// Ψ(u_n v) = Ψ(u)_n Ψ(v), ΔΨ = (Ψ⊗Ψ)Δ and εΨ = ε on the basis of weight
/// <= max_weight for n in the window.
template <typename T>
InducedResult<T> induced_vertex_morphism(const EnvelopingAlgebra &V, const T &target,
                                         std::vector<typename T::Element> images, int max_weight, int torsion_bound,
                                         Window modes)
{
    const auto &p = V.presentation();
    InducedResult<T> out;
    if (images.size() != p.size()) {
        throw std::invalid_argument("induced_vertex_morphism: expected " + std::to_string(p.size()) + " images");
    }
    InducedMorphism<T> psi(V, target, std::move(images));
    CheckResult lie("morphism/vertex-lie", "f(a_n b) = f(a)_n f(b), n >= 0");
    for (GenId a = 0; a < p.size(); ++a) {
        if (p.is_torsion(a)) {
            auto d = target.derivative(psi.images()[a]);
            lie.record(d.empty(), [&] { return "D f(" + p.spec(a).name + ") = " + target.format(d); });
        }
        for (GenId b = 0; b < p.size(); ++b) {
            const int bound = std::max(product_bound(p, p.generator(a), p.generator(b)),
                                       target.truncation_bound(psi.images()[a], psi.images()[b]));
            for (int n = 0; n < bound + 2; ++n) {
                auto lhs = psi.on_vla(nth_product(p, p.generator(a), n, p.generator(b)));
                auto rhs = target.mode(psi.images()[a], n, psi.images()[b]);
                lie.record(lhs == rhs, [&] {
                    return p.spec(a).name + "_" + std::to_string(n) + p.spec(b).name + ": " + target.format(lhs) +
                           " vs " + target.format(rhs);
                });
            }
        }
    }
    const bool lie_ok = lie.passed;
    out.report.add(std::move(lie));
    if (!lie_ok) {
        return out;
    }
    const auto basis = V.basis_up_to(max_weight, torsion_bound);
    CheckResult modes_res("morphism/modes", "Ψ(u_n v) = Ψ(u)_n Ψ(v)");
    CheckResult delta_res("morphism/delta", "ΔΨ = (Ψ⊗Ψ)Δ");
    CheckResult counit_res("morphism/counit", "εΨ = ε");
    auto psi_key = [&](const PbwWord &w) { return psi.apply_word(w); };
    for (const auto &u : basis) {
        const State us = State::term(u);
        const auto pu = psi.apply(us);
        delta_res.record(delta(target, pu) == tensor_map(delta(V, us), psi_key, psi_key),
                         [&] { return V.format(us); });
        counit_res.record(counit(target, pu) == counit(V, us), [&] { return V.format(us); });
        for (const auto &v : basis) {
            const State vs = State::term(v);
            const auto pv = psi.apply(vs);
            for (int n = modes.lo; n <= modes.hi; ++n) {
                auto lhs = psi.apply(V.mode(us, n, vs));
                auto rhs = target.mode(pu, n, pv);
                modes_res.record(lhs == rhs, [&] {
                    return "u=" + V.format(us) + " n=" + std::to_string(n) + " v=" + V.format(vs) + ": " +
                           target.format(lhs) + " vs " + target.format(rhs);
                });
            }
        }
    }
    out.report.add(std::move(modes_res));
    out.report.add(std::move(delta_res));
    out.report.add(std::move(counit_res));
    out.morphism.emplace(std::move(psi));
    return out;
}

/// The group-like tag of a basis key.
template <typename K>
const Alpha &component_of(const std::pair<K, Alpha> &key)
{
    return key.second;
}

/// Component bookkeeping on an algebra whose keys are (x, α):
///   Δ V_α ⊆ V_α ⊗ V_α,
///   u_n V_α ⊆ V_α for u ∈ V_0,
///   (e^γ)_{-1} V_α ⊆ V_{γ+α}.
template <typename A>
ValidationReport check_components(const A &alg, const std::vector<typename A::Key> &basis,
                                  const std::vector<typename A::Element> &group_elements, Window modes)
{
    using K = typename A::Key;
    CheckResult coalg("components/delta", "Δ V_α ⊆ V_α ⊗ V_α");
    CheckResult submodule("components/submodule", "(V_0)_n V_α ⊆ V_α");
    CheckResult shift("components/group-shift", "(e^γ)_{-1} V_α ⊆ V_{γ+α}");
    auto tagged = [](const typename A::Element &x, const Alpha &a) {
        for (const auto &[k, c] : x) {
            if (component_of(k) != a) {
                return false;
            }
        }
        return true;
    };
    for (const K &k : basis) {
        const auto x = A::Element::term(k);
        const Alpha &a = component_of(k);
        for (const auto &[kk, c] : delta_basis(alg, k)) {
            coalg.record(component_of(kk.first) == a && component_of(kk.second) == a,
                         [&] { return alg.format_key(k); });
        }
        for (const K &u : basis) {
            if (std::any_of(component_of(u).begin(), component_of(u).end(), [](int v) { return v != 0; })) {
                continue;
            }
            for (int n = modes.lo; n <= modes.hi; ++n) {
                auto y = alg.mode(A::Element::term(u), n, x);
                submodule.record(tagged(y, a), [&] {
                    return alg.format_key(u) + " mode " + std::to_string(n) + " on " + alg.format_key(k);
                });
            }
        }
        for (const auto &g : group_elements) {
            const Alpha &gamma = component_of(g.begin()->first);
            auto y = alg.mode(g, -1, x);
            shift.record(tagged(y, add(gamma, a)), [&] { return alg.format(g) + " on " + alg.format_key(k); });
        }
    }
    ValidationReport r;
    r.add(std::move(coalg));
    r.add(std::move(submodule));
    r.add(std::move(shift));
    return r;
}

/// For group-likes g = e^α, h = e^β over the given α: g_n h = 0 for
/// 0 <= n <= max_n, g_{-1}h group-like, the product g_{-1}h associative,
/// commutative and unital, and [g_m, h_n] = 0 on the sample states.
template <typename A>
ValidationReport check_group_like_semigroup(const A &alg, const std::vector<typename A::Element> &group_elements,
                                            const std::vector<typename A::Element> &samples, int max_n, Window modes)
{
    CheckResult annihilate("group-likes/nonnegative-modes", "g_n h = 0, n >= 0");
    CheckResult closed("group-likes/product", "g_{-1}h group-like");
    CheckResult assoc("group-likes/associative", "(gh)k = g(hk)");
    CheckResult comm("group-likes/commutative", "gh = hg");
    CheckResult unit("group-likes/unit", "1g = g = g1");
    CheckResult commute("group-likes/modes-commute", "[g_m, h_n] = 0");
    const auto one = alg.vacuum();
    for (const auto &g : group_elements) {
        closed.record(is_group_like(alg, g), [&] { return alg.format(g); });
        unit.record(alg.mode(one, -1, g) == g && alg.mode(g, -1, one) == g, [&] { return alg.format(g); });
        for (const auto &h : group_elements) {
            for (int n = 0; n <= max_n; ++n) {
                auto x = alg.mode(g, n, h);
                annihilate.record(x.empty(), [&] {
                    return alg.format(g) + " mode " + std::to_string(n) + " on " + alg.format(h) + " = " + alg.format(x);
                });
            }
            const auto gh = alg.mode(g, -1, h);
            closed.record(is_group_like(alg, gh), [&] { return alg.format(g) + " · " + alg.format(h); });
            comm.record(gh == alg.mode(h, -1, g), [&] { return alg.format(g) + " · " + alg.format(h); });
            for (const auto &k : group_elements) {
                assoc.record(alg.mode(gh, -1, k) == alg.mode(g, -1, alg.mode(h, -1, k)),
                             [&] { return alg.format(g) + " · " + alg.format(h) + " · " + alg.format(k); });
            }
            for (const auto &s : samples) {
                for (int m = modes.lo; m <= modes.hi; ++m) {
                    for (int n = modes.lo; n <= modes.hi; ++n) {
                        auto lhs = alg.mode(g, m, alg.mode(h, n, s));
                        auto rhs = alg.mode(h, n, alg.mode(g, m, s));
                        commute.record(lhs == rhs, [&] {
                            return alg.format(g) + "_" + std::to_string(m) + " " + alg.format(h) + "_" +
                                   std::to_string(n) + " on " + alg.format(s);
                        });
                    }
                }
            }
        }
    }
    ValidationReport r;
    r.add(std::move(annihilate));
    r.add(std::move(closed));
    r.add(std::move(assoc));
    r.add(std::move(comm));
    r.add(std::move(unit));
    r.add(std::move(commute));
    return r;
}

} // namespace vk

#endif
