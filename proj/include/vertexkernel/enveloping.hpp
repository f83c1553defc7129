// The enveloping vertex algebra V_C = U(L_C) ⊗_{U(L_C^+)} C.
//
// States are rational combinations of PBW-ordered words of negative modes
// applied to the vacuum. The left action of a mode is computed by commuting
// it into place with bracket corrections, and the general product u_n v by
// recursion on the length of u through the residue of the Jacobi identity:
//
//   (a(-k-1) w)_n = sum_{i>=0} binom(k+i, i) ( a(-k-1-i) w_{n+i}
//                                  - (-1)^{k+1} w_{n-k-1-i} a(i) )
//
// All i-sums are finite by the weight bound on truncation.

#ifndef VERTEXKERNEL_ENVELOPING_HPP
#define VERTEXKERNEL_ENVELOPING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <vertexkernel/current.hpp>
#include <vertexkernel/lincomb.hpp>
#include <vertexkernel/memo.hpp>
#include <vertexkernel/vla.hpp>

namespace vk
{

using PbwWord = std::vector<Mode>;
using State = LinComb<PbwWord>;

struct WordHash {
    std::size_t operator()(const PbwWord &w) const noexcept;
};

class EnvelopingAlgebra
{
public:
    using Key = PbwWord;
    using Element = State;

    /// The presentation is expected to pass validate_presentation.
    explicit EnvelopingAlgebra(VlaPresentation p);

    EnvelopingAlgebra(const EnvelopingAlgebra &) = delete;
    EnvelopingAlgebra &operator=(const EnvelopingAlgebra &) = delete;

    [[nodiscard]] const VlaPresentation &presentation() const noexcept { return p_; }

    [[nodiscard]] State vacuum() const { return State::term({}); }
    /// g(-1)|0>
    [[nodiscard]] State generator_state(GenId g) const;
    [[nodiscard]] State generator_state(std::string_view name) const { return generator_state(p_.id(name)); }
    /// Embeds C: D^d g -> d! g(-d-1)|0>.
    [[nodiscard]] State from_vla(const VlaElement &u) const;

    [[nodiscard]] int word_weight(const PbwWord &w) const;
    [[nodiscard]] std::optional<int> weight(const State &v) const;
    [[nodiscard]] int max_weight(const State &v) const;
    [[nodiscard]] static int torsion_degree(const PbwWord &w);
    [[nodiscard]] static bool is_ordered(const PbwWord &w);

    /// PBW normal form of an arbitrary mode word applied to the vacuum.
    [[nodiscard]] State straighten(const std::vector<Mode> &word) const;

    /// x · w|0> for a PBW word w.
    [[nodiscard]] const State &act(const Mode &x, const PbwWord &w) const;
    [[nodiscard]] State act(const Mode &x, const State &v) const;
    [[nodiscard]] State act(const ModeCombo &x, const State &v) const;
    /// g(n) v
    [[nodiscard]] State mode_apply(GenId g, int n, const State &v) const;

    /// u_n v
    [[nodiscard]] State mode(const State &u, int n, const State &v) const;
    [[nodiscard]] const State &word_mode(const PbwWord &u, int n, const PbwWord &v) const;

    /// First n with u_m v = 0 for every m >= n.
    [[nodiscard]] int truncation_bound(const PbwWord &u, const PbwWord &v) const;
    [[nodiscard]] int truncation_bound(const State &u, const State &v) const;

    /// D as a derivation: [D, g(n)] = -n g(n-1), D|0> = 0.
    [[nodiscard]] State derivative(const State &v) const;

    /// PBW words of the given weight with at most torsion_bound torsion modes.
    [[nodiscard]] std::vector<PbwWord> graded_basis(int weight, int torsion_bound) const;
    [[nodiscard]] std::size_t graded_dimension(int weight, int torsion_bound) const;
    /// All basis words with weight <= max_weight.
    [[nodiscard]] std::vector<PbwWord> basis_up_to(int max_weight, int torsion_bound) const;

    [[nodiscard]] std::string format_word(const PbwWord &w) const;
    /// "2·L(-2)L(-1)|0⟩ + 1/2·c(-1)|0⟩"
    [[nodiscard]] std::string format(const State &v) const;
    /// Inverse of format; words are straightened, so any mode order is accepted.
    [[nodiscard]] State parse(std::string_view text) const;

private:
    struct ActKey {
        Mode x;
        PbwWord w;
        bool operator==(const ActKey &) const = default;
    };
    struct ActHash {
        std::size_t operator()(const ActKey &k) const noexcept;
    };
    struct ModeKey {
        PbwWord u;
        int n;
        PbwWord v;
        bool operator==(const ModeKey &) const = default;
    };
    struct ModeHash {
        std::size_t operator()(const ModeKey &k) const noexcept;
    };

    State act_left(const Mode &x, const State &v) const;
    State compute_act(const Mode &x, const PbwWord &w) const;
    State compute_word_mode(const PbwWord &u, int n, const PbwWord &v) const;
    State word_mode_state(const PbwWord &u, int n, const State &v) const;

    VlaPresentation p_;
    mutable Memo<ActKey, State, ActHash> act_memo_;
    mutable Memo<ModeKey, State, ModeHash> mode_memo_;
};

} // namespace vk

#endif
