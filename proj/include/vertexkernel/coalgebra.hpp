// Coalgebra structure on basis-indexed spaces.
//
// A coalgebra here is any type A with ADL-visible free functions
//
//     delta_basis(const A&, const Key&)  -> LinComb<std::pair<Key, Key>>
//     counit_basis(const A&, const Key&) -> Rational
//
// Everything else (Δ and ε on elements, the coassociativity, counit and
// cocommutativity laws, primitive and group-like detection) is generic.

#ifndef VERTEXKERNEL_COALGEBRA_HPP
#define VERTEXKERNEL_COALGEBRA_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <vertexkernel/enveloping.hpp>
#include <vertexkernel/linalg.hpp>
#include <vertexkernel/lincomb.hpp>
#include <vertexkernel/report.hpp>

namespace vk
{

template <typename K>
using Tensor2 = LinComb<std::pair<K, K>>;
template <typename K>
using Tensor3 = LinComb<std::tuple<K, K, K>>;

using TensorState = Tensor2<PbwWord>;

/// Δ(m_1...m_k|0>) as a sum over sub-multisets. Subwords of a PBW word are
/// PBW words, so no straightening is needed.
TensorState delta_basis(const EnvelopingAlgebra &V, const PbwWord &w);
Rational counit_basis(const EnvelopingAlgebra &V, const PbwWord &w);

/// Splits a sorted word into (left, right) sub-multisets with multiplicities.
template <typename T>
LinComb<std::pair<std::vector<T>, std::vector<T>>> multiset_splittings(const std::vector<T> &word);

template <typename A, typename K>
auto delta(const A &a, const LinComb<K> &x)
{
    Tensor2<K> out;
    for (const auto &[k, c] : x) {
        out.add_scaled(delta_basis(a, k), c);
    }
    return out;
}

template <typename A, typename K>
Rational counit(const A &a, const LinComb<K> &x)
{
    Rational out = 0;
    for (const auto &[k, c] : x) {
        out += c * counit_basis(a, k);
    }
    return out;
}

/// (f ⊗ g) applied to a two-fold tensor; f and g map keys to LinCombs.
template <typename K, typename F, typename G>
auto tensor_map(const Tensor2<K> &t, F &&f, G &&g)
{
    using L = decltype(f(std::declval<const K &>()));
    using R = decltype(g(std::declval<const K &>()));
    LinComb<std::pair<typename L::key_type, typename R::key_type>> out;
    for (const auto &[k, c] : t) {
        out.add_scaled(tensor(f(k.first), g(k.second)), c);
    }
    return out;
}

template <typename K>
Tensor2<K> flip(const Tensor2<K> &t)
{
    Tensor2<K> out;
    for (const auto &[k, c] : t) {
        out.add({k.second, k.first}, c);
    }
    return out;
}

template <typename A, typename K>
Tensor3<K> delta_left(const A &a, const Tensor2<K> &t)
{
    Tensor3<K> out;
    for (const auto &[k, c] : t) {
        for (const auto &[kk, cc] : delta_basis(a, k.first)) {
            out.add({kk.first, kk.second, k.second}, c * cc);
        }
    }
    return out;
}

template <typename A, typename K>
Tensor3<K> delta_right(const A &a, const Tensor2<K> &t)
{
    Tensor3<K> out;
    for (const auto &[k, c] : t) {
        for (const auto &[kk, cc] : delta_basis(a, k.second)) {
            out.add({k.first, kk.first, kk.second}, c * cc);
        }
    }
    return out;
}

/// Coassociativity, both counit laws and (optionally) cocommutativity on
/// every key in basis.
template <typename A, typename K, typename Fmt>
ValidationReport check_coalgebra_laws(const A &a, const std::vector<K> &basis, Fmt &&fmt, bool cocommutative,
                                      const std::string &prefix = "coalgebra")
{
    CheckResult coassoc(prefix + "/coassociativity", "(Δ⊗1)Δ = (1⊗Δ)Δ");
    CheckResult counit_law(prefix + "/counit", "(ε⊗1)Δ = 1 = (1⊗ε)Δ");
    CheckResult cocomm(prefix + "/cocommutativity", "τΔ = Δ");
    for (const auto &k : basis) {
        auto d = delta_basis(a, k);
        coassoc.record(delta_left(a, d) == delta_right(a, d), [&] { return fmt(k); });
        LinComb<K> left, right;
        for (const auto &[kk, c] : d) {
            left.add(kk.second, c * counit_basis(a, kk.first));
            right.add(kk.first, c * counit_basis(a, kk.second));
        }
        auto x = LinComb<K>::term(k);
        counit_law.record(left == x && right == x, [&] { return fmt(k); });
        if (cocommutative) {
            cocomm.record(flip(d) == d, [&] { return fmt(k); });
        }
    }
    ValidationReport r;
    r.add(std::move(coassoc));
    r.add(std::move(counit_law));
    if (cocommutative) {
        r.add(std::move(cocomm));
    }
    return r;
}

template <typename A, typename K>
bool is_group_like(const A &a, const LinComb<K> &x)
{
    return counit(a, x) == 1 && delta(a, x) == tensor(x, x);
}

template <typename A, typename K>
bool is_primitive(const A &a, const LinComb<K> &x, const LinComb<K> &one)
{
    return delta(a, x) == tensor(x, one) + tensor(one, x);
}

/// Basis of the primitive elements inside span(basis), by exact elimination.
template <typename A, typename K>
std::vector<LinComb<K>> primitive_subspace(const A &a, const std::vector<K> &basis, const LinComb<K> &one)
{
    if (basis.empty()) {
        return {};
    }
    auto m = matrix_of(basis, [&](const K &k) {
        auto x = LinComb<K>::term(k);
        return delta(a, x) - tensor(x, one) - tensor(one, x);
    });
    std::vector<LinComb<K>> out;
    for (const auto &v : kernel(m, basis.size())) {
        out.push_back(from_coordinates(basis, v));
    }
    return out;
}

struct GroupLikeScan {
    std::size_t ambient_dim = 0;     // dimension of the scanned span
    std::size_t subcoalgebra_dim = 0;
    std::size_t group_like_count = 0; // number of group-likes in the span
    bool cocommutative = true;
};

/// Maximum span dimension accepted by scan_group_likes.
inline constexpr std::size_t group_like_scan_limit = 6;

namespace detail
{

// Reduced echelon basis of span(vectors) over the keys they use.
template <typename K>
std::vector<LinComb<K>> echelon_basis(const std::vector<LinComb<K>> &vectors, std::vector<K> &pivot_keys)
{
    std::map<K, std::size_t> index;
    for (const auto &v : vectors) {
        for (const auto &kv : v) {
            index.try_emplace(kv.first, 0);
        }
    }
    std::vector<K> keys;
    for (auto &[k, i] : index) {
        i = keys.size();
        keys.push_back(k);
    }
    Matrix m;
    for (const auto &v : vectors) {
        Vector row(keys.size());
        for (const auto &[k, c] : v) {
            row[index.at(k)] = c;
        }
        m.push_back(std::move(row));
    }
    auto ech = row_reduce(std::move(m), keys.size());
    std::vector<LinComb<K>> out;
    pivot_keys.clear();
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
        out.push_back(from_coordinates(keys, ech.rows[r]));
        pivot_keys.push_back(keys[ech.pivots[r]]);
    }
    return out;
}

} // namespace detail

/// Counts the group-like elements of span(vectors) over C without solving
/// the quadratic system Δu = u⊗u directly.
///
/// First span(vectors) is shrunk to its largest subcoalgebra W (every
/// group-like lies in it). The group-likes of W are the characters of the
/// dual algebra W*, and for a commutative W* their number is the rank of
/// the trace form Tr(M_i M_j) of the multiplication operators.
template <typename A, typename K>
GroupLikeScan scan_group_likes(const A &a, const std::vector<LinComb<K>> &vectors)
{
    GroupLikeScan out;
    std::vector<K> pivots;
    auto W = detail::echelon_basis(vectors, pivots);
    out.ambient_dim = W.size();
    if (W.size() > group_like_scan_limit) {
        throw std::invalid_argument("scan_group_likes: span dimension " + std::to_string(W.size()) +
                                    " exceeds the limit " + std::to_string(group_like_scan_limit));
    }
    for (;;) {
        if (W.empty()) {
            return out;
        }
        // With W in reduced echelon form, x -> sum_i x(pivot_i) W_i projects
        // onto W; Δx lies in W⊗W iff both one-sided residues vanish.
        auto residue = [&](const LinComb<K> &x) {
            LinComb<K> y;
            for (std::size_t i = 0; i < W.size(); ++i) {
                y.add_scaled(W[i], x.coeff(pivots[i]));
            }
            return x - y;
        };
        std::vector<std::size_t> idx(W.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            idx[i] = i;
        }
        auto m = matrix_of(idx, [&](std::size_t i) {
            std::map<K, LinComb<K>> by_right, by_left;
            for (const auto &[kk, c] : delta(a, W[i])) {
                by_right[kk.second].add(kk.first, c);
                by_left[kk.first].add(kk.second, c);
            }
            LinComb<std::tuple<int, K, K>> res;
            for (const auto &[rk, lv] : by_right) {
                for (const auto &[k, c] : residue(lv)) {
                    res.add({0, k, rk}, c);
                }
            }
            for (const auto &[lk, rv] : by_left) {
                for (const auto &[k, c] : residue(rv)) {
                    res.add({1, lk, k}, c);
                }
            }
            return res;
        });
        auto ker = kernel(m, W.size());
        if (ker.size() == W.size()) {
            break;
        }
        std::vector<LinComb<K>> shrunk;
        for (const auto &x : ker) {
            LinComb<K> y;
            for (std::size_t i = 0; i < W.size(); ++i) {
                y.add_scaled(W[i], x[i]);
            }
            shrunk.push_back(std::move(y));
        }
        W = detail::echelon_basis(shrunk, pivots);
    }
    const std::size_t r = W.size();
    out.subcoalgebra_dim = r;
    // c[i][j][k]: coefficient of W_j ⊗ W_k in ΔW_i.
    std::vector<std::vector<Vector>> c(r, std::vector<Vector>(r, Vector(r)));
    for (std::size_t i = 0; i < r; ++i) {
        auto d = delta(a, W[i]);
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t k = 0; k < r; ++k) {
                c[i][j][k] = d.coeff({pivots[j], pivots[k]});
                if (c[i][j][k] != 0 && d.coeff({pivots[k], pivots[j]}) != c[i][j][k]) {
                    out.cocommutative = false;
                }
            }
        }
    }
    // In W*, δ_j δ_k = sum_i c[i][j][k] δ_i, so (M_j)_{ik} = c[i][j][k].
    Matrix trace_form(r, Vector(r));
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t l = 0; l < r; ++l) {
            Rational t = 0;
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t k = 0; k < r; ++k) {
                    t += c[i][j][k] * c[k][l][i];
                }
            }
            trace_form[j][l] = t;
        }
    }
    out.group_like_count = rank(trace_form, r);
    return out;
}

// Divided-power bialgebra on a vector space with basis x_0..x_{dim-1}.
// Basis v_(f) for exponent vectors f.
using DpKey = std::vector<int>;
using DpElement = LinComb<DpKey>;

class DividedPowerBialgebra
{
public:
    using Key = DpKey;
    using Element = DpElement;

    explicit DividedPowerBialgebra(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] DpKey zero_key() const { return DpKey(dim_, 0); }
    [[nodiscard]] DpElement one() const { return DpElement::term(zero_key()); }
    [[nodiscard]] DpKey unit_vector(std::size_t lambda, int power = 1) const;

    [[nodiscard]] DpElement multiply(const DpElement &a, const DpElement &b) const;
    /// All f with |f| <= degree.
    [[nodiscard]] std::vector<DpKey> basis_up_to(int degree) const;
    [[nodiscard]] std::string format_key(const DpKey &f) const;

private:
    std::size_t dim_;
};

/// v_(f) v_(g) = prod binom(f+g, g) v_(f+g)
std::pair<Rational, DpKey> dp_product(const DpKey &f, const DpKey &g);
/// Δ v_(f) = sum_{g+h=f} v_(g) ⊗ v_(h)
Tensor2<DpKey> dp_delta(const DpKey &f);

Tensor2<DpKey> delta_basis(const DividedPowerBialgebra &B, const DpKey &f);
Rational counit_basis(const DividedPowerBialgebra &B, const DpKey &f);

/// Associativity, unit, commutativity, coalgebra laws, and Δ, ε multiplicative.
ValidationReport check_dp_bialgebra(const DividedPowerBialgebra &B, int degree);

// A finite-dimensional Lie algebra by structure constants on an ordered basis.
class LieAlgebraTable
{
public:
    explicit LieAlgebraTable(std::vector<std::string> names);

    /// [x_i, x_j] = value; [x_j, x_i] is set to the negative.
    void set_bracket(std::size_t i, std::size_t j, LinComb<int> value);
    [[nodiscard]] const LinComb<int> &bracket(std::size_t i, std::size_t j) const;
    [[nodiscard]] std::size_t dim() const noexcept { return names_.size(); }
    [[nodiscard]] const std::string &name(std::size_t i) const { return names_.at(i); }

    /// Antisymmetry and Jacobi on basis triples.
    [[nodiscard]] ValidationReport check() const;

    static LieAlgebraTable abelian(std::size_t dim);
    /// [x, y] = y
    static LieAlgebraTable affine_line();

private:
    std::vector<std::string> names_;
    std::vector<std::vector<LinComb<int>>> table_;
};

// U(g) with PBW basis of non-decreasing index words.
using UWord = std::vector<int>;
using UElement = LinComb<UWord>;

class UniversalEnveloping
{
public:
    using Key = UWord;
    using Element = UElement;

    explicit UniversalEnveloping(LieAlgebraTable g);

    [[nodiscard]] const LieAlgebraTable &lie() const noexcept { return g_; }
    [[nodiscard]] UElement one() const { return UElement::term({}); }
    /// PBW normal form of an arbitrary product x_{i1}...x_{ik}.
    [[nodiscard]] UElement straighten(const UWord &w) const;
    [[nodiscard]] UElement multiply(const UElement &a, const UElement &b) const;
    [[nodiscard]] std::string format_word(const UWord &w) const;
    [[nodiscard]] std::string format(const UElement &x) const;

private:
    LieAlgebraTable g_;
    struct Hash {
        std::size_t operator()(const UWord &w) const noexcept;
    };
    mutable Memo<UWord, UElement, Hash> memo_;
};

Tensor2<UWord> delta_basis(const UniversalEnveloping &U, const UWord &w);
Rational counit_basis(const UniversalEnveloping &U, const UWord &w);

/// v_(f) -> prod_λ x_λ^{f(λ)} / f(λ)!, in ascending index order.
UElement psi_g(const UniversalEnveloping &U, const DpKey &f);

/// (Ψ⊗Ψ)Δ = ΔΨ and εΨ = ε on every v_(f) with |f| <= degree.
ValidationReport check_psi_coalgebra_morphism(const UniversalEnveloping &U, int degree);

// Checks specific to the enveloping vertex algebra.

/// Δ(u_n v) = sum_m u'_m v' ⊗ u''_{n-m-1} v''
ValidationReport check_delta_morphism(const EnvelopingAlgebra &V, const State &u, int n, const State &v);

/// Δ D = (D⊗1 + 1⊗D) Δ and ε D = 0 on each basis state.
ValidationReport check_d_coideal(const EnvelopingAlgebra &V, const std::vector<PbwWord> &basis);

std::string format_tensor(const EnvelopingAlgebra &V, const TensorState &t);

template <typename T>
LinComb<std::pair<std::vector<T>, std::vector<T>>> multiset_splittings(const std::vector<T> &word)
{
    using Word = std::vector<T>;
    LinComb<std::pair<Word, Word>> acc = LinComb<std::pair<Word, Word>>::term({Word{}, Word{}});
    std::size_t i = 0;
    while (i < word.size()) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i]) {
            ++j;
        }
        const auto e = static_cast<std::int64_t>(j - i);
        LinComb<std::pair<Word, Word>> next;
        for (const auto &[k, c] : acc) {
            for (std::int64_t l = 0; l <= e; ++l) {
                auto key = k;
                key.first.insert(key.first.end(), l, word[i]);
                key.second.insert(key.second.end(), e - l, word[i]);
                next.add(std::move(key), c * binom_general(e, l));
            }
        }
        acc = std::move(next);
        i = j;
    }
    return acc;
}

} // namespace vk

#endif
