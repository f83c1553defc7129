#include <vertexkernel/coalgebra.hpp>

#include <algorithm>
#include <sstream>

namespace vk
{

TensorState delta_basis(const EnvelopingAlgebra &, const PbwWord &w)
{
    return multiset_splittings(w);
}

Rational counit_basis(const EnvelopingAlgebra &, const PbwWord &w)
{
    return w.empty() ? 1 : 0;
}

std::string format_tensor(const EnvelopingAlgebra &V, const TensorState &t)
{
    return format_lincomb(t, [&](const std::pair<PbwWord, PbwWord> &k) {
        return V.format_word(k.first) + "⊗" + V.format_word(k.second);
    });
}

ValidationReport check_delta_morphism(const EnvelopingAlgebra &V, const State &u, int n, const State &v)
{
    CheckResult res("coalgebra/delta-vertex-morphism", "Δ(u_n v) = Σ u'_m v' ⊗ u''_{n-m-1} v''");
    TensorState lhs = delta(V, V.mode(u, n, v));
    TensorState rhs;
    const auto du = delta(V, u);
    const auto dv = delta(V, v);
    for (const auto &[ku, cu] : du) {
        for (const auto &[kv, cv] : dv) {
            const int n1 = V.truncation_bound(ku.first, kv.first);
            const int n2 = V.truncation_bound(ku.second, kv.second);
            for (int m = n - n2; m < n1; ++m) {
                const State &left = V.word_mode(ku.first, m, kv.first);
                if (left.empty()) {
                    continue;
                }
                const State &right = V.word_mode(ku.second, n - m - 1, kv.second);
                rhs.add_scaled(tensor(left, right), cu * cv);
            }
        }
    }
    res.record(lhs == rhs, [&] {
        return "u=" + V.format(u) + " n=" + std::to_string(n) + " v=" + V.format(v) + ": lhs " +
               format_tensor(V, lhs) + " vs rhs " + format_tensor(V, rhs);
    });
    ValidationReport r;
    r.add(std::move(res));
    return r;
}

ValidationReport check_d_coideal(const EnvelopingAlgebra &V, const std::vector<PbwWord> &basis)
{
    CheckResult leibniz("coalgebra/delta-derivation", "ΔD = (D⊗1 + 1⊗D)Δ");
    CheckResult counit_d("coalgebra/counit-derivation", "εD = 0");
    auto d_state = [&](const PbwWord &w) { return V.derivative(State::term(w)); };
    auto id = [](const PbwWord &w) { return State::term(w); };
    for (const auto &w : basis) {
        State x = State::term(w);
        State dx = V.derivative(x);
        auto d = delta(V, x);
        auto rhs = tensor_map(d, d_state, id) + tensor_map(d, id, d_state);
        leibniz.record(delta(V, dx) == rhs, [&] { return V.format(x); });
        counit_d.record(counit(V, dx) == 0, [&] { return V.format(x); });
    }
    ValidationReport r;
    r.add(std::move(leibniz));
    r.add(std::move(counit_d));
    return r;
}

// Divided powers.

DividedPowerBialgebra::DividedPowerBialgebra(std::size_t dim) : dim_(dim)
{
    if (dim == 0) {
        throw std::invalid_argument("DividedPowerBialgebra: dimension must be positive");
    }
}

DpKey DividedPowerBialgebra::unit_vector(std::size_t lambda, int power) const
{
    if (lambda >= dim_) {
        throw std::out_of_range("unknown basis index " + std::to_string(lambda));
    }
    DpKey f(dim_, 0);
    f[lambda] = power;
    return f;
}

std::pair<Rational, DpKey> dp_product(const DpKey &f, const DpKey &g)
{
    if (f.size() != g.size()) {
        throw std::invalid_argument("dp_product: index sets differ");
    }
    Rational c = 1;
    DpKey h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        h[i] = f[i] + g[i];
        c *= binom_general(h[i], g[i]);
    }
    return {c, h};
}

Tensor2<DpKey> dp_delta(const DpKey &f)
{
    Tensor2<DpKey> acc = Tensor2<DpKey>::term({DpKey{}, DpKey{}});
    for (int e : f) {
        Tensor2<DpKey> next;
        for (const auto &[k, c] : acc) {
            for (int l = 0; l <= e; ++l) {
                auto key = k;
                key.first.push_back(e - l);
                key.second.push_back(l);
                next.add(std::move(key), c);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

Tensor2<DpKey> delta_basis(const DividedPowerBialgebra &, const DpKey &f)
{
    return dp_delta(f);
}

Rational counit_basis(const DividedPowerBialgebra &, const DpKey &f)
{
    return std::all_of(f.begin(), f.end(), [](int e) { return e == 0; }) ? 1 : 0;
}

DpElement DividedPowerBialgebra::multiply(const DpElement &a, const DpElement &b) const
{
    DpElement out;
    for (const auto &[f, cf] : a) {
        for (const auto &[g, cg] : b) {
            auto [c, h] = dp_product(f, g);
            out.add(h, c * cf * cg);
        }
    }
    return out;
}

std::vector<DpKey> DividedPowerBialgebra::basis_up_to(int degree) const
{
    std::vector<DpKey> out;
    DpKey cur(dim_, 0);
    auto rec = [&](auto &&self, std::size_t i, int left) -> void {
        if (i == dim_) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[i] = e;
            self(self, i + 1, left - e);
        }
        cur[i] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

std::string DividedPowerBialgebra::format_key(const DpKey &f) const
{
    std::ostringstream os;
    os << "v_(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        os << (i ? "," : "") << f[i];
    }
    os << ")";
    return os.str();
}

namespace
{

template <typename K, typename Mul>
Tensor2<K> tensor_multiply(const Tensor2<K> &a, const Tensor2<K> &b, Mul &&mul)
{
    Tensor2<K> out;
    for (const auto &[ka, ca] : a) {
        for (const auto &[kb, cb] : b) {
            auto left = mul(LinComb<K>::term(ka.first), LinComb<K>::term(kb.first));
            auto right = mul(LinComb<K>::term(ka.second), LinComb<K>::term(kb.second));
            out.add_scaled(tensor(left, right), ca * cb);
        }
    }
    return out;
}

int degree_of(const DpKey &f)
{
    int d = 0;
    for (int e : f) {
        d += e;
    }
    return d;
}

} // namespace

ValidationReport check_dp_bialgebra(const DividedPowerBialgebra &B, int degree)
{
    const auto basis = B.basis_up_to(degree);
    auto fmt = [&](const DpKey &f) { return B.format_key(f); };
    auto mul = [&](const DpElement &a, const DpElement &b) { return B.multiply(a, b); };

    CheckResult assoc("divided-powers/associativity", "(ab)c = a(bc)");
    CheckResult unit("divided-powers/unit", "1a = a = a1");
    CheckResult comm("divided-powers/commutativity", "ab = ba");
    CheckResult delta_mult("divided-powers/delta-multiplicative", "Δ(ab) = Δ(a)Δ(b)");
    CheckResult counit_mult("divided-powers/counit-multiplicative", "ε(ab) = ε(a)ε(b)");
    for (const auto &f : basis) {
        auto a = DpElement::term(f);
        unit.record(B.multiply(B.one(), a) == a && B.multiply(a, B.one()) == a, [&] { return fmt(f); });
        for (const auto &g : basis) {
            if (degree_of(f) + degree_of(g) > degree) {
                continue;
            }
            auto b = DpElement::term(g);
            auto ab = B.multiply(a, b);
            comm.record(ab == B.multiply(b, a), [&] { return fmt(f) + "·" + fmt(g); });
            delta_mult.record(delta(B, ab) == tensor_multiply(delta(B, a), delta(B, b), mul),
                              [&] { return fmt(f) + "·" + fmt(g); });
            counit_mult.record(counit(B, ab) == counit(B, a) * counit(B, b), [&] { return fmt(f) + "·" + fmt(g); });
            for (const auto &h : basis) {
                if (degree_of(f) + degree_of(g) + degree_of(h) > degree) {
                    continue;
                }
                auto c = DpElement::term(h);
                assoc.record(B.multiply(ab, c) == B.multiply(a, B.multiply(b, c)),
                             [&] { return fmt(f) + "·" + fmt(g) + "·" + fmt(h); });
            }
        }
    }
    ValidationReport r;
    r.add(std::move(assoc));
    r.add(std::move(unit));
    r.add(std::move(comm));
    r.add(std::move(delta_mult));
    r.add(std::move(counit_mult));
    r.merge(check_coalgebra_laws(B, basis, fmt, true, "divided-powers"));
    return r;
}

// Lie algebras and U(g).

LieAlgebraTable::LieAlgebraTable(std::vector<std::string> names)
    : names_(std::move(names)), table_(names_.size(), std::vector<LinComb<int>>(names_.size()))
{
}

void LieAlgebraTable::set_bracket(std::size_t i, std::size_t j, LinComb<int> value)
{
    for (const auto &[k, c] : value) {
        if (k < 0 || static_cast<std::size_t>(k) >= dim()) {
            throw std::out_of_range("unknown basis index " + std::to_string(k));
        }
    }
    table_.at(j).at(i) = -value;
    table_.at(i).at(j) = std::move(value);
}

const LinComb<int> &LieAlgebraTable::bracket(std::size_t i, std::size_t j) const
{
    return table_.at(i).at(j);
}

ValidationReport LieAlgebraTable::check() const
{
    CheckResult anti("lie/antisymmetry", "[x,y] + [y,x] = 0");
    CheckResult jacobi("lie/jacobi", "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0");
    auto br = [&](const LinComb<int> &a, std::size_t z) {
        LinComb<int> out;
        for (const auto &[k, c] : a) {
            out.add_scaled(bracket(static_cast<std::size_t>(k), z), c);
        }
        return out;
    };
    for (std::size_t x = 0; x < dim(); ++x) {
        for (std::size_t y = 0; y < dim(); ++y) {
            anti.record((bracket(x, y) + bracket(y, x)).empty(), [&] { return names_[x] + "," + names_[y]; });
            for (std::size_t z = 0; z < dim(); ++z) {
                auto sum = br(bracket(x, y), z) + br(bracket(y, z), x) + br(bracket(z, x), y);
                jacobi.record(sum.empty(), [&] { return names_[x] + "," + names_[y] + "," + names_[z]; });
            }
        }
    }
    ValidationReport r;
    r.add(std::move(anti));
    r.add(std::move(jacobi));
    return r;
}

LieAlgebraTable LieAlgebraTable::abelian(std::size_t dim)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) {
        names.push_back("x" + std::to_string(i + 1));
    }
    return LieAlgebraTable(std::move(names));
}

LieAlgebraTable LieAlgebraTable::affine_line()
{
    LieAlgebraTable g({"x", "y"});
    g.set_bracket(0, 1, LinComb<int>::term(1));
    return g;
}

std::size_t UniversalEnveloping::Hash::operator()(const UWord &w) const noexcept
{
    std::size_t h = w.size();
    for (int i : w) {
        hash_combine(h, std::hash<int>{}(i));
    }
    return h;
}

UniversalEnveloping::UniversalEnveloping(LieAlgebraTable g) : g_(std::move(g)) {}

UElement UniversalEnveloping::straighten(const UWord &w) const
{
    auto descent = std::adjacent_find(w.begin(), w.end(), std::greater<>());
    if (descent == w.end()) {
        return UElement::term(w);
    }
    if (const UElement *hit = memo_.lookup(w)) {
        return *hit;
    }
    const auto p = static_cast<std::size_t>(descent - w.begin());
    // ... x_i x_j ... = ... x_j x_i ... + ... [x_i, x_j] ...
    UWord swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    UElement out = straighten(swapped);
    for (const auto &[k, c] : g_.bracket(static_cast<std::size_t>(w[p]), static_cast<std::size_t>(w[p + 1]))) {
        UWord shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        shorter.push_back(k);
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
        out.add_scaled(straighten(shorter), c);
    }
    return memo_.insert(w, std::move(out));
}

UElement UniversalEnveloping::multiply(const UElement &a, const UElement &b) const
{
    UElement out;
    for (const auto &[wa, ca] : a) {
        for (const auto &[wb, cb] : b) {
            UWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_scaled(straighten(w), ca * cb);
        }
    }
    return out;
}

std::string UniversalEnveloping::format_word(const UWord &w) const
{
    if (w.empty()) {
        return "1";
    }
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += (i ? "·" : "") + g_.name(static_cast<std::size_t>(w[i]));
    }
    return s;
}

std::string UniversalEnveloping::format(const UElement &x) const
{
    return format_lincomb(x, [&](const UWord &w) { return format_word(w); });
}

Tensor2<UWord> delta_basis(const UniversalEnveloping &, const UWord &w)
{
    return multiset_splittings(w);
}

Rational counit_basis(const UniversalEnveloping &, const UWord &w)
{
    return w.empty() ? 1 : 0;
}

UElement psi_g(const UniversalEnveloping &U, const DpKey &f)
{
    if (f.size() != U.lie().dim()) {
        throw std::out_of_range("psi_g: exponent vector has " + std::to_string(f.size()) + " entries, expected " +
                                std::to_string(U.lie().dim()));
    }
    UWord w;
    Rational c = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
        w.insert(w.end(), static_cast<std::size_t>(f[i]), static_cast<int>(i));
        c *= inverse_factorial(f[i]);
    }
    return UElement::term(std::move(w), c);
}

ValidationReport check_psi_coalgebra_morphism(const UniversalEnveloping &U, int degree)
{
    DividedPowerBialgebra B(U.lie().dim());
    const auto basis = B.basis_up_to(degree);
    auto psi = [&](const DpKey &f) { return psi_g(U, f); };
    CheckResult comult("psi/delta", "(Ψ⊗Ψ)Δ = ΔΨ");
    CheckResult counit_res("psi/counit", "εΨ = ε");
    CheckResult injective("psi/injective", "Ψ injective");
    for (const auto &f : basis) {
        auto lhs = tensor_map(dp_delta(f), psi, psi);
        auto rhs = delta(U, psi(f));
        comult.record(lhs == rhs, [&] { return B.format_key(f); });
        counit_res.record(counit(U, psi(f)) == counit_basis(B, f), [&] { return B.format_key(f); });
    }
    auto m = matrix_of(basis, psi);
    injective.record(rank(m, basis.size()) == basis.size(), [&] { return "rank deficit up to degree " + std::to_string(degree); });
    ValidationReport r;
    r.add(std::move(comult));
    r.add(std::move(counit_res));
    r.add(std::move(injective));
    r.merge(U.lie().check());
    return r;
}

} // namespace vk
