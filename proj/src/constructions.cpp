#include <vertexkernel/constructions.hpp>

#include <algorithm>
#include <sstream>

#include "text_util.hpp"

namespace vk
{

Alpha SemigroupL::basis(int i) const
{
    if (i < 0 || i >= rank) {
        throw std::out_of_range("semigroup direction " + std::to_string(i) + " out of range");
    }
    Alpha a = zero();
    a[static_cast<std::size_t>(i)] = 1;
    return a;
}

bool SemigroupL::contains(const Alpha &a) const
{
    if (a.size() != static_cast<std::size_t>(rank)) {
        return false;
    }
    return group || std::all_of(a.begin(), a.end(), [](int v) { return v >= 0; });
}

std::vector<Alpha> SemigroupL::elements(int bound) const
{
    std::vector<Alpha> out{Alpha{}};
    const int lo = group ? -bound : 0;
    for (int i = 0; i < rank; ++i) {
        std::vector<Alpha> next;
        for (const auto &a : out) {
            for (int v = lo; v <= bound; ++v) {
                auto b = a;
                b.push_back(v);
                next.push_back(std::move(b));
            }
        }
        out = std::move(next);
    }
    return out;
}

Alpha add(const Alpha &a, const Alpha &b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("semigroup elements of different rank");
    }
    Alpha c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] + b[i];
    }
    return c;
}

std::string format_alpha(const Alpha &a)
{
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (i ? "," : "") + std::to_string(a[i]);
    }
    return s + ")";
}

VlaElement PhiMap::at(const Alpha &a) const
{
    if (a.size() != targets.size()) {
        throw std::invalid_argument("phi: element of rank " + std::to_string(a.size()) + ", expected " +
                                    std::to_string(targets.size()));
    }
    VlaElement out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.add_scaled(targets[i], a[i]);
    }
    return out;
}

ValidationReport check_phi_central(const VlaPresentation &p, const PhiMap &phi)
{
    CheckResult res("phi/central", "φ(α)_n b = 0, n >= 0");
    for (std::size_t i = 0; i < phi.targets.size(); ++i) {
        const VlaElement &a = phi.targets[i];
        for (GenId b = 0; b < p.size(); ++b) {
            const VlaElement gb = p.generator(b);
            const int bound = product_bound(p, a, gb);
            for (int n = 0; n <= bound + 1; ++n) {
                auto x = nth_product(p, a, n, gb);
                res.record(x.empty(), [&] {
                    return "direction e" + std::to_string(i + 1) + ", n=" + std::to_string(n) + ", b=" +
                           p.spec(b).name + ": φ_n b = " + p.format(x);
                });
            }
        }
    }
    ValidationReport r;
    r.add(std::move(res));
    return r;
}

std::vector<State> eminus_apply(const EnvelopingAlgebra &V, const State &a, const State &v, int order)
{
    std::vector<State> e{v};
    for (int j = 1; j <= order; ++j) {
        State ej;
        if (!a.empty()) {
            for (int n = 1; n <= j; ++n) {
                ej += V.mode(a, -n, e[static_cast<std::size_t>(j - n)]);
            }
            ej *= Rational(1, j);
        }
        e.push_back(std::move(ej));
    }
    return e;
}

namespace
{

// Coefficient of x0^i x2^s in exp(Σ_n a_{-n} ((x2+x0)^n - x2^n) / n),
// applied to x. The exponent is G = Σ_{k>=1, t>=0} binom(k+t,k)/(k+t)
// a_{-(k+t)} x0^k x2^t, and i F_i = Σ_k k G_k F_{i-k}.
State conjugation_factor(const EnvelopingAlgebra &V, const State &a, int i, int s, const State &x)
{
    if (i == 0) {
        return s == 0 ? x : State{};
    }
    State out;
    for (int k = 1; k <= i; ++k) {
        for (int t = 0; t <= s; ++t) {
            State inner = conjugation_factor(V, a, i - k, s - t, x);
            if (inner.empty()) {
                continue;
            }
            Rational g = binom_general(k + t, k) / Rational(k + t);
            out.add_scaled(V.mode(a, -(k + t), inner), g * k);
        }
    }
    out *= Rational(1, i);
    return out;
}

} // namespace

CheckResult check_eminus_conjugation(const EnvelopingAlgebra &V, const State &a, const State &w,
                                     const std::vector<State> &targets, int order)
{
    CheckResult res("eminus-conjugation", "Y(E⁻(a,x0)w, x2) = E⁻(a,x2+x0) E⁻(-a,x2) Y(w,x2)");
    const auto E = eminus_apply(V, a, w, order);
    for (const auto &t : targets) {
        const int bound = V.truncation_bound(w, t);
        for (int i = 0; i <= order; ++i) {
            for (int e = -order - 1; e <= order + 1; ++e) {
                State lhs = V.mode(E[static_cast<std::size_t>(i)], -e - 1, t);
                State rhs;
                for (int s = 0; s - e - 1 < bound; ++s) {
                    State y = V.mode(w, s - e - 1, t);
                    if (!y.empty()) {
                        rhs += conjugation_factor(V, a, i, s, y);
                    }
                }
                res.record(lhs == rhs, [&] {
                    return "a=" + V.format(a) + " w=" + V.format(w) + " t=" + V.format(t) + " x0^" +
                           std::to_string(i) + " x2^" + std::to_string(e) + ": " + V.format(lhs) + " vs " +
                           V.format(rhs);
                });
            }
        }
    }
    return res;
}

// V ⊗_φ C[L]

TensorPhiAlgebra::TensorPhiAlgebra(const EnvelopingAlgebra &V, SemigroupL L, PhiMap phi)
    : V_(V), L_(L), phi_(std::move(phi))
{
    const auto &p = V_.presentation();
    if (phi_.targets.size() != static_cast<std::size_t>(L_.rank)) {
        throw std::invalid_argument("phi has " + std::to_string(phi_.targets.size()) + " targets, semigroup rank is " +
                                    std::to_string(L_.rank));
    }
    for (const auto &t : phi_.targets) {
        if (!t.empty() && !p.weight(t)) {
            throw Unsupported("unsupported: phi target " + p.format(t) + " is not weight-homogeneous");
        }
    }
    auto central = check_phi_central(p, phi_);
    if (!central.passed()) {
        throw std::invalid_argument("phi is not central: " + central.first_failure()->witness);
    }
    for (const auto &t : phi_.targets) {
        phi_states_.push_back(V_.from_vla(t));
    }
}

State TensorPhiAlgebra::phi_state(const Alpha &a) const
{
    State out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.add_scaled(phi_states_.at(i), a[i]);
    }
    return out;
}

TensorPhiState TensorPhiAlgebra::embed(const State &v, const Alpha &a) const
{
    if (!L_.contains(a)) {
        throw std::invalid_argument("element " + format_alpha(a) + " is not in the semigroup");
    }
    TensorPhiState out;
    for (const auto &[w, c] : v) {
        out.add({w, a}, c);
    }
    return out;
}

TensorPhiState TensorPhiAlgebra::mode(const Element &u, int m, const Element &w) const
{
    TensorPhiState out;
    for (const auto &[ku, cu] : u) {
        const State a = phi_state(ku.second);
        for (const auto &[kw, cw] : w) {
            const Alpha tag = add(ku.second, kw.second);
            const int bound = V_.truncation_bound(ku.first, kw.first);
            State acc;
            for (int j = 0; m + j < bound; ++j) {
                if (j > 0 && a.empty()) {
                    break;
                }
                const State &y = V_.word_mode(ku.first, m + j, kw.first);
                if (y.empty()) {
                    continue;
                }
                acc += eminus_apply(V_, a, y, j)[static_cast<std::size_t>(j)];
            }
            for (const auto &[word, c] : acc) {
                out.add({word, tag}, c * cu * cw);
            }
        }
    }
    return out;
}

TensorPhiState TensorPhiAlgebra::derivative(const Element &x) const
{
    return mode(x, -2, vacuum());
}

int TensorPhiAlgebra::truncation_bound(const Element &u, const Element &w) const
{
    int bound = 0;
    for (const auto &[ku, cu] : u) {
        for (const auto &[kw, cw] : w) {
            bound = std::max(bound, V_.truncation_bound(ku.first, kw.first));
        }
    }
    return bound;
}

std::vector<TensorPhiKey> TensorPhiAlgebra::basis(int max_weight, int torsion_bound, int alpha_bound) const
{
    std::vector<TensorPhiKey> out;
    const auto alphas = L_.elements(alpha_bound);
    for (const auto &w : V_.basis_up_to(max_weight, torsion_bound)) {
        for (const auto &a : alphas) {
            out.emplace_back(w, a);
        }
    }
    return out;
}

std::string TensorPhiAlgebra::format_key(const Key &k) const
{
    return V_.format_word(k.first) + "⊗e^" + format_alpha(k.second);
}

std::string TensorPhiAlgebra::format(const Element &x) const
{
    return format_lincomb(x, [this](const Key &k) { return format_key(k); });
}

LinComb<std::pair<TensorPhiKey, TensorPhiKey>> delta_basis(const TensorPhiAlgebra &, const TensorPhiKey &k)
{
    LinComb<std::pair<TensorPhiKey, TensorPhiKey>> out;
    for (const auto &[kk, c] : multiset_splittings(k.first)) {
        out.add({{kk.first, k.second}, {kk.second, k.second}}, c);
    }
    return out;
}

Rational counit_basis(const TensorPhiAlgebra &, const TensorPhiKey &k)
{
    return k.first.empty() ? 1 : 0;
}

// B_L

DiffBialgebra::DiffBialgebra(SemigroupL L) : L_(L)
{
    if (L_.rank < 1) {
        throw std::invalid_argument("B_L: rank must be positive");
    }
}

DiffElement DiffBialgebra::h(int i, int n) const
{
    if (i < 0 || i >= L_.rank || n < 1) {
        throw std::invalid_argument("B_L: no symbol h" + std::to_string(i + 1) + "(" + std::to_string(-n) + ")");
    }
    return DiffElement::term({{HSymbol{i, n}}, L_.zero()});
}

DiffElement DiffBialgebra::e(const Alpha &a) const
{
    if (!L_.contains(a)) {
        throw std::invalid_argument("B_L: " + format_alpha(a) + " is not in the semigroup");
    }
    return DiffElement::term({{}, a});
}

DiffElement DiffBialgebra::alpha_bar(const Alpha &a) const
{
    DiffElement out;
    for (int i = 0; i < L_.rank; ++i) {
        out.add_scaled(h(i, 1), a.at(static_cast<std::size_t>(i)));
    }
    return out;
}

namespace
{

DiffKey multiply_keys(const DiffKey &a, const DiffKey &b)
{
    HMonomial m;
    m.reserve(a.first.size() + b.first.size());
    std::merge(a.first.begin(), a.first.end(), b.first.begin(), b.first.end(), std::back_inserter(m));
    return {std::move(m), add(a.second, b.second)};
}

} // namespace

DiffElement DiffBialgebra::multiply(const Element &a, const Element &b) const
{
    DiffElement out;
    for (const auto &[ka, ca] : a) {
        for (const auto &[kb, cb] : b) {
            out.add(multiply_keys(ka, kb), ca * cb);
        }
    }
    return out;
}

DiffElement DiffBialgebra::derivative(const Element &x) const
{
    DiffElement out;
    for (const auto &[k, c] : x) {
        const auto &[mono, a] = k;
        for (std::size_t p = 0; p < mono.size(); ++p) {
            HMonomial m = mono;
            m[p].n += 1;
            std::sort(m.begin(), m.end());
            out.add({std::move(m), a}, c * mono[p].n);
        }
        out.add_scaled(multiply(alpha_bar(a), DiffElement::term(k)), c);
    }
    return out;
}

int DiffBialgebra::weight(const HMonomial &m)
{
    int w = 0;
    for (const auto &s : m) {
        w += s.n;
    }
    return w;
}

std::vector<DiffKey> DiffBialgebra::basis(int max_weight, int alpha_bound) const
{
    std::vector<HSymbol> symbols;
    for (int n = 1; n <= max_weight; ++n) {
        for (int i = 0; i < L_.rank; ++i) {
            symbols.push_back({i, n});
        }
    }
    std::sort(symbols.begin(), symbols.end());
    std::vector<HMonomial> monos;
    HMonomial cur;
    auto rec = [&](auto &&self, std::size_t start, int left) -> void {
        monos.push_back(cur);
        for (std::size_t t = start; t < symbols.size(); ++t) {
            if (symbols[t].n > left) {
                continue;
            }
            cur.push_back(symbols[t]);
            self(self, t, left - symbols[t].n);
            cur.pop_back();
        }
    };
    rec(rec, 0, max_weight);
    std::sort(monos.begin(), monos.end());
    std::vector<DiffKey> out;
    for (const auto &a : L_.elements(alpha_bound)) {
        for (const auto &m : monos) {
            out.emplace_back(m, a);
        }
    }
    return out;
}

std::string DiffBialgebra::symbol_name(int i) const
{
    return L_.rank == 1 ? std::string("h") : "h" + std::to_string(i + 1);
}

std::string DiffBialgebra::format_key(const Key &k) const
{
    std::vector<std::string> factors;
    const auto &m = k.first;
    for (std::size_t p = 0; p < m.size();) {
        std::size_t q = p;
        while (q < m.size() && m[q] == m[p]) {
            ++q;
        }
        std::string f = symbol_name(m[p].index) + "(" + std::to_string(-m[p].n) + ")";
        if (q - p > 1) {
            f += "^" + std::to_string(q - p);
        }
        factors.push_back(std::move(f));
        p = q;
    }
    if (std::any_of(k.second.begin(), k.second.end(), [](int v) { return v != 0; })) {
        factors.push_back("e^{" + format_alpha(k.second) + "}");
    }
    if (factors.empty()) {
        return "1";
    }
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        s += (i ? "·" : "") + factors[i];
    }
    return s;
}

std::string DiffBialgebra::format(const Element &x) const
{
    return format_lincomb(x, [this](const Key &k) {
        std::string s = format_key(k);
        return s == "1" ? std::string() : s;
    });
}

DiffElement DiffBialgebra::parse(std::string_view text) const
{
    DiffElement out;
    const std::string all = detail::trim(text);
    if (all.empty() || all == "0") {
        return out;
    }
    for (auto [sign, term] : detail::split_terms(all)) {
        std::string body = detail::strip_spaces(term);
        // split factors on "·" or "*"
        std::vector<std::string> factors;
        std::string cur;
        for (std::size_t i = 0; i < body.size();) {
            if (body.compare(i, std::string("·").size(), "·") == 0) {
                factors.push_back(cur);
                cur.clear();
                i += std::string("·").size();
            } else if (body[i] == '*') {
                factors.push_back(cur);
                cur.clear();
                ++i;
            } else {
                cur.push_back(body[i++]);
            }
        }
        factors.push_back(cur);
        DiffElement x = DiffElement::term({{}, L_.zero()}, sign);
        for (const auto &f : factors) {
            if (f.empty()) {
                throw std::invalid_argument("empty factor in '" + term + "'");
            }
            if (f.rfind("e^", 0) == 0) {
                std::string inner = f.substr(2);
                inner.erase(std::remove_if(inner.begin(), inner.end(),
                                           [](char ch) { return ch == '{' || ch == '}' || ch == '(' || ch == ')'; }),
                            inner.end());
                Alpha a;
                std::stringstream ss(inner);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    a.push_back(std::stoi(item));
                }
                x = multiply(x, e(a));
            } else if (auto open = f.find('('); open != std::string::npos) {
                const auto close = f.find(')', open);
                if (close == std::string::npos) {
                    throw std::invalid_argument("malformed factor '" + f + "'");
                }
                const std::string name = f.substr(0, open);
                int index = -1;
                for (int i = 0; i < L_.rank; ++i) {
                    if (symbol_name(i) == name) {
                        index = i;
                    }
                }
                if (index < 0) {
                    throw std::invalid_argument("unknown symbol '" + name + "'");
                }
                const int n = -std::stoi(f.substr(open + 1, close - open - 1));
                int power = 1;
                if (close + 1 < f.size()) {
                    if (f[close + 1] != '^') {
                        throw std::invalid_argument("malformed factor '" + f + "'");
                    }
                    power = std::stoi(f.substr(close + 2));
                }
                for (int p = 0; p < power; ++p) {
                    x = multiply(x, h(index, n));
                }
            } else {
                x *= parse_rational(f);
            }
        }
        out += x;
    }
    return out;
}

LinComb<std::pair<DiffKey, DiffKey>> delta_basis(const DiffBialgebra &, const DiffKey &k)
{
    LinComb<std::pair<DiffKey, DiffKey>> out;
    for (const auto &[kk, c] : multiset_splittings(k.first)) {
        out.add({{kk.first, k.second}, {kk.second, k.second}}, c);
    }
    return out;
}

Rational counit_basis(const DiffBialgebra &, const DiffKey &k)
{
    return k.first.empty() ? 1 : 0;
}

DiffElement bl_phi(const DiffBialgebra &B, const DiffElement &g)
{
    if (g.size() != 1 || g.begin()->second != 1 || !g.begin()->first.first.empty()) {
        throw std::invalid_argument("bl_phi: " + B.format(g) + " is not of the form e^α");
    }
    const Alpha &a = g.begin()->first.second;
    Alpha neg(a.size());
    std::transform(a.begin(), a.end(), neg.begin(), [](int v) { return -v; });
    if (!B.semigroup().contains(neg)) {
        throw std::invalid_argument("bl_phi: " + B.format(g) + " has no inverse in the semigroup");
    }
    return B.multiply(B.e(neg), B.derivative(g));
}

ValidationReport check_bl_bialgebra(const DiffBialgebra &B, int max_weight, int alpha_bound)
{
    const auto basis = B.basis(max_weight, alpha_bound);
    auto fmt = [&](const DiffKey &k) { return B.format_key(k); };
    auto d = [&](const DiffKey &k) { return B.derivative(DiffElement::term(k)); };
    auto id = [](const DiffKey &k) { return DiffElement::term(k); };
    CheckResult d_delta("bl/delta-derivation", "Δ∂ = (∂⊗1 + 1⊗∂)Δ");
    CheckResult d_counit("bl/counit-derivation", "ε∂ = 0");
    CheckResult delta_mult("bl/delta-multiplicative", "Δ(ab) = Δ(a)Δ(b)");
    CheckResult counit_mult("bl/counit-multiplicative", "ε(ab) = ε(a)ε(b)");
    CheckResult leibniz("bl/leibniz", "∂(ab) = ∂(a)b + a∂(b)");
    CheckResult phi_add("bl/phi-additive", "φ(gh) = φ(g) + φ(h)");
    for (const auto &k : basis) {
        const auto x = DiffElement::term(k);
        const auto dx = B.derivative(x);
        auto dd = delta(B, x);
        d_delta.record(delta(B, dx) == tensor_map(dd, d, id) + tensor_map(dd, id, d), [&] { return fmt(k); });
        d_counit.record(counit(B, dx) == 0, [&] { return fmt(k); });
        for (const auto &l : basis) {
            const auto y = DiffElement::term(l);
            const auto xy = B.multiply(x, y);
            LinComb<std::pair<DiffKey, DiffKey>> prod;
            for (const auto &[a, ca] : dd) {
                for (const auto &[b, cb] : delta_basis(B, l)) {
                    prod.add_scaled(tensor(B.multiply(id(a.first), id(b.first)), B.multiply(id(a.second), id(b.second))),
                                    ca * cb);
                }
            }
            delta_mult.record(delta(B, xy) == prod, [&] { return fmt(k) + " · " + fmt(l); });
            counit_mult.record(counit(B, xy) == counit(B, x) * counit(B, y), [&] { return fmt(k) + " · " + fmt(l); });
            leibniz.record(B.derivative(xy) == B.multiply(dx, y) + B.multiply(x, B.derivative(y)),
                           [&] { return fmt(k) + " · " + fmt(l); });
        }
    }
    const auto alphas = B.semigroup().elements(alpha_bound);
    for (const auto &a : alphas) {
        for (const auto &b : alphas) {
            const auto ab = add(a, b);
            if (B.semigroup().group) {
                phi_add.record(bl_phi(B, B.e(ab)) == bl_phi(B, B.e(a)) + bl_phi(B, B.e(b)),
                               [&] { return format_alpha(a) + " + " + format_alpha(b); });
            } else {
                // no inverses: check ∂g = φ(g) g with φ(e^{α+β}) = ᾱ(-1) + β̄(-1)
                phi_add.record(B.derivative(B.e(ab)) ==
                                   B.multiply(B.alpha_bar(a) + B.alpha_bar(b), B.e(ab)),
                               [&] { return format_alpha(a) + " + " + format_alpha(b); });
            }
        }
    }
    ValidationReport r;
    r.add(std::move(d_delta));
    r.add(std::move(d_counit));
    r.add(std::move(delta_mult));
    r.add(std::move(counit_mult));
    r.add(std::move(leibniz));
    r.add(std::move(phi_add));
    r.merge(check_coalgebra_laws(B, basis, fmt, true, "bl"));
    return r;
}

HMonomial monomial_of(const PbwWord &w)
{
    HMonomial m;
    for (const auto &mode : w) {
        if (mode.torsion || mode.n >= 0) {
            throw std::invalid_argument("monomial_of: word is not a product of negative free modes");
        }
        m.push_back({static_cast<int>(mode.gen), -mode.n});
    }
    std::sort(m.begin(), m.end());
    return m;
}

PbwWord word_of(const HMonomial &m)
{
    PbwWord w;
    for (const auto &s : m) {
        w.push_back(Mode{static_cast<GenId>(s.index), false, -s.n});
    }
    std::sort(w.begin(), w.end());
    return w;
}

ValidationReport check_bl_equals_tensor_phi(const SemigroupL &L, int max_weight, int alpha_bound, Window modes)
{
    EnvelopingAlgebra V(builtin_abelian(L.rank));
    PhiMap phi;
    for (int i = 0; i < L.rank; ++i) {
        phi.targets.push_back(V.presentation().generator(static_cast<GenId>(i)));
    }
    TensorPhiAlgebra T(V, L, phi);
    DiffBialgebra B(L);
    auto iso = [](const DiffElement &x) {
        TensorPhiState out;
        for (const auto &[k, c] : x) {
            out.add({word_of(k.first), k.second}, c);
        }
        return out;
    };
    auto iso_key = [&](const DiffKey &k) { return iso(DiffElement::term(k)); };
    const auto basis = B.basis(max_weight, alpha_bound);
    CheckResult modes_res("bl-tensor-phi/modes", "Borcherds a_n b = ⊗_φ a_n b");
    CheckResult d_res("bl-tensor-phi/derivation", "∂ = D");
    CheckResult delta_res("bl-tensor-phi/delta", "Δ_B = Δ_⊗φ");
    CheckResult counit_res("bl-tensor-phi/counit", "ε_B = ε_⊗φ");
    for (const auto &k : basis) {
        const auto x = DiffElement::term(k);
        const auto tx = iso(x);
        d_res.record(iso(B.derivative(x)) == T.derivative(tx), [&] { return B.format_key(k); });
        delta_res.record(tensor_map(delta(B, x), iso_key, iso_key) == delta(T, tx), [&] { return B.format_key(k); });
        counit_res.record(counit(B, x) == counit(T, tx), [&] { return B.format_key(k); });
        for (const auto &l : basis) {
            const auto y = DiffElement::term(l);
            const auto ty = iso(y);
            for (int n = modes.lo; n <= modes.hi; ++n) {
                auto lhs = iso(B.mode(x, n, y));
                auto rhs = T.mode(tx, n, ty);
                modes_res.record(lhs == rhs, [&] {
                    return B.format_key(k) + " mode " + std::to_string(n) + " on " + B.format_key(l) + ": " +
                           T.format(lhs) + " vs " + T.format(rhs);
                });
            }
        }
    }
    ValidationReport r;
    r.add(std::move(modes_res));
    r.add(std::move(d_res));
    r.add(std::move(delta_res));
    r.add(std::move(counit_res));
    r.merge(check_bl_bialgebra(B, max_weight, alpha_bound));
    return r;
}

// Universal morphisms out of B_L

UniversalMorphism::UniversalMorphism(const DiffBialgebra &source, const DiffBialgebra &target, std::vector<Alpha> psi,
                                     std::vector<DiffElement> phi_b)
    : source_(&source), target_(&target), psi_(std::move(psi)), phi_b_(std::move(phi_b))
{
    if (psi_.size() != static_cast<std::size_t>(source.rank()) ||
        phi_b_.size() != static_cast<std::size_t>(source.rank())) {
        throw std::invalid_argument("universal morphism: expected " + std::to_string(source.rank()) +
                                    " images for ψ and for φ_B");
    }
    for (const auto &col : psi_) {
        if (col.size() != static_cast<std::size_t>(target.rank())) {
            throw std::invalid_argument("universal morphism: ψ image of wrong rank " + format_alpha(col));
        }
    }
}

Alpha UniversalMorphism::psi(const Alpha &a) const
{
    Alpha out = target_->semigroup().zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[j] += a[i] * psi_[i][j];
        }
    }
    return out;
}

DiffElement UniversalMorphism::apply_key(const DiffKey &k) const
{
    const auto &T = *target_;
    DiffElement out = T.e(psi(k.second));
    for (const auto &s : k.first) {
        // f(h_i(-n-1)) = (1/n!) ∂^n φ_B(ē_i)
        DiffElement x = phi_b_.at(static_cast<std::size_t>(s.index));
        for (int j = 1; j < s.n; ++j) {
            x = T.derivative(x);
        }
        x *= inverse_factorial(s.n - 1);
        out = T.multiply(out, x);
    }
    return out;
}

DiffElement UniversalMorphism::apply(const DiffElement &x) const
{
    DiffElement out;
    for (const auto &[k, c] : x) {
        out.add_scaled(apply_key(k), c);
    }
    return out;
}

MorphismResult extend_universal_morphism(const DiffBialgebra &source, const DiffBialgebra &target,
                                         std::vector<Alpha> psi, std::vector<DiffElement> phi_b, int max_weight,
                                         int alpha_bound)
{
    MorphismResult out;
    UniversalMorphism f(source, target, std::move(psi), std::move(phi_b));

    CheckResult into("universal/psi-semigroup", "ψ(L) ⊆ L'");
    CheckResult prim("universal/phi-primitive", "Δφ_B(ᾱ) = φ_B(ᾱ)⊗1 + 1⊗φ_B(ᾱ)");
    CheckResult compat("universal/compatibility", "∂ψ(e^α) = φ_B(ᾱ)ψ(e^α)");
    for (int i = 0; i < source.rank(); ++i) {
        const Alpha a = source.semigroup().basis(i);
        std::vector<Alpha> dirs{a};
        if (source.semigroup().group) {
            dirs.push_back(Alpha(a.size(), 0));
            dirs.back()[static_cast<std::size_t>(i)] = -1;
        }
        for (const auto &d : dirs) {
            into.record(target.semigroup().contains(f.psi(d)),
                        [&] { return "ψ" + format_alpha(d) + " = " + format_alpha(f.psi(d)); });
        }
        const DiffElement &phi_i = f.apply_key({{HSymbol{i, 1}}, source.semigroup().zero()});
        prim.record(is_primitive(target, phi_i, target.one()), [&] { return "α=" + format_alpha(a); });
    }
    const bool structural = into.passed && prim.passed;
    if (structural) {
        for (int i = 0; i < source.rank(); ++i) {
            const Alpha a = source.semigroup().basis(i);
            const auto g = target.e(f.psi(a));
            const auto phi_i = f.apply_key({{HSymbol{i, 1}}, source.semigroup().zero()});
            const auto lhs = target.derivative(g);
            const auto rhs = target.multiply(phi_i, g);
            compat.record(lhs == rhs, [&] {
                return "α=" + format_alpha(a) + ": ∂ψ(e^α) = " + target.format(lhs) + ", φ_B(ᾱ)ψ(e^α) = " +
                       target.format(rhs);
            });
        }
    }
    const bool accepted = structural && compat.passed;
    out.report.add(std::move(into));
    out.report.add(std::move(prim));
    out.report.add(std::move(compat));
    if (!accepted) {
        return out;
    }

    const auto basis = source.basis(max_weight, alpha_bound);
    auto fk = [&](const DiffKey &k) { return f.apply_key(k); };
    CheckResult alg("universal/algebra", "f(ab) = f(a)f(b), f(1) = 1");
    CheckResult der("universal/derivation", "f∂ = ∂f");
    CheckResult del("universal/delta", "Δf = (f⊗f)Δ");
    CheckResult cou("universal/counit", "εf = ε");
    alg.record(f.apply(source.one()) == target.one(), [] { return std::string("f(1) != 1"); });
    for (const auto &k : basis) {
        const auto x = DiffElement::term(k);
        const auto fx = f.apply(x);
        der.record(f.apply(source.derivative(x)) == target.derivative(fx), [&] { return source.format_key(k); });
        del.record(delta(target, fx) == tensor_map(delta(source, x), fk, fk), [&] { return source.format_key(k); });
        cou.record(counit(target, fx) == counit(source, x), [&] { return source.format_key(k); });
        for (const auto &l : basis) {
            const auto y = DiffElement::term(l);
            alg.record(f.apply(source.multiply(x, y)) == target.multiply(fx, f.apply(y)),
                       [&] { return source.format_key(k) + " · " + source.format_key(l); });
        }
    }
    out.report.add(std::move(alg));
    out.report.add(std::move(der));
    out.report.add(std::move(del));
    out.report.add(std::move(cou));
    out.morphism.emplace(std::move(f));
    return out;
}

} // namespace vk
