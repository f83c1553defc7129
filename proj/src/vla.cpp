#include <vertexkernel/vla.hpp>

#include "text_util.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vk
{

using detail::split_terms;
using detail::trim;

VlaPresentation::VlaPresentation(std::vector<GeneratorSpec> generators) : gens_(std::move(generators))
{
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto &g = gens_[i];
        if (g.name.empty()) {
            throw MalformedPresentation("generator " + std::to_string(i) + ": empty name");
        }
        if (g.weight < 0) {
            throw MalformedPresentation("generator '" + g.name + "': negative weight");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (gens_[j].name == g.name) {
                throw MalformedPresentation("duplicate generator name '" + g.name + "'");
            }
        }
    }
}

std::optional<GenId> VlaPresentation::find(std::string_view name) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name == name) {
            return static_cast<GenId>(i);
        }
    }
    return std::nullopt;
}

GenId VlaPresentation::id(std::string_view name) const
{
    auto g = find(name);
    if (!g) {
        throw MalformedPresentation("unknown generator '" + std::string(name) + "'");
    }
    return *g;
}

void VlaPresentation::set_product(GenId left, GenId right, int n, VlaElement result)
{
    if (left >= gens_.size() || right >= gens_.size()) {
        throw MalformedPresentation("product entry refers to an unknown generator id");
    }
    if (n < 0) {
        throw MalformedPresentation("product " + gens_[left].name + "_" + std::to_string(n) + gens_[right].name +
                                    ": negative n");
    }
    for (const auto &[t, c] : result) {
        if (t.gen >= gens_.size() || t.d < 0) {
            throw MalformedPresentation("product " + gens_[left].name + "_" + std::to_string(n) + gens_[right].name +
                                        ": malformed result term");
        }
    }
    result = normalize(result);
    ProductKey key{left, right, n};
    if (result.empty()) {
        table_.erase(key);
    } else {
        table_[key] = std::move(result);
    }
    max_n_.clear();
    max_table_n_ = -1;
    for (const auto &[k, v] : table_) {
        auto &m = max_n_[{k.left, k.right}];
        m = std::max(m, k.n);
        max_table_n_ = std::max(max_table_n_, k.n);
    }
}

void VlaPresentation::set_product(std::string_view left, std::string_view right, int n, VlaElement result)
{
    set_product(id(left), id(right), n, std::move(result));
}

const VlaElement &VlaPresentation::table(GenId left, GenId right, int n) const
{
    static const VlaElement zero;
    auto it = table_.find(ProductKey{left, right, n});
    return it == table_.end() ? zero : it->second;
}

int VlaPresentation::max_n(GenId left, GenId right) const
{
    auto it = max_n_.find({left, right});
    return it == max_n_.end() ? -1 : it->second;
}

VlaElement VlaPresentation::generator(GenId g, int d) const
{
    return normalize(VlaElement::term(DTerm{g, d}));
}

VlaElement VlaPresentation::normalize(const VlaElement &u) const
{
    VlaElement out;
    for (const auto &[t, c] : u) {
        if (gens_.at(t.gen).torsion && t.d > 0) {
            continue;
        }
        out.add(t, c);
    }
    return out;
}

std::optional<int> VlaPresentation::weight(const VlaElement &u) const
{
    std::optional<int> w;
    for (const auto &[t, c] : u) {
        int tw = weight(t);
        if (w && *w != tw) {
            return std::nullopt;
        }
        w = tw;
    }
    return w;
}

std::string VlaPresentation::format(const VlaElement &u) const
{
    return format_lincomb(u, [this](const DTerm &t) {
        std::string s;
        if (t.d == 1) {
            s = "D";
        } else if (t.d > 1) {
            s = "D^" + std::to_string(t.d);
        }
        return s + gens_.at(t.gen).name;
    });
}

VlaElement VlaPresentation::parse_element(std::string_view text) const
{
    VlaElement out;
    std::string all = trim(text);
    if (all.empty() || all == "0") {
        return out;
    }
    for (auto [sign, term] : split_terms(all)) {
        Rational coeff = sign;
        auto [coeff_text, body] = detail::split_coefficient(term);
        if (!coeff_text.empty()) {
            coeff *= parse_rational(coeff_text);
        }
        body.erase(std::remove_if(body.begin(), body.end(), [](unsigned char ch) { return std::isspace(ch); }),
                   body.end());
        int d = 0;
        if (!find(body)) {
            // D^2L, D2L or DL
            if (!body.empty() && body.front() == 'D') {
                const std::size_t start = body.rfind("D^", 0) == 0 ? 2 : 1;
                std::size_t i = start;
                while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
                    ++i;
                }
                if (i == start && start == 2) {
                    throw MalformedPresentation("malformed element term '" + term + "'");
                }
                d = i == start ? 1 : std::stoi(body.substr(start, i - start));
                body = body.substr(i);
            }
        }
        out.add(DTerm{id(body), d}, coeff);
    }
    return normalize(out);
}

VlaElement apply_D(const VlaPresentation &p, const VlaElement &u)
{
    VlaElement out;
    for (const auto &[t, c] : u) {
        if (p.is_torsion(t.gen)) {
            continue;
        }
        out.add(DTerm{t.gen, t.d + 1}, c);
    }
    return out;
}

namespace
{

// g_m (D^b h) for generators g, h.
VlaElement product_right(const VlaPresentation &p, GenId g, int m, int b, GenId h, RightDRule rule)
{
    if (m < 0) {
        return {};
    }
    if (b == 0) {
        return p.table(g, h, m);
    }
    if (p.is_torsion(h)) {
        return {};
    }
    VlaElement out = apply_D(p, product_right(p, g, m, b - 1, h, rule));
    if (m > 0) {
        Rational s = rule == RightDRule::plus ? m : -m;
        out.add_scaled(product_right(p, g, m - 1, b - 1, h, rule), s);
    }
    return out;
}

} // namespace

VlaElement nth_product(const VlaPresentation &p, const VlaElement &u, int n, const VlaElement &v, RightDRule rule)
{
    if (n < 0) {
        throw std::invalid_argument("nth_product: n must be nonnegative");
    }
    VlaElement out;
    for (const auto &[tu, cu] : u) {
        if (p.is_torsion(tu.gen) && tu.d > 0) {
            continue;
        }
        // (D^a g)_n = (-1)^a n(n-1)...(n-a+1) g_{n-a}
        Rational left = binom_general(n, tu.d) * factorial(tu.d) * sign_power(tu.d);
        if (sgn(left) == 0) {
            continue;
        }
        for (const auto &[tv, cv] : v) {
            out.add_scaled(product_right(p, tu.gen, n - tu.d, tv.d, tv.gen, rule), left * cu * cv);
        }
    }
    return out;
}

int product_bound(const VlaPresentation &p, const VlaElement &u, const VlaElement &v)
{
    int bound = 0;
    for (const auto &[tu, cu] : u) {
        for (const auto &[tv, cv] : v) {
            int m = p.max_n(tu.gen, tv.gen);
            if (m >= 0) {
                bound = std::max(bound, m + tu.d + tv.d + 1);
            }
        }
    }
    return bound;
}

namespace
{

// sum_{j>=0} (-1)^{n+j+1}/j! D^j (v_{n+j} u)
VlaElement skew_rhs(const VlaPresentation &p, const VlaElement &u, int n, const VlaElement &v, RightDRule rule)
{
    VlaElement out;
    int bound = product_bound(p, v, u);
    for (int j = 0; n + j < bound; ++j) {
        VlaElement term = nth_product(p, v, n + j, u, rule);
        for (int k = 0; k < j; ++k) {
            term = apply_D(p, term);
        }
        out.add_scaled(term, inverse_factorial(j) * sign_power(n + j + 1));
    }
    return out;
}

} // namespace

ValidationReport validate_presentation(const VlaPresentation &p, int extra)
{
    ValidationReport report;
    const int ng = static_cast<int>(p.size());
    const int top = std::max(p.max_table_n(), 0) + extra;
    auto name = [&](GenId g) { return p.spec(g).name; };

    CheckResult truncation("truncation", "finitely-many-nonzero-products");
    for (GenId a = 0; a < ng; ++a) {
        for (GenId b = 0; b < ng; ++b) {
            VlaElement ua = p.generator(a), ub = p.generator(b);
            int bound = product_bound(p, ua, ub);
            for (int n = bound; n <= bound + extra; ++n) {
                VlaElement r = nth_product(p, ua, n, ub);
                truncation.record(r.empty(), [&] {
                    return name(a) + "_" + std::to_string(n) + name(b) + " = " + p.format(r) + " beyond bound " +
                           std::to_string(bound);
                });
            }
        }
    }
    report.add(truncation);

    CheckResult homog("weight-homogeneity", "wt(u_n v)=wt(u)+wt(v)-n-1");
    for (const auto &[k, r] : p.products()) {
        int expect = p.spec(k.left).weight + p.spec(k.right).weight - k.n - 1;
        bool ok = true;
        for (const auto &[t, c] : r) {
            ok = ok && p.weight(t) == expect;
        }
        homog.record(ok, [&] {
            return name(k.left) + "_" + std::to_string(k.n) + name(k.right) + " = " + p.format(r) +
                   " is not homogeneous of weight " + std::to_string(expect);
        });
    }
    report.add(homog);

    CheckResult grading("free-weight-positive", "graded-pieces-finite");
    for (GenId a = 0; a < ng; ++a) {
        grading.record(p.spec(a).torsion || p.spec(a).weight > 0,
                       [&] { return "free generator " + name(a) + " has weight 0"; });
    }
    report.add(grading);

    CheckResult torsion("torsion-rows-zero", "(Dc)_n b = -n c_{n-1} b = 0");
    for (const auto &[k, r] : p.products()) {
        torsion.record(!p.is_torsion(k.left), [&] {
            return "torsion generator " + name(k.left) + ": " + name(k.left) + "_" + std::to_string(k.n) +
                   name(k.right) + " = " + p.format(r);
        });
    }
    report.add(torsion);

    CheckResult skew("skew-symmetry", "u_n v = sum_j (-1)^{n+j+1}/j! D^j v_{n+j} u");
    for (GenId a = 0; a < ng; ++a) {
        for (GenId b = 0; b < ng; ++b) {
            VlaElement ua = p.generator(a), ub = p.generator(b);
            for (int n = 0; n <= top; ++n) {
                VlaElement lhs = nth_product(p, ua, n, ub);
                VlaElement rhs = skew_rhs(p, ua, n, ub, RightDRule::plus);
                skew.record(lhs == rhs, [&] {
                    return "u=" + name(a) + " v=" + name(b) + " n=" + std::to_string(n) + ": lhs=" + p.format(lhs) +
                           ", rhs=" + p.format(rhs);
                });
            }
        }
    }
    report.add(skew);

    // u_n(Dv) by the right D-rule against the value forced by skew-symmetry
    // and the left D-rule alone.
    CheckResult dplus("d-rule-right", "u_n Dv = D(u_n v) + n u_{n-1} v");
    CheckResult dminus("d-rule-right-minus", "u_n Dv = D(u_n v) - n u_{n-1} v");
    dminus.informational = true;
    for (GenId a = 0; a < ng; ++a) {
        for (GenId b = 0; b < ng; ++b) {
            if (p.is_torsion(b)) {
                continue;
            }
            VlaElement ua = p.generator(a), dub = p.generator(b, 1);
            for (int n = 0; n <= top; ++n) {
                VlaElement forced = skew_rhs(p, ua, n, dub, RightDRule::plus);
                VlaElement plus = nth_product(p, ua, n, dub, RightDRule::plus);
                VlaElement minus = nth_product(p, ua, n, dub, RightDRule::minus);
                auto witness = [&](const VlaElement &got) {
                    return "u=" + name(a) + " v=D" + name(b) + " n=" + std::to_string(n) + ": rule gives " +
                           p.format(got) + ", skew-symmetry forces " + p.format(forced);
                };
                dplus.record(plus == forced, [&] { return witness(plus); });
                dminus.record(minus == forced, [&] { return witness(minus); });
            }
        }
    }
    if (!dminus.passed) {
        dminus.note = "the minus-sign variant is inconsistent with skew-symmetry on this presentation";
    }
    report.add(dplus);
    report.add(dminus);

    CheckResult jac("half-jacobi", "u_m v_n w - v_n u_m w = sum_j binom(m,j) (u_j v)_{m+n-j} w");
    for (GenId a = 0; a < ng; ++a) {
        for (GenId b = 0; b < ng; ++b) {
            for (GenId c = 0; c < ng; ++c) {
                VlaElement u = p.generator(a), v = p.generator(b), w = p.generator(c);
                for (int m = 0; m <= top; ++m) {
                    for (int n = 0; n <= top; ++n) {
                        VlaElement lhs = nth_product(p, u, m, nth_product(p, v, n, w)) -
                                         nth_product(p, v, n, nth_product(p, u, m, w));
                        VlaElement rhs;
                        int jb = product_bound(p, u, v);
                        for (int j = 0; j < jb && j <= m; ++j) {
                            VlaElement uv = nth_product(p, u, j, v);
                            if (uv.empty() || m + n - j < 0) {
                                continue;
                            }
                            rhs.add_scaled(nth_product(p, uv, m + n - j, w), binom_general(m, j));
                        }
                        jac.record(lhs == rhs, [&] {
                            return "u=" + name(a) + " v=" + name(b) + " w=" + name(c) + " m=" + std::to_string(m) +
                                   " n=" + std::to_string(n) + ": lhs=" + p.format(lhs) + ", rhs=" + p.format(rhs);
                        });
                    }
                }
            }
        }
    }
    report.add(jac);
    return report;
}

VlaPresentation builtin_virasoro()
{
    VlaPresentation p({{"L", 2, false}, {"c", 0, true}});
    p.set_product("L", "L", 0, p.generator("L", 1));
    p.set_product("L", "L", 1, Rational(2) * p.generator("L"));
    p.set_product("L", "L", 3, Rational(1, 2) * p.generator("c"));
    return p;
}

namespace
{

std::vector<std::string> indexed_names(int count)
{
    std::vector<std::string> names;
    for (int i = 1; i <= count; ++i) {
        names.push_back(count == 1 ? std::string("h") : "h" + std::to_string(i));
    }
    return names;
}

} // namespace

VlaPresentation builtin_heisenberg(int rank)
{
    if (rank < 1) {
        throw std::invalid_argument("builtin_heisenberg: rank must be >= 1");
    }
    std::vector<GeneratorSpec> gens;
    for (const auto &n : indexed_names(rank)) {
        gens.push_back({n, 1, false});
    }
    gens.push_back({"c", 0, true});
    VlaPresentation p(std::move(gens));
    for (int i = 0; i < rank; ++i) {
        p.set_product(static_cast<GenId>(i), static_cast<GenId>(i), 1, p.generator("c"));
    }
    return p;
}

VlaPresentation builtin_abelian(int dim)
{
    if (dim < 1) {
        throw std::invalid_argument("builtin_abelian: dimension must be >= 1");
    }
    std::vector<GeneratorSpec> gens;
    for (const auto &n : indexed_names(dim)) {
        gens.push_back({n, 1, false});
    }
    return VlaPresentation(std::move(gens));
}

std::optional<VlaPresentation> builtin_by_name(std::string_view name)
{
    auto colon = name.find(':');
    std::string base(name.substr(0, colon));
    int arg = 1;
    if (colon != std::string_view::npos) {
        try {
            arg = std::stoi(std::string(name.substr(colon + 1)));
        } catch (const std::exception &) {
            return std::nullopt;
        }
    }
    if (base == "virasoro") {
        return builtin_virasoro();
    }
    if (base == "heisenberg") {
        return builtin_heisenberg(arg);
    }
    if (base == "abelian") {
        return builtin_abelian(arg);
    }
    return std::nullopt;
}

} // namespace vk
