#include <vertexkernel/current.hpp>

#include <cctype>
#include <vector>

namespace vk
{

Mode make_mode(const VlaPresentation &p, GenId g, int n)
{
    return Mode{g, p.is_torsion(g), n};
}

int mode_weight(const VlaPresentation &p, const Mode &m)
{
    return p.spec(m.gen).weight - m.n - 1;
}

ModeCombo mode_normalize(const VlaPresentation &p, const VlaElement &u, int n)
{
    ModeCombo out;
    for (const auto &[t, c] : u) {
        if (p.is_torsion(t.gen)) {
            if (t.d == 0 && n == -1) {
                out.add(make_mode(p, t.gen, -1), c);
            }
            continue;
        }
        // repeated (Du)(n) = -n u(n-1)
        Rational coeff = binom_general(n, t.d) * factorial(t.d) * sign_power(t.d);
        out.add(make_mode(p, t.gen, n - t.d), coeff * c);
    }
    return out;
}

ModeCombo bracket(const VlaPresentation &p, const Mode &a, const Mode &b)
{
    ModeCombo out;
    if ((a.torsion && a.n != -1) || (b.torsion && b.n != -1)) {
        return out;
    }
    int top = p.max_n(a.gen, b.gen);
    for (int j = 0; j <= top; ++j) {
        const VlaElement &ab = p.table(a.gen, b.gen, j);
        if (ab.empty()) {
            continue;
        }
        Rational bin = binom_general(a.n, j);
        if (sgn(bin) == 0) {
            continue;
        }
        out.add_scaled(mode_normalize(p, ab, a.n + b.n - j), bin);
    }
    return out;
}

ModeCombo bracket(const VlaPresentation &p, const ModeCombo &a, const ModeCombo &b)
{
    ModeCombo out;
    for (const auto &[ma, ca] : a) {
        for (const auto &[mb, cb] : b) {
            out.add_scaled(bracket(p, ma, mb), ca * cb);
        }
    }
    return out;
}

ValidationReport check_lie_axioms(const VlaPresentation &p, int window)
{
    std::vector<Mode> modes;
    for (GenId g = 0; g < p.size(); ++g) {
        if (p.is_torsion(g)) {
            modes.push_back(make_mode(p, g, -1));
            continue;
        }
        for (int n = -window; n <= window; ++n) {
            modes.push_back(make_mode(p, g, n));
        }
    }
    CheckResult anti("lie-antisymmetry", "[x,y] + [y,x] = 0");
    for (const auto &x : modes) {
        for (const auto &y : modes) {
            ModeCombo s = bracket(p, x, y) + bracket(p, y, x);
            anti.record(s.empty(), [&] {
                return "x=" + format_mode(p, x) + " y=" + format_mode(p, y) + ": [x,y]+[y,x] = " + format_modes(p, s);
            });
        }
    }
    CheckResult jac("lie-jacobi", "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0");
    for (const auto &x : modes) {
        for (const auto &y : modes) {
            ModeCombo xy = bracket(p, x, y);
            for (const auto &z : modes) {
                ModeCombo zc = ModeCombo::term(z);
                ModeCombo s = bracket(p, xy, zc) + bracket(p, bracket(p, y, z), ModeCombo::term(x)) +
                              bracket(p, bracket(p, z, x), ModeCombo::term(y));
                jac.record(s.empty(), [&] {
                    return "x=" + format_mode(p, x) + " y=" + format_mode(p, y) + " z=" + format_mode(p, z) +
                           ": sum = " + format_modes(p, s);
                });
            }
        }
    }
    ValidationReport r;
    r.add(anti);
    r.add(jac);
    return r;
}

std::string format_mode(const VlaPresentation &p, const Mode &m)
{
    return p.spec(m.gen).name + "(" + std::to_string(m.n) + ")";
}

std::string format_modes(const VlaPresentation &p, const ModeCombo &x)
{
    return format_lincomb(x, [&](const Mode &m) { return format_mode(p, m); });
}

Mode parse_mode(const VlaPresentation &p, std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') {
        throw MalformedPresentation("malformed mode '" + std::string(text) + "'");
    }
    GenId g = p.id(s.substr(0, open));
    int n = 0;
    try {
        std::size_t used = 0;
        std::string num = s.substr(open + 1, s.size() - open - 2);
        n = std::stoi(num, &used);
        if (used != num.size()) {
            throw std::invalid_argument("trailing");
        }
    } catch (const std::exception &) {
        throw MalformedPresentation("malformed mode index in '" + std::string(text) + "'");
    }
    return make_mode(p, g, n);
}

} // namespace vk
