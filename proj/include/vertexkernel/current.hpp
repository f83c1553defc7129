// The Lie algebra of modes L_C = (C ⊗ C[t,t^-1]) / im(D ⊗ 1 + 1 ⊗ d/dt).
//
// Canonical basis: g(n) for free g and every n, c(-1) for torsion c.

#ifndef VERTEXKERNEL_CURRENT_HPP
#define VERTEXKERNEL_CURRENT_HPP

#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>

#include <vertexkernel/lincomb.hpp>
#include <vertexkernel/report.hpp>
#include <vertexkernel/vla.hpp>

namespace vk
{

struct Mode {
    GenId gen = 0;
    bool torsion = false;
    int n = 0;

    friend bool operator==(const Mode &, const Mode &) = default;

    // PBW order: free modes before torsion modes, then larger |n| first,
    // then generator index, then n ascending.
    friend std::strong_ordering operator<=>(const Mode &a, const Mode &b)
    {
        if (a.torsion != b.torsion) {
            return a.torsion ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        int aa = std::abs(a.n), ab = std::abs(b.n);
        if (aa != ab) {
            return ab <=> aa;
        }
        if (a.gen != b.gen) {
            return a.gen <=> b.gen;
        }
        return a.n <=> b.n;
    }
};

using ModeCombo = LinComb<Mode>;

Mode make_mode(const VlaPresentation &p, GenId g, int n);

/// Mode weight wt(g) - n - 1.
int mode_weight(const VlaPresentation &p, const Mode &m);

/// (D^d g)(n) = (-1)^d n(n-1)...(n-d+1) g(n-d); c(n) = 0 for torsion c, n != -1.
ModeCombo mode_normalize(const VlaPresentation &p, const VlaElement &u, int n);

/// [a(m), b(n)] = sum_j binom(m,j) (a_j b)(m+n-j)
ModeCombo bracket(const VlaPresentation &p, const Mode &a, const Mode &b);
ModeCombo bracket(const VlaPresentation &p, const ModeCombo &a, const ModeCombo &b);

/// Antisymmetry and Jacobi on all generator modes with |n| <= window.
ValidationReport check_lie_axioms(const VlaPresentation &p, int window);

std::string format_mode(const VlaPresentation &p, const Mode &m);
std::string format_modes(const VlaPresentation &p, const ModeCombo &x);
/// "L(-3)"
Mode parse_mode(const VlaPresentation &p, std::string_view text);

} // namespace vk

#endif
