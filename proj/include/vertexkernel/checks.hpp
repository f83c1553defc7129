// Coefficient-level checkers for the vertex algebra identities, generic over
// any implementation that exposes vacuum, modes, D and a truncation bound.
//
// Every checker takes an explicit window and claims nothing outside it.

#ifndef VERTEXKERNEL_CHECKS_HPP
#define VERTEXKERNEL_CHECKS_HPP

#include <concepts>
#include <map>
#include <utility>
#include <string>
#include <vector>

#include <vertexkernel/rational.hpp>
#include <vertexkernel/report.hpp>

namespace vk
{

template <typename A>
concept VertexAlgebra = requires(const A &a, const typename A::Element &x, int n) {
    { a.vacuum() } -> std::convertible_to<typename A::Element>;
    { a.mode(x, n, x) } -> std::convertible_to<typename A::Element>;
    { a.derivative(x) } -> std::convertible_to<typename A::Element>;
    { a.truncation_bound(x, x) } -> std::convertible_to<int>;
    { a.format(x) } -> std::convertible_to<std::string>;
};

struct Window {
    int lo = -3;
    int hi = 3;
};

namespace detail
{

template <VertexAlgebra A>
typename A::Element d_power(const A &a, typename A::Element x, int j)
{
    for (int i = 0; i < j; ++i) {
        x = a.derivative(x);
    }
    return x;
}

} // namespace detail

/// u_n v = Σ_j (-1)^{n+j+1} (1/j!) D^j (v_{n+j} u) for n in the window.
template <VertexAlgebra A>
CheckResult check_skew_symmetry(const A &a, const typename A::Element &u, const typename A::Element &v, Window w)
{
    CheckResult res("skew-symmetry", "u_n v = Σ_j (-1)^{n+j+1} D^(j)(v_{n+j} u)");
    const int bound = a.truncation_bound(v, u);
    for (int n = w.lo; n <= w.hi; ++n) {
        typename A::Element rhs;
        for (int j = 0; n + j < bound; ++j) {
            auto term = detail::d_power(a, a.mode(v, n + j, u), j);
            rhs.add_scaled(term, inverse_factorial(j) * sign_power(n + j + 1));
        }
        auto lhs = a.mode(u, n, v);
        res.record(lhs == rhs, [&] {
            return "u=" + a.format(u) + " v=" + a.format(v) + " n=" + std::to_string(n) + ": " + a.format(lhs) +
                   " vs " + a.format(rhs);
        });
    }
    return res;
}

/// u_m v_n w - v_n u_m w = Σ_j binom(m,j) (u_j v)_{m+n-j} w
template <VertexAlgebra A>
CheckResult check_commutator_formula(const A &a, const typename A::Element &u, const typename A::Element &v,
                                     const typename A::Element &w, Window mw, Window nw)
{
    CheckResult res("borcherds-commutator", "[u_m, v_n] = Σ_j binom(m,j) (u_j v)_{m+n-j}");
    const int bound = a.truncation_bound(u, v);
    std::vector<typename A::Element> products;
    for (int j = 0; j < bound; ++j) {
        products.push_back(a.mode(u, j, v));
    }
    for (int m = mw.lo; m <= mw.hi; ++m) {
        auto um_w = a.mode(u, m, w);
        for (int n = nw.lo; n <= nw.hi; ++n) {
            auto lhs = a.mode(u, m, a.mode(v, n, w)) - a.mode(v, n, um_w);
            typename A::Element rhs;
            for (int j = 0; j < bound; ++j) {
                if (!products[static_cast<std::size_t>(j)].empty()) {
                    rhs.add_scaled(a.mode(products[static_cast<std::size_t>(j)], m + n - j, w), binom_general(m, j));
                }
            }
            res.record(lhs == rhs, [&] {
                return "u=" + a.format(u) + " v=" + a.format(v) + " w=" + a.format(w) + " m=" + std::to_string(m) +
                       " n=" + std::to_string(n) + ": " + a.format(lhs) + " vs " + a.format(rhs);
            });
        }
    }
    return res;
}

/// Coefficient of x0^p x1^q x2^r in the Jacobi identity applied to w, for
/// |p|, |q|, |r| <= window. Each of the three terms is a finite sum; the
/// iterated modes only depend on an index pair, so they are computed once
/// per triple and shared across (p, q, r).
template <VertexAlgebra A>
CheckResult check_jacobi(const A &a, const typename A::Element &u, const typename A::Element &v,
                         const typename A::Element &w, int window)
{
    using E = typename A::Element;
    CheckResult res("jacobi", "x0^-1 δ((x1-x2)/x0) Y(u,x1)Y(v,x2) - x0^-1 δ((x2-x1)/-x0) Y(v,x2)Y(u,x1) "
                              "= x2^-1 δ((x1-x0)/x2) Y(Y(u,x0)v,x2)");
    const int n_vw = a.truncation_bound(v, w);
    const int n_uw = a.truncation_bound(u, w);
    const int n_uv = a.truncation_bound(u, v);

    // inner[k] = x_k y, outer[(j,k)] = x_j (inner[k]) for one ordered pair (x, y)
    struct Iterated {
        std::map<int, E> inner;
        std::map<std::pair<int, int>, E> outer;
    };
    Iterated uv_w, vu_w;
    auto iterated = [&](Iterated &cache, const E &x, const E &y, const E &z, int j, int k) -> const E & {
        auto it = cache.outer.find({j, k});
        if (it != cache.outer.end()) {
            return it->second;
        }
        auto in = cache.inner.find(k);
        if (in == cache.inner.end()) {
            in = cache.inner.emplace(k, a.mode(y, k, z)).first;
        }
        return cache.outer.emplace(std::pair{j, k}, in->second.empty() ? E{} : a.mode(x, j, in->second))
            .first->second;
    };
    std::map<int, E> u_k_v;
    auto ukv = [&](int k) -> const E & {
        auto it = u_k_v.find(k);
        if (it == u_k_v.end()) {
            it = u_k_v.emplace(k, a.mode(u, k, v)).first;
        }
        return it->second;
    };
    std::map<std::pair<int, int>, E> rhs_cache;
    auto rhs_term = [&](int k, int m) -> const E & {
        auto it = rhs_cache.find({k, m});
        if (it == rhs_cache.end()) {
            const E &x = ukv(k);
            it = rhs_cache.emplace(std::pair{k, m}, x.empty() ? E{} : a.mode(x, m, w)).first;
        }
        return it->second;
    };

    for (int p = -window; p <= window; ++p) {
        const int n = -p - 1;
        for (int q = -window; q <= window; ++q) {
            for (int r = -window; r <= window; ++r) {
                E diff;
                for (int i = 0; i < n_vw + r + 1; ++i) {
                    Rational c = binom_general(n, i) * sign_power(i);
                    if (c != 0) {
                        diff.add_scaled(iterated(uv_w, u, v, w, n - i - 1 - q, i - r - 1), c);
                    }
                }
                for (int i = 0; i < n_uw + q + 1; ++i) {
                    Rational c = binom_general(n, i) * sign_power(n + i);
                    if (c != 0) {
                        diff.add_scaled(iterated(vu_w, v, u, w, n - i - r - 1, i - q - 1), -c);
                    }
                }
                for (int i = 0; i < n_uv + p + 1; ++i) {
                    const E &t = rhs_term(i - p - 1, -q - i - r - 2);
                    if (!t.empty()) {
                        diff.add_scaled(t, -binom_general(q + i, i) * sign_power(i));
                    }
                }
                res.record(diff.empty(), [&] {
                    return "u=" + a.format(u) + " v=" + a.format(v) + " w=" + a.format(w) + " (p,q,r)=(" +
                           std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
                           "): residual " + a.format(diff);
                });
            }
        }
    }
    return res;
}

/// 1_n v = δ_{n,-1} v, u_n 1 = 0 for n >= 0, u_{-1} 1 = u.
template <VertexAlgebra A>
CheckResult check_vacuum(const A &a, const typename A::Element &u, Window w)
{
    CheckResult res("vacuum-creation", "1_n = δ_{n,-1}, u_{-1} 1 = u, u_n 1 = 0 (n >= 0)");
    const auto one = a.vacuum();
    for (int n = w.lo; n <= w.hi; ++n) {
        auto left = a.mode(one, n, u);
        res.record(n == -1 ? left == u : left.empty(),
                   [&] { return "1_" + std::to_string(n) + " " + a.format(u) + " = " + a.format(left); });
        if (n >= -1) {
            auto right = a.mode(u, n, one);
            res.record(n == -1 ? right == u : right.empty(),
                       [&] { return a.format(u) + " mode " + std::to_string(n) + " on 1 = " + a.format(right); });
        }
    }
    res.record(a.derivative(one).empty(), [&] { return "D1 = " + a.format(a.derivative(one)); });
    return res;
}

/// (Du)_n v = -n u_{n-1} v
template <VertexAlgebra A>
CheckResult check_d_bracket(const A &a, const typename A::Element &u, const typename A::Element &v, Window w)
{
    CheckResult res("d-bracket", "(Du)_n v = -n u_{n-1} v");
    const auto du = a.derivative(u);
    for (int n = w.lo; n <= w.hi; ++n) {
        auto lhs = a.mode(du, n, v);
        auto rhs = a.mode(u, n - 1, v);
        rhs *= Rational(-n);
        res.record(lhs == rhs, [&] {
            return "u=" + a.format(u) + " v=" + a.format(v) + " n=" + std::to_string(n) + ": " + a.format(lhs) +
                   " vs " + a.format(rhs);
        });
    }
    return res;
}

} // namespace vk

#endif
