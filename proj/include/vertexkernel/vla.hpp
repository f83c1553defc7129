// Vertex Lie algebras given by a finite graded presentation.
//
// A presentation lists generators (each either free over C[D] or torsion,
// meaning D kills it) and a finite table of nonnegative products g_n h.
// Everything else is derived from the D-rules
//
//     (D u)_n v = -n u_{n-1} v
//     u_n (D v) = D(u_n v) + n u_{n-1} v
//
// The second rule is the one forced by [D, Y(u,x)] = d/dx Y(u,x); the
// validator also evaluates the variant with the opposite sign and reports it
// as informational.

#ifndef VERTEXKERNEL_VLA_HPP
#define VERTEXKERNEL_VLA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <vertexkernel/lincomb.hpp>
#include <vertexkernel/report.hpp>

namespace vk
{

using GenId = std::uint16_t;

struct GeneratorSpec {
    std::string name;
    int weight = 0;
    bool torsion = false;
};

/// Basis key D^d g of C.
struct DTerm {
    GenId gen = 0;
    int d = 0;
    friend auto operator<=>(const DTerm &, const DTerm &) = default;
};

using VlaElement = LinComb<DTerm>;

/// Structural problems in a presentation (unknown generator, negative n, ...).
class MalformedPresentation : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class RightDRule { plus, minus };

class VlaPresentation
{
public:
    struct ProductKey {
        GenId left = 0;
        GenId right = 0;
        int n = 0;
        friend auto operator<=>(const ProductKey &, const ProductKey &) = default;
    };

    VlaPresentation() = default;
    explicit VlaPresentation(std::vector<GeneratorSpec> generators);

    /// Sets g_n h. Throws MalformedPresentation on negative n or unknown ids.
    void set_product(GenId left, GenId right, int n, VlaElement result);
    void set_product(std::string_view left, std::string_view right, int n, VlaElement result);

    [[nodiscard]] const std::vector<GeneratorSpec> &generators() const noexcept { return gens_; }
    [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }
    [[nodiscard]] const GeneratorSpec &spec(GenId g) const { return gens_.at(g); }
    [[nodiscard]] bool is_torsion(GenId g) const { return gens_.at(g).torsion; }
    [[nodiscard]] std::optional<GenId> find(std::string_view name) const;
    /// Throws MalformedPresentation for unknown names.
    [[nodiscard]] GenId id(std::string_view name) const;

    [[nodiscard]] const std::map<ProductKey, VlaElement> &products() const noexcept { return table_; }
    /// Stored g_n h, zero when absent.
    [[nodiscard]] const VlaElement &table(GenId left, GenId right, int n) const;
    /// Largest n with a nonzero stored g_n h, or -1.
    [[nodiscard]] int max_n(GenId left, GenId right) const;
    [[nodiscard]] int max_table_n() const noexcept { return max_table_n_; }

    [[nodiscard]] VlaElement generator(GenId g, int d = 0) const;
    [[nodiscard]] VlaElement generator(std::string_view name, int d = 0) const { return generator(id(name), d); }

    /// Drops D^d c (d > 0) for torsion c.
    [[nodiscard]] VlaElement normalize(const VlaElement &u) const;

    [[nodiscard]] int weight(const DTerm &t) const { return gens_.at(t.gen).weight + t.d; }
    /// Weight if u is homogeneous and nonzero.
    [[nodiscard]] std::optional<int> weight(const VlaElement &u) const;

    /// "2·D^2L + 1/2·c"
    [[nodiscard]] std::string format(const VlaElement &u) const;
    /// Inverse of format; also accepts "*" for "·" and "D2L" for "D^2L".
    [[nodiscard]] VlaElement parse_element(std::string_view text) const;

private:
    std::vector<GeneratorSpec> gens_;
    std::map<ProductKey, VlaElement> table_;
    std::map<std::pair<GenId, GenId>, int> max_n_;
    int max_table_n_ = -1;
};

VlaPresentation builtin_virasoro();
VlaPresentation builtin_heisenberg(int rank);
VlaPresentation builtin_abelian(int dim);

/// Resolves "virasoro", "heisenberg:2", "abelian:3" (also "heisenberg" = rank 1).
std::optional<VlaPresentation> builtin_by_name(std::string_view name);

VlaElement apply_D(const VlaPresentation &p, const VlaElement &u);

/// u_n v for n >= 0, extended bilinearly from the table by the D-rules.
VlaElement nth_product(const VlaPresentation &p, const VlaElement &u, int n, const VlaElement &v,
                       RightDRule rule = RightDRule::plus);

/// First n such that u_m v = 0 for every m >= n.
int product_bound(const VlaPresentation &p, const VlaElement &u, const VlaElement &v);

/// Axiom checks with witnesses: truncation, weight homogeneity, positive
/// weights of free generators, zero torsion rows, skew-symmetry, the D-rule
/// on the right, and the half-Jacobi identity. n and m range over
/// [0, max table n + extra].
ValidationReport validate_presentation(const VlaPresentation &p, int extra = 2);

} // namespace vk

#endif
