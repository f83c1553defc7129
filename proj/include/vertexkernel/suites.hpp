// Check suites shared by the command-line tool, the acceptance binary and the
// Python module. Every suite returns a report whose checks are sorted by id;
// repeated instances of one identity are folded into a single entry.

#ifndef VERTEXKERNEL_SUITES_HPP
#define VERTEXKERNEL_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <vertexkernel/constructions.hpp>
#include <vertexkernel/enveloping.hpp>
#include <vertexkernel/report.hpp>
#include <vertexkernel/vla.hpp>

namespace vk
{

struct SuiteOptions {
    int max_weight = 5;
    int mode_window = 4;
    int torsion_bound = 0;
    int alpha_bound = 2;
    /// 0 runs every basis tuple; otherwise this many tuples drawn with seed.
    std::size_t sample = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

/// Optional morphism data of a construction file.
struct MorphismSpec {
    /// B_L images of the generators, in the text syntax of DiffBialgebra::parse.
    std::vector<std::string> images;
    std::vector<Alpha> psi;
    std::vector<std::string> phi_b;
};

inline constexpr std::string_view suite_names[] = {"validate", "jacobi",    "skew", "commutator", "coalgebra",
                                                   "tensor-phi", "bl", "morphism", "all"};

/// Threads from VERTEXKERNEL_THREADS, else 1. Unparseable or zero values mean 1.
unsigned threads_from_env();

/// Runs f(i) for i in [0, count) on up to `threads` workers and folds the
/// partial reports in index order, so the outcome does not depend on scheduling.
ValidationReport parallel_fold(std::size_t count, unsigned threads,
                               const std::function<ValidationReport(std::size_t)> &f);

/// Adds `part` into `acc`: checks with equal ids are merged, the earliest
/// failing witness wins.
void fold_into(ValidationReport &acc, const ValidationReport &part);

/// validate, jacobi (with vacuum and D-bracket), skew, commutator, coalgebra or all.
/// Throws std::invalid_argument for other suite names.
ValidationReport run_presentation_suite(const VlaPresentation &p, std::string_view suite, const SuiteOptions &opt);

/// tensor-phi, bl, morphism or all; the presentation suites run on the
/// construction's presentation. A non-central φ is a failed check, not an error.
ValidationReport run_construction_suite(const VlaPresentation &p, const SemigroupL &L, const PhiMap &phi,
                                        const std::optional<MorphismSpec> &morphism, std::string_view suite,
                                        const SuiteOptions &opt);

struct DimsRow {
    int weight;
    std::size_t dim;
    std::size_t primitive_dim;
};

std::vector<DimsRow> dims_table(const EnvelopingAlgebra &V, int max_weight, int torsion_bound);

} // namespace vk

#endif
