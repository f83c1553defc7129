#include <vertexkernel/suites.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include <vertexkernel/checks.hpp>
#include <vertexkernel/coalgebra.hpp>
#include <vertexkernel/current.hpp>

namespace vk
{

unsigned threads_from_env()
{
    const char *env = std::getenv("VERTEXKERNEL_THREADS");
    if (env == nullptr) {
        return 1;
    }
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
        return 1;
    }
    return static_cast<unsigned>(std::min<long>(v, 256));
}

void fold_into(ValidationReport &acc, const ValidationReport &part)
{
    // acc has unique ids; rebuild through a map keyed by id, keeping acc's order.
    std::map<std::string, CheckResult> by_id;
    std::vector<std::string> order;
    for (const auto &c : acc.checks()) {
        order.push_back(c.id);
        by_id.emplace(c.id, c);
    }
    for (const auto &c : part.checks()) {
        auto it = by_id.find(c.id);
        if (it == by_id.end()) {
            order.push_back(c.id);
            by_id.emplace(c.id, c);
            continue;
        }
        CheckResult &t = it->second;
        t.instances += c.instances;
        t.seconds += c.seconds;
        if (!c.passed && t.passed) {
            t.passed = false;
            t.witness = c.witness;
        }
        if (t.note.empty()) {
            t.note = c.note;
        }
    }
    ValidationReport out;
    for (const auto &id : order) {
        out.add(std::move(by_id.at(id)));
    }
    acc = std::move(out);
}

ValidationReport parallel_fold(std::size_t count, unsigned threads,
                               const std::function<ValidationReport(std::size_t)> &f)
{
    std::vector<ValidationReport> parts(count);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1U), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            parts[i] = f(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    parts[i] = f(i);
                }
            });
        }
    }
    ValidationReport acc;
    for (const auto &p : parts) {
        fold_into(acc, p);
    }
    return acc;
}

namespace
{

using Clock = std::chrono::steady_clock;

ValidationReport single(CheckResult r)
{
    ValidationReport out;
    out.add(std::move(r));
    return out;
}

/// Runs one stage, stamps its wall time on each of its checks and folds it in.
void stage(ValidationReport &acc, const std::function<ValidationReport()> &f, const std::string &prefix = {})
{
    const auto t0 = Clock::now();
    ValidationReport r = f();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    ValidationReport stamped;
    for (auto c : r.checks()) {
        c.id = prefix + c.id;
        c.seconds = secs;
        stamped.add(std::move(c));
    }
    fold_into(acc, stamped);
}

ValidationReport finish(ValidationReport r)
{
    r.sort_by_id();
    return r;
}

/// Index tuples over the basis. Exhaustive mode keeps the tuples whose
/// weights add up to at most `combined`; sampling draws `opt.sample` tuples
/// uniformly from the whole basis instead.
std::vector<std::vector<std::size_t>> index_tuples(const std::vector<int> &weights, int arity, int combined,
                                                   const SuiteOptions &opt)
{
    const std::size_t n = weights.size();
    std::vector<std::vector<std::size_t>> out;
    if (n == 0) {
        return out;
    }
    if (opt.sample > 0) {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t s = 0; s < opt.sample; ++s) {
            std::vector<std::size_t> t(static_cast<std::size_t>(arity));
            for (auto &x : t) {
                x = pick(rng);
            }
            out.push_back(std::move(t));
        }
        return out;
    }
    std::vector<std::size_t> t;
    std::function<void(int)> extend = [&](int budget) {
        if (t.size() == static_cast<std::size_t>(arity)) {
            out.push_back(t);
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (weights[i] <= budget) {
                t.push_back(i);
                extend(budget - weights[i]);
                t.pop_back();
            }
        }
    };
    extend(combined);
    return out;
}

template <typename A>
std::vector<typename A::Element> as_elements(const std::vector<typename A::Key> &keys)
{
    std::vector<typename A::Element> out;
    out.reserve(keys.size());
    for (const auto &k : keys) {
        out.push_back(A::Element::term(k));
    }
    return out;
}

/// Vertex algebra axioms on basis tuples of any implementation.
template <VertexAlgebra A>
void vertex_axioms(ValidationReport &acc, const A &alg, const std::vector<typename A::Element> &basis,
                   const std::vector<int> &weights, std::string_view suite, int window, const SuiteOptions &opt,
                   const std::string &prefix)
{
    const Window w{-window, window};
    const bool all = suite == "all";
    if (all || suite == "jacobi") {
        const auto triples = index_tuples(weights, 3, opt.max_weight, opt);
        stage(acc, [&] {
            return parallel_fold(triples.size(), opt.threads, [&](std::size_t i) {
                const auto &t = triples[i];
                return single(check_jacobi(alg, basis[t[0]], basis[t[1]], basis[t[2]], window));
            });
        }, prefix);
        stage(acc, [&] {
            return parallel_fold(basis.size(), opt.threads, [&](std::size_t i) {
                return single(check_vacuum(alg, basis[i], w));
            });
        }, prefix);
        const auto pairs = index_tuples(weights, 2, opt.max_weight, opt);
        stage(acc, [&] {
            return parallel_fold(pairs.size(), opt.threads, [&](std::size_t i) {
                return single(check_d_bracket(alg, basis[pairs[i][0]], basis[pairs[i][1]], w));
            });
        }, prefix);
    }
    if (all || suite == "skew") {
        const auto pairs = index_tuples(weights, 2, opt.max_weight, opt);
        stage(acc, [&] {
            return parallel_fold(pairs.size(), opt.threads, [&](std::size_t i) {
                return single(check_skew_symmetry(alg, basis[pairs[i][0]], basis[pairs[i][1]], w));
            });
        }, prefix);
    }
    if (all || suite == "commutator") {
        const auto triples = index_tuples(weights, 3, opt.max_weight, opt);
        stage(acc, [&] {
            return parallel_fold(triples.size(), opt.threads, [&](std::size_t i) {
                const auto &t = triples[i];
                return single(check_commutator_formula(alg, basis[t[0]], basis[t[1]], basis[t[2]], w, w));
            });
        }, prefix);
    }
}

bool is_presentation_suite(std::string_view s)
{
    return s == "validate" || s == "jacobi" || s == "skew" || s == "commutator" || s == "coalgebra" || s == "all";
}

/// Number of nonzero D^d g of the given weight, torsion g counted when k >= 1.
std::size_t vla_dimension(const VlaPresentation &p, int weight, int torsion_bound)
{
    std::size_t n = 0;
    for (const auto &g : p.generators()) {
        if (g.torsion) {
            n += (torsion_bound >= 1 && g.weight == weight) ? 1 : 0;
        } else {
            n += (weight >= g.weight) ? 1 : 0;
        }
    }
    return n;
}

void coalgebra_suite(ValidationReport &acc, const EnvelopingAlgebra &V, const SuiteOptions &opt)
{
    const auto keys = V.basis_up_to(opt.max_weight, opt.torsion_bound);
    const auto fmt = [&](const PbwWord &w) { return V.format_word(w); };
    stage(acc, [&] { return check_coalgebra_laws(V, keys, fmt, true, "coalgebra"); });
    stage(acc, [&] { return check_d_coideal(V, keys); });
    std::vector<int> weights;
    for (const auto &k : keys) {
        weights.push_back(V.word_weight(k));
    }
    const auto pairs = index_tuples(weights, 2, opt.max_weight, opt);
    stage(acc, [&] {
        return parallel_fold(pairs.size(), opt.threads, [&](std::size_t i) {
            ValidationReport r;
            const auto u = State::term(keys[pairs[i][0]]);
            const auto v = State::term(keys[pairs[i][1]]);
            for (int n = -opt.mode_window; n <= opt.mode_window; ++n) {
                fold_into(r, check_delta_morphism(V, u, n, v));
            }
            return r;
        });
    });
    stage(acc, [&] {
        CheckResult res("coalgebra/primitives", "P(V_C) = C");
        const auto &p = V.presentation();
        for (int wt = 0; wt <= opt.max_weight; ++wt) {
            const auto prim = primitive_subspace(V, V.graded_basis(wt, opt.torsion_bound), V.vacuum());
            const std::size_t expected = vla_dimension(p, wt, opt.torsion_bound);
            res.record(prim.size() == expected, [&] {
                return "weight " + std::to_string(wt) + ": dim P = " + std::to_string(prim.size()) + ", dim C = " +
                       std::to_string(expected);
            });
        }
        for (GenId g = 0; g < p.size(); ++g) {
            const int top = p.is_torsion(g) ? 0 : opt.max_weight - p.spec(g).weight;
            if (p.is_torsion(g) && opt.torsion_bound < 1) {
                continue;
            }
            for (int d = 0; d <= top; ++d) {
                const auto x = V.from_vla(p.generator(g, d));
                res.record(is_primitive(V, x, V.vacuum()), [&] { return V.format(x) + " is not primitive"; });
            }
        }
        return single(std::move(res));
    });
}

} // namespace

ValidationReport run_presentation_suite(const VlaPresentation &p, std::string_view suite, const SuiteOptions &opt)
{
    if (!is_presentation_suite(suite)) {
        throw std::invalid_argument("suite '" + std::string(suite) + "' needs a construction file");
    }
    ValidationReport acc;
    stage(acc, [&] { return validate_presentation(p); }, "vla/");
    stage(acc, [&] { return check_lie_axioms(p, opt.mode_window); }, "current/");
    if (!acc.passed() || suite == "validate") {
        return finish(std::move(acc));
    }
    EnvelopingAlgebra V(p);
    const auto keys = V.basis_up_to(opt.max_weight, opt.torsion_bound);
    std::vector<int> weights;
    for (const auto &k : keys) {
        weights.push_back(V.word_weight(k));
    }
    vertex_axioms(acc, V, as_elements<EnvelopingAlgebra>(keys), weights, suite, opt.mode_window, opt, "va/");
    if (suite == "all" || suite == "coalgebra") {
        coalgebra_suite(acc, V, opt);
    }
    return finish(std::move(acc));
}

namespace
{

// Constructions live on much larger bases (a copy of V per α), so their
// vertex axioms use capped bounds.
constexpr int construction_weight_cap = 2;
constexpr int construction_alpha_cap = 1;
constexpr int construction_window_cap = 2;

void tensor_phi_suite(ValidationReport &acc, const VlaPresentation &p, const SemigroupL &L, const PhiMap &phi,
                      const SuiteOptions &opt)
{
    stage(acc, [&] { return check_phi_central(p, phi); }, "tensor-phi/");
    if (!acc.passed()) {
        return;
    }
    EnvelopingAlgebra V(p);
    TensorPhiAlgebra T(V, L, phi);
    const int wt = std::min(opt.max_weight, construction_weight_cap);
    const int ab = std::min(opt.alpha_bound, construction_alpha_cap);
    const int win = std::min(opt.mode_window, construction_window_cap);
    const auto keys = T.basis(wt, opt.torsion_bound, ab);
    std::vector<int> weights;
    for (const auto &k : keys) {
        weights.push_back(V.word_weight(k.first));
    }
    SuiteOptions capped = opt;
    capped.max_weight = wt;
    vertex_axioms(acc, T, as_elements<TensorPhiAlgebra>(keys), weights, "all", win, capped, "tensor-phi/va/");

    const auto fmt = [&](const TensorPhiKey &k) { return T.format_key(k); };
    const auto big = T.basis(opt.max_weight, opt.torsion_bound, opt.alpha_bound);
    stage(acc, [&] { return check_coalgebra_laws(T, big, fmt, true, "coalgebra"); }, "tensor-phi/");

    std::vector<TensorPhiState> groups;
    for (const auto &a : L.elements(opt.alpha_bound)) {
        groups.push_back(T.group_element(a));
    }
    const Window w{-win, win};
    stage(acc, [&] { return check_components(T, keys, groups, w); }, "tensor-phi/");
    stage(acc, [&] {
        std::vector<TensorPhiState> samples;
        for (const auto &k : T.basis(wt, opt.torsion_bound, 0)) {
            samples.push_back(TensorPhiState::term(k));
        }
        return check_group_like_semigroup(T, groups, samples, opt.mode_window, w);
    }, "tensor-phi/");
    stage(acc, [&] {
        // Weight-0 keys in chunks the brute-force scan accepts; each e^α in a
        // chunk must be found and nothing else.
        std::vector<TensorPhiKey> zero;
        for (const auto &k : big) {
            if (V.word_weight(k.first) == 0) {
                zero.push_back(k);
            }
        }
        CheckResult res("group-likes/scan", "G(V ⊗_φ C[L]) = G(V) × L");
        for (std::size_t i = 0; i < zero.size(); i += group_like_scan_limit) {
            std::vector<TensorPhiState> chunk;
            std::size_t expected = 0;
            for (std::size_t j = i; j < std::min(zero.size(), i + group_like_scan_limit); ++j) {
                chunk.push_back(TensorPhiState::term(zero[j]));
                expected += zero[j].first.empty() ? 1 : 0;
            }
            const auto scan = scan_group_likes(T, chunk);
            res.record(scan.group_like_count == expected, [&] {
                return "chunk at " + T.format_key(zero[i]) + ": found " + std::to_string(scan.group_like_count) +
                       ", expected " + std::to_string(expected);
            });
        }
        return single(std::move(res));
    }, "tensor-phi/");
    stage(acc, [&] {
        // E⁻ conjugation for each direction's φ, on low-weight states of V.
        std::vector<State> targets;
        for (const auto &k : V.basis_up_to(2, opt.torsion_bound)) {
            targets.push_back(State::term(k));
        }
        ValidationReport r;
        for (int i = 0; i < L.rank; ++i) {
            const State a = T.phi_state(L.basis(i));
            for (const auto &t : targets) {
                fold_into(r, single(check_eminus_conjugation(V, a, t, targets, 3)));
            }
        }
        return r;
    }, "tensor-phi/");
}

void bl_suite(ValidationReport &acc, const SemigroupL &L, const SuiteOptions &opt)
{
    DiffBialgebra B(L);
    const int wt = std::min(opt.max_weight, 3);
    stage(acc, [&] { return check_bl_bialgebra(B, wt, opt.alpha_bound); });
    stage(acc, [&] {
        return check_bl_equals_tensor_phi(L, wt, std::min(opt.alpha_bound, 2), Window{-opt.mode_window, opt.mode_window});
    });
    std::vector<DiffElement> groups;
    for (const auto &a : L.elements(opt.alpha_bound)) {
        groups.push_back(B.e(a));
    }
    const Window w{-opt.mode_window, opt.mode_window};
    const auto keys = B.basis(std::min(wt, 2), std::min(opt.alpha_bound, 1));
    stage(acc, [&] { return check_components(B, keys, groups, w); }, "bl/");
    stage(acc, [&] {
        return check_group_like_semigroup(B, groups, as_elements<DiffBialgebra>(B.basis(2, 0)), opt.mode_window, w);
    }, "bl/");
}

bool is_abelian_of_rank(const VlaPresentation &p, int rank)
{
    if (p.size() != static_cast<std::size_t>(rank) || !p.products().empty()) {
        return false;
    }
    return std::all_of(p.generators().begin(), p.generators().end(),
                       [](const GeneratorSpec &g) { return !g.torsion && g.weight == 1; });
}

void morphism_suite(ValidationReport &acc, const VlaPresentation &p, const SemigroupL &L,
                    const std::optional<MorphismSpec> &spec, const SuiteOptions &opt)
{
    DiffBialgebra B(L);
    std::vector<DiffElement> images;
    if (spec && !spec->images.empty()) {
        for (const auto &s : spec->images) {
            images.push_back(B.parse(s));
        }
    } else if (is_abelian_of_rank(p, L.rank)) {
        for (int i = 0; i < L.rank; ++i) {
            images.push_back(B.h(i, 1));
        }
    } else {
        throw std::invalid_argument("morphism suite: give \"morphism\": {\"images\": [...]} for this presentation");
    }
    if (images.size() != p.size()) {
        throw std::invalid_argument("morphism suite: expected " + std::to_string(p.size()) + " images");
    }
    EnvelopingAlgebra V(p);
    const int wt = std::min(opt.max_weight, 3);
    stage(acc, [&] {
        return induced_vertex_morphism(V, B, images, wt, opt.torsion_bound, Window{-opt.mode_window, opt.mode_window})
            .report;
    });

    std::vector<Alpha> psi;
    std::vector<DiffElement> phi_b;
    if (spec && !spec->psi.empty()) {
        psi = spec->psi;
        for (const auto &s : spec->phi_b) {
            phi_b.push_back(B.parse(s));
        }
    } else {
        for (int i = 0; i < L.rank; ++i) {
            psi.push_back(L.basis(i));
            phi_b.push_back(B.h(i, 1));
        }
    }
    stage(acc, [&] { return extend_universal_morphism(B, B, psi, phi_b, wt, opt.alpha_bound).report; });
}

} // namespace

ValidationReport run_construction_suite(const VlaPresentation &p, const SemigroupL &L, const PhiMap &phi,
                                        const std::optional<MorphismSpec> &morphism, std::string_view suite,
                                        const SuiteOptions &opt)
{
    const bool all = suite == "all";
    if (!all && suite != "tensor-phi" && suite != "bl" && suite != "morphism") {
        return run_presentation_suite(p, suite, opt);
    }
    ValidationReport acc;
    stage(acc, [&] { return validate_presentation(p); }, "vla/");
    if (!acc.passed()) {
        return finish(std::move(acc));
    }
    if (all) {
        fold_into(acc, run_presentation_suite(p, "all", opt));
    }
    if (all || suite == "tensor-phi") {
        tensor_phi_suite(acc, p, L, phi, opt);
    }
    if (all || suite == "bl") {
        bl_suite(acc, L, opt);
    }
    if (all || suite == "morphism") {
        morphism_suite(acc, p, L, morphism, opt);
    }
    return finish(std::move(acc));
}

std::vector<DimsRow> dims_table(const EnvelopingAlgebra &V, int max_weight, int torsion_bound)
{
    std::vector<DimsRow> out;
    for (int wt = 0; wt <= max_weight; ++wt) {
        const auto basis = V.graded_basis(wt, torsion_bound);
        out.push_back({wt, basis.size(), primitive_subspace(V, basis, V.vacuum()).size()});
    }
    return out;
}

} // namespace vk
