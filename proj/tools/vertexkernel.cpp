// vertexkernel: batch front end. Exit codes: 0 pass, 1 a check failed,
// 2 malformed or unsupported input.

#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <vertexkernel/coalgebra.hpp>
#include <vertexkernel/constructions.hpp>
#include <vertexkernel/current.hpp>
#include <vertexkernel/enveloping.hpp>
#include <vertexkernel/json_io.hpp>
#include <vertexkernel/suites.hpp>
#include <vertexkernel/vla.hpp>

namespace
{

using namespace vk;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_malformed = 2;

struct Common {
    std::string input;
    std::string format = "text";
    bool timings = false;
};

struct Loaded {
    VlaPresentation presentation;
    std::optional<ConstructionSpec> construction;
};

Loaded load_input(const std::string &input)
{
    if (input.rfind("builtin:", 0) == 0) {
        return {load_presentation(input), std::nullopt};
    }
    const std::filesystem::path path(input);
    const Json j = read_json_file(path);
    if (is_construction(j)) {
        auto spec = construction_from_json(j, path.parent_path());
        auto p = spec.presentation;
        return {std::move(p), std::move(spec)};
    }
    return {presentation_from_json(j), std::nullopt};
}

int emit_report(const ValidationReport &r, const Common &c)
{
    if (c.format == "json") {
        std::cout << to_json(r, c.timings).dump(2) << '\n';
    } else {
        std::cout << r.to_text(c.timings);
    }
    return r.passed() ? exit_pass : exit_fail;
}

int cmd_validate(const Common &c, const SuiteOptions &opt)
{
    const Loaded in = load_input(c.input);
    return emit_report(run_presentation_suite(in.presentation, "validate", opt), c);
}

int cmd_check(const Common &c, const std::string &suite, const SuiteOptions &opt)
{
    const Loaded in = load_input(c.input);
    if (in.construction) {
        const auto &s = *in.construction;
        return emit_report(run_construction_suite(s.presentation, s.semigroup, s.phi, s.morphism, suite, opt), c);
    }
    return emit_report(run_presentation_suite(in.presentation, suite, opt), c);
}

/// A generator-level element ("L", "2·DL") becomes its state; text with a
/// ket is parsed as a state directly.
State parse_operand(const EnvelopingAlgebra &V, const std::string &text)
{
    if (text.find('|') != std::string::npos) {
        return V.parse(text);
    }
    return V.from_vla(V.presentation().parse_element(text));
}

int parse_int(const std::string &text)
{
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    return v;
}

int cmd_compute(const Common &c, const std::vector<std::string> &args)
{
    if (args.empty()) {
        throw std::invalid_argument("compute: missing expression");
    }
    const Loaded in = load_input(c.input);
    const VlaPresentation &p = in.presentation;
    const std::string &what = args[0];
    auto need = [&](std::size_t n) {
        if (args.size() != n + 1) {
            throw std::invalid_argument("compute " + what + ": expected " + std::to_string(n) + " operands");
        }
    };
    std::string text;
    Json value;
    if (what == "product") {
        need(3);
        const auto u = p.parse_element(args[1]);
        const int n = parse_int(args[2]);
        const auto v = p.parse_element(args[3]);
        if (n < 0) {
            throw std::invalid_argument("product: n must be nonnegative");
        }
        const auto r = nth_product(p, u, n, v);
        text = p.format(r);
        value = to_json(p, r);
    } else if (what == "bracket") {
        need(2);
        const auto r = bracket(p, parse_mode(p, args[1]), parse_mode(p, args[2]));
        text = format_modes(p, r);
        value = Json::array();
        for (const auto &[m, q] : r) {
            value.push_back({{"coeff", to_string(q)}, {"mode", to_json(p, m)}});
        }
    } else {
        const EnvelopingAlgebra V(p);
        if (what == "delta") {
            need(1);
            const auto r = delta(V, V.parse(args[1]));
            text = format_tensor(V, r);
            value = to_json(V, r);
        } else if (what == "mode") {
            need(3);
            const auto r = V.mode(parse_operand(V, args[1]), parse_int(args[2]), parse_operand(V, args[3]));
            text = V.format(r);
            value = to_json(V, r);
        } else {
            throw std::invalid_argument("compute: unknown expression '" + what + "' (product|bracket|delta|mode)");
        }
    }
    if (c.format == "json") {
        Json out = {{"expression", args}, {"text", text}, {"value", value}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << text << '\n';
    }
    return exit_pass;
}

int cmd_dims(const Common &c, const SuiteOptions &opt)
{
    const Loaded in = load_input(c.input);
    const EnvelopingAlgebra V(in.presentation);
    const auto rows = dims_table(V, opt.max_weight, opt.torsion_bound);
    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto &r : rows) {
            arr.push_back({{"weight", r.weight}, {"dim", r.dim}, {"primitive_dim", r.primitive_dim}});
        }
        Json out = {{"torsion_bound", opt.torsion_bound}, {"rows", arr}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "weight  dim  primitive\n";
        for (const auto &r : rows) {
            std::cout << r.weight << "  " << r.dim << "  " << r.primitive_dim << '\n';
        }
    }
    return exit_pass;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact computations and property checks for vertex Lie algebras and their enveloping "
                 "vertex bialgebras"};
    app.require_subcommand(1);

    Common common;
    SuiteOptions opt;
    opt.threads = threads_from_env();
    std::string suite = "all";
    std::vector<std::string> expr;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("-i,--input", common.input, "presentation or construction JSON, or builtin:NAME")
            ->required();
        sub->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--timings", common.timings, "include per-check wall time");
    };
    auto add_bounds = [&](CLI::App *sub) {
        sub->add_option("--max-weight", opt.max_weight, "largest basis weight")->check(CLI::NonNegativeNumber);
        sub->add_option("--mode-window", opt.mode_window, "modes n in [-W, W]")->check(CLI::NonNegativeNumber);
        sub->add_option("--torsion-bound", opt.torsion_bound, "at most k torsion modes per basis word")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--alpha-bound", opt.alpha_bound, "semigroup elements with |α_i| <= A")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--sample", opt.sample, "check N random basis tuples instead of all");
        sub->add_option("--seed", opt.seed, "seed for --sample");
    };

    auto *validate = app.add_subcommand("validate", "check the axioms of a presentation");
    add_common(validate);
    validate->add_option("--mode-window", opt.mode_window, "modes n in [-W, W] for the Lie axioms")
        ->check(CLI::NonNegativeNumber);

    auto *compute = app.add_subcommand("compute", "evaluate product|bracket|delta|mode");
    add_common(compute);
    compute->add_option("expression", expr, "e.g. bracket L(3) L(-1)")->required();

    auto *check = app.add_subcommand("check", "run a check suite");
    add_common(check);
    add_bounds(check);
    check->add_option("--suite", suite, "suite to run")
        ->check(CLI::IsMember(std::vector<std::string>(std::begin(suite_names), std::end(suite_names))));

    auto *dims = app.add_subcommand("dims", "graded and primitive dimensions");
    add_common(dims);
    dims->add_option("--max-weight", opt.max_weight, "largest weight")->check(CLI::NonNegativeNumber);
    dims->add_option("--torsion-bound", opt.torsion_bound, "at most k torsion modes per word")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_pass : exit_malformed;
    }

    try {
        if (*validate) {
            return cmd_validate(common, opt);
        }
        if (*compute) {
            return cmd_compute(common, expr);
        }
        if (*check) {
            return cmd_check(common, suite, opt);
        }
        return cmd_dims(common, opt);
    } catch (const MalformedInput &e) {
        std::cerr << "malformed input: " << e.what() << '\n';
    } catch (const MalformedPresentation &e) {
        std::cerr << "malformed presentation: " << e.what() << '\n';
    } catch (const Unsupported &e) {
        std::cerr << "unsupported: " << e.what() << '\n';
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return exit_malformed;
}
