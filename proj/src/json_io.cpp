#include <vertexkernel/json_io.hpp>

#include <fstream>
#include <sstream>

namespace vk
{

namespace
{

const Json &member(const Json &j, const char *key, const std::string &where)
{
    if (!j.is_object() || !j.contains(key)) {
        throw MalformedInput(where + ": missing field '" + key + "'");
    }
    return j.at(key);
}

Rational coeff_from_json(const Json &j, const std::string &where)
{
    try {
        if (j.is_string()) {
            return parse_rational(j.get<std::string>());
        }
        if (j.is_number_integer()) {
            return Rational(j.get<long>());
        }
    } catch (const std::invalid_argument &) {
    }
    throw MalformedInput(where + ": coefficient must be a string \"p/q\" or an integer");
}

int int_from_json(const Json &j, const std::string &where)
{
    if (!j.is_number_integer()) {
        throw MalformedInput(where + ": expected an integer");
    }
    return j.get<int>();
}

std::string string_from_json(const Json &j, const std::string &where)
{
    if (!j.is_string()) {
        throw MalformedInput(where + ": expected a string");
    }
    return j.get<std::string>();
}

Json word_to_json(const VlaPresentation &p, const PbwWord &w)
{
    Json arr = Json::array();
    for (const auto &m : w) {
        arr.push_back(to_json(p, m));
    }
    return arr;
}

} // namespace

Json to_json(const VlaPresentation &p, const VlaElement &u)
{
    Json arr = Json::array();
    for (const auto &[t, c] : u) {
        arr.push_back({{"coeff", to_string(c)}, {"d", t.d}, {"gen", p.spec(t.gen).name}});
    }
    return arr;
}

VlaElement vla_element_from_json(const VlaPresentation &p, const Json &j)
{
    if (!j.is_array()) {
        throw MalformedInput("element: expected an array of terms");
    }
    VlaElement out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "term " + std::to_string(i);
        const Json &t = j[i];
        const std::string gen = string_from_json(member(t, "gen", where), where + "/gen");
        const int d = t.contains("d") ? int_from_json(t.at("d"), where + "/d") : 0;
        if (d < 0) {
            throw MalformedInput(where + ": negative d");
        }
        const auto id = p.find(gen);
        if (!id) {
            throw MalformedInput(where + ": unknown generator '" + gen + "'");
        }
        out.add(DTerm{*id, d}, coeff_from_json(member(t, "coeff", where), where + "/coeff"));
    }
    return p.normalize(out);
}

Json to_json(const VlaPresentation &p)
{
    Json gens = Json::array();
    for (const auto &g : p.generators()) {
        gens.push_back({{"name", g.name}, {"weight", g.weight}, {"torsion", g.torsion}});
    }
    Json prods = Json::array();
    for (const auto &[k, v] : p.products()) {
        prods.push_back({{"left", p.spec(k.left).name},
                         {"right", p.spec(k.right).name},
                         {"n", k.n},
                         {"result", to_json(p, v)}});
    }
    return {{"generators", gens}, {"products", prods}};
}

VlaPresentation presentation_from_json(const Json &j)
{
    const Json &gens = member(j, "generators", "presentation");
    if (!gens.is_array()) {
        throw MalformedInput("presentation/generators: expected an array");
    }
    std::vector<GeneratorSpec> specs;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string where = "generators/" + std::to_string(i);
        GeneratorSpec s;
        s.name = string_from_json(member(gens[i], "name", where), where + "/name");
        s.weight = int_from_json(member(gens[i], "weight", where), where + "/weight");
        if (gens[i].contains("torsion")) {
            if (!gens[i].at("torsion").is_boolean()) {
                throw MalformedInput(where + "/torsion: expected a boolean");
            }
            s.torsion = gens[i].at("torsion").get<bool>();
        }
        specs.push_back(std::move(s));
    }
    VlaPresentation p;
    try {
        p = VlaPresentation(std::move(specs));
    } catch (const MalformedPresentation &e) {
        throw MalformedInput(std::string("presentation: ") + e.what());
    }
    if (j.contains("products")) {
        const Json &prods = j.at("products");
        if (!prods.is_array()) {
            throw MalformedInput("presentation/products: expected an array");
        }
        for (std::size_t i = 0; i < prods.size(); ++i) {
            const std::string where = "products/" + std::to_string(i);
            const Json &e = prods[i];
            const std::string left = string_from_json(member(e, "left", where), where + "/left");
            const std::string right = string_from_json(member(e, "right", where), where + "/right");
            const int n = int_from_json(member(e, "n", where), where + "/n");
            VlaElement result;
            try {
                result = vla_element_from_json(p, member(e, "result", where));
                if (!p.find(left) || !p.find(right)) {
                    throw MalformedPresentation("unknown generator '" + (p.find(left) ? right : left) + "'");
                }
                if (n >= 0 && !p.table(p.id(left), p.id(right), n).empty()) {
                    throw MalformedPresentation("duplicate entry " + left + "_" + std::to_string(n) + right);
                }
                p.set_product(left, right, n, std::move(result));
            } catch (const MalformedPresentation &err) {
                throw MalformedInput(where + ": " + err.what());
            } catch (const MalformedInput &err) {
                throw MalformedInput(where + "/" + err.what());
            }
        }
    }
    return p;
}

Json to_json(const VlaPresentation &p, const Mode &m)
{
    return {{"gen", p.spec(m.gen).name}, {"n", m.n}};
}

Mode mode_from_json(const VlaPresentation &p, const Json &j)
{
    const std::string gen = string_from_json(member(j, "gen", "mode"), "mode/gen");
    const auto id = p.find(gen);
    if (!id) {
        throw MalformedInput("mode: unknown generator '" + gen + "'");
    }
    return make_mode(p, *id, int_from_json(member(j, "n", "mode"), "mode/n"));
}

Json to_json(const EnvelopingAlgebra &V, const State &v)
{
    Json arr = Json::array();
    for (const auto &[w, c] : v) {
        arr.push_back({{"coeff", to_string(c)}, {"word", word_to_json(V.presentation(), w)}});
    }
    return arr;
}

State state_from_json(const EnvelopingAlgebra &V, const Json &j)
{
    if (!j.is_array()) {
        throw MalformedInput("state: expected an array of terms");
    }
    State out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "state/" + std::to_string(i);
        const Json &word = member(j[i], "word", where);
        if (!word.is_array()) {
            throw MalformedInput(where + "/word: expected an array");
        }
        std::vector<Mode> modes;
        for (const auto &m : word) {
            modes.push_back(mode_from_json(V.presentation(), m));
        }
        out.add_scaled(V.straighten(modes), coeff_from_json(member(j[i], "coeff", where), where + "/coeff"));
    }
    return out;
}

Json to_json(const EnvelopingAlgebra &V, const TensorState &t)
{
    Json arr = Json::array();
    for (const auto &[k, c] : t) {
        arr.push_back({{"coeff", to_string(c)},
                       {"left", word_to_json(V.presentation(), k.first)},
                       {"right", word_to_json(V.presentation(), k.second)}});
    }
    return arr;
}

Json to_json(const ValidationReport &r, bool with_timings)
{
    Json checks = Json::array();
    for (const auto &c : r.checks()) {
        Json e = {{"id", c.id},
                  {"formula", c.formula},
                  {"status", c.passed ? "pass" : (c.informational ? "info" : "fail")},
                  {"instances", c.instances}};
        if (!c.witness.empty()) {
            e["witness"] = c.witness;
        }
        if (!c.note.empty()) {
            e["note"] = c.note;
        }
        if (with_timings) {
            e["seconds"] = c.seconds;
        }
        checks.push_back(std::move(e));
    }
    return {{"overall", r.passed() ? "pass" : "fail"}, {"checks", checks}};
}

bool is_construction(const Json &j)
{
    return j.is_object() && j.contains("semigroup");
}

ConstructionSpec construction_from_json(const Json &j, const std::filesystem::path &base_dir)
{
    const Json &sg = member(j, "semigroup", "construction");
    SemigroupL L;
    L.rank = int_from_json(member(sg, "rank", "semigroup"), "semigroup/rank");
    if (L.rank < 1) {
        throw MalformedInput("semigroup/rank: must be positive");
    }
    if (sg.contains("group")) {
        if (!sg.at("group").is_boolean()) {
            throw MalformedInput("semigroup/group: expected a boolean");
        }
        L.group = sg.at("group").get<bool>();
    }
    VlaPresentation p = builtin_abelian(L.rank);
    if (j.contains("presentation")) {
        const Json &pj = j.at("presentation");
        if (pj.is_string()) {
            p = load_presentation(pj.get<std::string>(), base_dir);
        } else {
            p = presentation_from_json(pj);
        }
    }
    PhiMap phi;
    const Json &targets = member(j, "phi", "construction");
    if (!targets.is_array() || targets.size() != static_cast<std::size_t>(L.rank)) {
        throw MalformedInput("phi: expected one target per semigroup direction");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        try {
            phi.targets.push_back(vla_element_from_json(p, targets[i]));
        } catch (const MalformedInput &e) {
            throw MalformedInput("phi/" + std::to_string(i) + "/" + e.what());
        }
    }
    std::optional<MorphismSpec> morphism;
    if (j.contains("morphism")) {
        const Json &m = j.at("morphism");
        if (!m.is_object()) {
            throw MalformedInput("morphism: expected an object");
        }
        MorphismSpec spec;
        auto strings = [&](const char *key) {
            std::vector<std::string> out;
            if (m.contains(key)) {
                const Json &arr = m.at(key);
                if (!arr.is_array()) {
                    throw MalformedInput(std::string("morphism/") + key + ": expected an array");
                }
                for (const auto &x : arr) {
                    out.push_back(string_from_json(x, std::string("morphism/") + key));
                }
            }
            return out;
        };
        spec.images = strings("images");
        spec.phi_b = strings("phi_b");
        if (m.contains("psi")) {
            const Json &arr = m.at("psi");
            if (!arr.is_array()) {
                throw MalformedInput("morphism/psi: expected an array of integer vectors");
            }
            for (const auto &row : arr) {
                if (!row.is_array()) {
                    throw MalformedInput("morphism/psi: expected an array of integer vectors");
                }
                Alpha a;
                for (const auto &x : row) {
                    a.push_back(int_from_json(x, "morphism/psi"));
                }
                spec.psi.push_back(std::move(a));
            }
        }
        if (spec.psi.size() != spec.phi_b.size()) {
            throw MalformedInput("morphism: psi and phi_b must have the same length");
        }
        morphism = std::move(spec);
    }
    return {std::move(p), L, std::move(phi), std::move(morphism)};
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw MalformedInput("cannot open '" + path.string() + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_json(ss.str());
    } catch (const MalformedInput &e) {
        throw MalformedInput(path.string() + ": " + e.what());
    }
}

VlaPresentation load_presentation(const std::string &spec, const std::filesystem::path &base_dir)
{
    constexpr std::string_view prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) {
        auto p = builtin_by_name(std::string_view(spec).substr(prefix.size()));
        if (!p) {
            throw MalformedInput("unknown builtin '" + spec + "'");
        }
        return *p;
    }
    std::filesystem::path path(spec);
    if (path.is_relative() && !base_dir.empty()) {
        path = base_dir / path;
    }
    return presentation_from_json(read_json_file(path));
}

} // namespace vk
