// JSON encodings. Rationals are strings "p/q" (or "p").
//
//   presentation  {"generators":[{"name","weight","torsion"}],
//                  "products":[{"left","right","n","result":[{"coeff","d","gen"}]}]}
//   mode          {"gen":"L","n":-3}
//   state         [{"coeff","word":[mode...]}]
//   tensor        [{"coeff","left":[mode...],"right":[mode...]}]
//   construction  {"semigroup":{"rank","group"},"phi":[[term...]...],
//                  "presentation": object | path | builtin name,
//                  "morphism": {"images":[text...],"psi":[[int...]...],"phi_b":[text...]}}

#ifndef VERTEXKERNEL_JSON_IO_HPP
#define VERTEXKERNEL_JSON_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include <vertexkernel/coalgebra.hpp>
#include <vertexkernel/constructions.hpp>
#include <vertexkernel/enveloping.hpp>
#include <vertexkernel/report.hpp>
#include <vertexkernel/suites.hpp>
#include <vertexkernel/vla.hpp>

namespace vk
{

using Json = nlohmann::ordered_json;

/// Structural problems in an input document; carries a JSON-pointer-like location.
class MalformedInput : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const VlaPresentation &p);
VlaPresentation presentation_from_json(const Json &j);

Json to_json(const VlaPresentation &p, const VlaElement &u);
VlaElement vla_element_from_json(const VlaPresentation &p, const Json &j);

Json to_json(const VlaPresentation &p, const Mode &m);
Mode mode_from_json(const VlaPresentation &p, const Json &j);

Json to_json(const EnvelopingAlgebra &V, const State &v);
State state_from_json(const EnvelopingAlgebra &V, const Json &j);

Json to_json(const EnvelopingAlgebra &V, const TensorState &t);

Json to_json(const ValidationReport &r, bool with_timings = false);

struct ConstructionSpec {
    VlaPresentation presentation;
    SemigroupL semigroup;
    PhiMap phi;
    std::optional<MorphismSpec> morphism;
};

/// "presentation" defaults to the abelian algebra of the semigroup's rank.
ConstructionSpec construction_from_json(const Json &j, const std::filesystem::path &base_dir = {});
bool is_construction(const Json &j);

/// Parses text; throws MalformedInput with the parser's position on error.
Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path &path);

/// "builtin:virasoro", "builtin:heisenberg:2", or a path to a JSON file.
VlaPresentation load_presentation(const std::string &spec, const std::filesystem::path &base_dir = {});

} // namespace vk

#endif
