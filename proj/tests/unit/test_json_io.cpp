#include <doctest.h>

#include <vertexkernel/json_io.hpp>

using namespace vk;

TEST_CASE("presentation JSON round trip")
{
    for (const auto &p : {builtin_virasoro(), builtin_heisenberg(2), builtin_abelian(3)}) {
        const Json j = to_json(p);
        const auto q = presentation_from_json(parse_json(j.dump()));
        CHECK(to_json(q) == j);
        CHECK(q.products().size() == p.products().size());
    }
}

TEST_CASE("shipped presentation files load")
{
    const auto vir = load_presentation("data/virasoro.json");
    CHECK(to_json(vir) == to_json(builtin_virasoro()));
    CHECK(load_presentation("builtin:heisenberg:2").size() == 3);
    CHECK_THROWS_AS(load_presentation("builtin:nope"), MalformedInput);
    CHECK_THROWS_AS(load_presentation("data/truncated.json"), MalformedInput);
    CHECK_THROWS_AS(load_presentation("data/does-not-exist.json"), MalformedInput);
}

TEST_CASE("malformed presentations name the location")
{
    auto expect_error = [](const char *text, const char *fragment) {
        CAPTURE(text);
        try {
            presentation_from_json(parse_json(text));
            FAIL("accepted");
        } catch (const MalformedInput &e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_error(R"({"products": []})", "generators");
    expect_error(R"({"generators": [{"name": "L"}]})", "weight");
    expect_error(R"({"generators": [{"name": "L", "weight": 2}],
                     "products": [{"left": "L", "right": "X", "n": 0, "result": []}]})",
                 "products/0");
    expect_error(R"({"generators": [{"name": "L", "weight": 2}],
                     "products": [{"left": "L", "right": "L", "n": 1,
                                   "result": [{"gen": "L", "d": 0, "coeff": "1/0"}]}]})",
                 "coeff");
    expect_error(R"({"generators": [{"name": "L", "weight": 2}],
                     "products": [{"left": "L", "right": "L", "n": -1, "result": []}]})",
                 "products/0");
    CHECK_THROWS_AS(parse_json("{"), MalformedInput);
}

TEST_CASE("element, mode and state JSON")
{
    const auto p = builtin_virasoro();
    const auto u = p.parse_element("2·DL + 1/2·c");
    CHECK(vla_element_from_json(p, to_json(p, u)) == u);
    const auto m = parse_mode(p, "L(-3)");
    CHECK(mode_from_json(p, to_json(p, m)) == m);
    const EnvelopingAlgebra V(builtin_virasoro());
    const auto v = V.parse("L(-2)L(-1)|0⟩ - 1/3·c(-1)|0⟩");
    CHECK(state_from_json(V, to_json(V, v)) == v);
    CHECK_THROWS_AS(state_from_json(V, Json::object()), MalformedInput);
}

TEST_CASE("report JSON")
{
    ValidationReport r;
    CheckResult ok("a", "x = x");
    ok.record(true, [] { return std::string(); });
    CheckResult bad("b", "x = y");
    bad.fail("x=1");
    r.add(ok);
    r.add(bad);
    const Json j = to_json(r);
    CHECK(j["overall"] == "fail");
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][1]["witness"] == "x=1");
    CHECK_FALSE(j["checks"][0].contains("seconds"));
    CHECK(to_json(r, true)["checks"][0].contains("seconds"));
}

TEST_CASE("construction files")
{
    const auto spec = construction_from_json(read_json_file("data/bl_rank1.json"), "data");
    CHECK(spec.semigroup.rank == 1);
    CHECK(spec.phi.targets.size() == 1);
    REQUIRE(spec.morphism.has_value());
    CHECK(spec.morphism->psi.size() == 1);
    const auto tp = construction_from_json(read_json_file("data/tensor_phi_heisenberg.json"), "data");
    CHECK(tp.presentation.size() == 2);
    CHECK_THROWS_AS(construction_from_json(parse_json(R"({"semigroup": {"rank": 1}, "phi": []})")), MalformedInput);
    CHECK_THROWS_AS(construction_from_json(parse_json(R"({"semigroup": {"rank": 0}, "phi": []})")), MalformedInput);
    CHECK_THROWS_AS(construction_from_json(parse_json(R"({"semigroup": {"rank": 1},
        "phi": [[{"gen": "h", "coeff": 1}]], "morphism": {"psi": [[1]]}})")),
                    MalformedInput);
}
