#include "doctest.h"

#include <fstream>
#include <sstream>

#include "cringlab/commands.hpp"
#include "cringlab/registry.hpp"

using namespace cringlab;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* coalgebra_doc = R"({
  "schema": 1,
  "field": "rationals",
  "objects": [
    {"name": "C", "kind": "coalgebra", "basis": ["a", "b"],
     "comult": {"rows": 4, "cols": 2, "entries": [[0, 0, "1"], [3, 1, "1"]]},
     "counit": [[1, 1]]}
  ]
})";

std::string with_object(const std::string& object)
{
    std::string doc = coalgebra_doc;
    std::size_t at = doc.rfind(']');
    return doc.substr(0, at) + "  ," + object + "\n" + doc.substr(at);
}

}  // namespace

TEST_CASE("committed fixtures match the registry")
{
    for (const auto& f : fixture_list()) {
        CAPTURE(f.name);
        std::string text = emit(build_fixture(f.name));
        CHECK(read_file(std::string(CRINGLAB_FIXTURES_DIR) + "/" + f.name + ".json") == text);
    }
}

TEST_CASE("load and emit round trip")
{
    for (const auto& f : fixture_list()) {
        CAPTURE(f.name);
        Document built = build_fixture(f.name);
        std::string text = emit(built);
        Document loaded = parse_document(text, f.name);
        CHECK(emit(loaded) == text);
        CHECK(loaded.entries().size() == built.entries().size());
        CHECK(validate(loaded).ok() == validate(built).ok());
    }
}

TEST_CASE("dense and sparse matrices agree")
{
    Document doc = parse_document(coalgebra_doc);
    const Coalgebra& c = *doc.get<CoalgebraPtr>("C");
    CHECK(c.counit->at(0, 1) == Scalar(1));
    CHECK(check_coalgebra(c).ok());
    nlohmann::ordered_json dense = nlohmann::ordered_json::parse(R"([["1/2", 0], [-3, "2"]])");
    Matrix m = matrix_from_json(dense, Field::rationals(), "m");
    CHECK(m == Matrix::from_rows({{Scalar(1, 2), 0}, {-3, 2}}));
    CHECK(matrix_from_json(matrix_to_json(m), Field::rationals(), "m") == m);
    CHECK(matrix_from_json(dense, Field::prime(5), "m") == Matrix::from_rows({{3, 0}, {2, 2}}, Field::prime(5)));
}

TEST_CASE("field override reads a rational document over GF(2)")
{
    Document doc = parse_document(emit(build_fixture("h4")), "h4", Field::prime(2));
    CHECK(doc.field() == Field::prime(2));
    CHECK(to_json(doc)["objects"] == to_json(build_fixture("h4-gf2"))["objects"]);
}

TEST_CASE("malformed documents")
{
    CHECK_THROWS_AS(parse_document("{\"schema\": 1,\n \"field\": \"rationals\",\n \"objects\": [}"), ParseError);
    try {
        parse_document("{\"schema\": 1,\n \"objects\": [}");
        FAIL("expected a parse error");
    }
    catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("<input>:2:") == 0);
    }
    CHECK_THROWS_AS(parse_document(R"({"schema": 2, "field": "rationals", "objects": []})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"schema": 1, "field": "reals", "objects": []})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"schema": 1, "field": {"prime": 4}, "objects": []})"), ParseError);
    CHECK_THROWS_AS(parse_document(with_object(R"({"name": "X", "kind": "widget"})")), ParseError);
    CHECK_THROWS_AS(parse_document(with_object(R"({"name": "D", "kind": "coalgebra", "basis": ["d"]})")), ParseError);

    // 1/0 is not a scalar; floats are not exact.
    std::string zero_den = coalgebra_doc;
    zero_den.replace(zero_den.find("[3, 1, \"1\"]"), 11, "[3, 1, \"1/0\"]");
    CHECK_THROWS_AS(parse_document(zero_den), ParseError);
    std::string real = coalgebra_doc;
    real.replace(real.find("[3, 1, \"1\"]"), 11, "[3, 1, 0.5]");
    CHECK_THROWS_AS(parse_document(real), ParseError);

    // Wrong shapes.
    std::string short_comult = coalgebra_doc;
    short_comult.replace(short_comult.find("\"rows\": 4"), 9, "\"rows\": 3");
    CHECK_THROWS_AS(parse_document(short_comult), ShapeMismatch);
    std::string outside = coalgebra_doc;
    outside.replace(outside.find("[3, 1, \"1\"]"), 11, "[4, 1, \"1\"]");
    CHECK_THROWS_AS(parse_document(outside), ShapeMismatch);
    CHECK_THROWS_AS(parse_document(with_object(R"({"name": "M", "kind": "comodule", "basis": ["m"],
        "right": {"coalgebra": "C", "coaction": [[1, 0, 0]]}})")),
                    ShapeMismatch);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::ordered_json::parse("[[1, 2], [3]]"), Field::rationals(), "m"), ShapeMismatch);

    // References.
    CHECK_THROWS_AS(parse_document(with_object(R"({"name": "M", "kind": "comodule", "basis": ["m"],
        "right": {"coalgebra": "D", "coaction": [[1], [0]]}})")),
                    UnknownReference);
    CHECK_THROWS_AS(parse_document(with_object(R"({"name": "f", "kind": "map", "source": "C", "target": "C",
        "matrix": [[1, 0], [0, 1]]}, {"name": "M", "kind": "comodule", "basis": ["m"],
        "right": {"coalgebra": "f", "coaction": [[1], [0]]}})")),
                    UnknownReference);

    // Duplicate names and a valid extension.
    CHECK_THROWS_AS(parse_document(with_object(R"({"name": "C", "kind": "comodule", "basis": ["m"]})")), ParseError);
    Document ok = parse_document(with_object(R"({"name": "M", "kind": "comodule", "basis": ["m"],
        "right": {"coalgebra": "C", "coaction": [[1], [0]]}})"));
    CHECK(validate(ok).ok());
}

TEST_CASE("commands on fixtures")
{
    Report h4 = run_command("kts", build_fixture("h4"), {});
    CHECK(h4.ok());
    CHECK(h4.value("dim B") == "2");
    CHECK(h4.value("certificate") == "separable");

    Report tri = run_command("galois", build_fixture("triangular"), {"full", "M_triangular"});
    CHECK(tri.ok());
    CHECK(tri.value("galois") == "false");
    CHECK(tri.passed("ChiCotensorAgrees"));

    Report full = run_command("galois", build_fixture("grouplike3-full"), {});
    CHECK(full.ok());
    CHECK(full.value("galois") == "true");

    Report cot = run_command("cotensor", build_fixture("matrix-coalgebra2"), {"V", "N"});
    CHECK(cot.ok());
    CHECK(cot.value("dim") == "2");

    CHECK(run_command("connection", build_fixture("connection-gf2"), {}).value("subcoideals") == "15");
    CHECK(run_command("build-cring", build_fixture("h4"), {}).value("dim A") == "8");
    CHECK(run_command("we-check", build_fixture("weak-gf3"), {}).ok());
    CHECK_FALSE(run_command("kts", build_fixture("flip-dual-numbers"), {}).ok());
    CHECK_FALSE(run_command("check", build_fixture("weak-gf3"), {}).ok());
    CHECK(run_command("check", build_fixture("weak-gf3"), {"psi"}).ok());

    CHECK_THROWS_AS(run_command("kts", build_fixture("h4"), {"psi", "A"}), UnknownReference);
    CHECK_THROWS_AS(run_command("galois", build_fixture("h4"), {}), UnknownReference);
    CHECK_THROWS_AS(run_command("frobnicate", build_fixture("h4"), {}), std::invalid_argument);
    CHECK_THROWS_AS(build_fixture("nope"), UnknownReference);
}
