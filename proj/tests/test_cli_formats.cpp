#include <doctest.h>

#include "gradmod/corpus.hpp"
#include "gradmod/pipeline.hpp"

using namespace gradmod;

TEST_CASE("polynomial pretty printing") {
    CHECK(IntPoly{{4, 0, 6, -4, 1}}.str() == "4 + 6z^2 - 4z^3 + z^4");
    CHECK(IntPoly{{4, 3}}.str() == "4 + 3z");
    CHECK(IntPoly{}.str() == "0");
    CHECK(IntPoly{{-3, 1}}.str() == "-3 + z");
    CHECK(IntPoly{{0, 1}}.str() == "z");
    // the depth-zero row expands 3 + 4z + (1-z)^4
    IntPoly expanded = IntPoly{{3, 4}} + IntPoly::one_minus_z_pow(4);
    CHECK(expanded == IntPoly{{4, 0, 6, -4, 1}});
}

TEST_CASE("instance files round-trip through JSON") {
    for (const CorpusEntry& e : bundled_corpus()) {
        InstanceFile inst = instance_from_json_text(e.json);
        InstanceFile again = instance_from_json_text(instance_to_json_text(inst));
        CHECK(inst == again);
    }
}

TEST_CASE("instance validation errors") {
    CHECK_THROWS_AS(instance_from_json_text("{"), ParseError);
    CHECK_THROWS_AS(instance_from_json_text(R"({"label":"x"})"), ParseError);
    // ragged phi
    CHECK_THROWS_AS(instance_from_json_text(R"({
        "label": "bad", "variables": ["x"], "f": "x^2",
        "phi": [["x"], ["x", "x"]]})"),
                    ParseError);
    // unknown identifier inside an expression
    InstanceFile inst = instance_from_json_text(R"({
        "label": "bad", "variables": ["x", "y", "z", "t"], "f": "x^2*w",
        "phi": [["x"]]})");
    CHECK_THROWS_AS(instance_presentation(inst, 7), ParseError);
    // f of order < 2
    InstanceFile unit = instance_from_json_text(R"({
        "label": "bad", "variables": ["x", "y", "z", "t"], "f": "x",
        "phi": [["x"]]})");
    CHECK_THROWS_AS(instance_presentation(unit, 7), ValidationError);
}

TEST_CASE("reports round-trip through JSON") {
    PipelineOptions opt;
    opt.need_chain = false;
    PipelineResult res = run_pipeline(corpus_instance("ringA"), opt);
    std::string text = report_to_json_text(res);
    PipelineResult back = report_from_json_text(text);
    CHECK(res == back);
    // and the serialization is stable
    CHECK(report_to_json_text(back) == text);
}

TEST_CASE("table output lists the headline invariants") {
    PipelineOptions opt;
    opt.need_chain = false;
    PipelineResult res = run_pipeline(corpus_instance("ringA"), opt);
    std::string table = report_to_table(res);
    CHECK(table.find("ringA") != std::string::npos);
    CHECK(table.find("1 + z + z^2") != std::string::npos);
}
