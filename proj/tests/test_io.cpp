#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "jpdom/io.hpp"
#include "jpdom/suites.hpp"
#include "jpdom/svg.hpp"

using namespace jpdom;

TEST_CASE("majorant json round trip is exact") {
    const RegularMajorant h({0.1, 0.25, 1.0}, {0.3, 0.5, 0.9});
    const RegularMajorant back = majorant_from_json(majorant_to_json(h));
    REQUIRE(back.breakpoints().size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back.breakpoints()[i] == h.breakpoints()[i]);
        CHECK(back.values()[i] == h.values()[i]);
    }
    // serialized text parses back to the identical doubles
    const json j = json::parse(majorant_to_json(h).dump());
    const RegularMajorant reparsed = majorant_from_json(j);
    CHECK(reparsed(0.17) == h(0.17));
}

TEST_CASE("sequence json round trip") {
    const PositiveSequence rule = PositiveSequence::from_rule_name("one_over_log");
    const PositiveSequence r2 = sequence_from_json(sequence_to_json(rule));
    CHECK(r2.rule() == PositiveSequence::Rule::one_over_log);
    CHECK(r2.term(7) == rule.term(7));

    const PositiveSequence ex(std::vector<double>{0.9, 0.5, 0.30000000000000004});
    const PositiveSequence e2 = sequence_from_json(json::parse(sequence_to_json(ex).dump()));
    REQUIRE(e2.max_index() == 3);
    for (std::size_t n = 1; n <= 3; ++n) CHECK(e2.term(n) == ex.term(n));
}

TEST_CASE("arc set json round trip preserves gaps, stages, and metadata") {
    const ArcSet e({{0.5, 0.75, 1}, {2.0, 2.5, 2}, {6.0, 6.5, 1}});
    const json j = arcset_to_json(e);
    CHECK(j.contains("measure"));
    CHECK(j.contains("stages"));
    const ArcSet back = arcset_from_json(json::parse(j.dump()));
    REQUIRE(back.gaps().size() == e.gaps().size());
    for (std::size_t i = 0; i < e.gaps().size(); ++i) {
        CHECK(back.gaps()[i].start == e.gaps()[i].start);
        CHECK(back.gaps()[i].end == e.gaps()[i].end);
        CHECK(back.gaps()[i].stage == e.gaps()[i].stage);
    }
    CHECK(back.measure() == doctest::Approx(e.measure()).epsilon(1e-15));

    CHECK_THROWS_AS(arcset_from_json(json{{"gaps", "nope"}}), std::invalid_argument);
}

TEST_CASE("gap csv export") {
    const ArcSet e({{1.0, 1.5, 2}});
    const std::string csv = gaps_to_csv(e);
    CHECK(csv.find("index,start,end,length,stage") == 0);
    CHECK(csv.find("0,1,1.5,0.5,2") != std::string::npos);
}

TEST_CASE("double formatting is shortest-round-trip") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5e-300) == "-2.5e-300");
    CHECK(std::stod(format_double(std::numbers::pi)) == std::numbers::pi);
}

TEST_CASE("majorant loaders: builtin names, files, and failure modes") {
    CHECK(load_majorant_spec("sqrt")(0.25) == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(load_majorant_spec("const:0.3")(0.5) == doctest::Approx(0.3));
    CHECK(load_sequence_spec("one_over_n").term(4) == doctest::Approx(0.25));

    const char* path = "tmp_majorant_spec.json";
    {
        std::ofstream out(path);
        out << majorant_to_json(RegularMajorant({0.5, 1.0}, {0.2, 0.4})).dump();
    }
    CHECK(load_majorant_spec(path)(0.5) == doctest::Approx(0.2));
    std::remove(path);

    CHECK_THROWS_AS(load_majorant_spec("missing_file.json"), std::invalid_argument);
    CHECK_THROWS_AS(load_sequence_spec("missing_file.json"), std::invalid_argument);
}

TEST_CASE("svg renders: well-formed documents for representative inputs") {
    const PrivalovDomain plain(ArcSet{}, 0.1);
    const std::string disk = render_domain_svg(plain);
    CHECK(disk.find("<svg") != std::string::npos);
    CHECK(disk.rfind("</svg>\n") == disk.size() - 7);

    const RegularMajorant s = make_majorant("sqrt");
    const PrivalovDomain D(split_long_gaps(build_cantor_set(s, 3, std::numbers::pi), 0.1), 0.1);
    const std::string dom = render_domain_svg(D);
    CHECK(dom.find("path") != std::string::npos);
    CHECK(dom.size() > disk.size());

    const std::string map = render_mapping_svg(0.1, std::numbers::pi / 4.0);
    CHECK(map.find("<svg") != std::string::npos);

    const MomentTable t = moment_bound_check(PositiveSequence::from_rule_name("one_over_n"), 32);
    const std::string plot = render_moment_plot_svg(t);
    CHECK(plot.find("polyline") != std::string::npos);

    // determinism of the serialized geometry
    CHECK(render_domain_svg(D) == dom);
}

TEST_CASE("suite reports carry schema version, config echo, and determinism") {
    const SuiteReport rep = suite_lemma_arc();
    CHECK(rep.pass);
    CHECK(rep.report["schema_version"] == 1);
    CHECK(rep.report["suite"] == "lemma-arc");
    CHECK(rep.report.contains("config"));
    CHECK(rep.report_string() == suite_lemma_arc().report_string());
    CHECK(rep.csv.find("L,t,exact,bound,margin") == 0);
}
