#include <doctest.h>

#include <sstream>

#include "molr/enumerate.hpp"
#include "molr/galois.hpp"
#include "molr/geometry.hpp"
#include "molr/io.hpp"

using namespace molr;

TEST_CASE("record round trip is the identity on serialized output") {
    auto seeds = seed_classes(5, 2);
    std::vector<MolrRecord> records;
    for (const auto &rec : seeds.classes) {
        MolrRecord r;
        r.set = rec.representative;
        r.aut = rec.aut_order;
        r.flags = rec.flags;
        records.push_back(std::move(r));
    }
    std::ostringstream out;
    write_records(out, records);
    const std::string text = out.str();

    auto parsed = read_records_text(text);
    REQUIRE(parsed.size() == records.size());
    std::ostringstream out2;
    write_records(out2, parsed);
    CHECK(out2.str() == text);
    for (size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].set == records[i].set);
        CHECK(parsed[i].aut == records[i].aut);
    }
}

TEST_CASE("comments and blank lines are skipped") {
    const std::string text =
        "# a comment\n"
        "\n"
        "MOLR n=3 k=2 t=1\n"
        "0 1 2\n"
        "1 2 0\n"
        "\n"
        "# trailing comment\n";
    auto records = read_records_text(text);
    REQUIRE(records.size() == 1);
    CHECK(records[0].set.n() == 3);
    CHECK(records[0].set.k() == 2);
    CHECK_FALSE(records[0].aut.has_value());
}

TEST_CASE("parse errors carry line numbers") {
    try {
        read_records_text("MOLR n=3 k=2 t=1\n0 1 2\n1 2 9\n");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(read_records_text("MOLR n=3 k=2\n"), ParseError);
    CHECK_THROWS_AS(read_records_text("BOGUS n=3 k=2 t=1\n"), ParseError);
    // an invalid rectangle is rejected at parse time
    CHECK_THROWS_AS(read_records_text("MOLR n=3 k=2 t=1\n0 1 2\n0 1 2\n"), ParseError);
}

TEST_CASE("flags strings") {
    RegularityFlags f;
    f.classified = true;
    CHECK(flags_to_string(f) == "-");
    f.homogeneous = true;
    f.stepwise_homogeneous = true;
    CHECK(flags_to_string(f) == "HsH");
    RegularityFlags parsed = flags_from_string("HsH", 1);
    CHECK(parsed.homogeneous);
    CHECK(parsed.stepwise_homogeneous);
    CHECK_FALSE(parsed.transitive);
    CHECK_THROWS_AS(flags_from_string("Hx", 1), ParseError);

    RegularityFlags all;
    all.homogeneous = all.transitive = true;
    all.stepwise_homogeneous = all.stepwise_transitive = true;
    CHECK(flags_to_string(all) == "HTsHsT");
}

TEST_CASE("incidence output lists one tagged line per geometry line") {
    IncidenceStructure net = partial_net(galois_mols(4));
    std::ostringstream out;
    write_incidence(out, net);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);  // header comment
    int rows = 0, cols = 0, syms = 0;
    while (std::getline(in, line)) {
        if (line.rfind("row", 0) == 0) ++rows;
        if (line.rfind("col", 0) == 0) ++cols;
        if (line.rfind("sym:", 0) == 0) ++syms;
    }
    CHECK(rows == 4);
    CHECK(cols == 4);
    CHECK(syms == 12);
}

TEST_CASE("plane report text names the classification") {
    PlaneReport rep = check_plane(complete_to_projective(galois_mols(3)));
    const std::string text = plane_report_text(rep);
    CHECK(text.find("classification: projective") != std::string::npos);
}
