#include "recmat/io.hpp"

#include <filesystem>

#include "doctest.h"
#include "recmat/catalog.hpp"
#include "recmat/report.hpp"

using namespace recmat;

TEST_CASE("presentation round trip is bit-exact") {
    for (const char* name : {"P", "Z", "L_Z", "D_Z", "V", "L_V", "J", "L_J"}) {
        Presentation p = catalog::preset(name);
        std::string doc = io::presentation_to_string(p);
        Presentation q = io::presentation_from_string(doc);
        CHECK(io::presentation_to_string(q) == doc);
        CHECK(q.dim() == p.dim());
        CHECK(q.field() == p.field());
        CHECK(equal(q, p));
    }
}

TEST_CASE("zero presentation round trip") {
    Presentation z = Presentation::zero(Field::prime(7));
    std::string doc = io::presentation_to_string(z);
    Presentation q = io::presentation_from_string(doc);
    CHECK(q.dim() == 0);
    CHECK(q.field() == Field::prime(7));
}

TEST_CASE("parse errors carry the line") {
    CHECK_THROWS_AS(io::presentation_from_string("nonsense"), ParseError);
    std::string doc = io::presentation_to_string(catalog::preset("P"));
    doc.replace(doc.find("dim 1"), 5, "dim x");
    CHECK_THROWS(io::presentation_from_string(doc));
}

TEST_CASE("shipped preset files load and match the built-in catalog") {
    namespace fs = std::filesystem;
    fs::path dir = fs::path(RECMAT_SOURCE_DIR) / "data" / "presets";
    REQUIRE(fs::exists(dir));
    int count = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".pres") continue;
        Presentation p = io::load_presentation_file(entry.path().string());
        Presentation q = catalog::preset(entry.path().stem().string());
        CHECK(io::presentation_to_string(p) == io::presentation_to_string(q));
        ++count;
    }
    CHECK(count >= 19);
}

TEST_CASE("kv reports round trip") {
    report::RunReport r;
    r.command = "verify mod2 --max-n 16";
    r.items.push_back({"n=1", "1", "1", true});
    r.items.push_back({"n=2", "-1", "-1", true});
    r.certificates.push_back("Z - L D L^t = 0 (closure 9, depth 3)");
    r.wall_seconds = 0.25;
    std::string kv = report::to_kv(r.to_kv_tree(false));
    report::KvNode parsed = report::parse_kv(kv);
    CHECK(report::to_kv(parsed) == kv);
    CHECK(parsed.child("failures").value == "0");
    CHECK(r.all_pass());

    report::RunReport bad = r;
    bad.items.push_back({"n=3", "1", "-1", false});
    CHECK_FALSE(bad.all_pass());
    CHECK(bad.first_witness() == "n=3: expected 1, computed -1");
    // timing excluded from the deterministic form
    CHECK(report::to_kv(bad.to_kv_tree(false)).find("wall") == std::string::npos);
}
