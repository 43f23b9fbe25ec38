#include <doctest.h>

#include <string>

#include "grnov.h"
#include "grnov/bundled.hpp"
#include "grnov/io.hpp"

using namespace grnov;

namespace {
std::string data_path(const char* name) { return std::string(GRNOV_DATA_DIR) + "/" + name; }
}  // namespace

TEST_CASE("C API: ring load and verify") {
    grnov_ring* r = nullptr;
    CHECK(grnov_ring_load_file(data_path("abcd.ring.json").c_str(), &r) == GRNOV_OK);
    REQUIRE(r != nullptr);
    CHECK(grnov_ring_verify(r) == GRNOV_OK);
    grnov_ring_free(r);

    grnov_ring* bad = nullptr;
    CHECK(grnov_ring_load("{ not json", &bad) == GRNOV_INPUT_ERROR);
    CHECK(bad == nullptr);
    CHECK(std::string(grnov_last_error()).size() > 0);
}

TEST_CASE("C API: a schema-valid ring with a broken partition loads but fails verify") {
    Json j = parse_json_text(read_text_file(data_path("abcd.ring.json")));
    j["partitions"]["plus"] = Json::array({j["partitions"]["plus"][0]});  // keep only (A, B)
    grnov_ring* r = nullptr;
    REQUIRE(grnov_ring_load(j.dump().c_str(), &r) == GRNOV_OK);
    CHECK(grnov_ring_verify(r) == GRNOV_FAIL);
    // an identity suite over the broken engine reports failure rather than pass
    char* report = nullptr;
    CHECK(grnov_identities(r, "resolution", 3, 10, &report) == GRNOV_FAIL);
    if (report) grnov_string_free(report);
    grnov_ring_free(r);
}

TEST_CASE("C API: complex validate, decide, dominate") {
    grnov_complex* c = nullptr;
    REQUIRE(grnov_complex_load_file(data_path("tminus2.complex.json").c_str(), &c) == GRNOV_OK);
    CHECK(grnov_complex_validate(c) == GRNOV_OK);
    CHECK(grnov_novikov_decide(c, GRNOV_DIR_PLUS) == GRNOV_OK);
    CHECK(grnov_novikov_decide(c, GRNOV_DIR_MINUS) == GRNOV_OK);
    char* witness = nullptr;
    CHECK(grnov_dominate(c, &witness) == GRNOV_OK);
    REQUIRE(witness != nullptr);
    Json j = parse_json_text(witness);
    CHECK(j.at("betti").at("0").get<long>() == 1);
    CHECK(j.at("betti").at("1").get<long>() == 0);
    grnov_string_free(witness);
    grnov_complex_free(c);

    // component-infinite rings get a witness without a Betti table
    grnov_complex* paper = nullptr;
    REQUIRE(grnov_complex_load_file(data_path("paper.complex.json").c_str(), &paper) == GRNOV_OK);
    char* w2 = nullptr;
    CHECK(grnov_dominate(paper, &w2) == GRNOV_OK);
    Json j2 = parse_json_text(w2);
    CHECK_FALSE(j2.contains("betti"));
    CHECK(j2.at("windows").at("1").at("q").get<int>() == 1);
    grnov_string_free(w2);
    grnov_complex_free(paper);
}

TEST_CASE("C API: search produces a certificate that verifies") {
    grnov_complex* c = nullptr;
    REQUIRE(grnov_complex_load_file(data_path("tminus2.complex.json").c_str(), &c) == GRNOV_OK);
    char* cert = nullptr;
    CHECK(grnov_novikov_search(c, GRNOV_DIR_PLUS, 6, 0, &cert) == GRNOV_OK);
    REQUIRE(cert != nullptr);
    CHECK(grnov_novikov_verify(c, cert, 6) == GRNOV_OK);
    CHECK(grnov_novikov_verify(c, cert, -1) == GRNOV_OK);
    grnov_string_free(cert);
    grnov_complex_free(c);
}

TEST_CASE("C API: gating and refutation exit codes") {
    grnov_complex* paper = nullptr;
    REQUIRE(grnov_complex_load_file(data_path("paper.complex.json").c_str(), &paper) == GRNOV_OK);
    // search on the ABCD ring is gated
    char* cert = nullptr;
    CHECK(grnov_novikov_search(paper, GRNOV_DIR_PLUS, 6, 0, &cert) == GRNOV_INPUT_ERROR);
    CHECK(cert == nullptr);
    // decide is Laurent-only
    CHECK(grnov_novikov_decide(paper, GRNOV_DIR_PLUS) == GRNOV_INPUT_ERROR);
    // bundled certificate verifies through the C surface
    std::string cert_text = read_text_file(data_path("paper.cert.plus.json"));
    CHECK(grnov_novikov_verify(paper, cert_text.c_str(), 8) == GRNOV_OK);
    grnov_complex_free(paper);

    // [0 -> R -> 0] is refuted by decide
    FreeComplex single(bundled_laurent(Field::Q()), 0, {1}, {});
    std::string text = complex_to_json(single).dump();
    grnov_complex* s = nullptr;
    REQUIRE(grnov_complex_load(text.c_str(), &s) == GRNOV_OK);
    CHECK(grnov_novikov_decide(s, GRNOV_DIR_PLUS) == GRNOV_FAIL);
    char* c2 = nullptr;
    CHECK(grnov_novikov_search(s, GRNOV_DIR_PLUS, 6, 0, &c2) == GRNOV_INCONCLUSIVE);
    CHECK(c2 == nullptr);
    grnov_complex_free(s);
}

TEST_CASE("C API: identities and the paper example") {
    grnov_ring* r = nullptr;
    REQUIRE(grnov_ring_load_file(data_path("laurent.q.ring.json").c_str(), &r) == GRNOV_OK);
    char* report = nullptr;
    CHECK(grnov_identities(r, "resolution", 1, 10, &report) == GRNOV_OK);
    REQUIRE(report != nullptr);
    Json j = parse_json_text(report);
    CHECK(j.at("verdict") == "pass");
    grnov_string_free(report);
    char* warn = nullptr;
    CHECK(grnov_identities(r, "all", 1, 0, &warn) == GRNOV_OK);
    Json jw = parse_json_text(warn);
    CHECK(jw.contains("warning"));
    grnov_string_free(warn);
    grnov_ring_free(r);

    char* rep2 = nullptr;
    CHECK(grnov_paper_example(8, &rep2) == GRNOV_OK);
    Json j2 = parse_json_text(rep2);
    CHECK(j2.at("verdict") == "pass");
    CHECK(j2.at("witness").at("windows").at("0").at("q").get<int>() == 2);
    grnov_string_free(rep2);

    char* rep3 = nullptr;
    CHECK(grnov_paper_example(2, &rep3) == GRNOV_OK);
    Json j3 = parse_json_text(rep3);
    CHECK(j3.contains("note"));
    grnov_string_free(rep3);
}
