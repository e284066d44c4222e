#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace netmap;
using namespace testing_support;

namespace {

ErrorKind kind_of(const std::string& text) {
    try {
        parse_presentation(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::usage;
}

std::string message_of(const std::string& text) {
    try {
        parse_presentation(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("fixture presentations") {
    NetMapPresentation p10 = load_presentation("degree10.net");
    CHECK(p10.a == IntMatrix2{2, 0, -1, 5});
    CHECK(p10.degree() == 10);
    NetMapPresentation p6 = load_presentation("degree6.net");
    CHECK(p6.a == IntMatrix2::diag(6, 1));
    CHECK(p6.degree() == 6);
    CHECK(p6.arcs[3] == Arc{{6, 1}, {2, 1}});
}

TEST_CASE("translation outside the lattice") {
    std::string text = read_file(data_path("bad_translation.net"));
    CHECK(kind_of(text) == ErrorKind::domain);
    CHECK(message_of(text).find("translation not in Λ1") != std::string::npos);
}

TEST_CASE("syntax errors carry line numbers") {
    CHECK(kind_of("matrix: 1 0 0 1\ntranslation: 0\n") == ErrorKind::parse);
    CHECK(message_of("# header\nmatrix: 1 0 0 x\n").find("line 2") != std::string::npos);
    CHECK(message_of("matrix: 2 0 0 1\nshape: 1\n").find("unknown key") != std::string::npos);
    CHECK(message_of("matrix: 2 0 0 1\narc: 0 0 1 0\n").find("line 2") != std::string::npos);
    CHECK(message_of("matrix: 2 0 0 1\narc: 0 0 -> 1 0\n").find("four arcs") != std::string::npos);
    CHECK(message_of("arc: 0 0 -> 1 0\n") == "missing matrix line");
}

TEST_CASE("invariant violations name the invariant") {
    const std::string arcs = "arc: 0 0 -> 0 0\narc: 2 0 -> 1 0\narc: 0 1 -> 0 1\narc: 2 1 -> 1 1\n";
    CHECK(message_of("matrix: 2 0 0 -1\n" + arcs).find("orientation") != std::string::npos);
    CHECK(message_of("matrix: 2 0 0 1\narc: 0 0 -> 0 0\narc: 4 0 -> 1 0\narc: 0 1 -> 0 1\narc: 2 1 -> 1 1\n")
              .find("same class in Λ1/2Λ1") != std::string::npos);
    CHECK(message_of("matrix: 2 0 0 1\narc: 0 0 -> 0 0\narc: 2 0 -> 1 0\narc: 0 1 -> 3 0\narc: 2 1 -> 1 1\n")
              .find("not a Hurwitz structure set") != std::string::npos);
    CHECK(message_of("matrix: 2 0 0 1\narc: 0 0 -> 0 0\narc: 1 0 -> 1 0\narc: 0 1 -> 0 1\narc: 2 1 -> 1 1\n")
              .find("not in Λ1") != std::string::npos);
    CHECK_NOTHROW(parse_presentation("matrix: 2 0 0 1\n" + arcs));
}

TEST_CASE("serialization round trip") {
    const std::string text = read_file(data_path("degree10.net"));
    CHECK(serialize_presentation(parse_presentation(text)) == text);
    std::mt19937_64 rng(89);
    for (int i = 0; i < 100; ++i) {
        NetMapPresentation p = random_presentation(rng, uniform(rng, 2, 16));
        std::string s = serialize_presentation(p);
        NetMapPresentation q = parse_presentation(s);
        REQUIRE(q == p);
        REQUIRE(serialize_presentation(q) == s);
    }
}

TEST_CASE("portrait JSON") {
    std::string text = read_file(data_path("degree4_portrait.json"));
    DynamicPortrait g = parse_portrait_json(text);
    REQUIRE(g.vertices.size() == 4);
    CHECK(g.vertices[1].id == "v3");
    CHECK(g.vertices[1].weight == 2);
    CHECK(g.extra_critical[1].count == 2);
    std::string out = serialize_portrait_json(g);
    DynamicPortrait back = parse_portrait_json(out);
    CHECK(serialize_portrait_json(back) == out);
    CHECK(out.find("\"postcritical\"") < out.find("\"extra_critical\""));

    try {
        parse_portrait_json("{\"postcritical\": [{\"id\": 1}]}");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse);
    }
    CHECK_THROWS_AS(parse_portrait_json("[1, 2"), Error);
}

TEST_CASE("DOT export") {
    DynamicPortrait g = parse_portrait_json(read_file(data_path("degree4_portrait.json")));
    std::string dot = portrait_to_dot(g);
    CHECK(dot.rfind("digraph portrait {", 0) == 0);
    CHECK(dot.find("\"v3\" -> \"v2\" [w=2") != std::string::npos);
    CHECK(dot.find("\"v2\" -> \"v3\" [w=1") != std::string::npos);
    CHECK(dot.find("×2") != std::string::npos);
    CHECK(dot.find("×1") != std::string::npos);
}

TEST_CASE("missing files are usage errors") {
    try {
        read_file(data_path("no_such_file.net"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::usage);
    }
}
