#include "doctest.h"
#include "egyptian/problem_io.hpp"
#include "egyptian/result_record.hpp"

#include <cctype>

using namespace egyptian;

namespace {

Rational rat(long long p, long long q = 1) { return Rational(BigInt(p), BigInt(q)); }

const char* kUnitPair = R"({
  "version": 1,
  "n": 2,
  "numerators": [["1"], ["1"]],
  "denominators": [{"kind": "naturals"}, {"kind": "naturals"}]
})";

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parse a unit pair problem") {
    Problem p = parse_problem_text(kUnitPair);
    CHECK(p.n() == 2);
    CHECK(p.a_star() == rat(1));
    CHECK(p.numerators(0).size() == 1);
    CHECK(p.denominators(1).kind() == DenominatorSet::Kind::Naturals);
}

TEST_CASE("parse every descriptor kind") {
    const char* text = R"({
      "version": 1,
      "n": 6,
      "numerators": [["1"], ["1","3/2"], ["2"], ["1"], ["5"], ["1"]],
      "denominators": [
        {"kind": "naturals"},
        {"kind": "arithmetic", "first": "1/2", "step": "1/2"},
        {"kind": "geometric", "first": "2", "ratio": "3"},
        {"kind": "polynomial", "coeffs": ["1", "0", "0"]},
        {"kind": "primes"},
        {"kind": "with-prefix", "prefix": ["3/7"], "tail": {"kind": "primes"}}
      ]
    })";
    Problem p = parse_problem_text(text);
    CHECK(p.n() == 6);
    CHECK(p.denominators(1).contains(rat(3, 2)));
    CHECK(p.denominators(2).contains(rat(18)));
    CHECK(p.denominators(3).contains(rat(49)));
    CHECK(p.denominators(5).min_element() == rat(3, 7));
    CHECK(p.a_star() == rat(5));
}

TEST_CASE("malformed problems are rejected with validation_error") {
    const char* bad[] = {
        "",                                     // not json
        "[1,2]",                                // wrong shape
        R"({"version": 2, "n": 1, "numerators": [["1"]], "denominators": [{"kind":"naturals"}]})",
        R"({"n": 1, "numerators": [["1"]], "denominators": [{"kind":"naturals"}]})",
        R"({"version": 1, "n": 0, "numerators": [], "denominators": []})",
        R"({"version": 1, "n": 2, "numerators": [["1"]], "denominators": [{"kind":"naturals"},{"kind":"naturals"}]})",
        R"({"version": 1, "n": 1, "numerators": [["1"]], "denominators": [{"kind":"fancy"}]})",
        R"({"version": 1, "n": 1, "numerators": [["0"]], "denominators": [{"kind":"naturals"}]})",
        R"({"version": 1, "n": 1, "numerators": [["x"]], "denominators": [{"kind":"naturals"}]})",
        R"({"version": 1, "n": 1, "numerators": [["1"]], "denominators": [{"kind":"arithmetic","first":"1"}]})",
        R"({"version": 1, "n": 1, "numerators": [["1"]], "denominators": [{"kind":"geometric","first":"2","ratio":"1"}]})",
        R"({"version": 1, "n": 1, "numerators": [["1"]], "denominators": [{"kind":"polynomial","coeffs":["1/2","0"]}]})",
        R"({"version": 1, "n": 1, "numerators": [[]], "denominators": [{"kind":"naturals"}]})",
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse_problem_text(text), validation_error);
    }
}

TEST_CASE("n is capped") {
    std::string big = R"({"version": 1, "n": 65, "numerators": [)";
    for (int i = 0; i < 65; ++i) big += std::string(i ? "," : "") + R"(["1"])";
    big += R"(], "denominators": [)";
    for (int i = 0; i < 65; ++i) big += std::string(i ? "," : "") + R"({"kind":"naturals"})";
    big += "]}";
    CHECK_THROWS_AS(parse_problem_text(big), validation_error);
}

TEST_CASE("canonical text ignores formatting and normalizes rationals") {
    Problem a = parse_problem_text(kUnitPair);
    Problem b = parse_problem_text(
        R"({"denominators":[{"kind":"naturals"},{"kind":"naturals"}],)"
        R"("n":2,"numerators":[["2/2"],["1"]],"version":1})");
    CHECK(canonical_problem_text(a) == canonical_problem_text(b));
    CHECK(problem_hash(a) == problem_hash(b));
}

TEST_CASE("hashes identify problems") {
    Problem unit2 = parse_problem_text(kUnitPair);
    std::string h = problem_hash(unit2);
    REQUIRE(h.size() == 16);
    for (char ch : h) {
        const bool hex = (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f');
        CHECK(hex);
    }

    Problem other = parse_problem_text(
        R"({"version":1,"n":1,"numerators":[["1"]],"denominators":[{"kind":"primes"}]})");
    CHECK(problem_hash(other) != h);
    CHECK(problem_hash(unit2) == h);  // stable across calls
}

TEST_CASE("problem files load from disk") {
    Problem p = load_problem("data/unit2.json");
    CHECK(p.n() == 2);
    CHECK(problem_hash(p) == problem_hash(parse_problem_text(kUnitPair)));
    CHECK_THROWS_AS(load_problem("data/no_such_file.json"), validation_error);
}

TEST_CASE("records render byte for byte") {
    ResultRecord rec("reps data/unit2.json 1/2");
    rec.field("problem", "0123456789abcdef");
    rec.field("exact", "true");
    CHECK(rec.render() ==
          "record egyptian/1\n"
          "command reps data/unit2.json 1/2\n"
          "problem 0123456789abcdef\n"
          "exact true\n"
          "end\n");
}

TEST_CASE("term formatting") {
    CHECK(format_term(Term{rat(1), rat(3)}) == "(1 3)");
    CHECK(format_term(Term{rat(3, 2), rat(10, 21)}) == "(3/2 10/21)");
    Representation r = {Term{rat(1), rat(3)}, Term{rat(1), rat(7)}};
    CHECK(format_representation(r) == "(1 3) (1 7)");
    CHECK(format_signed_term(SignedTerm{rat(1), rat(2), +1}) == "(1 2 +)");
    CHECK(format_signed_term(SignedTerm{rat(1), rat(2), -1}) == "(1 2 -)");
    SignedRepresentation sr = {SignedTerm{rat(1), rat(1), +1}, SignedTerm{rat(1), rat(2), -1}};
    CHECK(format_signed_representation(sr) == "(1 1 +) (1 2 -)");
}

}  // TEST_SUITE
