#include <doctest.h>

#include <algorithm>
#include <set>

#include "reflecto/complexity.hpp"
#include "reflecto/errors.hpp"
#include "reflecto/graphs.hpp"
#include "reflecto/seq_spec.hpp"
#include "reflecto/word.hpp"

using namespace reflecto;

namespace {

struct GraphTriple {
    FactorGraph gamma;
    FactorGraph lambda;
    FactorGraph k;
};

GraphTriple graphs_at(const Word& text, std::uint32_t n) {
    GraphTriple t;
    t.gamma = build_gamma(factor_set(text, n), factor_set(text, n + 1));
    t.lambda = build_lambda(t.gamma);
    t.k = build_k(t.lambda);
    return t;
}

}  // namespace

TEST_CASE("thue_morse graphs at order 2") {
    const Word text = prefix(builtin_spec("thue_morse"), 1024);
    const GraphTriple t = graphs_at(text, 2);

    CHECK(t.gamma.kind == GraphKind::gamma);
    CHECK(t.gamma.n == 2);
    CHECK(t.gamma.vertices.size() == 4);   // rho(2)
    CHECK(t.gamma.edges.size() == 6);      // rho(3)
    CHECK(std::is_sorted(t.gamma.vertices.begin(), t.gamma.vertices.end()));

    CHECK(t.lambda.vertices.size() == 3);  // r(2)
    CHECK(t.lambda.edges.size() == 6);     // edges survive vertex fusion

    CHECK(t.k.vertices.size() == 3);       // r(2)
    CHECK(t.k.edges.size() == 4);          // r(3)
    CHECK(is_connected(t.gamma));
    CHECK(is_connected(t.lambda));
    CHECK(is_connected(t.k));

    // Every gamma edge goes from its label's prefix to its label's suffix.
    for (const GraphEdge& e : t.gamma.edges) {
        CHECK(e.label.subword(0, 2) == t.gamma.vertices[e.from]);
        CHECK(e.label.subword(1, 2) == t.gamma.vertices[e.to]);
    }
    // Lambda vertices are reversal-class representatives.
    for (const Word& v : t.lambda.vertices) {
        CHECK(canonical_class(v) == v);
    }
}

TEST_CASE("fused edge labels keep one direction per class") {
    const Word text = prefix(builtin_spec("thue_morse"), 1024);
    const GraphTriple t = graphs_at(text, 2);
    std::set<std::string> labels;
    for (const GraphEdge& e : t.k.edges) {
        labels.insert(e.label.text());
        // A kept label is the smaller member of its class.
        CHECK(e.label <= e.label.reversed());
    }
    CHECK(labels == std::set<std::string>{"001", "010", "011", "101"});
}

TEST_CASE("period-2 word at order 2: one vertex, two palindromic loops") {
    const SequenceSpec p01{PeriodicSpec{Word(), Word::from_text("01")}};
    const Word text = prefix(p01, 256);
    const GraphTriple t = graphs_at(text, 2);
    CHECK(t.k.vertices.size() == 1);
    REQUIRE(t.k.edges.size() == 2);
    for (const GraphEdge& e : t.k.edges) {
        CHECK(e.from == 0);
        CHECK(e.to == 0);
        CHECK(e.label.is_palindrome());
    }
    CHECK(t.k.edges[0].label.text() == "010");
    CHECK(t.k.edges[1].label.text() == "101");
    CHECK(is_connected(t.k));
}

TEST_CASE("counts match the profile across sequences and orders") {
    for (const char* name : {"thue_morse", "fibonacci", "baum_sweet"}) {
        const SequenceSpec spec = builtin_spec(name);
        const Word text = prefix(spec, 8192);
        const ComplexityProfile p = profile(spec, PrefixBudget{8192, 2}, 21);
        for (std::uint32_t n = 1; n <= 20; ++n) {
            CAPTURE(name);
            CAPTURE(n);
            const GraphTriple t = graphs_at(text, n);
            CHECK(t.gamma.vertices.size() == p.rho(n));
            CHECK(t.gamma.edges.size() == p.rho(n + 1));
            CHECK(t.lambda.vertices.size() == p.r(n));
            CHECK(t.lambda.edges.size() == p.rho(n + 1));
            CHECK(t.k.vertices.size() == p.r(n));
            CHECK(t.k.edges.size() == p.r(n + 1));
            CHECK(is_connected(t.k));
        }
    }
}

TEST_CASE("construction order is enforced") {
    const Word text = prefix(builtin_spec("thue_morse"), 512);
    const FactorGraph gamma = build_gamma(factor_set(text, 3), factor_set(text, 4));
    CHECK_THROWS_AS(build_gamma(factor_set(text, 3), factor_set(text, 5)), SpecError);
    CHECK_THROWS_AS(build_k(gamma), SpecError);          // skips the vertex fusion
    CHECK_THROWS_AS(build_lambda(build_lambda(gamma)), SpecError);

    // An edge whose suffix never occurs as a vertex is corruption.
    const FactorSet vertices(2, {Word::from_text("00"), Word::from_text("01"),
                                 Word::from_text("11")});
    const FactorSet dangling(3, {Word::from_text("110")});
    CHECK_THROWS_AS(build_gamma(vertices, dangling), CorruptionError);

    CHECK_THROWS_AS(is_connected(FactorGraph{}), SpecError);
}

TEST_CASE("dot and json exports") {
    const Word text = prefix(builtin_spec("fibonacci"), 512);
    const GraphTriple t = graphs_at(text, 5);
    CHECK(export_dot(t.k) ==
          "digraph k_5 {\n"
          "  rankdir=LR;\n"
          "  n0 [label=\"00100\"];\n"
          "  n1 [label=\"00101\"];\n"
          "  n2 [label=\"01001\"];\n"
          "  n3 [label=\"01010\"];\n"
          "  n0 -> n2 [label=\"001001\"];\n"
          "  n1 -> n3 [label=\"001010\"];\n"
          "  n2 -> n2 [label=\"010010\"];\n"
          "  n2 -> n1 [label=\"100101\"];\n"
          "}\n");

    const nlohmann::ordered_json doc = graph_to_json(t.k);
    CHECK(doc["kind"] == "k");
    CHECK(doc["n"] == 5);
    REQUIRE(doc["vertices"].size() == 4);
    CHECK(doc["vertices"][0] == "00100");
    REQUIRE(doc["edges"].size() == 4);
    CHECK(doc["edges"][0]["from"] == "00100");
    CHECK(doc["edges"][0]["to"] == "01001");
    CHECK(doc["edges"][0]["label"] == "001001");
}

TEST_CASE("disconnected graphs are reported as such") {
    // Two letters that never meet: factors of length 1 from 0..0 1..1 with no
    // crossing blocks come from separate components when the only length-2
    // factors are 00 and 11.
    const FactorSet vertices(1, {Word::from_text("0"), Word::from_text("1")});
    const FactorSet edges(2, {Word::from_text("00"), Word::from_text("11")});
    const FactorGraph gamma = build_gamma(vertices, edges);
    CHECK_FALSE(is_connected(gamma));
    // Fusing changes nothing here: two palindromic loops on two vertices.
    CHECK_FALSE(is_connected(build_k(build_lambda(gamma))));
}
