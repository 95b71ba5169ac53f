#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reflecto/complexity.hpp"
#include "reflecto/word.hpp"

namespace reflecto {

enum class GraphKind {
    gamma,   // vertices: length-n factors, one edge per (n+1)-factor
    lambda,  // vertices fused into reversal classes, edges kept
    k,       // both vertices and edges fused into reversal classes
};

struct GraphEdge {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    Word label;

    bool operator==(const GraphEdge&) const = default;
};

// A factor graph at order n.  Vertices are sorted words; edges are sorted by
// label, and every construction below is deterministic.
struct FactorGraph {
    GraphKind kind = GraphKind::gamma;
    std::uint32_t n = 0;
    std::vector<Word> vertices;
    std::vector<GraphEdge> edges;

    bool operator==(const FactorGraph&) const = default;
};

// The graph whose vertices are the length-n factors and which has one edge
// u -> v for every (n+1)-factor w with prefix u and suffix v, labeled w.
// The two factor sets must come from the same sequence (lengths n and n+1).
FactorGraph build_gamma(const FactorSet& vertices, const FactorSet& edges);

// Same edges, with each vertex replaced by its reversal class; every
// (n+1)-factor still contributes its own edge.
FactorGraph build_lambda(const FactorGraph& gamma);

// Edges fused into reversal classes as well: a palindromic label keeps its
// (necessarily) looping edge, an unreflected label keeps its direction, and
// a two-element class keeps the direction of its smaller member.  The two
// edges of a two-element class must be antiparallel between two distinct
// vertices; anything else is reported as corruption.
FactorGraph build_k(const FactorGraph& lambda);

// Connectivity of the underlying undirected graph.  Throws on empty graphs.
bool is_connected(const FactorGraph& graph);

std::string export_dot(const FactorGraph& graph);
nlohmann::ordered_json graph_to_json(const FactorGraph& graph);

const char* graph_kind_name(GraphKind kind);

}  // namespace reflecto
