#include "reflecto/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "reflecto/errors.hpp"

namespace reflecto {

namespace {

// Index of `w` in a sorted vertex list, or npos.
std::size_t find_vertex(const std::vector<Word>& vertices, const Word& w) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || !(*it == w)) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - vertices.begin());
}

}  // namespace

const char* graph_kind_name(GraphKind kind) {
    switch (kind) {
        case GraphKind::gamma: return "gamma";
        case GraphKind::lambda: return "lambda";
        case GraphKind::k: return "k";
    }
    return "unknown";
}

FactorGraph build_gamma(const FactorSet& vertices, const FactorSet& edges) {
    if (edges.length() != vertices.length() + 1) {
        throw SpecError("edge factors must be one symbol longer than vertex factors");
    }
    FactorGraph graph;
    graph.kind = GraphKind::gamma;
    graph.n = vertices.length();
    graph.vertices = vertices.words();
    graph.edges.reserve(edges.words().size());
    for (const Word& w : edges.words()) {
        const Word head = w.subword(0, graph.n);
        const Word tail = w.subword(1, graph.n);
        const std::size_t from = find_vertex(graph.vertices, head);
        const std::size_t to = find_vertex(graph.vertices, tail);
        if (from == static_cast<std::size_t>(-1) || to == static_cast<std::size_t>(-1)) {
            throw CorruptionError("factor " + w.text() + " has an endpoint missing from the vertex set");
        }
        graph.edges.push_back({static_cast<std::uint32_t>(from), static_cast<std::uint32_t>(to), w});
    }
    return graph;
}

FactorGraph build_lambda(const FactorGraph& gamma) {
    if (gamma.kind != GraphKind::gamma) {
        throw SpecError("vertex fusion starts from the unfused graph");
    }
    // Representative of a vertex: the smaller of w and its reversal when both
    // occur, otherwise w itself.
    std::vector<Word> reps(gamma.vertices.size());
    for (std::size_t i = 0; i < gamma.vertices.size(); ++i) {
        const Word& w = gamma.vertices[i];
        Word rev = w.reversed();
        if (rev < w && find_vertex(gamma.vertices, rev) != static_cast<std::size_t>(-1)) {
            reps[i] = std::move(rev);
        } else {
            reps[i] = w;
        }
    }

    FactorGraph graph;
    graph.kind = GraphKind::lambda;
    graph.n = gamma.n;
    graph.vertices = reps;
    std::sort(graph.vertices.begin(), graph.vertices.end());
    graph.vertices.erase(std::unique(graph.vertices.begin(), graph.vertices.end()),
                         graph.vertices.end());

    graph.edges.reserve(gamma.edges.size());
    for (const GraphEdge& e : gamma.edges) {
        const std::size_t from = find_vertex(graph.vertices, reps[e.from]);
        const std::size_t to = find_vertex(graph.vertices, reps[e.to]);
        graph.edges.push_back({static_cast<std::uint32_t>(from), static_cast<std::uint32_t>(to), e.label});
    }
    return graph;
}

FactorGraph build_k(const FactorGraph& lambda) {
    if (lambda.kind != GraphKind::lambda) {
        throw SpecError("edge fusion starts from the vertex-fused graph");
    }
    FactorGraph graph;
    graph.kind = GraphKind::k;
    graph.n = lambda.n;
    graph.vertices = lambda.vertices;

    // Group edges by the reversal class of their label.  Map order makes the
    // output order deterministic.
    std::map<Word, std::vector<const GraphEdge*>> classes;
    for (const GraphEdge& e : lambda.edges) {
        classes[canonical_class(e.label)].push_back(&e);
    }

    graph.edges.reserve(classes.size());
    for (const auto& [rep, members] : classes) {
        if (members.size() == 1) {
            const GraphEdge& e = *members[0];
            if (e.label.is_palindrome() && e.from != e.to) {
                throw CorruptionError("palindromic label " + e.label.text() +
                                      " connects two distinct fused vertices");
            }
            graph.edges.push_back(e);
        } else if (members.size() == 2) {
            const GraphEdge* small = members[0];
            const GraphEdge* large = members[1];
            if (large->label < small->label) std::swap(small, large);
            if (small->from == small->to || small->from != large->to || small->to != large->from) {
                throw CorruptionError("labels " + small->label.text() + " and " + large->label.text() +
                                      " do not form an antiparallel pair of fused edges");
            }
            graph.edges.push_back(*small);
        } else {
            throw CorruptionError("more than two labels in the reversal class of " + rep.text());
        }
    }
    return graph;
}

bool is_connected(const FactorGraph& graph) {
    if (graph.vertices.empty()) {
        throw SpecError("connectivity of an empty graph is undefined");
    }
    std::vector<std::uint32_t> parent(graph.vertices.size());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&parent](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t components = graph.vertices.size();
    for (const GraphEdge& e : graph.edges) {
        const std::uint32_t a = find(e.from);
        const std::uint32_t b = find(e.to);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

std::string export_dot(const FactorGraph& graph) {
    std::ostringstream out;
    out << "digraph " << graph_kind_name(graph.kind) << "_" << graph.n << " {\n";
    out << "  rankdir=LR;\n";
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        out << "  n" << i << " [label=\"" << graph.vertices[i].text() << "\"];\n";
    }
    for (const GraphEdge& e : graph.edges) {
        out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.label.text() << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json graph_to_json(const FactorGraph& graph) {
    nlohmann::ordered_json doc;
    doc["kind"] = graph_kind_name(graph.kind);
    doc["n"] = graph.n;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const Word& w : graph.vertices) doc["vertices"].push_back(w.text());
    doc["edges"] = nlohmann::ordered_json::array();
    for (const GraphEdge& e : graph.edges) {
        nlohmann::ordered_json edge;
        edge["from"] = graph.vertices[e.from].text();
        edge["to"] = graph.vertices[e.to].text();
        edge["label"] = e.label.text();
        doc["edges"].push_back(edge);
    }
    return doc;
}

}  // namespace reflecto
