#include "clv/dg_format.hpp"

#include <istream>
#include <sstream>

#include "clv/errors.hpp"

namespace clv {

std::string print_dg(const OrientedTrivalentGraph& g) {
    std::ostringstream os;
    os << "diagram\n";
    os << "vertices " << g.vertex_count << "\n";
    os << "edges " << g.edge_count() << "\n";
    for (int e = 0; e < g.edge_count(); ++e)
        os << "edge " << e << " : " << g.incidence[2 * e] << " " << g.incidence[2 * e + 1] << "\n";
    for (int v = 0; v < g.vertex_count; ++v) {
        const auto& t = g.cyclic_order[v];
        os << "order " << v << " : " << t[0] << " " << t[1] << " " << t[2] << "\n";
    }
    os << "end\n";
    return os.str();
}

namespace line_reader {

// Next non-empty line with comments stripped; returns false on EOF.
bool next(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto end = line.find_last_not_of(" \t\r");
        if (end == std::string::npos) continue;
        line.erase(end + 1);
        return true;
    }
    return false;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw invalid_input("line " + std::to_string(lineno) + ": " + what);
}

} // namespace line_reader

bool parse_dg(std::istream& in, OrientedTrivalentGraph& out) {
    using namespace line_reader;
    std::string line;
    int lineno = 0;
    if (!next(in, line, lineno)) return false;
    {
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word != "diagram") fail(lineno, "expected 'diagram', got '" + word + "'");
    }

    OrientedTrivalentGraph g;
    int edges = -1, vertices = -1;
    std::vector<bool> edge_seen, order_seen;

    while (true) {
        if (!next(in, line, lineno)) fail(lineno, "unexpected end of input (missing 'end')");
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "end") break;
        if (word == "vertices") {
            if (!(ls >> vertices) || vertices < 0 || vertices > 1000000)
                fail(lineno, "bad vertex count");
            g.vertex_count = vertices;
            g.cyclic_order.assign(vertices, {0, 0, 0});
            order_seen.assign(vertices, false);
        } else if (word == "edges") {
            if (!(ls >> edges) || edges < 0 || edges > 1000000) fail(lineno, "bad edge count");
            g.incidence.assign(2 * edges, -1);
            edge_seen.assign(edges, false);
        } else if (word == "edge") {
            int e, u, v;
            std::string colon;
            if (!(ls >> e >> colon >> u >> v) || colon != ":") fail(lineno, "malformed edge line");
            if (edges < 0) fail(lineno, "'edge' before 'edges' count");
            if (e < 0 || e >= edges) fail(lineno, "edge index out of range");
            if (edge_seen[e]) fail(lineno, "duplicate edge " + std::to_string(e));
            edge_seen[e] = true;
            g.incidence[2 * e] = u;
            g.incidence[2 * e + 1] = v;
        } else if (word == "order") {
            int v, a, b, c;
            std::string colon;
            if (!(ls >> v >> colon >> a >> b >> c) || colon != ":") fail(lineno, "malformed order line");
            if (vertices < 0) fail(lineno, "'order' before 'vertices' count");
            if (v < 0 || v >= vertices) fail(lineno, "vertex index out of range");
            if (order_seen[v]) fail(lineno, "duplicate order for vertex " + std::to_string(v));
            order_seen[v] = true;
            g.cyclic_order[v] = {a, b, c};
        } else {
            fail(lineno, "unknown directive '" + word + "'");
        }
    }
    if (vertices < 0 || edges < 0) fail(lineno, "missing 'vertices' or 'edges' count");
    for (int e = 0; e < edges; ++e)
        if (!edge_seen[e]) fail(lineno, "edge " + std::to_string(e) + " not declared");
    for (int v = 0; v < vertices; ++v)
        if (!order_seen[v]) fail(lineno, "order of vertex " + std::to_string(v) + " not declared");
    out = std::move(g);
    return true;
}

OrientedTrivalentGraph parse_dg(const std::string& text) {
    std::istringstream in(text);
    OrientedTrivalentGraph g;
    if (!parse_dg(in, g)) throw invalid_input("empty diagram text");
    return g;
}

std::vector<OrientedTrivalentGraph> parse_dg_catalog(std::istream& in) {
    std::vector<OrientedTrivalentGraph> out;
    OrientedTrivalentGraph g;
    while (parse_dg(in, g)) out.push_back(std::move(g));
    return out;
}

} // namespace clv
