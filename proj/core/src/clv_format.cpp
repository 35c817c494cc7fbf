#include "clv/clv_format.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "clv/dg_format.hpp"
#include "clv/errors.hpp"

namespace clv {

std::string print_clv(const CloverExpression& c) {
    std::ostringstream os;
    os << "clover\n";
    os << "vertices " << c.internal_count << "\n";
    os << "edges " << c.edge_count() << "\n";
    auto node_ref = [&](int n) -> std::string {
        if (c.node_is_leaf(n)) return "L" + std::to_string(n - c.internal_count);
        return std::to_string(n);
    };
    for (int e = 0; e < c.edge_count(); ++e)
        os << "edge " << e << " : " << node_ref(c.incidence[2 * e]) << " "
           << node_ref(c.incidence[2 * e + 1]) << "\n";
    for (int v = 0; v < c.internal_count; ++v) {
        const auto& t = c.cyclic_order[v];
        os << "order " << v << " : " << t[0] << " " << t[1] << " " << t[2] << "\n";
    }
    for (int l = 0; l < c.leaf_count; ++l)
        os << "leaf " << l << " : " << c.leaf_half_edge(l) << "\n";
    for (int e = 0; e < c.edge_count(); ++e)
        if (c.twist[e]) os << "twist " << e << " : 1\n";
    for (int i = 0; i < c.leaf_count; ++i)
        for (int j = i + 1; j < c.leaf_count; ++j)
            if (c.leaf_linking[i][j] != 0)
                os << "lk L" << i << " L" << j << " : " << c.leaf_linking[i][j] << "\n";
    for (int l = 0; l < c.leaf_count; ++l)
        if (c.leaf_linking[l][l] != 0) os << "frame L" << l << " : " << c.leaf_linking[l][l] << "\n";
    os << "end\n";
    return os.str();
}

namespace {

bool next_line(std::istream& in, std::string& line, int& lineno) {
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

// Leaf ids as "L3" or bare "3"; returns -1 for the placeholder "_".
int parse_leaf_ref(const std::string& tok, int lineno) {
    std::string digits = tok;
    if (!digits.empty() && (digits[0] == 'L' || digits[0] == 'l')) digits.erase(0, 1);
    if (digits == "_") return -1;
    try {
        std::size_t pos = 0;
        int v = std::stoi(digits, &pos);
        if (pos != digits.size() || v < 0) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        fail(lineno, "bad leaf reference '" + tok + "'");
    }
}

} // namespace

CloverExpression parse_clv(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_line(in, line, lineno)) throw invalid_input("empty clover text");
    {
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word != "clover") fail(lineno, "expected 'clover', got '" + word + "'");
    }

    int vertices = -1, edges = -1;
    struct EdgeRec {
        bool seen = false;
        std::string a, b;
    };
    std::vector<EdgeRec> edge_lines;
    std::vector<std::array<int, 3>> orders;
    std::vector<bool> order_seen;
    std::map<int, int> leaf_decl;                       // leaf id -> half-edge
    std::vector<std::pair<int, long long>> twists;      // edge -> raw twist
    std::map<std::pair<int, int>, long long> lk_decl;   // (i,j) -> linking
    std::map<int, long long> frame_decl;

    while (true) {
        if (!next_line(in, line, lineno)) fail(lineno, "unexpected end of input (missing 'end')");
        std::istringstream ls(line);
        std::string word, colon;
        ls >> word;
        if (word == "end") break;
        if (word == "vertices") {
            if (!(ls >> vertices) || vertices < 0 || vertices > 1000000)
                fail(lineno, "bad vertex count");
            orders.assign(vertices, {0, 0, 0});
            order_seen.assign(vertices, false);
        } else if (word == "edges") {
            if (!(ls >> edges) || edges < 0 || edges > 1000000) fail(lineno, "bad edge count");
            edge_lines.assign(edges, {});
        } else if (word == "edge") {
            int e;
            std::string a, b;
            if (!(ls >> e >> colon >> a >> b) || colon != ":") fail(lineno, "malformed edge line");
            if (edges < 0) fail(lineno, "'edge' before 'edges' count");
            if (e < 0 || e >= edges) fail(lineno, "edge index out of range");
            if (edge_lines[e].seen) fail(lineno, "duplicate edge " + std::to_string(e));
            edge_lines[e] = {true, a, b};
        } else if (word == "order") {
            int v, x, y, z;
            if (!(ls >> v >> colon >> x >> y >> z) || colon != ":") fail(lineno, "malformed order line");
            if (vertices < 0) fail(lineno, "'order' before 'vertices' count");
            if (v < 0 || v >= vertices) fail(lineno, "vertex index out of range");
            if (order_seen[v]) fail(lineno, "duplicate order for vertex " + std::to_string(v));
            order_seen[v] = true;
            orders[v] = {x, y, z};
        } else if (word == "leaf") {
            std::string ltok;
            int h;
            if (!(ls >> ltok >> colon >> h) || colon != ":") fail(lineno, "malformed leaf line");
            int l = parse_leaf_ref(ltok, lineno);
            if (l < 0) fail(lineno, "leaf line needs an explicit id");
            if (leaf_decl.count(l)) fail(lineno, "duplicate leaf " + std::to_string(l));
            leaf_decl[l] = h;
        } else if (word == "twist") {
            int e;
            long long t;
            if (!(ls >> e >> colon >> t) || colon != ":") fail(lineno, "malformed twist line");
            twists.emplace_back(e, t);
        } else if (word == "lk") {
            std::string li, lj;
            long long v;
            if (!(ls >> li >> lj >> colon >> v) || colon != ":") fail(lineno, "malformed lk line");
            int i = parse_leaf_ref(li, lineno), j = parse_leaf_ref(lj, lineno);
            if (i < 0 || j < 0 || i == j) fail(lineno, "bad lk leaf pair");
            auto key = std::minmax(i, j);
            auto [it, fresh] = lk_decl.emplace(std::pair(key.first, key.second), v);
            if (!fresh && it->second != v)
                fail(lineno, "lk(" + std::to_string(i) + "," + std::to_string(j) +
                                 ") declared twice with different values (asymmetry)");
        } else if (word == "frame") {
            std::string ltok;
            long long f;
            if (!(ls >> ltok >> colon >> f) || colon != ":") fail(lineno, "malformed frame line");
            int l = parse_leaf_ref(ltok, lineno);
            if (l < 0) fail(lineno, "frame line needs an explicit leaf id");
            if (!frame_decl.emplace(l, f).second) fail(lineno, "duplicate frame for leaf " + std::to_string(l));
        } else {
            fail(lineno, "unknown directive '" + word + "'");
        }
    }
    if (vertices < 0 || edges < 0) fail(lineno, "missing 'vertices' or 'edges' count");
    for (int e = 0; e < edges; ++e)
        if (!edge_lines[e].seen) fail(lineno, "edge " + std::to_string(e) + " not declared");
    for (int v = 0; v < vertices; ++v)
        if (!order_seen[v]) fail(lineno, "order of vertex " + std::to_string(v) + " not declared");

    // Leaf id space: everything referenced on edge/leaf/lk/frame lines.
    int leaf_count = 0;
    auto bump = [&](int l) { leaf_count = std::max(leaf_count, l + 1); };
    for (const auto& [l, h] : leaf_decl) bump(l);
    for (const auto& [ij, v] : lk_decl) { bump(ij.first); bump(ij.second); }
    for (const auto& [l, f] : frame_decl) bump(l);
    for (const auto& rec : edge_lines)
        for (const std::string& tok : {rec.a, rec.b})
            if (!tok.empty() && (tok[0] == 'L' || tok[0] == 'l')) bump(parse_leaf_ref(tok, lineno));
    // every leaf needs a stem slot at a trivalent vertex
    if (leaf_count > 3 * vertices)
        throw invalid_input("leaf id space exceeds the 3 * vertices stem capacity");

    CloverExpression c;
    c.internal_count = vertices;
    c.leaf_count = leaf_count;
    c.incidence.assign(2 * edges, -1);
    c.cyclic_order = orders;
    c.twist.assign(edges, 0);
    c.leaf_linking.assign(leaf_count, std::vector<long long>(leaf_count, 0));

    for (int e = 0; e < edges; ++e) {
        const EdgeRec& rec = edge_lines[e];
        const std::string toks[2] = {rec.a, rec.b};
        for (int s = 0; s < 2; ++s) {
            const std::string& tok = toks[s];
            int h = 2 * e + s;
            if (!tok.empty() && (tok[0] == 'L' || tok[0] == 'l' || tok == "_")) {
                int l = parse_leaf_ref(tok, 0);
                if (l >= 0) c.incidence[h] = c.leaf_node(l);
                // "_" stays unresolved until the leaf declarations below.
            } else {
                try {
                    std::size_t pos = 0;
                    int v = std::stoi(tok, &pos);
                    if (pos != tok.size() || v < 0 || v >= vertices) throw std::invalid_argument("");
                    c.incidence[h] = v;
                } catch (const std::exception&) {
                    throw invalid_input("edge " + std::to_string(e) + ": bad endpoint '" + tok + "'");
                }
            }
        }
    }
    for (const auto& [l, h] : leaf_decl) {
        if (h < 0 || h >= 2 * edges)
            throw invalid_input("leaf " + std::to_string(l) + ": edge-end " + std::to_string(h) +
                                " out of range");
        if (c.incidence[h] >= 0 && c.incidence[h] != c.leaf_node(l))
            throw invalid_input("leaf " + std::to_string(l) + " disagrees with edge line about end " +
                                std::to_string(h));
        c.incidence[h] = c.leaf_node(l);
    }
    for (int h = 0; h < 2 * edges; ++h)
        if (c.incidence[h] < 0)
            throw invalid_input("edge-end " + std::to_string(h) +
                                " is a leaf placeholder with no 'leaf' declaration");

    for (const auto& [e, t] : twists) {
        if (e < 0 || e >= edges) throw invalid_input("twist: edge out of range");
        c.twist[e] = static_cast<int>(((t % 2) + 2) % 2);
    }
    for (const auto& [ij, v] : lk_decl) {
        c.leaf_linking[ij.first][ij.second] = v;
        c.leaf_linking[ij.second][ij.first] = v;
    }
    for (const auto& [l, f] : frame_decl) c.leaf_linking[l][l] = f;
    return c;
}

CloverExpression parse_clv(const std::string& text) {
    std::istringstream in(text);
    return parse_clv(in);
}

std::string print_diagram_vector(const DiagramVector& v) {
    if (v.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& [key, coeff] : v)
        os << coeff.str() << " " << key_hash_hex(key) << "\n";
    for (const auto& [key, coeff] : v) {
        os << "# diagram " << key_hash_hex(key) << "\n";
        os << print_dg(decode_key(key));
    }
    return os.str();
}

} // namespace clv
