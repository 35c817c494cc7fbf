#include "clv/surgery.hpp"

#include <algorithm>
#include <map>

#include "clv/errors.hpp"

namespace clv {

namespace {

/*
 * Assembles a link from crossing primitives.  Components accumulate
 * passages (crossing id + role) in traversal order; arcs are numbered at
 * the end, one per passage, so the segment after a component's t-th passage
 * is its t-th arc.
 */
class LinkBuilder {
public:
    explicit LinkBuilder(int ncomp) : passages_(ncomp) {}

    // Hopf clasp of sign s: two crossings of sign s, one with each strand on top.
    void clasp(int a, int b, int s) {
        int x1 = add_crossing(a, b, s);
        int x2 = add_crossing(b, a, s);
        passages_[a].push_back({x1, false});
        passages_[a].push_back({x2, true});
        passages_[b].push_back({x1, true});
        passages_[b].push_back({x2, false});
    }

    // Writhe-free clasp marking a half twist: the two crossings cancel, so
    // the linking number is untouched.
    void twist_marker(int a, int b) {
        int x1 = add_crossing(a, b, 1);
        int x2 = add_crossing(a, b, -1);
        passages_[a].push_back({x1, false});
        passages_[a].push_back({x2, false});
        passages_[b].push_back({x1, true});
        passages_[b].push_back({x2, true});
    }

    // Borromean rings: closure of the braid (s1 s2^-1)^3 on three strands.
    // Each pair crosses twice with opposite signs, so all pairwise linking
    // numbers vanish while the triple stays essentially linked.
    void borromean(int r1, int r2, int r3) {
        struct Step {
            int under, over, sign;
        };
        const Step steps[6] = {{r2, r1, 1}, {r1, r3, -1}, {r3, r2, 1},
                               {r2, r1, -1}, {r1, r3, 1}, {r3, r2, -1}};
        for (const Step& st : steps) {
            int x = add_crossing(st.under, st.over, st.sign);
            passages_[st.under].push_back({x, false});
            passages_[st.over].push_back({x, true});
        }
    }

    FramedLinkDiagram finish(std::vector<long long> framings) {
        FramedLinkDiagram d;
        d.framings = std::move(framings);
        d.components.resize(passages_.size());
        struct Slots {
            int under_in = 0, under_out = 0, over_in = 0, over_out = 0;
        };
        std::vector<Slots> slots(crossings_.size());
        int next_arc = 1;
        for (std::size_t i = 0; i < passages_.size(); ++i) {
            const auto& ps = passages_[i];
            if (ps.empty()) continue; // crossing-free unknot
            const int k = static_cast<int>(ps.size());
            const int base = next_arc;
            next_arc += k;
            for (int t = 0; t < k; ++t) {
                int arc_in = base + (t + k - 1) % k;
                int arc_out = base + t;
                d.components[i].push_back(arc_out);
                if (ps[t].over) {
                    slots[ps[t].crossing].over_in = arc_in;
                    slots[ps[t].crossing].over_out = arc_out;
                } else {
                    slots[ps[t].crossing].under_in = arc_in;
                    slots[ps[t].crossing].under_out = arc_out;
                }
            }
        }
        d.crossings.reserve(crossings_.size());
        for (std::size_t x = 0; x < crossings_.size(); ++x) {
            const Slots& s = slots[x];
            if (crossings_[x] > 0)
                d.crossings.push_back({s.under_in, s.over_in, s.under_out, s.over_out});
            else
                d.crossings.push_back({s.under_in, s.over_out, s.under_out, s.over_in});
        }
        return d;
    }

private:
    struct Passage {
        int crossing;
        bool over;
    };

    int add_crossing(int /*under*/, int /*over*/, int sign) {
        crossings_.push_back(sign);
        return static_cast<int>(crossings_.size()) - 1;
    }

    std::vector<int> crossings_; // sign per crossing
    std::vector<std::vector<Passage>> passages_;
};

} // namespace

FramedLinkDiagram compile_surgery_link(const CloverExpression& c) {
    {
        auto viol = validate_clover(c);
        if (!viol.empty())
            throw invalid_input("compile_surgery_link: invalid clover: " + viol.front());
    }

    const int rings = 3 * c.internal_count;
    LinkBuilder lb(rings + c.leaf_count);

    // Component of the circle serving a given edge-end.
    auto comp_of_end = [&](int h) {
        int n = c.incidence[h];
        if (c.node_is_leaf(n)) return rings + (n - c.internal_count);
        const auto& t = c.cyclic_order[n];
        for (int s = 0; s < 3; ++s)
            if (t[s] == h) return 3 * n + s;
        throw invalid_input("compile_surgery_link: inconsistent cyclic order");
    };

    for (int v = 0; v < c.internal_count; ++v) lb.borromean(3 * v, 3 * v + 1, 3 * v + 2);
    for (int e = 0; e < c.edge_count(); ++e) {
        int a = comp_of_end(2 * e), b = comp_of_end(2 * e + 1);
        lb.clasp(a, b, 1);
        if (c.twist[e]) lb.twist_marker(a, b);
    }
    for (int i = 0; i < c.leaf_count; ++i)
        for (int j = i + 1; j < c.leaf_count; ++j) {
            long long lk = c.leaf_linking[i][j];
            for (long long t = 0; t < std::abs(lk); ++t)
                lb.clasp(rings + i, rings + j, lk > 0 ? 1 : -1);
        }

    std::vector<long long> framings(rings + c.leaf_count, 0);
    for (int l = 0; l < c.leaf_count; ++l) framings[rings + l] = c.leaf_linking[l][l];
    return lb.finish(std::move(framings));
}

std::vector<std::string> validate_pd(const FramedLinkDiagram& d) {
    std::vector<std::string> out;
    if (d.framings.size() != d.components.size())
        out.push_back("framing list must have one entry per component");

    std::map<int, int> arc_uses;
    for (const auto& x : d.crossings)
        for (int arc : {x.a, x.b, x.c, x.d}) ++arc_uses[arc];
    std::map<int, int> arc_comp;
    for (int i = 0; i < d.component_count(); ++i)
        for (int arc : d.components[i]) {
            if (arc_comp.count(arc))
                out.push_back("arc " + std::to_string(arc) + " listed in two components");
            arc_comp[arc] = i;
        }
    for (const auto& [arc, uses] : arc_uses) {
        if (uses != 2)
            out.push_back("arc " + std::to_string(arc) + " appears " + std::to_string(uses) +
                          " times across crossings (must be 2)");
        if (!arc_comp.count(arc))
            out.push_back("arc " + std::to_string(arc) + " belongs to no component");
    }
    for (const auto& [arc, comp] : arc_comp)
        if (!arc_uses.count(arc))
            out.push_back("arc " + std::to_string(arc) + " of component " + std::to_string(comp) +
                          " meets no crossing");

    // Crossing connectivity: the under-strand joins a to c, the over-strand
    // b to d, inside single components.
    for (std::size_t x = 0; x < d.crossings.size(); ++x) {
        const auto& cr = d.crossings[x];
        auto comp = [&](int arc) { return arc_comp.count(arc) ? arc_comp.at(arc) : -1; };
        if (comp(cr.a) != comp(cr.c) || comp(cr.a) < 0)
            out.push_back("crossing " + std::to_string(x) + ": under-strand arcs in different components");
        if (comp(cr.b) != comp(cr.d) || comp(cr.b) < 0)
            out.push_back("crossing " + std::to_string(x) + ": over-strand arcs in different components");
    }
    return out;
}

namespace {

// One of the four slots of a crossing quadruple.  The under-strand enters at
// A and leaves at C; the over-strand occupies B and D, entering at B for a
// positive crossing and at D for a negative one.
enum class Slot { A, B, C, D };

struct Occurrence {
    int crossing;
    Slot slot;
};

int slot_arc(const Crossing& x, Slot s) {
    switch (s) {
        case Slot::A: return x.a;
        case Slot::B: return x.b;
        case Slot::C: return x.c;
        default: return x.d;
    }
}

// Where a strand leaves a crossing it entered at the given slot.
Slot exit_slot(Slot entry) {
    switch (entry) {
        case Slot::A: return Slot::C;
        case Slot::B: return Slot::D;
        case Slot::D: return Slot::B;
        default: return Slot::A;
    }
}

} // namespace

/*
 * Crossing signs need the over-strand's direction, which the arc list of a
 * short component does not pin down by adjacency alone.  Each component is
 * therefore walked through its crossing slots: entering a crossing on the
 * under side (slot A) exits at C, entering on the over side exits at the
 * opposite over slot, and the next passage is the other occurrence of the
 * exit arc.  Entering at B makes the crossing positive, at D negative.  The
 * walk starts at an under passage whenever the component has one; a
 * component that only ever passes over is walked in both directions and
 * accepted only if every pairwise sign sum agrees.
 */
LinkingMatrix linking_matrix(const FramedLinkDiagram& d) {
    {
        auto viol = validate_pd(d);
        if (!viol.empty()) throw invalid_input("linking_matrix: invalid PD: " + viol.front());
    }
    const int n = d.component_count();
    std::map<int, int> arc_comp;
    for (int i = 0; i < n; ++i)
        for (int arc : d.components[i]) arc_comp[arc] = i;

    std::map<int, std::vector<Occurrence>> occurrences;
    for (std::size_t x = 0; x < d.crossings.size(); ++x)
        for (Slot s : {Slot::A, Slot::B, Slot::C, Slot::D})
            occurrences[slot_arc(d.crossings[x], s)].push_back({static_cast<int>(x), s});

    // Walks one component from a starting entry occurrence; returns the arcs
    // in traversal order and accumulates per-crossing over-signs.
    auto walk = [&](int comp, Occurrence entry,
                    std::vector<std::pair<int, int>>& over_signs) -> std::vector<int> {
        std::vector<int> arcs;
        Occurrence cur = entry;
        const std::size_t expect = d.components[comp].size();
        for (std::size_t step = 0; step < expect; ++step) {
            const Crossing& x = d.crossings[cur.crossing];
            int exit_arc;
            switch (cur.slot) {
                case Slot::A: exit_arc = x.c; break;
                case Slot::B:
                    over_signs.emplace_back(cur.crossing, 1);
                    exit_arc = x.d;
                    break;
                case Slot::D:
                    over_signs.emplace_back(cur.crossing, -1);
                    exit_arc = x.b;
                    break;
                default:
                    throw invalid_input("linking_matrix: component " + std::to_string(comp) +
                                        " runs against the under-strand direction of crossing " +
                                        std::to_string(cur.crossing));
            }
            arcs.push_back(exit_arc);
            const auto& occ = occurrences.at(exit_arc);
            // Next passage: the other occurrence of the exit arc.
            if (occ.size() != 2)
                throw invalid_input("linking_matrix: arc " + std::to_string(exit_arc) +
                                    " does not appear exactly twice");
            Occurrence next = occ[0].crossing == cur.crossing && occ[0].slot == exit_slot(cur.slot)
                                  ? occ[1]
                                  : occ[0];
            cur = next;
        }
        if (!(cur.crossing == entry.crossing && cur.slot == entry.slot))
            throw invalid_input("linking_matrix: component " + std::to_string(comp) +
                                " does not close up after its declared arcs");
        return arcs;
    };

    std::vector<std::vector<long long>> sum(n, std::vector<long long>(n, 0));
    auto accumulate = [&](const std::vector<std::pair<int, int>>& over_signs) {
        for (const auto& [x, sign] : over_signs) {
            int under = arc_comp.at(d.crossings[x].a);
            int over = arc_comp.at(d.crossings[x].b);
            if (under == over) continue; // self-crossings never enter the linking number
            sum[under][over] += sign;
            sum[over][under] += sign;
        }
    };

    for (int i = 0; i < n; ++i) {
        if (d.components[i].empty()) continue;
        // Prefer an under anchor: its direction is explicit in the quadruple.
        Occurrence start{-1, Slot::A};
        Occurrence over_start{-1, Slot::A};
        for (std::size_t x = 0; x < d.crossings.size() && start.crossing < 0; ++x) {
            if (arc_comp.at(d.crossings[x].a) == i) start = {static_cast<int>(x), Slot::A};
            if (over_start.crossing < 0 && arc_comp.at(d.crossings[x].b) == i)
                over_start = {static_cast<int>(x), Slot::B};
        }
        std::vector<std::pair<int, int>> signs;
        std::vector<int> arcs;
        if (start.crossing >= 0) {
            arcs = walk(i, start, signs);
            accumulate(signs);
        } else {
            // Over-only component: both directions must tell the same story.
            arcs = walk(i, over_start, signs);
            std::vector<std::pair<int, int>> rev;
            walk(i, {over_start.crossing, Slot::D}, rev);
            for (auto& [x, s] : rev) s = -s;
            std::sort(signs.begin(), signs.end());
            std::sort(rev.begin(), rev.end());
            if (signs != rev)
                throw invalid_input("linking_matrix: orientation of component " +
                                    std::to_string(i) + " is not determined by the diagram");
            accumulate(signs);
        }
        // The declared arc sequence must be a rotation of the walked one.
        const auto& declared = d.components[i];
        bool match = false;
        if (declared.size() == arcs.size()) {
            for (std::size_t r = 0; r < arcs.size() && !match; ++r) {
                bool ok = true;
                for (std::size_t t = 0; t < arcs.size() && ok; ++t)
                    ok = declared[(r + t) % arcs.size()] == arcs[t];
                match = ok;
            }
        }
        if (!match)
            throw invalid_input("linking_matrix: component " + std::to_string(i) +
                                " arc sequence is inconsistent with the crossings");
    }

    LinkingMatrix lm;
    lm.entries = IntMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        lm.entries.at(i, i) = static_cast<long>(d.framings[i]);
        for (int j = i + 1; j < n; ++j) {
            if (sum[i][j] % 2 != 0)
                throw invalid_input("linking_matrix: odd crossing-sign sum between components " +
                                    std::to_string(i) + " and " + std::to_string(j));
            lm.entries.at(i, j) = static_cast<long>(sum[i][j] / 2);
            lm.entries.at(j, i) = static_cast<long>(sum[i][j] / 2);
        }
    }
    return lm;
}

UnimodularityCertificate unimodularity_certificate(const FramedLinkDiagram& d) {
    UnimodularityCertificate cert;
    cert.determinant = determinant(linking_matrix(d).entries);
    cert.unimodular = cert.determinant == 1 || cert.determinant == -1;
    return cert;
}

} // namespace clv
