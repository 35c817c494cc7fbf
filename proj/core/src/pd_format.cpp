#include <istream>
#include <sstream>

#include "clv/errors.hpp"
#include "clv/surgery.hpp"

namespace clv {

std::string print_pd(const FramedLinkDiagram& d) {
    std::ostringstream os;
    os << "components " << d.component_count() << "\n";
    for (const auto& x : d.crossings)
        os << "X " << x.a << " " << x.b << " " << x.c << " " << x.d << "\n";
    for (int i = 0; i < d.component_count(); ++i) {
        if (d.components[i].empty()) {
            os << "unknot " << i << "\n";
        } else {
            os << "comp " << i << " :";
            for (int arc : d.components[i]) os << " " << arc;
            os << "\n";
        }
    }
    for (int i = 0; i < d.component_count(); ++i)
        os << "framing " << i << " " << d.framings[i] << "\n";
    return os.str();
}

FramedLinkDiagram parse_pd(std::istream& in) {
    FramedLinkDiagram d;
    int ncomp = -1;
    std::vector<bool> comp_seen;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) -> void {
        throw invalid_input("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "components") {
            if (ncomp >= 0) fail("duplicate 'components' header");
            if (!(ls >> ncomp) || ncomp < 0 || ncomp > 1000000) fail("bad component count");
            d.components.assign(ncomp, {});
            d.framings.assign(ncomp, 0);
            comp_seen.assign(ncomp, false);
        } else if (word == "X") {
            Crossing x{};
            if (!(ls >> x.a >> x.b >> x.c >> x.d)) fail("malformed crossing line");
            d.crossings.push_back(x);
        } else if (word == "comp") {
            int i;
            std::string colon;
            if (ncomp < 0) fail("'comp' before 'components' header");
            if (!(ls >> i >> colon) || colon != ":") fail("malformed comp line");
            if (i < 0 || i >= ncomp) fail("component index out of range");
            if (comp_seen[i]) fail("duplicate component " + std::to_string(i));
            comp_seen[i] = true;
            int arc;
            while (ls >> arc) d.components[i].push_back(arc);
            if (d.components[i].empty()) fail("empty comp line (use 'unknot' instead)");
        } else if (word == "unknot") {
            int i;
            if (ncomp < 0) fail("'unknot' before 'components' header");
            if (!(ls >> i)) fail("malformed unknot line");
            if (i < 0 || i >= ncomp) fail("component index out of range");
            if (comp_seen[i]) fail("duplicate component " + std::to_string(i));
            comp_seen[i] = true;
        } else if (word == "framing") {
            int i;
            long long f;
            if (ncomp < 0) fail("'framing' before 'components' header");
            if (!(ls >> i >> f)) fail("malformed framing line");
            if (i < 0 || i >= ncomp) fail("component index out of range");
            d.framings[i] = f;
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    if (ncomp < 0) throw invalid_input("missing 'components' header");
    for (int i = 0; i < ncomp; ++i)
        if (!comp_seen[i])
            throw invalid_input("component " + std::to_string(i) + " has no comp/unknot line");
    return d;
}

FramedLinkDiagram parse_pd(const std::string& text) {
    std::istringstream in(text);
    return parse_pd(in);
}

} // namespace clv
