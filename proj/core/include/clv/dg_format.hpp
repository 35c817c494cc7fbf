#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "clv/diagram.hpp"

namespace clv {

/*
 * Diagram text format (.dg), line-oriented UTF-8, '#' starts a comment:
 *
 *   diagram
 *   vertices N
 *   edges M
 *   edge e : u v          # half-edge 2e at u, 2e+1 at v; loops have u = v
 *   order v : h h h       # cyclic triple of half-edge ids at v
 *   end
 *
 * A catalog is a concatenation of blocks.  Parsing throws invalid_input with
 * a line reference; printing is canonical (edges then orders, ascending).
 */
std::string print_dg(const OrientedTrivalentGraph& g);

// Reads one block.  Returns false on end of input before a block starts.
bool parse_dg(std::istream& in, OrientedTrivalentGraph& out);

OrientedTrivalentGraph parse_dg(const std::string& text);
std::vector<OrientedTrivalentGraph> parse_dg_catalog(std::istream& in);

} // namespace clv
