#ifndef QUADFREE_GRAPH6_HPP
#define QUADFREE_GRAPH6_HPP

#include <string>

#include "quadfree/graph.hpp"

namespace quadfree {

// Standard graph6 encoding: size field, then the upper triangle in
// column-major order, 6 bits per printable character offset by 63.
// Sizes n <= 62 use one byte (n+63); 63 <= n <= 258047 use '~' plus three
// bytes carrying n big-endian in 6-bit groups. TooLarge beyond that.
std::string graph6_encode(const Graph& g);

// Inverse of graph6_encode. Accepts an optional ">>graph6<<" header and
// one trailing newline; everything else must be exact (length, character
// range 63..126, zero padding bits) or MalformedGraph6 is thrown.
Graph graph6_decode(const std::string& s);

} // namespace quadfree

#endif
