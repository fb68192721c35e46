#pragma once

#include <string>
#include <vector>

#include "vnum/structure.hpp"

namespace vnum {

/// "ring x y z": the keyword followed by distinct variable names.
Ring parse_ring(const std::string& text);

/// Generators separated by commas or newlines; a monomial is a list of
/// `var` or `var^exp` factors joined by `*`. An integer literal stands for
/// a constant: 0 contributes nothing, anything else is the unit monomial.
/// `#` starts a comment. Errors carry line and column.
MonomialIdeal parse_ideal(const std::string& text, const Ring& ring);

/// Comma-separated variable names, e.g. "x,z".
MonomialPrime parse_prime(const std::string& text, const Ring& ring);

/// One edge per line: two whitespace-separated vertex names. Vertices are
/// numbered in order of first appearance. `#` starts a comment.
Graph parse_graph(const std::string& text);

/// A whole input document: an optional leading "ring ..." line, then one
/// or more ideal blocks separated by lines containing exactly "---".
/// Without a declaration the ring is inferred from the variables in order
/// of first appearance across the document, and the flag records that.
struct ParsedInput {
    Ring ring;
    std::vector<MonomialIdeal> ideals;
    bool ring_inferred = false;
};

ParsedInput parse_input(const std::string& text);

/// Renders that reparse to an identical value: "x^2*y", "x^2*y, z",
/// "0" and "1" for the zero and unit ideals, "x,z" for primes.
std::string render_monomial(const Monomial& m);
std::string render_ideal(const MonomialIdeal& I);
std::string render_prime(const MonomialPrime& p);

} // namespace vnum
