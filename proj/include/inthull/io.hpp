#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "inthull/polytope.hpp"

/**
 * Plain-text representations.
 *
 * H-representation: first line "m d", then m lines "a_1 ... a_d b" of integers,
 * each meaning a . x <= b.
 * V-representation: first line "n d", then n lines of d rationals written "p/q"
 * in lowest terms, "/q" omitted when q = 1.
 * In both, lines whose first non-blank character is '#' are comments and blank
 * lines are ignored.
 */
namespace inthull {

struct VRepresentation
{
    std::size_t dim = 0;
    std::vector<RatVector> points;
};

/** Throws ParseError (with line number) on malformed input, TypeError on a non-integer coefficient. */
HPolyhedron parse_hrep(std::istream& in);
HPolyhedron read_hrep(const std::filesystem::path& path);

VRepresentation parse_vrep(std::istream& in);

void write_hrep(std::ostream& out, const HPolyhedron& h);
void write_hrep(std::ostream& out, std::size_t dim, const std::vector<Inequality>& rows);
void write_vrep(std::ostream& out, std::size_t dim, const std::vector<RatVector>& points);
void write_vrep(std::ostream& out, std::size_t dim, const std::vector<IntVector>& points);

}  // namespace inthull
