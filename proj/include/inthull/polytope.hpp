#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "inthull/exact_linalg.hpp"

namespace inthull {

using RowSet = boost::dynamic_bitset<>;

/** One inequality a . x <= beta. */
struct Inequality
{
    IntVector a;
    BigInteger beta;

    friend bool operator==(const Inequality&, const Inequality&) = default;
    friend bool operator<(const Inequality& l, const Inequality& r)
    {
        if (l.a != r.a)
            return l.a < r.a;
        return l.beta < r.beta;
    }
};

/**
 * Polyhedron {x : A x <= b} with integer data. Rows are divided by gcd(a, beta) and
 * deduplicated on insertion; a zero row with beta >= 0 is dropped and one with
 * beta < 0 marks the system infeasible.
 */
class HPolyhedron
{
public:
    explicit HPolyhedron(std::size_t dim = 0) : dim_(dim) {}
    HPolyhedron(std::size_t dim, const std::vector<Inequality>& rows);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return rows_.size(); }
    const std::vector<Inequality>& rows() const { return rows_; }
    const Inequality& row(std::size_t i) const { return rows_[i]; }
    bool trivially_infeasible() const { return infeasible_; }

    /**
     * Insert a . x <= beta after normalization. Returns the index of the stored
     * row, or nullopt when the row was dropped (duplicate or zero row).
     */
    std::optional<std::size_t> add(std::span<const BigInteger> a, const BigInteger& beta);
    std::optional<std::size_t> add(const Inequality& row) { return add(row.a, row.beta); }

    bool contains(std::span<const BigRational> x) const;
    bool contains(std::span<const BigInteger> x) const;

    friend bool operator==(const HPolyhedron& l, const HPolyhedron& r)
    {
        return l.dim_ == r.dim_ && l.infeasible_ == r.infeasible_ && l.rows_ == r.rows_;
    }

private:
    std::size_t dim_;
    std::vector<Inequality> rows_;
    std::set<Inequality> index_;
    bool infeasible_ = false;
};

struct Vertex
{
    RatVector coords;
    RowSet incidence;
    std::optional<BigInteger> basis_delta;
};

/** Square nonsingular tight subsystem A_v x = b_v at a vertex. */
struct VertexBasis
{
    IntMatrix a;
    IntVector b;
    BigInteger delta;
    std::vector<std::size_t> rows;  // H-row indices of a, in order
};

struct Box
{
    IntVector lo;
    IntVector hi;

    /** Number of integer points, zero when some hi < lo. */
    BigInteger volume() const;
};

struct LatticePointSet
{
    std::vector<IntVector> points;
};

inline const BigInteger kDefaultMaxBoxVolume{"100000000"};

bool is_integer_point(std::span<const BigRational> v);

/** Integer vector of an integral rational point. Throws PreconditionError otherwise. */
IntVector to_integer_point(std::span<const BigRational> v);

/** Incidence set of x in H: rows with a . x = beta. */
RowSet tight_rows(const HPolyhedron& h, std::span<const BigRational> x);

/**
 * Tight basis for a vertex: the first linearly independent incident rows in
 * H-row order (pivot rows of the reduced row echelon form of the incident rows).
 * Throws DegenerateVertexError when the incident rows have rank below dim.
 */
VertexBasis vertex_basis(const Vertex& v, const HPolyhedron& h);

/** All lattice points of H inside the box, lexicographic order. */
LatticePointSet enumerate_lattice_points(const HPolyhedron& h, const Box& box,
                                         const BigInteger& max_volume = kDefaultMaxBoxVolume,
                                         const Deadline& deadline = {});

/**
 * Same, with the box taken from the vertex set of H: the integer range between the
 * smallest and largest vertex coordinate on each axis. Throws UnboundedError if H is
 * unbounded.
 */
LatticePointSet enumerate_lattice_points(const HPolyhedron& h,
                                         const BigInteger& max_volume = kDefaultMaxBoxVolume,
                                         const Deadline& deadline = {});

/** Integer box [ceil(min), floor(max)] per coordinate of a finite nonempty point set. */
Box bounding_box(const std::vector<RatVector>& points);

/** Dimension of the affine hull of a point set (-1 for the empty set). */
long affine_dimension(const std::vector<RatVector>& points);

/**
 * Integer equations c . x = gamma spanning the affine hull of a nonempty point set,
 * one per missing dimension, in canonical form (reduced row echelon basis of the
 * orthogonal complement, scaled to primitive integers).
 */
std::vector<Inequality> affine_hull_equations(const std::vector<RatVector>& points);

}  // namespace inthull
