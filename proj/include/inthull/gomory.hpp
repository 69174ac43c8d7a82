#pragma once

#include <span>
#include <vector>

#include "inthull/exact_linalg.hpp"
#include "inthull/polytope.hpp"

namespace inthull {

/**
 * A representative u in [0, delta)^d of the lattice {u : u A_v = 0 mod delta},
 * together with its coordinates in the Smith basis (0 <= coefficients_i < delta_i).
 */
struct ResidueVector
{
    IntVector u;
    IntVector coefficients;
};

struct CutSet
{
    std::vector<Inequality> cuts;
};

inline const BigInteger kDefaultMaxCutDelta{1000000};

struct CutOptions
{
    /** Bases with |det| above this are refused rather than enumerated. */
    BigInteger max_delta = kDefaultMaxCutDelta;
    /** Keep only the cut with the smallest right-hand side. */
    bool single_cut = false;
};

/**
 * All delta residue vectors for the basis behind `snf`:
 * u = sum_i (delta / delta_i) * c_i * (row i of P) mod delta.
 * Order: mixed radix over the coefficients, last coefficient fastest.
 */
std::vector<ResidueVector> enumerate_residue_vectors(const SmithDecomposition& snf,
                                                     const BigInteger& max_delta = kDefaultMaxCutDelta);

/**
 * Gomory cuts of a non-integer vertex v with A_v v = b_v: for every residue u with
 * u b_v != 0 mod delta, the row (u A_v / delta) x <= floor(u b_v / delta), gcd-normalized
 * and deduplicated. Every cut is violated by v and kept by all integer points of
 * {x : A_v x <= b_v}.
 */
CutSet generate_cuts(const VertexBasis& basis, std::span<const BigRational> v,
                     const CutOptions& options = {});

}  // namespace inthull
