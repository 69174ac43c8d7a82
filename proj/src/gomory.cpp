#include "inthull/gomory.hpp"

#include <set>

namespace inthull {

std::vector<ResidueVector> enumerate_residue_vectors(const SmithDecomposition& snf,
                                                     const BigInteger& max_delta)
{
    const BigInteger& delta = snf.delta;
    if (delta > max_delta)
        throw ResourceError("cut enumeration: delta = " + delta.get_str() + " exceeds limit " +
                            max_delta.get_str());
    const std::size_t d = snf.d.rows();
    const IntVector factors = snf.invariant_factors();

    // Row i of P scaled by delta / delta_i; these generate the residue lattice.
    std::vector<IntVector> gens(d, IntVector(d));
    for (std::size_t i = 0; i < d; ++i) {
        BigInteger scale;
        mpz_divexact(scale.get_mpz_t(), delta.get_mpz_t(), factors[i].get_mpz_t());
        for (std::size_t j = 0; j < d; ++j)
            gens[i][j] = scale * snf.p(i, j);
    }

    std::vector<ResidueVector> out;
    out.reserve(delta.get_ui());
    IntVector coeff(d);
    for (;;) {
        IntVector u(d);
        for (std::size_t i = 0; i < d; ++i)
            if (coeff[i] != 0)
                for (std::size_t j = 0; j < d; ++j)
                    u[j] += coeff[i] * gens[i][j];
        for (auto& x : u)
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), delta.get_mpz_t());
        out.push_back(ResidueVector{std::move(u), coeff});

        std::size_t i = d;
        while (i > 0) {
            --i;
            if (++coeff[i] < factors[i])
                break;
            coeff[i] = 0;
            if (i == 0)
                return out;
        }
        if (d == 0)
            return out;
    }
}

CutSet generate_cuts(const VertexBasis& basis, std::span<const BigRational> v,
                     const CutOptions& options)
{
    const std::size_t d = basis.a.rows();
    if (!basis.a.square() || basis.b.size() != d || v.size() != d)
        throw DimensionError("vertex basis shape does not match the vertex");
    if (is_integer_point(v))
        throw PreconditionError("Gomory cuts requested for an integer vertex");
    for (std::size_t k = 0; k < d; ++k)
        if (dot(basis.a.row(k), v) != basis.b[k])
            throw PreconditionError("basis row " + std::to_string(k) + " is not tight at the vertex");
    const BigInteger det = abs(determinant(basis.a));
    if (det > options.max_delta)
        throw ResourceError("cut enumeration: delta = " + det.get_str() + " exceeds limit " +
                            options.max_delta.get_str());

    const SmithDecomposition snf = smith_normal_form(basis.a);
    const BigInteger& delta = snf.delta;

    CutSet out;
    std::set<Inequality> seen;
    for (const auto& res : enumerate_residue_vectors(snf, options.max_delta)) {
        const BigInteger ub = dot(res.u, basis.b);
        if (ub % delta == 0)
            continue;
        IntVector coeffs(d);
        for (std::size_t j = 0; j < d; ++j) {
            BigInteger ua = 0;
            for (std::size_t i = 0; i < d; ++i)
                ua += res.u[i] * basis.a(i, j);
            if (!mpz_divisible_p(ua.get_mpz_t(), delta.get_mpz_t()))
                throw Error("residue vector does not annihilate the basis modulo delta");
            mpz_divexact(coeffs[j].get_mpz_t(), ua.get_mpz_t(), delta.get_mpz_t());
        }
        auto n = gcd_normalize_row(coeffs, floor_div(ub, delta));
        Inequality cut{std::move(n.a), std::move(n.beta)};
        if (seen.insert(cut).second)
            out.cuts.push_back(std::move(cut));
    }

    if (options.single_cut && out.cuts.size() > 1) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < out.cuts.size(); ++k)
            if (out.cuts[k].beta < out.cuts[best].beta)
                best = k;
        out.cuts = {out.cuts[best]};
    }
    return out;
}

}  // namespace inthull
