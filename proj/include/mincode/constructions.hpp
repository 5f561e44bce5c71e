#pragma once

#include "mincode/projgeom.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mincode {

/// One element of an (r-1)-spread of PG(rt-1, q): the projectivized row
/// space of a rank-r basis matrix (r x rt over GF(q)).
struct SpreadElement {
    Matrix basis;
};

struct ExpectedDistance {
    BigInt value;
    bool exact = false; // false: lower bound only
};

/// A built cutting blocking set together with its code and the verification
/// outcome. Construction formulas are never trusted: every report runs the
/// full cutting test and weight enumeration before release, and a formula
/// mismatch is an internal error.
struct ConstructionReport {
    std::string name;
    std::uint64_t q = 0;
    std::size_t k = 0;
    PointSet pointset;
    LinearCode code;
    BigInt expected_n;
    std::optional<ExpectedDistance> expected_d;
    bool verified_minimal = false;
    std::size_t verified_d = 0;
};

/// Union of the lines through k points in general position (the standard
/// basis points): a cutting blocking set of (q-1)*C(k,2)+k points with
/// minimum distance (q-1)(k-1)+1.
ConstructionReport tetrahedron(std::uint64_t q, std::size_t k,
                               std::uint64_t max_enum = default_max_enum);

/// Union of the tangent lines to the rational normal curve t -> (1, t, ...,
/// t^(k-1)) at the first 2k-3 parameter values in encoding order. Needs
/// characteristic >= k and q >= 2k-3; n = (2k-3)(q+1).
ConstructionReport rational_normal_tangent(std::uint64_t q, std::size_t k,
                                           std::uint64_t max_enum = default_max_enum);

/// The Desarguesian (r-1)-spread of PG(rt-1, q) by field reduction: each
/// point of PG(t-1, q^r) maps to the row space of its blockwise
/// multiplication-matrix image. (q^rt - 1)/(q^r - 1) pairwise disjoint
/// elements covering every point.
std::vector<SpreadElement> desarguesian_spread(std::uint64_t q, std::uint32_t r, std::uint32_t t,
                                               std::uint64_t max_enum = default_max_enum);

/// Choice of the two extra spread elements per block pair: indices (i, j)
/// into the powers of the tower generator.
struct PairChoice {
    std::uint64_t i = 0;
    std::uint64_t j = 0;
};

/// Cutting blocking set of t^2 spread elements in PG(rt-1, q): the t
/// coordinate flats plus, per pair of blocks (l, m), the flats of
/// e_l + gamma^i e_m and e_l + gamma^j e_m. Valid pairs need j - i
/// nonzero modulo (q^s-1)/(q-1) for every s > 1 dividing r; the default
/// (q^r - 1, 1) always passes and matches the two flats through
/// e_l + e_m and e_l + gamma e_m.
ConstructionReport spread_cutting_set(std::uint64_t q, std::uint32_t r, std::uint32_t t,
                                      std::optional<PairChoice> pair = std::nullopt,
                                      std::uint64_t max_enum = default_max_enum);

/// k*k/4 disjoint lines from a linespread of PG(k-1, q), k even >= 4:
/// a minimal [(q+1)k^2/4, k, q(k-1)]_q code (distance exact).
ConstructionReport even_lines_code(std::uint64_t q, std::size_t k,
                                   std::uint64_t max_enum = default_max_enum);

/// Partition of PG(2, q), q square, into q - sqrt(q) + 1 disjoint Baer
/// subplanes: the orbits of the index-(q - sqrt(q) + 1) subgroup of a
/// Singer cycle. Each subplane has q + sqrt(q) + 1 points.
std::vector<PointSet> baer_partition(std::uint64_t q);

/// k^2/9 disjoint planes from a 2-spread, each replaced by two disjoint
/// Baer subplanes; k divisible by 3, q square. For k = 3 the set is just
/// the two subplanes in PG(2, q). n = 2(q + sqrt(q) + 1)k^2/9 and
/// d >= q(4k/3 - 2).
ConstructionReport baer_code(std::uint64_t q, std::size_t k,
                             std::uint64_t max_enum = default_max_enum);

/// Replaces each block (a flat given by its basis) of a cutting blocking
/// set by the image of a cutting blocking set of the block's own geometry.
/// The inner sets are re-verified to be cutting inside their flats.
PointSet substitute_blocks(const FieldPtr& field, std::size_t ambient_dim,
                           const std::vector<Matrix>& blocks,
                           const std::vector<PointSet>& inners,
                           std::uint64_t max_enum = default_max_enum);

/// Embeds a cutting blocking set of PG(k-1, q) into a hyperplane of
/// PG(k, q) and attaches k punctured lines through an external point:
/// exactly (q-1)k + 1 new points. The k spanning points are the
/// lexicographically first such subset of the inner set; the external
/// point is the last standard basis vector.
ConstructionReport lift(const ConstructionReport& inner,
                        std::uint64_t max_enum = default_max_enum);

struct BestKnownLength {
    BigInt n;
    std::string name;
};

/// Shortest length among the explicit constructions here (formula only; no
/// set is built). Dispatch: k = 2 the projective line; k = 3 three lines or
/// a Baer pair; k even the line construction (or the Baer one when it is
/// shorter and applies); k = 0 mod 3 with square q the Baer construction;
/// k = 1 mod 3 with square q its lift; otherwise the lift of the line
/// construction.
BestKnownLength best_known_length(std::uint64_t q, std::size_t k);

/// Builds and verifies the construction selected by best_known_length.
ConstructionReport best_known(std::uint64_t q, std::size_t k,
                              std::uint64_t max_enum = default_max_enum);

} // namespace mincode
