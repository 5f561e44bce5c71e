#pragma once

#include "mincode/arith.hpp"
#include "mincode/errors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mincode {

enum class BoundKind { lower_n, upper_n, lower_d, upper_d, constraint };

/// One evaluated bound. `value` is exact; `satisfied` is present whenever
/// the supplied parameters make the bound applicable.
struct BoundVerdict {
    std::string name;
    BoundKind kind = BoundKind::constraint;
    Rational value;
    std::optional<bool> satisfied;
    std::string citation;
    std::string detail; // optional human note (window ends, escapes taken)
};

/// All applicable lower bounds on the length of a minimal [n, k]_q code;
/// `n`, when given, fills the satisfied flags.
std::vector<BoundVerdict> length_lower_bounds(std::uint64_t q, std::size_t k,
                                              std::optional<std::uint64_t> n = std::nullopt);

/// The quadratic length constraint for minimal non-constant-weight codes:
/// q^(k-2) n^2 - B n + C >= 0 with
/// B = q^(k-2) + (k-1)(2 q^(k-1) - 1) + (q^(k-1)-1)/(q-1),
/// C = (k-1)^2 (q^k - 1) + (k-1)(q^k - 1)/(q-1).
struct StatQuadratic {
    BigInt B;
    BigInt C;
    BigInt lhs;
    bool satisfied = false;
};

StatQuadratic stat_quadratic(std::uint64_t q, std::uint64_t n, std::size_t k);

/// Upper bound on the minimum distance of a minimal non-constant-weight
/// code: floor(n(q-1)q^(k-2)[n-1-q(k-1)] / [n(q^(k-1)-1) - (k-1)(q^k-1)]).
/// Not applicable (nullopt) when the denominator is nonpositive.
std::optional<BigInt> d_upper_minimal(std::uint64_t q, std::uint64_t n, std::size_t k);

struct NWindow {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

/// Admissible lengths for a nondegenerate code with minimum weight d and
/// maximum weight w > d: the n for which w exceeds the average weight and
/// the variance bound stays below the Bhatia-Davis product. Exact rational
/// scan; nullopt when no n qualifies. d >= w is rejected (constant-weight
/// inputs belong to the constant-weight length bound).
std::optional<NWindow> bhatia_davis_window(std::uint64_t q, std::size_t k, std::uint64_t d,
                                           std::uint64_t w);

/// Popoviciu-type length constraint:
/// 1/n <= (q-1)/(q^k-1) + ((w-d)/n)^2 (q^k-1) / (4 q^(k-2) (q-1)).
bool popoviciu_check(std::uint64_t q, std::uint64_t n, std::size_t k, std::uint64_t d,
                     std::uint64_t w);

/// Few-weights counting bound: q^k <= sum_{i=0}^s C(n, i) (q-1)^i.
bool delsarte_check(std::uint64_t q, std::uint64_t n, std::size_t k, std::uint64_t s);

struct FeasibilityParams {
    std::uint64_t q = 0;
    std::size_t k = 0;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> d;
    std::optional<std::uint64_t> w;
    std::optional<std::uint64_t> s;
};

struct FeasibilityReport {
    FeasibilityParams params;
    std::vector<BoundVerdict> verdicts;
    bool feasible = true;      // feasible so far, i.e. no applicable bound failed
    std::string witness;       // first failing bound when infeasible
};

/// Runs every applicable verdict for a putative minimal [n, k]_q code with
/// the given optional parameters. Infeasible iff some applicable verdict
/// fails; the quadratic constraint is only charged when the constant-weight
/// escape is closed as well.
FeasibilityReport feasibility(const FeasibilityParams& params);

/// Best-known interval for the minimal length m(k, q) of a minimal code.
struct MTableEntry {
    std::uint64_t q = 0;
    std::size_t k = 0;
    BigInt lower;
    std::string lower_source;
    BigInt upper; // best value this library can construct
    std::string upper_source;
    std::optional<BigInt> exact; // set when lower == upper
    std::optional<BigInt> literature;  // shorter length reported elsewhere
    std::string literature_source;
    double nonconstructive_ref = 0.0; // 2k / log_q(q^2/(q^2-q+1)); informational only
};

/// Rows k = 2..k_max. Lower bounds combine the closed-form length bounds
/// with the quadratic constraint (honoring the constant-weight escape);
/// uppers minimize over the explicit constructions, the a^2 m(b, q)
/// product recursion over all factorizations, and one-step lifts.
/// The single floating-point value in this library is the informational
/// nonconstructive reference column; it never enters a verdict.
std::vector<MTableEntry> m_table(std::uint64_t q, std::size_t k_max);

} // namespace mincode
