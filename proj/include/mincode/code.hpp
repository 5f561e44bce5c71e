#pragma once

#include "mincode/arith.hpp"
#include "mincode/enumerate.hpp"
#include "mincode/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace mincode {

/// Default cap on enumerated projective codeword classes (CLI: --max-enum).
inline constexpr std::uint64_t default_max_enum = 1ull << 26;

/// An [n, k] linear code over a Field, held as a full-rank k x n generator
/// matrix. Immutable.
class LinearCode {
  public:
    LinearCode(FieldPtr field, Matrix generator);

    const FieldPtr& field() const { return field_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    const Matrix& generator() const { return generator_; }

    /// Codeword of the message u (length k).
    std::vector<std::uint32_t> encode(const std::vector<std::uint32_t>& u) const;

    /// Scalar-class representatives of nonzero messages, canonical order.
    ProjectiveClasses message_classes() const { return {field_, k_}; }

  private:
    FieldPtr field_;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    Matrix generator_;
};

std::vector<std::size_t> support(const std::vector<std::uint32_t>& v);
std::size_t weight(const std::vector<std::uint32_t>& v);

/// Exact weight statistics of all q^k codewords. Enumeration walks one
/// representative per scalar class and scales counts by q-1.
struct WeightProfile {
    std::map<std::size_t, std::uint64_t> distribution; // weight -> count, sums to q^k
    std::size_t d = 0;                                 // minimum nonzero weight
    std::size_t w_max = 0;
    Rational mean;     // over the q^k - 1 nonzero codewords
    Rational variance; // idem
    std::size_t num_distinct_nonzero_weights = 0;
};

WeightProfile weight_profile(const LinearCode& c, std::uint64_t max_classes = default_max_enum);

bool is_nondegenerate(const LinearCode& c);
bool is_projective(const LinearCode& c);

/// Rank criterion: uG is minimal iff the columns of G outside the support
/// of uG have rank k-1 (their left kernel is then exactly the line through
/// u, i.e. every codeword supported inside supp(uG) is a multiple).
bool is_minimal_codeword(const LinearCode& c, const std::vector<std::uint32_t>& u);

/// A failing pair: some codeword `inner` with supp(inner) strictly inside
/// supp(outer) and not proportional to it.
struct MinimalityWitness {
    std::vector<std::uint32_t> outer;
    std::vector<std::uint32_t> inner;
};

struct MinimalityResult {
    bool minimal = false;
    std::optional<MinimalityWitness> witness; // present iff not minimal
};

/// Scans one representative per scalar class; short-circuits on the first
/// failure and returns a witness for diagnostics.
MinimalityResult is_minimal_code(const LinearCode& c,
                                 std::uint64_t max_classes = default_max_enum);

/// Brute-force scan over scalar classes for a strictly containing support.
bool is_maximal_codeword(const LinearCode& c, const std::vector<std::uint32_t>& u,
                         std::uint64_t max_classes = default_max_enum);

/// Both sides of the second power-moment identity. lhs enumerates
/// sum of omega(c)^2 over all codewords; rhs expands the dual-weight form,
/// with W1/W2 of the dual counted from generator columns (zero columns and
/// proportional pairs) instead of dual enumeration. The two must agree
/// exactly; margin = lhs minus the projective lower bound
/// q^(k-2) n (q-1) [n(q-1)+1], nonnegative for nondegenerate codes and zero
/// iff the code is projective.
struct PlessSecondMoment {
    Rational lhs;
    Rational rhs;
    Rational margin;
    std::uint64_t w1_dual = 0;
    std::uint64_t w2_dual = 0;
};

PlessSecondMoment pless_second_moment(const LinearCode& c,
                                      std::uint64_t max_classes = default_max_enum);

} // namespace mincode
