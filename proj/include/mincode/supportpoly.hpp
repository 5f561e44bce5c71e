#pragma once

#include "mincode/arith.hpp"
#include "mincode/code.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mincode {

/// Multivariate polynomial over a Field in k variables, keyed by exponent
/// vector; no zero coefficients are stored. Exponents are unbounded until
/// a reduction maps them into [0, q-1].
class SupportPolynomial {
  public:
    using Exponents = std::vector<std::uint16_t>;

    SupportPolynomial(FieldPtr field, std::size_t k);

    static SupportPolynomial constant(FieldPtr field, std::size_t k, std::uint32_t c);
    /// sum_i coeffs[i] * x_{i+1}
    static SupportPolynomial linear_form(FieldPtr field,
                                         const std::vector<std::uint32_t>& coeffs);
    /// c * x_{var+1}^exp (var is 0-based)
    static SupportPolynomial monomial(FieldPtr field, std::size_t k, std::size_t var,
                                      std::uint16_t exp, std::uint32_t c = 1);

    const FieldPtr& field() const { return field_; }
    std::size_t var_count() const { return k_; }
    const std::map<Exponents, std::uint32_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t total_degree() const; // 0 for the zero polynomial

    std::uint32_t coefficient(const Exponents& alpha) const;
    std::uint32_t evaluate(const std::vector<std::uint32_t>& point) const;

    /// Every exponent e >= 1 becomes ((e-1) mod (q-1)) + 1; e = 0 stays.
    /// Idempotent; preserves evaluation on all of F_q^k.
    SupportPolynomial reduced() const;
    bool is_reduced() const;

    /// Substitution x -> x * A for a square matrix A (k x k).
    SupportPolynomial composed_with(const Matrix& a) const;

    SupportPolynomial scaled(std::uint32_t c) const;

    friend SupportPolynomial operator+(const SupportPolynomial& a, const SupportPolynomial& b);
    friend SupportPolynomial operator-(const SupportPolynomial& a, const SupportPolynomial& b);
    friend SupportPolynomial operator*(const SupportPolynomial& a, const SupportPolynomial& b);
    friend bool operator==(const SupportPolynomial& a, const SupportPolynomial& b);

    /// Deterministic rendering, terms in graded-lexicographic descending
    /// order (fixture comparisons rely on it).
    std::string to_string() const;

    void add_term(const Exponents& alpha, std::uint32_t c);

  private:
    FieldPtr field_;
    std::size_t k_;
    std::map<Exponents, std::uint32_t> terms_;
};

/// Product over i in I of the linear forms x * g^(i) (columns of G);
/// degree |I| before reduction. Indices are 0-based.
SupportPolynomial support_polynomial(const Matrix& g, const std::vector<std::size_t>& I);

/// Same product but reduced after every multiplication, which caps the
/// term count by q^k; required when |I| is large.
SupportPolynomial reduced_support_polynomial(const Matrix& g, const std::vector<std::size_t>& I);

/// All points of F_q^k where p does not vanish, in ascending big-endian
/// base-q order of the coordinate tuple.
std::vector<std::vector<std::uint32_t>> nonzero_set(const SupportPolynomial& p,
                                                    std::uint64_t max_points = default_max_enum);

struct GridBound {
    BigInt bound;
    std::size_t s = 0;
    std::uint64_t ell = 0;
};

/// Lower bound on the number of nonzeros of a reduced polynomial over the
/// grid A_1 x ... x A_k with |A_i| = sizes[i], sizes descending, each >= 2:
/// bound = (n_s - ell) * prod_{i<s} n_i where
/// deg p = sum_{i>s} (n_i - 1) + ell, 1 <= ell <= n_s - 1.
/// A nonzero constant never vanishes, so degree 0 yields the full grid.
GridBound alon_furedi_bound(const SupportPolynomial& p, const std::vector<std::uint64_t>& sizes);

/// The closed form for the reduction of a maximal codeword's support
/// polynomial: (prod_{i in supp} c_i) x_1^(w1) prod_{i>=2} (1 - x_i^(q-1)),
/// where w1 in [1, q-1] is the weight mod q-1. `agrees` records whether
/// reduce(p_{G,I}) equals it composed with the basis change placing the
/// codeword as first row; guaranteed for maximal codewords.
struct CanonicalForm {
    SupportPolynomial canonical;
    Matrix basis_change; // A such that the first row of inverse(A) * G is the codeword
    SupportPolynomial reduced_support;
    bool agrees = false;
};

CanonicalForm canonical_form(const LinearCode& code, const std::vector<std::uint32_t>& codeword);

/// For each support index j of the codeword of u, a codeword z from a
/// different scalar class covering at least (q-1)(k-1) positions of
/// supp(c) minus j. The scan prefers the largest overlap and reports the
/// lexicographically first witness set.
struct OverlapWitness {
    std::size_t j = 0;                    // excluded support index (0-based)
    bool found = false;                   // guaranteed for maximal codewords
    std::vector<std::uint32_t> codeword;  // the covering codeword
    std::vector<std::size_t> overlap_set; // covered indices, (q-1)(k-1) of them
    std::size_t weight = 0;
};

std::vector<OverlapWitness> support_overlap_witnesses(const LinearCode& code,
                                                      const std::vector<std::uint32_t>& u,
                                                      std::uint64_t max_classes =
                                                          default_max_enum);

} // namespace mincode
