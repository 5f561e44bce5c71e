#pragma once

#include "mincode/errors.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mincode {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^e). Elements are unsigned integers in [0, q)
/// encoding polynomial-basis coordinates in base p: value = sum a_i p^i.
/// Immutable after construction; all operations are pure.
class Field {
  public:
    /// GF(p^e) with the canonical modulus: the monic irreducible degree-e
    /// polynomial over GF(p) whose coefficient tuple (a_{e-1},...,a_0) is
    /// lexicographically smallest, i.e. the smallest integer encoding.
    /// No polynomial tables are consulted; everything is recomputed, so
    /// encodings are reproducible across builds.
    static FieldPtr make(std::uint64_t p, std::uint32_t e);

    /// GF(p^e) with an explicit modulus encoding (self-describing files).
    /// For e = 1 the encodings 0 and p both denote the residue-ring
    /// convention (modulus x).
    static FieldPtr with_modulus(std::uint64_t p, std::uint32_t e, std::uint64_t modulus);

    std::uint64_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t modulus() const { return modulus_; }
    /// Fixed primitive element: smallest encoding of multiplicative order q-1.
    std::uint32_t primitive() const { return primitive_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t n) const;

    /// Schoolbook polynomial multiplication with modulus reduction. The
    /// table path must agree with this on every input (tested).
    std::uint32_t mul_schoolbook(std::uint32_t a, std::uint32_t b) const;

    bool is_zero(std::uint32_t a) const { return a == 0; }
    bool uses_tables() const { return !exp_.empty(); }

    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(std::uint32_t a) const;

    /// Polynomial-basis coordinates (base-p digits), length e.
    std::vector<std::uint32_t> coords(std::uint32_t a) const;
    std::uint32_t from_coords(const std::vector<std::uint32_t>& digits) const;

    void check_element(std::uint32_t a) const;

    /// Structural equality: same (p, e, modulus).
    bool same_as(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

    std::string describe() const;

    /// Largest supported field order.
    static constexpr std::uint64_t max_order = 1ull << 20;

  private:
    Field() = default;
    void init_tables();
    void find_primitive();

    std::uint64_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint64_t q_ = 0;
    std::uint64_t modulus_ = 0;
    std::uint32_t primitive_ = 0;
    std::vector<std::uint32_t> modulus_coeffs_; // length e+1, monic
    std::vector<std::uint32_t> exp_;            // gamma^i, i in [0, q-1); empty above 2^16
    std::vector<std::uint32_t> log_;            // inverse of exp_ on [1, q)
};

/// A field element bound to its field; arithmetic checks operand fields.
struct Element {
    std::uint32_t value = 0;
    FieldPtr field;

    Element() = default;
    Element(std::uint32_t v, FieldPtr f);

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator/(const Element& a, const Element& b);
    friend bool operator==(const Element& a, const Element& b);
};

/// Dense univariate polynomial over a Field; coefficients low-to-high with
/// no trailing zeros (zero polynomial = empty vector).
struct Poly {
    FieldPtr field;
    std::vector<std::uint32_t> coeffs;

    Poly() = default;
    Poly(FieldPtr f, std::vector<std::uint32_t> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    std::uint32_t coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
    std::uint32_t eval(std::uint32_t x) const;

    static Poly zero(FieldPtr f) { return Poly(std::move(f), {}); }
    static Poly constant(FieldPtr f, std::uint32_t c);
    static Poly x(FieldPtr f);

    /// Integer encoding sum c_i q^i over the coefficient field's order.
    std::uint64_t encoding() const;
    static Poly from_encoding(FieldPtr f, std::uint64_t enc);

    std::string to_string() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
};

/// Remainder of a by monic divisor m.
Poly poly_mod(const Poly& a, const Poly& m);
/// a^n modulo the monic polynomial m.
Poly poly_powmod(const Poly& a, std::uint64_t n, const Poly& m);
/// Exhaustive root/divisor search; adequate at the supported sizes.
bool is_irreducible(const Poly& f);

/// Minimal polynomial over F of an element a of K, where K = GF(q^r) and
/// F = GF(q) share the characteristic and F.e divides K.e. The subfield
/// embedding F -> K is fixed by choosing the smallest-encoding root of F's
/// modulus inside K. Result is monic, irreducible over F, of degree
/// dividing K.e / F.e.
Poly minimal_polynomial(std::uint32_t a, const FieldPtr& K, const FieldPtr& F);

/// GF(q^r) presented as GF(q)[y]/(m) where m is the smallest primitive
/// monic degree-r polynomial over the base (the class of y generates the
/// multiplicative group). Element encoding: r base-q digits. This is the
/// field-reduction workhorse: the companion matrix of m is the
/// multiplication-by-y matrix in the power basis, so matrix images of
/// elements come out of plain coordinate arithmetic.
class TowerField {
  public:
    TowerField(FieldPtr base, std::uint32_t r);

    const FieldPtr& base() const { return base_; }
    std::uint32_t degree() const { return r_; }
    std::uint64_t order() const { return order_; }
    const Poly& modulus() const { return modulus_; }

    /// The class of y; primitive by construction.
    std::uint64_t generator() const { return base_->q(); }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t n) const;

    std::vector<std::uint32_t> coords(std::uint64_t a) const;
    std::uint64_t from_coords(const std::vector<std::uint32_t>& digits) const;

  private:
    FieldPtr base_;
    std::uint32_t r_ = 0;
    std::uint64_t order_ = 0;
    Poly modulus_;
};

/// Prime factors (without multiplicity) by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Canonical field of a prime-power order q (errors otherwise).
FieldPtr field_for_order(std::uint64_t q);

} // namespace mincode
