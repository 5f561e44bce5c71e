#pragma once

#include "mincode/code.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mincode {

/// A point of PG(N, q): length-(N+1) coordinates normalized so the first
/// nonzero entry is 1. Plain vectors keep the multiset containers light;
/// normalization happens at PointSet boundaries.
using Point = std::vector<std::uint32_t>;

/// Multiset of points of PG(N, q), the projective-system side of a code.
/// Points are stored normalized, lexicographically sorted, with
/// multiplicities >= 1 (fixture stability relies on this order).
class PointSet {
  public:
    PointSet(FieldPtr field, std::size_t dim);

    /// Builds from raw (possibly unnormalized, repeated) representatives.
    static PointSet from_points(FieldPtr field, std::size_t dim,
                                const std::vector<Point>& raw);

    const FieldPtr& field() const { return field_; }
    /// Projective dimension N of the ambient PG(N, q).
    std::size_t dim() const { return dim_; }

    void add(Point p, std::uint32_t multiplicity = 1);

    const std::vector<std::pair<Point, std::uint32_t>>& entries() const { return entries_; }

    /// Number of points counted with multiplicity (.. the code length).
    std::size_t size() const;
    std::size_t distinct_count() const;

    /// Distinct points as rows of a matrix (for rank computations).
    Matrix distinct_matrix() const;

    /// All points expanded by multiplicity, in stored order.
    std::vector<Point> expanded() const;

    bool contains(const Point& normalized) const;

    bool operator==(const PointSet& other) const;

  private:
    FieldPtr field_;
    std::size_t dim_;
    std::vector<std::pair<Point, std::uint32_t>> entries_;
};

/// A d-flat of PG(N, q): the projectivized row space of a full-rank basis
/// matrix; dim = rank - 1.
struct Flat {
    Matrix basis;
    std::size_t dim = 0;
};

/// All points of PG(N, q) in canonical (lexicographic) order.
std::vector<Point> enumerate_points(std::size_t dim, const FieldPtr& field,
                                    std::uint64_t max_count = default_max_enum);

/// All hyperplanes of PG(N, q), as flats; hyperplanes are dual points, so
/// the count matches enumerate_points.
std::vector<Flat> hyperplanes(std::size_t dim, const FieldPtr& field,
                              std::uint64_t max_count = default_max_enum);

/// All flats of the given projective dimension, as canonical (RREF) basis
/// matrices in a fixed deterministic order. Feasible for small parameters
/// only.
std::vector<Matrix> enumerate_flats(const FieldPtr& field, std::size_t ambient_dim,
                                    std::size_t flat_dim,
                                    std::uint64_t max_count = default_max_enum);

/// Columns of a generator matrix as a projective system. Requires a
/// nondegenerate code; multiplicities record repeated columns.
PointSet pointset_from_code(const LinearCode& c);

/// Code generated by the matrix whose columns are the stored points
/// (expanded by multiplicity). Requires the set to span the ambient space.
LinearCode code_from_pointset(const PointSet& s);

struct CuttingResult {
    bool cutting = false;
    /// On failure for r = 1: normal vector of the lexicographically first
    /// hyperplane whose intersection does not span it.
    std::optional<Point> witness_normal;
    /// On failure for r > 1: basis of the offending flat.
    std::optional<Matrix> witness_flat;
};

/// Cutting test: every (N-r)-flat must be spanned by its intersection with
/// the set. r = 1 iterates hyperplanes as dual points (one rank computation
/// each, multiplicity-blind); r > 1 falls back to flat enumeration.
/// Requires the set to span the ambient space.
CuttingResult is_cutting(const PointSet& s, std::size_t r = 1,
                         std::uint64_t max_count = default_max_enum);

/// Every (N-r)-flat meets the set in at least t distinct points.
bool is_tfold_blocking(const PointSet& s, std::uint64_t t, std::size_t r,
                       std::uint64_t max_count = default_max_enum);

/// Largest multiset intersection of the set with a hyperplane; the minimum
/// distance of the corresponding code is size() minus this.
std::size_t max_hyperplane_count(const PointSet& s,
                                 std::uint64_t max_count = default_max_enum);

/// Text format: header "PG N q", then one line per point (multiplicities as
/// repeated lines) of N+1 space-separated element encodings.
std::string pointset_to_text(const PointSet& s);
PointSet pointset_from_text(const std::string& text);

} // namespace mincode
