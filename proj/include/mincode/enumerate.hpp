#pragma once

#include "mincode/gf.hpp"

#include <cstdint>
#include <vector>

namespace mincode {

/// Enumeration of the scalar classes of nonzero length-L vectors over a
/// field, one normalized representative per class (first nonzero
/// coordinate = 1). Order is ascending big-endian base-q encoding of the
/// coordinate tuple, i.e. plain lexicographic order on (v_0, ..., v_{L-1});
/// every "lexicographically first" promise in this library refers to it.
/// Random access by class index keeps parallel partitions deterministic.
class ProjectiveClasses {
  public:
    ProjectiveClasses(FieldPtr field, std::size_t length);

    /// (q^L - 1) / (q - 1)
    std::uint64_t count() const { return count_; }
    std::size_t length() const { return length_; }
    const FieldPtr& field() const { return field_; }

    /// Representative of the idx-th class in canonical order.
    std::vector<std::uint32_t> at(std::uint64_t idx) const;

    /// Class index of an arbitrary nonzero vector (its class).
    std::uint64_t index_of(const std::vector<std::uint32_t>& v) const;

    /// Normalizes v in place so its first nonzero coordinate is 1; returns
    /// false when v is zero.
    static bool normalize(const Field& f, std::vector<std::uint32_t>& v);

  private:
    FieldPtr field_;
    std::size_t length_;
    std::uint64_t count_ = 0;
    std::vector<std::uint64_t> block_start_; // first index with pivot at position i
    std::vector<std::uint64_t> tail_count_;  // q^(L-1-i)
};

} // namespace mincode
