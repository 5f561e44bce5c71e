#include "mincode/enumerate.hpp"

#include <limits>

namespace mincode {

namespace {
constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max() / 4;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSat / a) return kSat;
    return a * b;
}
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    if (a > kSat - b) return kSat;
    return a + b;
}
} // namespace

ProjectiveClasses::ProjectiveClasses(FieldPtr field, std::size_t length)
    : field_(std::move(field)), length_(length) {
    if (length_ == 0) throw precondition_error("projective classes need length >= 1");
    tail_count_.resize(length_);
    block_start_.resize(length_);
    // Blocks ordered by descending pivot position; pivot L-1 comes first.
    std::uint64_t acc = 0;
    for (std::size_t i = length_; i-- > 0;) {
        std::uint64_t tails = 1;
        for (std::size_t s = 0; s < length_ - 1 - i; ++s) tails = sat_mul(tails, field_->q());
        tail_count_[i] = tails;
        block_start_[i] = acc;
        acc = sat_add(acc, tails);
    }
    count_ = acc;
}

std::vector<std::uint32_t> ProjectiveClasses::at(std::uint64_t idx) const {
    if (idx >= count_) throw precondition_error("projective class index out of range");
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < length_; ++i) {
        if (idx >= block_start_[i] && idx - block_start_[i] < tail_count_[i]) {
            pivot = i;
            break;
        }
    }
    std::vector<std::uint32_t> v(length_, 0);
    v[pivot] = 1;
    std::uint64_t t = idx - block_start_[pivot];
    for (std::size_t j = length_; j-- > pivot + 1;) {
        v[j] = static_cast<std::uint32_t>(t % field_->q());
        t /= field_->q();
    }
    return v;
}

bool ProjectiveClasses::normalize(const Field& f, std::vector<std::uint32_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            if (v[i] != 1) {
                std::uint32_t s = f.inv(v[i]);
                for (std::size_t j = i; j < v.size(); ++j) v[j] = f.mul(v[j], s);
            }
            return true;
        }
    }
    return false;
}

std::uint64_t ProjectiveClasses::index_of(const std::vector<std::uint32_t>& v) const {
    if (v.size() != length_) throw precondition_error("vector length mismatch");
    std::vector<std::uint32_t> w = v;
    if (!normalize(*field_, w)) throw precondition_error("zero vector has no projective class");
    std::size_t pivot = 0;
    while (w[pivot] == 0) ++pivot;
    std::uint64_t t = 0;
    for (std::size_t j = pivot + 1; j < length_; ++j) t = t * field_->q() + w[j];
    return block_start_[pivot] + t;
}

} // namespace mincode
