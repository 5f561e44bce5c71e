#pragma once

#include "mincode/io.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace testutil {

using namespace mincode;

inline std::string data_path(const std::string& name) {
    const char* dir = std::getenv("MINCODE_DATA_DIR");
    return (dir ? std::string(dir) : std::string("tests/data")) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing test data file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline LinearCode load_fixture(const std::string& name) {
    return parse_matrix_file(slurp(data_path(name)));
}

// The minimal [14, 4, 7]_3 fixture.
inline LinearCode fixture_14_4_3() { return load_fixture("m14_4_q3.mtx"); }
// The minimal [27, 6, 10]_2 fixture.
inline LinearCode fixture_27_6_2() { return load_fixture("m27_6_q2.mtx"); }

inline Matrix random_full_rank(const FieldPtr& f, std::size_t k, std::size_t n,
                               std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(f->q() - 1));
    while (true) {
        Matrix g(f, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) g.set(i, j, dist(rng));
        if (rank(g) == k) return g;
    }
}

inline Matrix random_nondegenerate(const FieldPtr& f, std::size_t k, std::size_t n,
                                   std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(f->q() - 1));
    while (true) {
        Matrix g = random_full_rank(f, k, n, rng);
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            bool zero = true;
            for (std::size_t i = 0; i < k && zero; ++i) zero = g.at(i, j) == 0;
            ok = !zero;
        }
        if (ok) return g;
    }
}

inline Matrix random_invertible(const FieldPtr& f, std::size_t k, std::mt19937_64& rng) {
    return random_full_rank(f, k, k, rng);
}

// Definitional minimality oracle: pairwise support-containment scan over
// all scalar classes, with supports as bitmasks. Independent of the rank
// criterion it cross-checks.
struct BruteForceMinimality {
    bool minimal = true;
    std::uint64_t outer_class = 0;
    std::uint64_t inner_class = 0;
};

inline BruteForceMinimality brute_force_minimal(const LinearCode& c) {
    const auto classes = c.message_classes();
    std::vector<std::uint64_t> masks(classes.count());
    if (c.n() > 64) throw std::runtime_error("oracle limited to n <= 64");
    for (std::uint64_t i = 0; i < classes.count(); ++i) {
        auto cw = c.encode(classes.at(i));
        std::uint64_t m = 0;
        for (std::size_t j = 0; j < cw.size(); ++j)
            if (cw[j] != 0) m |= 1ull << j;
        masks[i] = m;
    }
    for (std::uint64_t a = 0; a < masks.size(); ++a)
        for (std::uint64_t b = 0; b < masks.size(); ++b) {
            if (a == b) continue;
            if ((masks[b] & ~masks[a]) == 0) // supp(b) inside supp(a)
                return {false, a, b};
        }
    return {true, 0, 0};
}

// Independent maximality oracle for a single class.
inline bool brute_force_maximal(const LinearCode& c, const std::vector<std::uint32_t>& u) {
    const auto classes = c.message_classes();
    auto cw = c.encode(u);
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < cw.size(); ++j)
        if (cw[j] != 0) m |= 1ull << j;
    const std::uint64_t self = classes.index_of(u);
    for (std::uint64_t i = 0; i < classes.count(); ++i) {
        if (i == self) continue;
        auto z = c.encode(classes.at(i));
        std::uint64_t mz = 0;
        for (std::size_t j = 0; j < z.size(); ++j)
            if (z[j] != 0) mz |= 1ull << j;
        if ((m & ~mz) == 0) return false; // supp(z) contains supp(cw)
    }
    return true;
}

// Exact second moment by plain enumeration of every codeword class.
inline BigInt brute_force_sum_sq(const LinearCode& c) {
    const auto classes = c.message_classes();
    BigInt s = 0;
    for (std::uint64_t i = 0; i < classes.count(); ++i) {
        std::size_t w = weight(c.encode(classes.at(i)));
        s += BigInt(w) * w;
    }
    return s * (c.field()->q() - 1);
}

} // namespace testutil
