#include "mincode/code.hpp"

#include "mincode/parallel.hpp"

#include <algorithm>

namespace mincode {

LinearCode::LinearCode(FieldPtr field, Matrix generator)
    : field_(std::move(field)),
      n_(generator.cols()),
      k_(generator.rows()),
      generator_(std::move(generator)) {
    if (k_ < 1) throw precondition_error("code dimension must be >= 1");
    if (n_ < k_) throw precondition_error("code length must be >= dimension");
    if (!field_->same_as(*generator_.field()))
        throw precondition_error("generator matrix field mismatch");
    if (rank(generator_) != k_)
        throw precondition_error("generator matrix does not have full rank");
}

std::vector<std::uint32_t> LinearCode::encode(const std::vector<std::uint32_t>& u) const {
    return row_times_matrix(u, generator_);
}

std::vector<std::size_t> support(const std::vector<std::uint32_t>& v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(i);
    return s;
}

std::size_t weight(const std::vector<std::uint32_t>& v) {
    std::size_t w = 0;
    for (auto x : v)
        if (x != 0) ++w;
    return w;
}

namespace {

void check_class_budget(std::uint64_t classes, std::uint64_t max_classes, const char* what) {
    if (classes > max_classes)
        throw limit_error(std::string(what) + " needs " + std::to_string(classes) +
                          " codeword classes, above the enumeration limit " +
                          std::to_string(max_classes) + "; raise --max-enum to proceed");
}

} // namespace

WeightProfile weight_profile(const LinearCode& c, std::uint64_t max_classes) {
    const auto classes = c.message_classes();
    check_class_budget(classes.count(), max_classes, "weight profile");
    const std::uint64_t total = classes.count();
    const std::uint64_t qm1 = c.field()->q() - 1;

    const unsigned workers = thread_count();
    std::vector<std::map<std::size_t, std::uint64_t>> local(
        std::max<std::size_t>(1, std::min<std::uint64_t>(workers, total)));
    parallel_blocks(total, [&](std::size_t block, std::size_t begin, std::size_t end) {
        auto& hist = local[block];
        for (std::uint64_t i = begin; i < end; ++i)
            ++hist[weight(c.encode(classes.at(i)))];
    });

    WeightProfile p;
    p.distribution[0] = 1;
    for (const auto& hist : local)
        for (auto [w, count] : hist) p.distribution[w] += count * qm1;

    BigInt sum = 0, sum_sq = 0;
    bool first = true;
    for (auto [w, count] : p.distribution) {
        if (w == 0) continue;
        if (first) {
            p.d = w;
            first = false;
        }
        p.w_max = w;
        ++p.num_distinct_nonzero_weights;
        sum += BigInt(w) * count;
        sum_sq += BigInt(w) * w * count;
    }
    const BigInt nonzero_words = big_pow(c.field()->q(), c.k()) - 1;
    p.mean = Rational(sum, nonzero_words);
    p.variance = Rational(sum_sq, nonzero_words) - p.mean * p.mean;
    return p;
}

bool is_nondegenerate(const LinearCode& c) {
    const Matrix& g = c.generator();
    for (std::size_t j = 0; j < c.n(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < c.k() && zero; ++i) zero = g.at(i, j) == 0;
        if (zero) return false;
    }
    return true;
}

bool is_projective(const LinearCode& c) {
    if (!is_nondegenerate(c)) return false;
    std::vector<std::vector<std::uint32_t>> normalized;
    normalized.reserve(c.n());
    for (std::size_t j = 0; j < c.n(); ++j) {
        auto col = c.generator().col(j);
        ProjectiveClasses::normalize(*c.field(), col);
        normalized.push_back(std::move(col));
    }
    std::sort(normalized.begin(), normalized.end());
    return std::adjacent_find(normalized.begin(), normalized.end()) == normalized.end();
}

namespace {

// Columns of G outside the support of uG, as a matrix.
Matrix complement_columns(const LinearCode& c, const std::vector<std::uint32_t>& codeword) {
    std::vector<std::size_t> outside;
    for (std::size_t j = 0; j < codeword.size(); ++j)
        if (codeword[j] == 0) outside.push_back(j);
    return c.generator().select_columns(outside);
}

} // namespace

bool is_minimal_codeword(const LinearCode& c, const std::vector<std::uint32_t>& u) {
    if (weight(u) == 0) throw precondition_error("zero message has no minimality status");
    auto cw = c.encode(u);
    return rank(complement_columns(c, cw)) == c.k() - 1;
}

MinimalityResult is_minimal_code(const LinearCode& c, std::uint64_t max_classes) {
    const auto classes = c.message_classes();
    check_class_budget(classes.count(), max_classes, "minimality scan");
    const Field& f = *c.field();

    for (std::uint64_t i = 0; i < classes.count(); ++i) {
        auto u = classes.at(i);
        auto cw = c.encode(u);
        Matrix outside = complement_columns(c, cw);
        if (rank(outside) == c.k() - 1) continue;

        // Left kernel of the outside columns = messages whose codeword is
        // supported inside supp(cw); dimension >= 2 here, so some basis row
        // is independent of u.
        Matrix ker = kernel(outside.transpose());
        std::vector<std::uint32_t> v;
        for (std::size_t r = 0; r < ker.rows(); ++r) {
            auto cand = ker.row(r);
            Matrix pair = Matrix(c.field(), 1, c.k(), u).stacked(Matrix(c.field(), 1, c.k(), cand));
            if (rank(pair) == 2) {
                v = std::move(cand);
                break;
            }
        }
        if (v.empty()) throw verification_error("rank criterion and kernel dimension disagree");
        auto inner = c.encode(v);
        if (support(inner) == support(cw)) {
            // Cancel one support coordinate to force strict containment.
            std::size_t j = support(cw).front();
            std::uint32_t scale = f.mul(inner[j], f.inv(cw[j]));
            for (std::size_t t = 0; t < inner.size(); ++t)
                inner[t] = f.sub(inner[t], f.mul(scale, cw[t]));
        }
        return {false, MinimalityWitness{std::move(cw), std::move(inner)}};
    }
    return {true, std::nullopt};
}

bool is_maximal_codeword(const LinearCode& c, const std::vector<std::uint32_t>& u,
                         std::uint64_t max_classes) {
    if (weight(u) == 0) throw precondition_error("zero message has no maximality status");
    const auto classes = c.message_classes();
    check_class_budget(classes.count(), max_classes, "maximality scan");
    auto cw = c.encode(u);
    auto supp = support(cw);
    const std::uint64_t self = classes.index_of(u);
    for (std::uint64_t i = 0; i < classes.count(); ++i) {
        if (i == self) continue;
        auto other = c.encode(classes.at(i));
        bool contains = true;
        for (std::size_t j : supp) {
            if (other[j] == 0) {
                contains = false;
                break;
            }
        }
        if (contains) return false;
    }
    return true;
}

PlessSecondMoment pless_second_moment(const LinearCode& c, std::uint64_t max_classes) {
    const auto classes = c.message_classes();
    check_class_budget(classes.count(), max_classes, "second-moment check");
    const std::uint64_t q = c.field()->q();
    const std::size_t n = c.n();
    const std::size_t k = c.k();

    BigInt sum_sq = 0;
    for (std::uint64_t i = 0; i < classes.count(); ++i) {
        std::size_t w = weight(c.encode(classes.at(i)));
        sum_sq += BigInt(w) * w;
    }
    sum_sq *= q - 1;

    // Dual weight-1 and weight-2 counts from the generator columns: a zero
    // column gives q-1 weight-1 dual words; a proportional pair of nonzero
    // columns gives q-1 weight-2 words; a pair of zero columns (q-1)^2.
    std::vector<std::size_t> zero_cols;
    std::vector<std::vector<std::uint32_t>> normalized;
    for (std::size_t j = 0; j < n; ++j) {
        auto col = c.generator().col(j);
        if (!ProjectiveClasses::normalize(*c.field(), col))
            zero_cols.push_back(j);
        else
            normalized.push_back(std::move(col));
    }
    std::sort(normalized.begin(), normalized.end());
    std::uint64_t prop_pairs = 0;
    for (std::size_t i = 0; i < normalized.size();) {
        std::size_t j = i;
        while (j < normalized.size() && normalized[j] == normalized[i]) ++j;
        std::uint64_t m = j - i;
        prop_pairs += m * (m - 1) / 2;
        i = j;
    }
    const std::uint64_t z = zero_cols.size();
    const std::uint64_t w1 = (q - 1) * z;
    const std::uint64_t w2 = (q - 1) * prop_pairs + (q - 1) * (q - 1) * (z * (z - 1) / 2);

    // q^(k-2) as an exact rational keeps k = 1 meaningful.
    const Rational qk2 = Rational(big_pow(q, k), BigInt(q) * q);
    const Rational base = qk2 * BigInt(n) * (q - 1) * (BigInt(n) * (q - 1) + 1);
    const Rational rhs = base - qk2 * w1 * (BigInt(q) + BigInt(2) * (q - 1) * (n - 1)) +
                         qk2 * 2 * w2;

    PlessSecondMoment out;
    out.lhs = Rational(sum_sq);
    out.rhs = rhs;
    out.margin = out.lhs - base;
    out.w1_dual = w1;
    out.w2_dual = w2;
    return out;
}

} // namespace mincode
