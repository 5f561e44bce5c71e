#include "mincode/constructions.hpp"

#include <algorithm>
#include <set>

namespace mincode {

namespace {

// Builds the code, runs the cutting verification and the weight
// enumeration, and cross-checks the formula values. Nothing is released
// unverified.
ConstructionReport finalize(std::string name, std::uint64_t q, std::size_t k, PointSet set,
                            BigInt expected_n, std::optional<ExpectedDistance> expected_d,
                            std::uint64_t max_enum) {
    if (BigInt(set.size()) != expected_n)
        throw verification_error(name + ": built " + std::to_string(set.size()) +
                                 " points but the formula gives " + expected_n.str());
    LinearCode code = code_from_pointset(set);
    CuttingResult cut = is_cutting(set, 1, max_enum);
    if (!cut.cutting) throw verification_error(name + ": cutting verification failed");
    WeightProfile profile = weight_profile(code, max_enum);
    if (expected_d) {
        if (expected_d->exact && BigInt(profile.d) != expected_d->value)
            throw verification_error(name + ": verified d = " + std::to_string(profile.d) +
                                     " but the formula gives " + expected_d->value.str());
        if (!expected_d->exact && BigInt(profile.d) < expected_d->value)
            throw verification_error(name + ": verified d = " + std::to_string(profile.d) +
                                     " below the guaranteed " + expected_d->value.str());
    }
    ConstructionReport report{std::move(name), q,           k,    std::move(set),
                              std::move(code), expected_n,  expected_d,
                              true,            profile.d};
    return report;
}

PointSet union_of_points(const FieldPtr& field, std::size_t dim,
                         const std::vector<Point>& raw) {
    // Set union: normalize, dedupe, multiplicity one.
    std::set<Point> seen;
    PointSet s(field, dim);
    for (Point p : raw) {
        if (!ProjectiveClasses::normalize(*field, p))
            throw precondition_error("the zero vector is not a projective point");
        if (seen.insert(p).second) s.add(p);
    }
    return s;
}

std::vector<Point> line_through(const Field& f, const Point& a, const Point& b) {
    std::vector<Point> pts;
    pts.push_back(b);
    for (std::uint32_t lambda = 0; lambda < f.q(); ++lambda) {
        Point p(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) p[i] = f.add(a[i], f.mul(lambda, b[i]));
        pts.push_back(std::move(p));
    }
    return pts;
}

} // namespace

ConstructionReport tetrahedron(std::uint64_t q, std::size_t k, std::uint64_t max_enum) {
    if (k < 2) throw precondition_error("tetrahedron requires k >= 2");
    FieldPtr field = field_for_order(q);
    std::vector<Point> raw;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            Point ei(k, 0), ej(k, 0);
            ei[i] = 1;
            ej[j] = 1;
            auto line = line_through(*field, ei, ej);
            raw.insert(raw.end(), line.begin(), line.end());
        }
    }
    PointSet set = union_of_points(field, k - 1, raw);
    BigInt n = BigInt(q - 1) * binomial(k, 2) + k;
    ExpectedDistance d{BigInt(q - 1) * (k - 1) + 1, true};
    return finalize("tetrahedron", q, k, std::move(set), n, d, max_enum);
}

ConstructionReport rational_normal_tangent(std::uint64_t q, std::size_t k,
                                           std::uint64_t max_enum) {
    if (k < 2) throw precondition_error("rational normal tangent set requires k >= 2");
    FieldPtr field = field_for_order(q);
    if (q < 2 * k - 3)
        throw precondition_error("rational normal tangent set requires q >= 2k-3 (q = " +
                                 std::to_string(q) + ", 2k-3 = " + std::to_string(2 * k - 3) +
                                 ")");
    if (field->p() < k)
        throw precondition_error("rational normal tangent set requires characteristic >= k (p = " +
                                 std::to_string(field->p()) + ", k = " + std::to_string(k) + ")");
    const Field& f = *field;
    // Each tangent line contributes its q+1 points as a multiset: for
    // k >= 4 the tangent lines are pairwise skew anyway, while in the plane
    // (k = 3) they pairwise meet and the meeting points carry multiplicity
    // two, keeping n = (2k-3)(q+1) exact.
    PointSet set(field, k - 1);
    for (std::uint32_t t = 0; t < 2 * k - 3; ++t) {
        Point c(k), dc(k);
        for (std::size_t i = 0; i < k; ++i) {
            c[i] = f.pow(t, i);
            // formal derivative coefficient i * t^(i-1); i reduced mod p
            std::uint32_t scalar = static_cast<std::uint32_t>(i % f.p());
            dc[i] = i == 0 ? 0 : f.mul(scalar, f.pow(t, i - 1));
        }
        for (auto& pnt : line_through(f, c, dc)) set.add(std::move(pnt));
    }
    BigInt n = BigInt(2 * k - 3) * (q + 1);
    return finalize("rnt", q, k, std::move(set), n, std::nullopt, max_enum);
}

namespace {

// Normalized representatives of PG(t-1, q^r) over a tower field, in
// ascending lexicographic order of the coordinate tuples.
std::vector<std::vector<std::uint64_t>> tower_projective_points(const TowerField& K,
                                                                std::uint32_t t,
                                                                std::uint64_t max_enum) {
    std::uint64_t classes = 1; // (Q^t - 1)/(Q - 1) computed incrementally
    for (std::uint32_t i = 1; i < t; ++i) {
        classes = classes * K.order() + 1;
        if (classes > max_enum) throw limit_error("tower point enumeration above the limit");
    }
    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(classes);
    for (std::uint32_t pivot = t; pivot-- > 0;) {
        std::uint64_t tails = 1;
        for (std::uint32_t s = pivot + 1; s < t; ++s) tails *= K.order();
        for (std::uint64_t tail = 0; tail < tails; ++tail) {
            std::vector<std::uint64_t> v(t, 0);
            v[pivot] = 1;
            std::uint64_t rest = tail;
            for (std::uint32_t j = t; j-- > pivot + 1;) {
                v[j] = rest % K.order();
                rest /= K.order();
            }
            out.push_back(std::move(v));
        }
    }
    return out;
}

// Blockwise multiplication-matrix image: row j of block b holds the base
// coordinates of gamma^j * v_b, so the row space is the spread element of
// the projective point [v].
Matrix tower_flat_basis(const TowerField& K, const std::vector<std::uint64_t>& v) {
    const FieldPtr& base = K.base();
    const std::uint32_t r = K.degree();
    const std::uint32_t t = static_cast<std::uint32_t>(v.size());
    Matrix basis(base, r, static_cast<std::size_t>(r) * t);
    for (std::uint32_t j = 0; j < r; ++j) {
        std::uint64_t xj = K.pow(K.generator(), j);
        for (std::uint32_t b = 0; b < t; ++b) {
            auto digits = K.coords(K.mul(xj, v[b]));
            for (std::uint32_t c = 0; c < r; ++c)
                basis.set(j, static_cast<std::size_t>(b) * r + c, digits[c]);
        }
    }
    return basis;
}

// All points of the projectivized row space of a basis matrix.
std::vector<Point> flat_points(const Matrix& basis) {
    ProjectiveClasses classes(basis.field(), basis.rows());
    std::vector<Point> pts;
    pts.reserve(classes.count());
    for (std::uint64_t i = 0; i < classes.count(); ++i)
        pts.push_back(row_times_matrix(classes.at(i), basis));
    return pts;
}

bool pair_choice_valid(std::uint64_t q, std::uint32_t r, const PairChoice& pc) {
    if (pc.i == pc.j) return false;
    for (std::uint64_t s = 2; s <= r; ++s) {
        if (r % s != 0) continue;
        std::uint64_t ns = 0, power = 1;
        for (std::uint64_t i = 0; i < s; ++i) {
            ns += power;
            power *= q;
        } // (q^s - 1)/(q - 1)
        std::int64_t diff = static_cast<std::int64_t>(pc.j) - static_cast<std::int64_t>(pc.i);
        std::int64_t m = diff % static_cast<std::int64_t>(ns);
        if (m < 0) m += static_cast<std::int64_t>(ns);
        if (m == 0) return false;
    }
    return true;
}

// The t^2 spread elements of the cutting construction: the t coordinate
// blocks and two extra elements per block pair.
std::vector<Matrix> spread_cutting_blocks(const TowerField& K, std::uint32_t t,
                                          std::optional<PairChoice> pair) {
    const std::uint64_t q = K.base()->q();
    const std::uint32_t r = K.degree();
    PairChoice pc;
    if (pair) {
        pc = *pair;
        if (pc.i < 1 || pc.i >= K.order() || pc.j < 1 || pc.j >= K.order() ||
            !pair_choice_valid(q, r, pc))
            throw precondition_error(
                "pair choice (i, j) violates the spread block condition: j - i must be nonzero "
                "mod (q^s-1)/(q-1) for every s > 1 dividing r");
    } else {
        pc = PairChoice{K.order() - 1, 1};
        if (!pair_choice_valid(q, r, pc)) {
            bool found = false;
            for (std::uint64_t i = 1; i < K.order() - 1 && !found; ++i)
                for (std::uint64_t j = i + 1; j < K.order() && !found; ++j)
                    if (pair_choice_valid(q, r, PairChoice{i, j})) {
                        pc = PairChoice{i, j};
                        found = true;
                    }
            if (!found) throw precondition_error("no valid spread pair choice exists");
        }
    }

    std::vector<Matrix> blocks;
    for (std::uint32_t l = 0; l < t; ++l) {
        std::vector<std::uint64_t> v(t, 0);
        v[l] = 1;
        blocks.push_back(tower_flat_basis(K, v));
    }
    const std::uint64_t gi = K.pow(K.generator(), pc.i);
    const std::uint64_t gj = K.pow(K.generator(), pc.j);
    for (std::uint32_t l = 0; l < t; ++l) {
        for (std::uint32_t m = l + 1; m < t; ++m) {
            for (std::uint64_t g : {gi, gj}) {
                std::vector<std::uint64_t> v(t, 0);
                v[l] = 1;
                v[m] = g;
                blocks.push_back(tower_flat_basis(K, v));
            }
        }
    }
    return blocks;
}

PointSet union_of_flats(const FieldPtr& field, std::size_t ambient_dim,
                        const std::vector<Matrix>& blocks, const char* name) {
    std::vector<Point> raw;
    for (const auto& b : blocks) {
        auto pts = flat_points(b);
        raw.insert(raw.end(), pts.begin(), pts.end());
    }
    PointSet set = union_of_points(field, ambient_dim, raw);
    // Spread elements must be pairwise disjoint, so the union size is exact.
    std::uint64_t per_flat = (blocks.empty() ? 0 : flat_points(blocks.front()).size());
    if (set.size() != blocks.size() * per_flat)
        throw verification_error(std::string(name) + ": selected spread elements overlap");
    return set;
}

} // namespace

std::vector<SpreadElement> desarguesian_spread(std::uint64_t q, std::uint32_t r, std::uint32_t t,
                                               std::uint64_t max_enum) {
    if (r < 1 || t < 1) throw precondition_error("spread parameters must be positive");
    FieldPtr field = field_for_order(q);
    TowerField K(field, r);
    auto points = tower_projective_points(K, t, max_enum);
    std::vector<SpreadElement> out;
    out.reserve(points.size());
    for (const auto& v : points) out.push_back(SpreadElement{tower_flat_basis(K, v)});
    return out;
}

ConstructionReport spread_cutting_set(std::uint64_t q, std::uint32_t r, std::uint32_t t,
                                      std::optional<PairChoice> pair, std::uint64_t max_enum) {
    if (r < 2) throw precondition_error("spread cutting set requires r >= 2");
    if (t < 2) throw precondition_error("spread cutting set requires t >= 2");
    FieldPtr field = field_for_order(q);
    TowerField K(field, r);
    auto blocks = spread_cutting_blocks(K, t, pair);
    PointSet set = union_of_flats(field, static_cast<std::size_t>(r) * t - 1, blocks,
                                  "spread-cutting");
    BigInt flat_size = (big_pow(q, r) - 1) / (q - 1);
    BigInt n = BigInt(t) * t * flat_size;
    return finalize("spread-cutting", q, static_cast<std::size_t>(r) * t, std::move(set), n,
                    std::nullopt, max_enum);
}

ConstructionReport even_lines_code(std::uint64_t q, std::size_t k, std::uint64_t max_enum) {
    if (k % 2 != 0 || k < 4)
        throw precondition_error("the line construction requires even k >= 4");
    FieldPtr field = field_for_order(q);
    TowerField K(field, 2);
    const std::uint32_t t = static_cast<std::uint32_t>(k / 2);
    auto blocks = spread_cutting_blocks(K, t, std::nullopt);
    PointSet set = union_of_flats(field, k - 1, blocks, "even-lines");
    BigInt n = BigInt(q + 1) * k * k / 4;
    ExpectedDistance d{BigInt(q) * (k - 1), true};
    return finalize("even-lines", q, k, std::move(set), n, d, max_enum);
}

std::vector<PointSet> baer_partition(std::uint64_t q) {
    if (!is_perfect_square(q)) throw precondition_error("Baer subplanes require a square q");
    const std::uint64_t root = isqrt(q);
    FieldPtr field = field_for_order(q);
    TowerField K(field, 3);
    const std::uint64_t subplane_size = q + root + 1;  // order of the subgroup
    const std::uint64_t subplane_count = q - root + 1; // index in the Singer cycle

    auto point_of = [&](std::uint64_t elem) {
        auto digits = K.coords(elem);
        return Point(digits.begin(), digits.end());
    };

    std::vector<PointSet> out;
    std::uint64_t coset_rep = 1; // gamma^j for j = 0..count-1
    std::uint64_t step = K.pow(K.generator(), subplane_count);
    for (std::uint64_t j = 0; j < subplane_count; ++j) {
        std::vector<Point> raw;
        std::uint64_t cur = coset_rep;
        for (std::uint64_t m = 0; m < subplane_size; ++m) {
            raw.push_back(point_of(cur));
            cur = K.mul(cur, step);
        }
        PointSet s = union_of_points(field, 2, raw);
        if (s.size() != subplane_size)
            throw verification_error("Singer coset did not yield distinct points");
        out.push_back(std::move(s));
        coset_rep = K.mul(coset_rep, K.generator());
    }
    return out;
}

PointSet substitute_blocks(const FieldPtr& field, std::size_t ambient_dim,
                           const std::vector<Matrix>& blocks,
                           const std::vector<PointSet>& inners, std::uint64_t max_enum) {
    if (blocks.size() != inners.size())
        throw precondition_error("one inner set per block is required");
    std::vector<Point> raw;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const Matrix& basis = blocks[b];
        const PointSet& inner = inners[b];
        if (basis.cols() != ambient_dim + 1)
            throw precondition_error("block basis does not live in the ambient space");
        if (inner.dim() + 1 != basis.rows())
            throw precondition_error("inner set dimension does not match its block");
        if (rank(inner.distinct_matrix()) != basis.rows())
            throw precondition_error("inner set does not span its flat");
        CuttingResult inner_cut = is_cutting(inner, 1, max_enum);
        if (!inner_cut.cutting)
            throw precondition_error("inner set is not cutting inside its flat");
        for (const auto& [p, mult] : inner.entries()) raw.push_back(row_times_matrix(p, basis));
    }
    return union_of_points(field, ambient_dim, raw);
}

ConstructionReport baer_code(std::uint64_t q, std::size_t k, std::uint64_t max_enum) {
    if (k % 3 != 0 || k < 3)
        throw precondition_error("the Baer construction requires k divisible by 3");
    if (!is_perfect_square(q))
        throw precondition_error("the Baer construction requires a square q");
    FieldPtr field = field_for_order(q);
    const std::uint64_t root = isqrt(q);
    const BigInt subplane_size = BigInt(q) + root + 1;

    auto subplanes = baer_partition(q);
    // Two disjoint Baer subplanes form a cutting blocking set of PG(2, q).
    std::vector<Point> pair_raw;
    for (int i = 0; i < 2; ++i)
        for (const auto& [p, mult] : subplanes[i].entries()) pair_raw.push_back(p);
    PointSet baer_pair = union_of_points(field, 2, pair_raw);

    if (k == 3) {
        BigInt n = 2 * subplane_size;
        return finalize("baer", q, k, std::move(baer_pair), n, std::nullopt, max_enum);
    }

    TowerField K(field, 3);
    const std::uint32_t t = static_cast<std::uint32_t>(k / 3);
    auto blocks = spread_cutting_blocks(K, t, std::nullopt);
    std::vector<PointSet> inners(blocks.size(), baer_pair);
    PointSet set = substitute_blocks(field, k - 1, blocks, inners, max_enum);
    BigInt n = 2 * subplane_size * BigInt(k) * k / 9;
    if (BigInt(set.size()) != n)
        throw verification_error("baer: substituted subplanes overlap across blocks");
    ExpectedDistance d{BigInt(q) * (4 * BigInt(k) / 3 - 2), false};
    return finalize("baer", q, k, std::move(set), n, d, max_enum);
}

ConstructionReport lift(const ConstructionReport& inner, std::uint64_t max_enum) {
    const std::size_t k = inner.k; // inner dimension; output has k + 1
    const FieldPtr& field = inner.pointset.field();
    const Field& f = *field;
    const std::uint64_t q = f.q();

    // Embed into the hyperplane x_{k+1} = 0.
    std::vector<Point> raw;
    for (const auto& [p, mult] : inner.pointset.entries()) {
        Point e = p;
        e.push_back(0);
        raw.push_back(std::move(e));
    }

    // Lexicographically first k inner points spanning the hyperplane.
    Matrix chosen(field, 0, k);
    std::vector<Point> anchors;
    for (const auto& [p, mult] : inner.pointset.entries()) {
        if (anchors.size() == k) break;
        Matrix cand = chosen.stacked(Matrix(field, 1, k, p));
        if (rank(cand) == anchors.size() + 1) {
            chosen = std::move(cand);
            anchors.push_back(p);
        }
    }
    if (anchors.size() != k)
        throw precondition_error("inner set does not span its space; cannot lift");

    // External point and the punctured lines through it.
    Point external(k + 1, 0);
    external[k] = 1;
    raw.push_back(external);
    for (const auto& a : anchors) {
        for (std::uint32_t lambda = 1; lambda < q; ++lambda) {
            Point pnt(k + 1);
            for (std::size_t i = 0; i < k; ++i) pnt[i] = a[i];
            pnt[k] = lambda; // a + lambda * external
            raw.push_back(std::move(pnt));
        }
    }

    PointSet set = union_of_points(field, k, raw);
    BigInt n = BigInt(inner.pointset.size()) + BigInt(q - 1) * k + 1;
    return finalize("lift:" + inner.name, q, k + 1, std::move(set), n, std::nullopt, max_enum);
}

BestKnownLength best_known_length(std::uint64_t q, std::size_t k) {
    if (k < 2) throw precondition_error("lengths are tabulated for k >= 2");
    const bool square = is_perfect_square(q);
    const std::uint64_t root = square ? isqrt(q) : 0;
    const BigInt subplane = square ? BigInt(q) + root + 1 : BigInt(0);

    if (k == 2) return {BigInt(q) + 1, "projective-line"};
    if (k == 3) {
        if (square && q >= 9 && 2 * subplane < BigInt(3) * q) return {2 * subplane, "baer"};
        return {BigInt(3) * q, "tetrahedron"};
    }
    const BigInt even_val = BigInt(q + 1) * k * k / 4;
    const BigInt baer_val = square ? 2 * subplane * BigInt(k) * k / 9 : BigInt(0);
    if (k % 2 == 0) {
        if (k % 3 == 0 && square && baer_val < even_val) return {baer_val, "baer"};
        return {even_val, "even-lines"};
    }
    if (k % 3 == 0 && square) return {baer_val, "baer"};
    if (k % 3 == 1 && square) {
        BigInt n = 2 * subplane * BigInt(k - 1) * (k - 1) / 9 + BigInt(q - 1) * (k - 1) + 1;
        return {n, "lift:baer"};
    }
    BigInt n = BigInt(q + 1) * (k - 1) * (k - 1) / 4 + BigInt(q - 1) * (k - 1) + 1;
    return {n, "lift:even-lines"};
}

ConstructionReport best_known(std::uint64_t q, std::size_t k, std::uint64_t max_enum) {
    auto choice = best_known_length(q, k);
    if (choice.name == "projective-line") {
        FieldPtr field = field_for_order(q);
        PointSet set = PointSet::from_points(field, 1, enumerate_points(1, field, max_enum));
        return finalize("projective-line", q, 2, std::move(set), BigInt(q) + 1,
                        ExpectedDistance{BigInt(q), true}, max_enum);
    }
    if (choice.name == "tetrahedron") return tetrahedron(q, k, max_enum);
    if (choice.name == "baer") return baer_code(q, k, max_enum);
    if (choice.name == "even-lines") return even_lines_code(q, k, max_enum);
    if (choice.name == "lift:baer") return lift(baer_code(q, k - 1, max_enum), max_enum);
    return lift(even_lines_code(q, k - 1, max_enum), max_enum);
}

} // namespace mincode
