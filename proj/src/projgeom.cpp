#include "mincode/projgeom.hpp"

#include "mincode/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace mincode {

PointSet::PointSet(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

PointSet PointSet::from_points(FieldPtr field, std::size_t dim, const std::vector<Point>& raw) {
    PointSet s(std::move(field), dim);
    for (const auto& p : raw) s.add(p);
    return s;
}

void PointSet::add(Point p, std::uint32_t multiplicity) {
    if (p.size() != dim_ + 1) throw precondition_error("point coordinate length mismatch");
    if (multiplicity < 1) throw precondition_error("point multiplicity must be >= 1");
    if (!ProjectiveClasses::normalize(*field_, p))
        throw precondition_error("the zero vector is not a projective point");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                               [](const auto& e, const Point& v) { return e.first < v; });
    if (it != entries_.end() && it->first == p)
        it->second += multiplicity;
    else
        entries_.insert(it, {std::move(p), multiplicity});
}

std::size_t PointSet::size() const {
    std::size_t total = 0;
    for (const auto& [p, m] : entries_) total += m;
    return total;
}

std::size_t PointSet::distinct_count() const { return entries_.size(); }

Matrix PointSet::distinct_matrix() const {
    Matrix m(field_, entries_.size(), dim_ + 1);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        for (std::size_t j = 0; j <= dim_; ++j) m.set(i, j, entries_[i].first[j]);
    return m;
}

std::vector<Point> PointSet::expanded() const {
    std::vector<Point> out;
    out.reserve(size());
    for (const auto& [p, mult] : entries_)
        for (std::uint32_t i = 0; i < mult; ++i) out.push_back(p);
    return out;
}

bool PointSet::contains(const Point& normalized) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), normalized,
                               [](const auto& e, const Point& v) { return e.first < v; });
    return it != entries_.end() && it->first == normalized;
}

bool PointSet::operator==(const PointSet& other) const {
    return dim_ == other.dim_ && field_->same_as(*other.field_) && entries_ == other.entries_;
}

namespace {

void check_point_budget(std::uint64_t count, std::uint64_t max_count, const char* what) {
    if (count > max_count)
        throw limit_error(std::string(what) + " needs " + std::to_string(count) +
                          " flats/points, above the enumeration limit " +
                          std::to_string(max_count) + "; raise --max-enum to proceed");
}

std::uint32_t dot(const Field& f, const Point& a, const Point& b) {
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

} // namespace

std::vector<Point> enumerate_points(std::size_t dim, const FieldPtr& field,
                                    std::uint64_t max_count) {
    ProjectiveClasses classes(field, dim + 1);
    check_point_budget(classes.count(), max_count, "point enumeration");
    std::vector<Point> pts;
    pts.reserve(classes.count());
    for (std::uint64_t i = 0; i < classes.count(); ++i) pts.push_back(classes.at(i));
    return pts;
}

std::vector<Flat> hyperplanes(std::size_t dim, const FieldPtr& field, std::uint64_t max_count) {
    auto normals = enumerate_points(dim, field, max_count);
    std::vector<Flat> flats;
    flats.reserve(normals.size());
    for (const auto& u : normals) {
        Matrix normal_row(field, 1, dim + 1, u);
        flats.push_back(Flat{kernel(normal_row), dim - 1});
    }
    return flats;
}

std::vector<Matrix> enumerate_flats(const FieldPtr& field, std::size_t ambient_dim,
                                    std::size_t flat_dim, std::uint64_t max_count) {
    const std::size_t cols = ambient_dim + 1;
    const std::size_t m = flat_dim + 1; // vector-space dimension of the flat
    if (m > cols) throw precondition_error("flat dimension exceeds ambient dimension");
    const std::uint64_t q = field->q();

    // Canonical RREF bases: choose pivot columns, then run over all
    // assignments of the free entries (row i, column c) with c > pivot_i and
    // c not a pivot.
    std::vector<Matrix> out;
    std::vector<std::size_t> pivots(m);
    for (std::size_t i = 0; i < m; ++i) pivots[i] = i;

    auto emit_for_pivots = [&](const std::vector<std::size_t>& piv) {
        std::vector<bool> is_pivot(cols, false);
        for (auto c : piv) is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t c = piv[i] + 1; c < cols; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(i, c);
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < free_pos.size(); ++i) {
            if (combos > max_count / q) throw limit_error("flat enumeration above the limit");
            combos *= q;
        }
        for (std::uint64_t t = 0; t < combos; ++t) {
            Matrix b(field, m, cols);
            for (std::size_t i = 0; i < m; ++i) b.set(i, piv[i], 1);
            std::uint64_t rest = t;
            for (std::size_t i = free_pos.size(); i-- > 0;) {
                b.set(free_pos[i].first, free_pos[i].second,
                      static_cast<std::uint32_t>(rest % q));
                rest /= q;
            }
            out.push_back(std::move(b));
            if (out.size() > max_count) throw limit_error("flat enumeration above the limit");
        }
    };

    // Pivot combinations in lexicographic order.
    auto next_combination = [cols, m](std::vector<std::size_t>& c) {
        for (std::size_t i = m; i-- > 0;) {
            if (c[i] < cols - m + i) {
                ++c[i];
                for (std::size_t j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        emit_for_pivots(pivots);
    } while (next_combination(pivots));
    return out;
}

PointSet pointset_from_code(const LinearCode& c) {
    if (!is_nondegenerate(c))
        throw precondition_error("degenerate code has no projective system");
    PointSet s(c.field(), c.k() - 1);
    for (std::size_t j = 0; j < c.n(); ++j) s.add(c.generator().col(j));
    return s;
}

LinearCode code_from_pointset(const PointSet& s) {
    if (rank(s.distinct_matrix()) != s.dim() + 1)
        throw precondition_error("point set does not span the ambient space");
    auto pts = s.expanded();
    Matrix g(s.field(), s.dim() + 1, pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j)
        for (std::size_t i = 0; i <= s.dim(); ++i) g.set(i, j, pts[j][i]);
    return LinearCode(s.field(), std::move(g));
}

CuttingResult is_cutting(const PointSet& s, std::size_t r, std::uint64_t max_count) {
    const std::size_t N = s.dim();
    if (r < 1 || r > N) throw precondition_error("blocking codimension out of range");
    Matrix all = s.distinct_matrix();
    if (rank(all) != N + 1)
        throw precondition_error("point set does not span the ambient space");

    if (r == 1) {
        ProjectiveClasses duals(s.field(), N + 1);
        check_point_budget(duals.count(), max_count, "hyperplane scan");
        const std::uint64_t total = duals.count();
        const Field& f = *s.field();
        const auto& entries = s.entries();

        std::vector<std::uint64_t> first_fail(
            std::max<std::size_t>(1, std::min<std::uint64_t>(thread_count(), total)), total);
        parallel_blocks(total, [&](std::size_t block, std::size_t begin, std::size_t end) {
            for (std::uint64_t i = begin; i < end; ++i) {
                Point u = duals.at(i);
                std::vector<std::size_t> incident;
                for (std::size_t e = 0; e < entries.size(); ++e)
                    if (dot(f, u, entries[e].first) == 0) incident.push_back(e);
                Matrix sub(s.field(), incident.size(), N + 1);
                for (std::size_t row = 0; row < incident.size(); ++row)
                    for (std::size_t c = 0; c <= N; ++c)
                        sub.set(row, c, entries[incident[row]].first[c]);
                if (rank(sub) != N) {
                    first_fail[block] = i;
                    return; // earliest failure in this block; blocks merged by min
                }
            }
        });
        std::uint64_t fail = total;
        for (auto v : first_fail) fail = std::min(fail, v);
        if (fail == total) return {true, std::nullopt, std::nullopt};
        return {false, duals.at(fail), std::nullopt};
    }

    // General r: every (N-r)-flat must be spanned by its incident points.
    auto flats = enumerate_flats(s.field(), N, N - r, max_count);
    const std::size_t m = N - r + 1;
    for (const auto& basis : flats) {
        std::vector<Point> incident;
        for (const auto& [p, mult] : s.entries())
            if (in_rowspace(basis, p)) incident.push_back(p);
        Matrix sub(s.field(), incident.size(), N + 1);
        for (std::size_t row = 0; row < incident.size(); ++row)
            for (std::size_t c = 0; c <= N; ++c) sub.set(row, c, incident[row][c]);
        if (rank(sub) != m) return {false, std::nullopt, basis};
    }
    return {true, std::nullopt, std::nullopt};
}

bool is_tfold_blocking(const PointSet& s, std::uint64_t t, std::size_t r,
                       std::uint64_t max_count) {
    const std::size_t N = s.dim();
    if (r < 1 || r > N) throw precondition_error("blocking codimension out of range");
    if (r == 1) {
        ProjectiveClasses duals(s.field(), N + 1);
        check_point_budget(duals.count(), max_count, "hyperplane scan");
        const Field& f = *s.field();
        for (std::uint64_t i = 0; i < duals.count(); ++i) {
            Point u = duals.at(i);
            std::uint64_t hits = 0;
            for (const auto& [p, mult] : s.entries())
                if (dot(f, u, p) == 0) ++hits;
            if (hits < t) return false;
        }
        return true;
    }
    auto flats = enumerate_flats(s.field(), N, N - r, max_count);
    for (const auto& basis : flats) {
        std::uint64_t hits = 0;
        for (const auto& [p, mult] : s.entries())
            if (in_rowspace(basis, p)) ++hits;
        if (hits < t) return false;
    }
    return true;
}

std::size_t max_hyperplane_count(const PointSet& s, std::uint64_t max_count) {
    ProjectiveClasses duals(s.field(), s.dim() + 1);
    check_point_budget(duals.count(), max_count, "hyperplane scan");
    const Field& f = *s.field();
    std::size_t best = 0;
    for (std::uint64_t i = 0; i < duals.count(); ++i) {
        Point u = duals.at(i);
        std::size_t hits = 0;
        for (const auto& [p, mult] : s.entries())
            if (dot(f, u, p) == 0) hits += mult;
        best = std::max(best, hits);
    }
    return best;
}

std::string pointset_to_text(const PointSet& s) {
    std::ostringstream os;
    os << "PG " << s.dim() << " " << s.field()->q() << "\n";
    for (const auto& p : s.expanded()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) os << " ";
            os << p[i];
        }
        os << "\n";
    }
    return os.str();
}

PointSet pointset_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw parse_error("empty point set file", 1, 1);
    std::istringstream hs(header);
    std::string tag;
    std::uint64_t dim = 0, q = 0;
    if (!(hs >> tag >> dim >> q) || tag != "PG")
        throw parse_error("expected header 'PG N q'", 1, 1);
    FieldPtr field = field_for_order(q);
    PointSet s(field, dim);
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        Point p;
        std::uint64_t v;
        while (ls >> v) {
            if (v >= field->q())
                throw parse_error("element encoding out of range", lineno, p.size() + 1);
            p.push_back(static_cast<std::uint32_t>(v));
        }
        if (p.size() != dim + 1)
            throw parse_error("expected " + std::to_string(dim + 1) + " coordinates", lineno, 1);
        s.add(std::move(p));
    }
    return s;
}

} // namespace mincode
