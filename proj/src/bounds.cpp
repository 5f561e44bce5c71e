#include "mincode/bounds.hpp"

#include "mincode/gf.hpp"

#include <algorithm>
#include <cmath>

namespace mincode {

namespace {

BigInt simplex_length(std::uint64_t q, std::size_t k) { return (big_pow(q, k) - 1) / (q - 1); }

std::uint64_t integer_cbrt(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(n)));
    while (r > 0 && r * r * r > n) --r;
    while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
    return r;
}

BoundVerdict make_lower_n(std::string name, BigInt value, std::optional<std::uint64_t> n,
                          std::string citation) {
    BoundVerdict v;
    v.name = std::move(name);
    v.kind = BoundKind::lower_n;
    v.value = Rational(value);
    if (n) v.satisfied = BigInt(*n) >= value;
    v.citation = std::move(citation);
    return v;
}

} // namespace

std::vector<BoundVerdict> length_lower_bounds(std::uint64_t q, std::size_t k,
                                              std::optional<std::uint64_t> n) {
    if (k < 2) throw precondition_error("length bounds are stated for k >= 2");
    std::vector<BoundVerdict> out;

    out.push_back(make_lower_n("length_kq", BigInt(k - 1) * q + 1, n,
                               "minimal codes satisfy n >= (k-1)q + 1"));

    BigInt base = BigInt(k - 1) * (q - 1) + 1;
    BigInt gries = base;
    BigInt qi = q;
    for (std::size_t i = 1; i <= k - 1; ++i) {
        gries += ceil_div(base, qi);
        qi *= q;
    }
    out.push_back(make_lower_n("length_griesmer_sum", gries, n,
                               "Griesmer-type sum bound for minimal codes"));

    out.push_back(make_lower_n("length_qp1", BigInt(q + 1) * (k - 1), n,
                               "minimal codes satisfy n >= (q+1)(k-1)"));

    {
        BoundVerdict v = make_lower_n("length_nfold", BigInt(q + 1) * (k - 1), n,
                                      "(k-1)-fold blocking set bound; needs k-1 <= q");
        if (k - 1 > q) {
            v.satisfied = std::nullopt;
            v.detail = "not applicable: k-1 > q";
        }
        out.push_back(std::move(v));
    }

    {
        const bool applicable = k >= 3 && BigInt(k - 2) * (k - 2) <= q && !(q == 2 && k == 3);
        BoundVerdict v = make_lower_n("length_qp1_strict", BigInt(q + 1) * (k - 1) + 1, n,
                                      "extremal (k-1)-fold sets are never cutting, so n >= "
                                      "(q+1)(k-1) + 1 for 3 <= k <= sqrt(q)+2, except (q,k)=(2,3)");
        if (!applicable) {
            v.satisfied = std::nullopt;
            v.detail = "not applicable";
        }
        out.push_back(std::move(v));
    }

    if (k == 3) {
        // Planar 2-fold blocking set bounds, by field size class.
        std::optional<BigInt> best;
        if (q < 9) best = BigInt(3) * q;
        if (q > 4 && is_perfect_square(q)) {
            BigInt v = 2 * BigInt(q) + 2 * isqrt(q) + 2;
            if (!best || v > *best) best = v;
        }
        if (q > 19 && !is_perfect_square(q)) {
            // q = p^(2d+1)
            std::uint64_t p = field_for_order(q)->p();
            std::uint32_t e = field_for_order(q)->e();
            std::uint64_t d = (e - 1) / 2;
            BigInt pd = big_pow(p, d), pd1 = big_pow(p, d + 1);
            BigInt v = 2 * BigInt(q) + pd * ceil_div(pd1 + 1, pd + 1) + 2;
            if (!best || v > *best) best = v;
        }
        if ((q == 11 || q == 13 || q == 17 || q == 19)) {
            BigInt v = ceil_div(BigInt(5) * q + 7, BigInt(2));
            if (!best || v > *best) best = v;
        }
        if (best)
            out.push_back(make_lower_n("planar_two_fold", *best, n,
                                       "2-fold blocking sets in the projective plane"));
    }
    return out;
}

StatQuadratic stat_quadratic(std::uint64_t q, std::uint64_t n, std::size_t k) {
    if (k < 2) throw precondition_error("the quadratic constraint needs k >= 2");
    StatQuadratic out;
    const BigInt qk = big_pow(q, k);
    const BigInt qk1 = big_pow(q, k - 1);
    const BigInt qk2 = big_pow(q, k - 2);
    out.B = qk2 + BigInt(k - 1) * (2 * qk1 - 1) + (qk1 - 1) / (q - 1);
    out.C = BigInt(k - 1) * (k - 1) * (qk - 1) + BigInt(k - 1) * (qk - 1) / (q - 1);
    out.lhs = qk2 * n * n - out.B * n + out.C;
    out.satisfied = out.lhs >= 0;
    return out;
}

std::optional<BigInt> d_upper_minimal(std::uint64_t q, std::uint64_t n, std::size_t k) {
    if (k < 2) throw precondition_error("the distance bound needs k >= 2");
    const BigInt qk = big_pow(q, k);
    const BigInt qk1 = big_pow(q, k - 1);
    const BigInt qk2 = big_pow(q, k - 2);
    const BigInt denom = BigInt(n) * (qk1 - 1) - BigInt(k - 1) * (qk - 1);
    if (denom <= 0) return std::nullopt;
    const BigInt num = BigInt(n) * (q - 1) * qk2 * (BigInt(n) - 1 - BigInt(q) * (k - 1));
    return floor_div(num, denom);
}

namespace {

// Both window constraints for fixed (q, k, d, w) at a candidate n, with
// exact rationals.
bool window_constraints_hold(std::uint64_t q, std::size_t k, std::uint64_t d, std::uint64_t w,
                             std::uint64_t n) {
    const BigInt qk = big_pow(q, k);
    const BigInt qk1 = big_pow(q, k - 1);
    const BigInt qk2 = big_pow(q, k - 2);
    const Rational ell = Rational(BigInt(n) * (q - 1), qk - 1);
    const Rational mean = Rational(qk1) * ell;
    if (!(Rational(BigInt(w)) > mean)) return false; // w must exceed the average weight
    const Rational var_lb = Rational(qk2) * ell * (1 - ell);
    const Rational bound = mean - var_lb / (Rational(BigInt(w)) - mean);
    // d <= floor(bound)
    const BigInt num = boost::multiprecision::numerator(bound);
    const BigInt den = boost::multiprecision::denominator(bound);
    return BigInt(d) <= floor_div(num, den);
}

} // namespace

std::optional<NWindow> bhatia_davis_window(std::uint64_t q, std::size_t k, std::uint64_t d,
                                           std::uint64_t w) {
    if (k < 2) throw precondition_error("the window needs k >= 2");
    if (d >= w)
        throw precondition_error("d >= w describes a constant-weight code; use the "
                                 "constant-weight length bound instead");
    // Constraint w > mean caps n: n (q-1) q^(k-1) < w (q^k - 1).
    const BigInt cap_num = BigInt(w) * (big_pow(q, k) - 1);
    const BigInt cap_den = BigInt(q - 1) * big_pow(q, k - 1);
    std::uint64_t n_hi_cap = static_cast<std::uint64_t>(ceil_div(cap_num, cap_den) + 1);

    std::optional<NWindow> window;
    bool in_run = false, after_run = false;
    for (std::uint64_t n = std::max<std::uint64_t>(w, k); n <= n_hi_cap; ++n) {
        if (window_constraints_hold(q, k, d, w, n)) {
            if (after_run)
                throw verification_error("admissible lengths are not contiguous");
            if (!in_run) {
                window = NWindow{n, n};
                in_run = true;
            } else {
                window->hi = n;
            }
        } else if (in_run) {
            in_run = false;
            after_run = true;
        }
    }
    return window;
}

bool popoviciu_check(std::uint64_t q, std::uint64_t n, std::size_t k, std::uint64_t d,
                     std::uint64_t w) {
    if (n < 1) throw precondition_error("n >= 1 required");
    if (w < d) throw precondition_error("w must be >= d");
    const BigInt qk = big_pow(q, k);
    const BigInt qk2 = big_pow(q, k - 2);
    const Rational lhs = Rational(1, BigInt(n));
    const Rational spread = Rational(BigInt(w - d), BigInt(n));
    const Rational rhs = Rational(BigInt(q - 1), qk - 1) +
                         spread * spread * Rational(qk - 1, 4 * qk2 * (q - 1));
    return lhs <= rhs;
}

bool delsarte_check(std::uint64_t q, std::uint64_t n, std::size_t k, std::uint64_t s) {
    if (s < 1) throw precondition_error("s >= 1 required");
    BigInt sum = 0;
    for (std::uint64_t i = 0; i <= s; ++i) sum += binomial(n, i) * big_pow(q - 1, i);
    return big_pow(q, k) <= sum;
}

FeasibilityReport feasibility(const FeasibilityParams& params) {
    const std::uint64_t q = params.q;
    const std::size_t k = params.k;
    if (k < 2) throw precondition_error("feasibility reports need k >= 2");
    field_for_order(q); // validates that q is a prime power

    FeasibilityReport rep;
    rep.params = params;

    rep.verdicts = length_lower_bounds(q, k, params.n);

    {
        BoundVerdict v;
        v.name = "d_lower_minimal";
        v.kind = BoundKind::lower_d;
        v.value = Rational(BigInt(q - 1) * (k - 1) + 1);
        v.citation = "every maximal codeword has weight >= (q-1)(k-1)+1";
        if (params.d) v.satisfied = BigInt(*params.d) >= BigInt(q - 1) * (k - 1) + 1;
        rep.verdicts.push_back(std::move(v));
    }

    if (params.n) {
        BoundVerdict v;
        v.name = "weight_singleton";
        v.kind = BoundKind::upper_d;
        v.value = Rational(BigInt(*params.n) - k + 1);
        v.citation = "minimal codewords have weight <= n-k+1";
        if (params.w)
            v.satisfied = BigInt(*params.w) <= BigInt(*params.n) - k + 1;
        else if (params.d)
            v.satisfied = BigInt(*params.d) <= BigInt(*params.n) - k + 1;
        rep.verdicts.push_back(std::move(v));
    }

    const bool known_constant_weight = params.d && params.w && *params.d == *params.w;
    const bool known_non_constant = params.d && params.w && *params.d < *params.w;

    if (params.n) {
        StatQuadratic sq = stat_quadratic(q, *params.n, k);
        BoundVerdict v;
        v.name = "stat_quadratic";
        v.kind = BoundKind::constraint;
        v.value = Rational(sq.lhs);
        v.citation = "length quadratic for minimal non-constant-weight codes";
        const bool escape = BigInt(*params.n) >= simplex_length(q, k);
        if (known_constant_weight) {
            v.satisfied = std::nullopt;
            v.detail = "not applicable: constant-weight code";
        } else if (known_non_constant) {
            v.satisfied = sq.satisfied;
        } else {
            v.satisfied = sq.satisfied || escape;
            if (!sq.satisfied && escape)
                v.detail = "quadratic fails but a constant-weight code of this length is "
                           "not excluded";
        }
        rep.verdicts.push_back(std::move(v));
    }

    if (known_constant_weight && params.n) {
        BoundVerdict v;
        v.name = "const_weight_length";
        v.kind = BoundKind::lower_n;
        v.value = Rational(simplex_length(q, k));
        v.citation = "constant-weight codes satisfy n >= (q^k-1)/(q-1)";
        v.satisfied = BigInt(*params.n) >= simplex_length(q, k);
        rep.verdicts.push_back(std::move(v));
    }

    if (params.n && !known_constant_weight) {
        auto du = d_upper_minimal(q, *params.n, k);
        BoundVerdict v;
        v.name = "d_upper_stat";
        v.kind = BoundKind::upper_d;
        v.citation = "distance bound for minimal non-constant-weight codes";
        if (du) {
            v.value = Rational(*du);
            if (params.d) {
                const bool escape =
                    !known_non_constant && BigInt(*params.n) >= simplex_length(q, k);
                v.satisfied = BigInt(*params.d) <= *du || escape;
            }
        } else {
            v.detail = "not applicable: denominator nonpositive";
        }
        rep.verdicts.push_back(std::move(v));
    }

    if (params.d && params.w && *params.d < *params.w) {
        auto window = bhatia_davis_window(q, k, *params.d, *params.w);
        BoundVerdict lo, hi;
        lo.name = "bhatia_davis_lower_n";
        lo.kind = BoundKind::lower_n;
        hi.name = "bhatia_davis_upper_n";
        hi.kind = BoundKind::upper_n;
        lo.citation = hi.citation = "two-weight window from the Bhatia-Davis inequality";
        if (window) {
            lo.value = Rational(BigInt(window->lo));
            hi.value = Rational(BigInt(window->hi));
            lo.detail = hi.detail =
                "window [" + std::to_string(window->lo) + ", " + std::to_string(window->hi) + "]";
            if (params.n) {
                lo.satisfied = *params.n >= window->lo;
                hi.satisfied = *params.n <= window->hi;
            }
        } else {
            lo.detail = hi.detail = "empty window";
            if (params.n) lo.satisfied = hi.satisfied = false;
        }
        rep.verdicts.push_back(std::move(lo));
        rep.verdicts.push_back(std::move(hi));
    }

    if (params.n && params.d && params.w) {
        BoundVerdict v;
        v.name = "popoviciu";
        v.kind = BoundKind::constraint;
        v.citation = "variance window from the Popoviciu inequality";
        const bool ok = popoviciu_check(q, *params.n, k, *params.d, *params.w);
        v.satisfied = ok;
        v.value = Rational(ok ? 1 : 0);
        rep.verdicts.push_back(std::move(v));
    }

    if (params.n && params.s) {
        BoundVerdict v;
        v.name = "delsarte";
        v.kind = BoundKind::constraint;
        v.citation = "few-weight counting bound q^k <= sum C(n,i)(q-1)^i";
        BigInt sum = 0;
        for (std::uint64_t i = 0; i <= *params.s; ++i)
            sum += binomial(*params.n, i) * big_pow(q - 1, i);
        v.value = Rational(sum - big_pow(q, k)); // margin
        v.satisfied = sum >= big_pow(q, k);
        rep.verdicts.push_back(std::move(v));
    }

    for (const auto& v : rep.verdicts) {
        if (v.satisfied && !*v.satisfied) {
            rep.feasible = false;
            rep.witness = v.name;
            break;
        }
    }
    return rep;
}

namespace {

struct LowerBound {
    BigInt value;
    std::string source;
};

LowerBound table_lower(std::uint64_t q, std::size_t k) {
    LowerBound best{0, ""};
    for (const auto& v : length_lower_bounds(q, k)) {
        if (v.detail.rfind("not applicable", 0) == 0) continue;
        BigInt val = boost::multiprecision::numerator(v.value);
        if (val > best.value) {
            best.value = val;
            best.source = v.name;
        }
    }
    // Push past lengths excluded by the quadratic (the exclusion interval is
    // contiguous, and constant-weight codes only exist from the simplex
    // length on, far above it).
    const BigInt simplex = simplex_length(q, k);
    std::uint64_t n = static_cast<std::uint64_t>(best.value);
    bool moved = false;
    while (BigInt(n) < simplex && !stat_quadratic(q, n, k).satisfied) {
        ++n;
        moved = true;
    }
    if (moved) return {BigInt(n), "stat_quadratic"};
    return best;
}

} // namespace

std::vector<MTableEntry> m_table(std::uint64_t q, std::size_t k_max) {
    if (k_max < 2) throw precondition_error("the table starts at k = 2");
    field_for_order(q);
    const bool square = is_perfect_square(q);
    const std::uint64_t root = square ? isqrt(q) : 0;

    std::vector<MTableEntry> rows;
    std::vector<BigInt> upper(k_max + 1);
    std::vector<std::string> upper_src(k_max + 1);

    for (std::size_t k = 2; k <= k_max; ++k) {
        MTableEntry row;
        row.q = q;
        row.k = k;

        auto lb = table_lower(q, k);
        row.lower = lb.value;
        row.lower_source = lb.source;

        // Constructive uppers, in a fixed priority order; first strict
        // minimum wins.
        auto consider = [&](const BigInt& val, const std::string& src) {
            if (upper_src[k].empty() || val < upper[k]) {
                upper[k] = val;
                upper_src[k] = src;
            }
        };
        if (k == 2) consider(BigInt(q) + 1, "projective-line");
        if (k == 3 && square && q >= 9) consider(2 * (BigInt(q) + root + 1), "baer");
        consider(BigInt(q - 1) * binomial(k, 2) + k, "tetrahedron");
        if (k % 2 == 0 && k >= 4) consider(BigInt(q + 1) * k * k / 4, "even-lines");
        if (k % 3 == 0 && k >= 6 && square)
            consider(2 * (BigInt(q) + root + 1) * BigInt(k) * k / 9, "baer");
        for (std::size_t a = 2; a * 2 <= k; ++a) {
            if (k % a != 0) continue;
            std::size_t b = k / a;
            if (b < 2) continue;
            consider(BigInt(a) * a * upper[b],
                     "product(a=" + std::to_string(a) + ", best(" + std::to_string(b) + "))");
        }
        if (k >= 3)
            consider(upper[k - 1] + BigInt(q - 1) * (k - 1) + 1,
                     "lift(best(" + std::to_string(k - 1) + "))");

        row.upper = upper[k];
        row.upper_source = upper_src[k];
        if (row.lower == row.upper) row.exact = row.lower;

        if (k == 6) {
            row.literature = BigInt(7) * (q + 1);
            row.literature_source = "seven disjoint lines (literature)";
        } else if (k == 5) {
            row.literature = BigInt(8) * q - 3;
            row.literature_source = "[8q-3, 5] construction (literature)";
        } else if (k == 4) {
            std::uint64_t c = integer_cbrt(q);
            if (c * c * c == q && c >= 2) {
                row.literature = BigInt(3) * (BigInt(q) + c * c + c + 1);
                row.literature_source = "three subgeometries (literature)";
            }
        }
        if (row.literature && *row.literature >= row.upper) {
            row.literature.reset();
            row.literature_source.clear();
        }

        row.nonconstructive_ref =
            2.0 * static_cast<double>(k) * std::log(static_cast<double>(q)) /
            std::log(static_cast<double>(q) * q / (static_cast<double>(q) * q - q + 1));

        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace mincode
