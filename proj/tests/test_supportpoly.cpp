#include "helpers.hpp"

#include <doctest.h>

using namespace mincode;
using namespace testutil;

namespace {

// x1 (1 - x2^2)(1 - x3^2)(1 - x4^2) over GF(3), fully expanded: the eight
// signed terms, frozen as literals.
SupportPolynomial expected_reduced_fixture(const FieldPtr& f3) {
    SupportPolynomial p(f3, 4);
    p.add_term({1, 0, 0, 0}, 1);
    p.add_term({1, 2, 0, 0}, 2);
    p.add_term({1, 0, 2, 0}, 2);
    p.add_term({1, 0, 0, 2}, 2);
    p.add_term({1, 2, 2, 0}, 1);
    p.add_term({1, 2, 0, 2}, 1);
    p.add_term({1, 0, 2, 2}, 1);
    p.add_term({1, 2, 2, 2}, 2);
    return p;
}

std::vector<std::size_t> first_row_support(const LinearCode& c) {
    std::vector<std::uint32_t> u(c.k(), 0);
    u[0] = 1;
    return support(c.encode(u));
}

} // namespace

TEST_CASE("building blocks") {
    auto f2 = Field::make(2, 1);
    // Empty index set: the constant 1.
    Matrix g = Matrix::identity(f2, 2);
    auto p = support_polynomial(g, {});
    CHECK(p == SupportPolynomial::constant(f2, 2, 1));
    // Identity columns: x1 * x2.
    auto p2 = support_polynomial(g, {0, 1});
    SupportPolynomial expect(f2, 2);
    expect.add_term({1, 1}, 1);
    CHECK(p2 == expect);
    CHECK(p2.total_degree() == 2);
}

TEST_CASE("reduction maps exponents into [1, q-1] and is idempotent") {
    auto f3 = Field::make(3, 1);
    SupportPolynomial p(f3, 1);
    p.add_term({3}, 1); // x^3 == x
    auto r = p.reduced();
    SupportPolynomial expect(f3, 1);
    expect.add_term({1}, 1);
    CHECK(r == expect);
    CHECK(r.reduced() == r);
    CHECK(r.is_reduced());
}

TEST_CASE("fixture support polynomial reduces to the closed form") {
    auto c = fixture_14_4_3();
    auto supp = first_row_support(c);
    CHECK(supp == std::vector<std::size_t>{7, 8, 9, 10, 11, 12, 13});

    auto p = support_polynomial(c.generator(), supp);
    CHECK(p.total_degree() == 7); // degree = |I| before reduction

    auto reduced = p.reduced();
    auto expect = expected_reduced_fixture(c.field());
    CHECK(reduced == expect);

    // Incremental reduction gives the same polynomial.
    CHECK(reduced_support_polynomial(c.generator(), supp) == expect);

    // The messages that do not vanish form exactly one scalar class.
    auto nz = nonzero_set(reduced);
    CHECK(nz.size() == 2);
}

TEST_CASE("a nonzero constant never vanishes on the grid") {
    auto f3 = Field::make(3, 1);
    auto one = SupportPolynomial::constant(f3, 3, 1);
    CHECK(nonzero_set(one).size() == 27); // all q^k points
}

TEST_CASE("nonzero set of a maximal codeword is its scalar line") {
    auto c = fixture_14_4_3();
    auto classes = c.message_classes();
    for (std::uint64_t i = 0; i < classes.count(); i += 7) {
        auto u = classes.at(i);
        auto supp = support(c.encode(u));
        auto p = reduced_support_polynomial(c.generator(), supp);
        auto nz = nonzero_set(p);
        CHECK(nz.size() == c.field()->q() - 1);
        // All nonzeros are scalar multiples of u.
        for (const auto& v : nz) {
            Matrix pair = Matrix(c.field(), 1, c.k(), u)
                              .stacked(Matrix(c.field(), 1, c.k(), v));
            CHECK(rank(pair) == 1);
        }
    }
}

TEST_CASE("messages covering I are exactly the nonzeros") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint64_t qs[] = {2, 3, 4};
        auto f = field_for_order(qs[rng() % 3]);
        std::size_t k = 2 + rng() % 2;
        std::size_t n = k + rng() % 5;
        Matrix g = random_full_rank(f, k, n, rng);
        std::vector<std::size_t> I;
        for (std::size_t j = 0; j < n; ++j)
            if (rng() % 2) I.push_back(j);
        auto p = support_polynomial(g, I);
        LinearCode c(f, g);
        // Enumerate all q^k messages both ways.
        std::vector<std::uint32_t> v(k, 0);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < k; ++i) total *= f->q();
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t t = idx;
            for (std::size_t i = k; i-- > 0;) {
                v[i] = static_cast<std::uint32_t>(t % f->q());
                t /= f->q();
            }
            auto cw = row_times_matrix(v, g);
            bool covers = true;
            for (auto j : I)
                if (cw[j] == 0) covers = false;
            CHECK((p.evaluate(v) != 0) == covers);
        }
    }
}

TEST_CASE("transformation identities") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        std::uint64_t qs[] = {2, 3, 4, 5};
        auto f = field_for_order(qs[rng() % 4]);
        std::size_t k = 2 + rng() % 2;
        std::size_t n = k + rng() % 4;
        Matrix g = random_full_rank(f, k, n, rng);
        std::vector<std::size_t> I;
        for (std::size_t j = 0; j < n; ++j)
            if (rng() % 2) I.push_back(j);

        // p_{AG, I}(x) = p_{G, I}(x A)
        Matrix a = random_invertible(f, k, rng);
        CHECK(support_polynomial(a * g, I) == support_polynomial(g, I).composed_with(a));

        // p_{G, tau(I)} = p_{G P_tau, I}: permuting the index set equals
        // permuting the columns.
        std::vector<std::size_t> perm(n);
        for (std::size_t j = 0; j < n; ++j) perm[j] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix gp(f, k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t j = 0; j < n; ++j) gp.set(r, j, g.at(r, perm[j]));
        std::vector<std::size_t> tau_I;
        for (auto j : I) tau_I.push_back(perm[j]);
        CHECK(support_polynomial(g, tau_I) == support_polynomial(gp, I));

        // Diagonal scaling multiplies by the product of the scalars on I.
        std::vector<std::uint32_t> dvec(n);
        std::uint32_t prod = 1;
        Matrix gd(f, k, n);
        for (std::size_t j = 0; j < n; ++j) {
            dvec[j] = 1 + static_cast<std::uint32_t>(rng() % (f->q() - 1));
            for (std::size_t r = 0; r < k; ++r) gd.set(r, j, f->mul(g.at(r, j), dvec[j]));
        }
        for (auto j : I) prod = f->mul(prod, dvec[j]);
        CHECK(support_polynomial(gd, I) == support_polynomial(g, I).scaled(prod));
    }
}

TEST_CASE("reduction preserves evaluation exhaustively at small sizes") {
    std::mt19937_64 rng(3);
    for (auto [q, k] : {std::pair<std::uint64_t, std::size_t>{2, 2},
                        {2, 5},
                        {3, 3},
                        {3, 5},
                        {4, 3},
                        {5, 3}}) {
        auto f = field_for_order(q);
        for (int trial = 0; trial < 10; ++trial) {
            SupportPolynomial p(f, k);
            for (int t = 0; t < 8; ++t) {
                SupportPolynomial::Exponents e(k);
                for (auto& x : e) x = static_cast<std::uint16_t>(rng() % (2 * q));
                p.add_term(e, static_cast<std::uint32_t>(rng() % f->q()));
            }
            auto r = p.reduced();
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < k; ++i) total *= q;
            std::vector<std::uint32_t> v(k, 0);
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                std::uint64_t t = idx;
                for (std::size_t i = k; i-- > 0;) {
                    v[i] = static_cast<std::uint32_t>(t % q);
                    t /= q;
                }
                CHECK(p.evaluate(v) == r.evaluate(v));
            }
        }
    }
}

TEST_CASE("grid nonzero lower bound") {
    auto f3 = Field::make(3, 1);
    // Degree 7 = (q-1)(k-1)+1 at q = 3, k = 4: s = 1, ell = 1, bound q - 1.
    SupportPolynomial p(f3, 4);
    p.add_term({1, 2, 2, 2}, 1);
    auto b = alon_furedi_bound(p, {3, 3, 3, 3});
    CHECK(b.s == 1);
    CHECK(b.ell == 1);
    CHECK(b.bound == 2);

    // Nonzero constant: never vanishes.
    auto c = SupportPolynomial::constant(f3, 4, 2);
    CHECK(alon_furedi_bound(c, {3, 3, 3, 3}).bound == 81);

    // Maximum reduced degree k(q-1): bound 1.
    SupportPolynomial m(f3, 4);
    m.add_term({2, 2, 2, 2}, 1);
    auto bm = alon_furedi_bound(m, {3, 3, 3, 3});
    CHECK(bm.s == 1);
    CHECK(bm.ell == 2);
    CHECK(bm.bound == 1);

    CHECK_THROWS_AS(alon_furedi_bound(SupportPolynomial(f3, 4), {3, 3, 3, 3}),
                    precondition_error);
    // The bound never exceeds the true nonzero count on reduced fixtures.
    auto code = fixture_14_4_3();
    auto reduced = reduced_support_polynomial(code.generator(), first_row_support(code));
    auto bound = alon_furedi_bound(reduced, {3, 3, 3, 3});
    CHECK(bound.bound <= BigInt(nonzero_set(reduced).size()));
}

TEST_CASE("canonical form of the fixture first row") {
    auto c = fixture_14_4_3();
    std::vector<std::uint32_t> u(c.k(), 0);
    u[0] = 1;
    auto cf = canonical_form(c, c.encode(u));
    CHECK(cf.agrees);
    // G already has the codeword as first row, so A is the identity and the
    // canonical polynomial equals the reduced support polynomial.
    CHECK(cf.basis_change == Matrix::identity(c.field(), 4));
    CHECK(cf.canonical == expected_reduced_fixture(c.field()));
    CHECK(cf.reduced_support == cf.canonical);
}

TEST_CASE("canonical form for a simplex codeword over GF(2)") {
    auto f2 = Field::make(2, 1);
    // [3,2]_2 simplex: columns (1,0), (0,1), (1,1).
    LinearCode c(f2, Matrix::from_rows(f2, {{1, 0, 1}, {0, 1, 1}}));
    std::vector<std::uint32_t> u{1, 0};
    auto cf = canonical_form(c, c.encode(u));
    CHECK(cf.agrees);
    // w = 2, w1 = 1: canonical form x1 (1 - x2) = x1 + x1 x2 over GF(2).
    SupportPolynomial expect(f2, 2);
    expect.add_term({1, 0}, 1);
    expect.add_term({1, 1}, 1);
    CHECK(cf.canonical == expect);
}

TEST_CASE("canonical form under scalar rescaling of the codeword") {
    auto c = fixture_14_4_3();
    std::vector<std::uint32_t> u(c.k(), 0);
    u[0] = 2; // scale the first row by 2
    auto cw = c.encode(u);
    auto cf = canonical_form(c, cw);
    CHECK(cf.agrees);
    // Leading coefficient is the product of the 7 nonzero entries, scaled
    // by 2^7 relative to the first-row product 1: 2^7 = 2 in GF(3).
    SupportPolynomial::Exponents lead{1, 0, 0, 0};
    CHECK(cf.canonical.coefficient(lead) == 2);
}

TEST_CASE("pretty printer is stable in graded-lex descending order") {
    auto c = fixture_14_4_3();
    auto reduced = reduced_support_polynomial(c.generator(), first_row_support(c));
    CHECK(reduced.to_string() ==
          "2*x1*x2^2*x3^2*x4^2 + x1*x2^2*x3^2 + x1*x2^2*x4^2 + x1*x3^2*x4^2 + 2*x1*x2^2 + "
          "2*x1*x3^2 + 2*x1*x4^2 + x1");
    CHECK(SupportPolynomial(c.field(), 4).to_string() == "0");
    CHECK(SupportPolynomial::constant(c.field(), 4, 2).to_string() == "2");
}

TEST_CASE("coefficient lookups") {
    auto f3 = Field::make(3, 1);
    SupportPolynomial p(f3, 2);
    p.add_term({1, 1}, 1);
    CHECK(p.coefficient({1, 1}) == 1);
    CHECK(p.coefficient({0, 0}) == 0);

    // Full-degree coefficient of the reduced fixture polynomial.
    auto c = fixture_14_4_3();
    auto reduced = reduced_support_polynomial(c.generator(), first_row_support(c));
    CHECK(reduced.coefficient({1, 2, 2, 2}) == 2);

    // Constant term of 1 - x^(q-1).
    SupportPolynomial one_minus(f3, 1);
    one_minus.add_term({0}, 1);
    one_minus.add_term({2}, 2);
    CHECK(one_minus.coefficient({0}) == 1);
}

TEST_CASE("nonvanishing smoke test for full-coefficient polynomials") {
    // Whenever deg p = sum r_i and [x^r]p != 0 with grid sizes above r_i,
    // the polynomial has a nonzero on the grid.
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint64_t qs[] = {2, 3, 4};
        std::uint64_t q = qs[rng() % 3];
        auto f = field_for_order(q);
        std::size_t k = 2 + rng() % 2;
        SupportPolynomial p(f, k);
        SupportPolynomial::Exponents top(k);
        for (auto& e : top) e = static_cast<std::uint16_t>(rng() % q); // r_i <= q-1
        p.add_term(top, 1 + static_cast<std::uint32_t>(rng() % (q - 1)));
        std::size_t top_deg = 0;
        for (auto e : top) top_deg += e;
        // Noise terms of strictly smaller degree keep deg p = ||top||.
        for (int t = 0; t < 4; ++t) {
            SupportPolynomial::Exponents e(k);
            std::size_t deg = 0;
            for (auto& x : e) {
                x = static_cast<std::uint16_t>(rng() % q);
                deg += x;
            }
            if (deg < top_deg) p.add_term(e, static_cast<std::uint32_t>(rng() % q));
        }
        if (p.coefficient(top) == 0 || p.total_degree() != top_deg) continue;
        CHECK_FALSE(nonzero_set(p).empty());
    }
}

TEST_CASE("overlap witnesses on the fixture") {
    auto c = fixture_14_4_3();
    std::vector<std::uint32_t> u(c.k(), 0);
    u[0] = 1;
    auto ws = support_overlap_witnesses(c, u);
    REQUIRE(ws.size() == 7);
    for (const auto& w : ws) {
        CHECK(w.found);
        CHECK(w.overlap_set.size() == 6); // (q-1)(k-1)
        for (auto j : w.overlap_set) {
            CHECK(j != w.j);
            CHECK(w.codeword[j] != 0);
        }
    }
}

TEST_CASE("overlap witnesses on the simplex code") {
    auto f2 = Field::make(2, 1);
    Matrix g(f2, 3, 7);
    std::size_t col = 0;
    for (std::uint32_t v = 1; v < 8; ++v) {
        g.set(0, col, (v >> 2) & 1);
        g.set(1, col, (v >> 1) & 1);
        g.set(2, col, v & 1);
        ++col;
    }
    LinearCode c(f2, std::move(g));
    auto classes = c.message_classes();
    for (std::uint64_t i = 0; i < classes.count(); ++i) {
        auto ws = support_overlap_witnesses(c, classes.at(i));
        for (const auto& w : ws) {
            CHECK(w.found);
            CHECK(w.overlap_set.size() == 2); // (q-1)(k-1) = 2
        }
    }
}
