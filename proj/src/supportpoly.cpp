#include "mincode/supportpoly.hpp"

#include <algorithm>
#include <sstream>

namespace mincode {

SupportPolynomial::SupportPolynomial(FieldPtr field, std::size_t k)
    : field_(std::move(field)), k_(k) {
    if (k_ == 0) throw precondition_error("polynomials need at least one variable");
}

SupportPolynomial SupportPolynomial::constant(FieldPtr field, std::size_t k, std::uint32_t c) {
    SupportPolynomial p(std::move(field), k);
    if (c != 0) p.terms_[Exponents(k, 0)] = c;
    return p;
}

SupportPolynomial SupportPolynomial::linear_form(FieldPtr field,
                                                 const std::vector<std::uint32_t>& coeffs) {
    SupportPolynomial p(field, coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.terms_[e] = coeffs[i];
    }
    return p;
}

SupportPolynomial SupportPolynomial::monomial(FieldPtr field, std::size_t k, std::size_t var,
                                              std::uint16_t exp, std::uint32_t c) {
    SupportPolynomial p(std::move(field), k);
    if (c != 0) {
        Exponents e(k, 0);
        e[var] = exp;
        p.terms_[e] = c;
    }
    return p;
}

std::size_t SupportPolynomial::total_degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::size_t t = 0;
        for (auto x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

std::uint32_t SupportPolynomial::coefficient(const Exponents& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? 0 : it->second;
}

std::uint32_t SupportPolynomial::evaluate(const std::vector<std::uint32_t>& point) const {
    if (point.size() != k_) throw precondition_error("evaluation point arity mismatch");
    const Field& f = *field_;
    std::uint32_t acc = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t t = c;
        for (std::size_t i = 0; i < k_ && t != 0; ++i)
            if (e[i]) t = f.mul(t, f.pow(point[i], e[i]));
        acc = f.add(acc, t);
    }
    return acc;
}

void SupportPolynomial::add_term(const Exponents& alpha, std::uint32_t c) {
    if (alpha.size() != k_) throw precondition_error("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second = field_->add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

SupportPolynomial SupportPolynomial::reduced() const {
    const std::uint64_t qm1 = field_->q() - 1;
    SupportPolynomial out(field_, k_);
    for (const auto& [e, c] : terms_) {
        Exponents r(k_);
        for (std::size_t i = 0; i < k_; ++i)
            r[i] = e[i] == 0 ? 0 : static_cast<std::uint16_t>((e[i] - 1) % qm1 + 1);
        out.add_term(r, c);
    }
    return out;
}

bool SupportPolynomial::is_reduced() const {
    const std::uint64_t qm1 = field_->q() - 1;
    for (const auto& [e, c] : terms_)
        for (auto x : e)
            if (x > qm1) return false;
    return true;
}

SupportPolynomial SupportPolynomial::scaled(std::uint32_t c) const {
    SupportPolynomial out(field_, k_);
    if (c == 0) return out;
    for (const auto& [e, coef] : terms_) out.terms_[e] = field_->mul(coef, c);
    return out;
}

SupportPolynomial operator+(const SupportPolynomial& a, const SupportPolynomial& b) {
    if (!a.field_->same_as(*b.field_) || a.k_ != b.k_)
        throw precondition_error("polynomial arithmetic arity/field mismatch");
    SupportPolynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

SupportPolynomial operator-(const SupportPolynomial& a, const SupportPolynomial& b) {
    if (!a.field_->same_as(*b.field_) || a.k_ != b.k_)
        throw precondition_error("polynomial arithmetic arity/field mismatch");
    SupportPolynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, a.field_->neg(c));
    return out;
}

SupportPolynomial operator*(const SupportPolynomial& a, const SupportPolynomial& b) {
    if (!a.field_->same_as(*b.field_) || a.k_ != b.k_)
        throw precondition_error("polynomial arithmetic arity/field mismatch");
    SupportPolynomial out(a.field_, a.k_);
    const Field& f = *a.field_;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            SupportPolynomial::Exponents e(a.k_);
            for (std::size_t i = 0; i < a.k_; ++i)
                e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            out.add_term(e, f.mul(ca, cb));
        }
    }
    return out;
}

bool operator==(const SupportPolynomial& a, const SupportPolynomial& b) {
    return a.k_ == b.k_ && a.field_->same_as(*b.field_) && a.terms_ == b.terms_;
}

std::string SupportPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exponents, std::uint32_t>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    auto deg = [](const Exponents& e) {
        std::size_t d = 0;
        for (auto x : e) d += x;
        return d;
    };
    std::sort(order.begin(), order.end(), [&](const auto* x, const auto* y) {
        std::size_t dx = deg(x->first), dy = deg(y->first);
        if (dx != dy) return dx > dy;
        return x->first > y->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        bool is_const = std::all_of(t->first.begin(), t->first.end(),
                                    [](std::uint16_t e) { return e == 0; });
        if (t->second != 1 || is_const) {
            os << t->second;
            printed = true;
        }
        for (std::size_t i = 0; i < k_; ++i) {
            if (t->first[i] == 0) continue;
            if (printed) os << "*";
            os << "x" << (i + 1);
            if (t->first[i] > 1) os << "^" << t->first[i];
            printed = true;
        }
    }
    return os.str();
}

SupportPolynomial SupportPolynomial::composed_with(const Matrix& a) const {
    if (a.rows() != k_ || a.cols() != k_)
        throw precondition_error("composition matrix must be k x k");
    // y_j = (x A)_j = sum_i x_i a_{ij}; substitute and expand.
    std::vector<SupportPolynomial> forms;
    forms.reserve(k_);
    for (std::size_t j = 0; j < k_; ++j) {
        std::vector<std::uint32_t> coeffs(k_);
        for (std::size_t i = 0; i < k_; ++i) coeffs[i] = a.at(i, j);
        forms.push_back(linear_form(field_, coeffs));
    }
    SupportPolynomial out(field_, k_);
    for (const auto& [e, c] : terms_) {
        SupportPolynomial term = constant(field_, k_, c);
        for (std::size_t j = 0; j < k_; ++j)
            for (std::uint16_t t = 0; t < e[j]; ++t) term = term * forms[j];
        out = out + term;
    }
    return out;
}

SupportPolynomial support_polynomial(const Matrix& g, const std::vector<std::size_t>& I) {
    SupportPolynomial p = SupportPolynomial::constant(g.field(), g.rows(), 1);
    for (std::size_t i : I) {
        if (i >= g.cols()) throw precondition_error("support index out of range");
        p = p * SupportPolynomial::linear_form(g.field(), g.col(i));
    }
    return p;
}

SupportPolynomial reduced_support_polynomial(const Matrix& g, const std::vector<std::size_t>& I) {
    SupportPolynomial p = SupportPolynomial::constant(g.field(), g.rows(), 1);
    for (std::size_t i : I) {
        if (i >= g.cols()) throw precondition_error("support index out of range");
        p = (p * SupportPolynomial::linear_form(g.field(), g.col(i))).reduced();
    }
    return p;
}

std::vector<std::vector<std::uint32_t>> nonzero_set(const SupportPolynomial& p,
                                                    std::uint64_t max_points) {
    const std::uint64_t q = p.field()->q();
    const std::size_t k = p.var_count();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > max_points / q)
            throw limit_error("grid enumeration needs q^k points, above the limit");
        total *= q;
    }
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> v(k, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (std::size_t i = k; i-- > 0;) {
            v[i] = static_cast<std::uint32_t>(t % q);
            t /= q;
        }
        if (p.evaluate(v) != 0) out.push_back(v);
    }
    return out;
}

GridBound alon_furedi_bound(const SupportPolynomial& p, const std::vector<std::uint64_t>& sizes) {
    if (p.is_zero()) throw precondition_error("the zero polynomial has no nonzero set");
    if (sizes.size() != p.var_count()) throw precondition_error("grid arity mismatch");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 2) throw precondition_error("grid sizes must be >= 2");
        if (i + 1 < sizes.size() && sizes[i] < sizes[i + 1])
            throw precondition_error("grid sizes must be descending");
    }
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] >= sizes[i])
                throw precondition_error("polynomial is not reduced for this grid");

    const std::size_t k = sizes.size();
    const std::size_t D = p.total_degree();
    GridBound out;
    if (D == 0) { // nonzero constant: never vanishes
        out.bound = 1;
        for (auto n : sizes) out.bound *= n;
        out.s = k;
        out.ell = 0;
        return out;
    }
    // Unique s, ell with D = sum_{i>s} (n_i - 1) + ell, 1 <= ell <= n_s - 1.
    std::uint64_t tail = 0; // sum_{i>s}(n_i - 1), starts at s = k
    for (std::size_t s = k; s >= 1; --s) {
        const std::uint64_t cap = sizes[s - 1] - 1;
        if (D > tail && D <= tail + cap) {
            out.s = s;
            out.ell = D - tail;
            out.bound = BigInt(sizes[s - 1] - out.ell);
            for (std::size_t i = 0; i + 1 < s; ++i) out.bound *= sizes[i];
            return out;
        }
        tail += cap;
    }
    throw precondition_error("degree exceeds the reduced maximum for this grid");
}

CanonicalForm canonical_form(const LinearCode& code, const std::vector<std::uint32_t>& codeword) {
    const Field& f = *code.field();
    const std::size_t k = code.k();
    const std::uint64_t q = f.q();
    auto supp = support(codeword);
    const std::size_t w = supp.size();
    if (w == 0) throw precondition_error("the zero codeword has no canonical form");

    std::vector<std::uint32_t> u;
    if (!solve_left(code.generator(), codeword, u))
        throw precondition_error("vector is not a codeword of this code");

    // w1 in [1, q-1] with w1 = w (mod q-1).
    const std::uint16_t w1 = static_cast<std::uint16_t>((w - 1) % (q - 1) + 1);
    std::uint32_t lead = 1;
    for (std::size_t i : supp) lead = f.mul(lead, codeword[i]);

    SupportPolynomial pc = SupportPolynomial::monomial(code.field(), k, 0, w1, lead);
    for (std::size_t i = 1; i < k; ++i) {
        SupportPolynomial factor =
            SupportPolynomial::constant(code.field(), k, 1) -
            SupportPolynomial::monomial(code.field(), k, i, static_cast<std::uint16_t>(q - 1), 1);
        pc = pc * factor;
    }

    // Invertible B with first row u; A = B^{-1}, so row 1 of A^{-1} G = uG.
    Matrix b(code.field(), k, k);
    for (std::size_t j = 0; j < k; ++j) b.set(0, j, u[j]);
    std::size_t filled = 1;
    for (std::size_t j = 0; j < k && filled < k; ++j) {
        Matrix cand(code.field(), filled + 1, k);
        for (std::size_t r = 0; r < filled; ++r)
            for (std::size_t c = 0; c < k; ++c) cand.set(r, c, b.at(r, c));
        cand.set(filled, j, 1);
        if (rank(cand) == filled + 1) {
            b.set(filled, j, 1);
            ++filled;
        }
    }
    Matrix a = inverse(b);

    CanonicalForm out{pc, a, reduced_support_polynomial(code.generator(), supp), false};
    out.agrees = out.reduced_support == pc.composed_with(a).reduced();
    return out;
}

std::vector<OverlapWitness> support_overlap_witnesses(const LinearCode& code,
                                                      const std::vector<std::uint32_t>& u,
                                                      std::uint64_t max_classes) {
    if (weight(u) == 0) throw precondition_error("zero message");
    const auto classes = code.message_classes();
    if (classes.count() > max_classes)
        throw limit_error("witness scan exceeds the enumeration limit; raise --max-enum");
    const std::uint64_t q = code.field()->q();
    const std::size_t k = code.k();
    const std::size_t need = (q - 1) * (k - 1);

    auto c = code.encode(u);
    auto supp = support(c);
    const std::uint64_t self = classes.index_of(u);

    std::vector<OverlapWitness> out;
    for (std::size_t j : supp) {
        OverlapWitness w;
        w.j = j;
        std::size_t best_overlap = 0;
        for (std::uint64_t i = 0; i < classes.count(); ++i) {
            if (i == self) continue;
            auto z = code.encode(classes.at(i));
            std::size_t overlap = 0;
            for (std::size_t t : supp)
                if (t != j && z[t] != 0) ++overlap;
            if (overlap > best_overlap) {
                best_overlap = overlap;
                if (overlap >= need) {
                    w.codeword = z;
                    if (best_overlap == supp.size() - 1) break; // cannot improve
                }
            }
        }
        if (best_overlap >= need) {
            w.found = true;
            w.weight = weight(w.codeword);
            for (std::size_t t : supp) {
                if (t != j && w.codeword[t] != 0) {
                    w.overlap_set.push_back(t);
                    if (w.overlap_set.size() == need) break;
                }
            }
        }
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace mincode
