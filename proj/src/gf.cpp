#include "mincode/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace mincode {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

namespace {

// Plain coefficient-vector helpers over GF(p), used before a Field object
// exists (canonical modulus search).
std::vector<std::uint32_t> enc_to_coeffs(std::uint64_t enc, std::uint64_t p) {
    std::vector<std::uint32_t> c;
    while (enc) {
        c.push_back(static_cast<std::uint32_t>(enc % p));
        enc /= p;
    }
    return c;
}

} // namespace

// ---------------------------------------------------------------- Field

void Field::check_element(std::uint32_t a) const {
    if (a >= q_)
        throw precondition_error("element encoding " + std::to_string(a) +
                                 " out of range for " + describe());
}

std::vector<std::uint32_t> Field::coords(std::uint32_t a) const {
    std::vector<std::uint32_t> d(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        d[i] = static_cast<std::uint32_t>(a % p_);
        a = static_cast<std::uint32_t>(a / p_);
    }
    return d;
}

std::uint32_t Field::from_coords(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i];
    return static_cast<std::uint32_t>(v);
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<std::uint32_t>(s);
    }
    if (p_ == 2) return a ^ b;
    std::uint32_t r = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint64_t da = (a / mult) % p_, db = (b / mult) % p_;
        std::uint64_t s = da + db;
        if (s >= p_) s -= p_;
        r += static_cast<std::uint32_t>(s * mult);
        mult *= p_;
    }
    return r;
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (e_ == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
    if (p_ == 2) return a;
    std::uint32_t r = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint64_t d = (a / mult) % p_;
        r += static_cast<std::uint32_t>((d == 0 ? 0 : p_ - d) * mult);
        mult *= p_;
    }
    return r;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul_schoolbook(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    // Convolve base-p digit vectors, then reduce by the monic modulus.
    std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
    auto da = coords(a);
    auto db = coords(b);
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
    for (auto& v : prod) v %= p_;
    // prod has degree <= 2e-2; eliminate top coefficients via
    // x^e = -(m_{e-1} x^{e-1} + ... + m_0).
    for (std::size_t d = prod.size(); d-- > e_;) {
        std::uint64_t top = prod[d];
        if (top == 0) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < e_; ++i) {
            std::uint64_t m = modulus_coeffs_[i];
            if (m == 0) continue;
            std::uint64_t sub_t = (top * m) % p_;
            std::uint64_t cur = prod[d - e_ + i];
            prod[d - e_ + i] = (cur + p_ - sub_t) % p_;
        }
    }
    std::uint64_t v = 0;
    for (std::size_t i = e_; i-- > 0;) v = v * p_ + prod[i];
    return static_cast<std::uint32_t>(v);
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    return mul_schoolbook(a, b);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t n) const {
    if (n == 0) return 1;
    if (a == 0) return 0;
    if (!exp_.empty()) {
        std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) % (q_ - 1)) * (n % (q_ - 1)) % (q_ - 1);
        return exp_[l];
    }
    std::uint32_t base = a, r = 1;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw precondition_error("inversion of zero in " + describe());
    if (!exp_.empty()) {
        std::uint64_t l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }
    return pow(a, q_ - 2);
}

std::uint64_t Field::element_order(std::uint32_t a) const {
    if (a == 0) throw precondition_error("order of zero is undefined");
    std::uint64_t ord = q_ - 1;
    for (std::uint64_t f : prime_factors(q_ - 1)) {
        while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
    }
    return ord;
}

void Field::init_tables() {
    if (q_ > (1ull << 16) || q_ <= 2) return;
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint32_t v = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = v;
        log_[v] = static_cast<std::uint32_t>(i);
        v = mul_schoolbook(v, primitive_);
    }
}

void Field::find_primitive() {
    if (q_ == 2) {
        primitive_ = 1;
        return;
    }
    auto fs = prime_factors(q_ - 1);
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
        bool ok = true;
        for (std::uint64_t f : fs) {
            if (pow(cand, (q_ - 1) / f) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            primitive_ = cand;
            return;
        }
    }
    throw verification_error("no primitive element found in " + describe());
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (e_ > 1) os << " = GF(" << p_ << "^" << e_ << ")";
    return os.str();
}

namespace {

std::uint64_t ipow_checked(std::uint64_t p, std::uint32_t e) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (q > Field::max_order / p)
            throw precondition_error("field order p^e exceeds the supported maximum 2^20");
        q *= p;
    }
    return q;
}

std::mutex g_field_mutex;
std::map<std::tuple<std::uint64_t, std::uint32_t, std::uint64_t>, FieldPtr> g_field_cache;

} // namespace

FieldPtr Field::with_modulus(std::uint64_t p, std::uint32_t e, std::uint64_t modulus) {
    if (!is_prime(p)) throw precondition_error("p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw precondition_error("extension degree must be >= 1");
    std::uint64_t q = ipow_checked(p, e);
    if (q < 2) throw precondition_error("field order must be >= 2");

    if (e == 1 && modulus == 0) modulus = p; // residue convention x - 0

    {
        std::lock_guard<std::mutex> lk(g_field_mutex);
        auto it = g_field_cache.find({p, e, modulus});
        if (it != g_field_cache.end()) return it->second;
    }

    auto coeffs = enc_to_coeffs(modulus, p);
    if (coeffs.size() != e + 1 || coeffs.back() != 1)
        throw precondition_error("modulus encoding " + std::to_string(modulus) +
                                 " is not a monic degree-" + std::to_string(e) +
                                 " polynomial over GF(" + std::to_string(p) + ")");

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = q;
    f->modulus_ = modulus;
    coeffs.resize(e + 1, 0);
    f->modulus_coeffs_ = coeffs;

    if (e > 1) {
        // Validate irreducibility with a throwaway prime-field view.
        auto base = Field::make(p, 1);
        std::vector<std::uint32_t> c(coeffs.begin(), coeffs.end());
        Poly m(base, std::move(c));
        if (!is_irreducible(m))
            throw precondition_error("modulus encoding " + std::to_string(modulus) +
                                     " is reducible over GF(" + std::to_string(p) + ")");
    }

    f->find_primitive();
    f->init_tables();

    FieldPtr result = f;
    std::lock_guard<std::mutex> lk(g_field_mutex);
    auto [it, inserted] = g_field_cache.emplace(std::make_tuple(p, e, modulus), result);
    return it->second;
}

FieldPtr Field::make(std::uint64_t p, std::uint32_t e) {
    if (!is_prime(p)) throw precondition_error("p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw precondition_error("extension degree must be >= 1");
    std::uint64_t q = ipow_checked(p, e);
    if (e == 1) return with_modulus(p, 1, p);

    // Smallest integer encoding >= p^e that is monic irreducible of degree e;
    // integer order on the tail equals lexicographic order on
    // (a_{e-1}, ..., a_0).
    auto base = Field::make(p, 1);
    std::uint64_t pe = q; // == p^e
    for (std::uint64_t tail = 0; tail < pe; ++tail) {
        std::uint64_t enc = pe + tail;
        auto coeffs = enc_to_coeffs(enc, p);
        Poly cand(base, std::vector<std::uint32_t>(coeffs.begin(), coeffs.end()));
        if (is_irreducible(cand)) return with_modulus(p, e, enc);
    }
    throw verification_error("no irreducible polynomial found (impossible)");
}

// -------------------------------------------------------------- Element

Element::Element(std::uint32_t v, FieldPtr f) : value(v), field(std::move(f)) {
    if (!field) throw precondition_error("element without a field");
    field->check_element(value);
}

namespace {
const Field& common_field(const Element& a, const Element& b) {
    if (!a.field || !b.field || !a.field->same_as(*b.field))
        throw precondition_error("mixed-field operands");
    return *a.field;
}
} // namespace

Element operator+(const Element& a, const Element& b) {
    return Element(common_field(a, b).add(a.value, b.value), a.field);
}
Element operator-(const Element& a, const Element& b) {
    return Element(common_field(a, b).sub(a.value, b.value), a.field);
}
Element operator*(const Element& a, const Element& b) {
    return Element(common_field(a, b).mul(a.value, b.value), a.field);
}
Element operator/(const Element& a, const Element& b) {
    const Field& f = common_field(a, b);
    return Element(f.mul(a.value, f.inv(b.value)), a.field);
}
bool operator==(const Element& a, const Element& b) {
    common_field(a, b);
    return a.value == b.value;
}

// ----------------------------------------------------------------- Poly

Poly::Poly(FieldPtr f, std::vector<std::uint32_t> c) : field(std::move(f)), coeffs(std::move(c)) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    for (auto v : coeffs) field->check_element(v);
}

Poly Poly::constant(FieldPtr f, std::uint32_t c) { return Poly(std::move(f), {c}); }

Poly Poly::x(FieldPtr f) { return Poly(std::move(f), {0, 1}); }

std::uint32_t Poly::eval(std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = field->add(field->mul(acc, x), coeffs[i]);
    return acc;
}

std::uint64_t Poly::encoding() const {
    std::uint64_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * field->q() + coeffs[i];
    return v;
}

Poly Poly::from_encoding(FieldPtr f, std::uint64_t enc) {
    std::vector<std::uint32_t> c;
    std::uint64_t q = f->q();
    while (enc) {
        c.push_back(static_cast<std::uint32_t>(enc % q));
        enc /= q;
    }
    return Poly(std::move(f), std::move(c));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || coeffs[i] != 1) os << coeffs[i];
        if (i > 0) {
            if (coeffs[i] != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {
const FieldPtr& common_field(const Poly& a, const Poly& b) {
    if (!a.field || !b.field || !a.field->same_as(*b.field))
        throw precondition_error("polynomials over different fields");
    return a.field;
}
} // namespace

Poly operator+(const Poly& a, const Poly& b) {
    const FieldPtr& f = common_field(a, b);
    std::vector<std::uint32_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f->add(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    const FieldPtr& f = common_field(a, b);
    std::vector<std::uint32_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f->sub(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    const FieldPtr& f = common_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(f);
    std::vector<std::uint32_t> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = f->add(c[i + j], f->mul(a.coeffs[i], b.coeffs[j]));
    }
    return Poly(f, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    return a.field->same_as(*b.field) && a.coeffs == b.coeffs;
}

Poly poly_mod(const Poly& a, const Poly& m) {
    const FieldPtr& f = common_field(a, m);
    if (!m.is_monic()) throw precondition_error("poly_mod requires a monic divisor");
    std::vector<std::uint32_t> r = a.coeffs;
    const int dm = m.degree();
    for (int d = static_cast<int>(r.size()) - 1; d >= dm; --d) {
        std::uint32_t top = r[d];
        if (top == 0) continue;
        const std::size_t shift = d - dm;
        for (int i = 0; i <= dm; ++i)
            r[shift + i] = f->sub(r[shift + i], f->mul(top, m.coeffs[i]));
    }
    return Poly(f, std::move(r));
}

Poly poly_powmod(const Poly& a, std::uint64_t n, const Poly& m) {
    Poly base = poly_mod(a, m);
    Poly r = Poly::constant(a.field, 1);
    while (n) {
        if (n & 1) r = poly_mod(r * base, m);
        base = poly_mod(base * base, m);
        n >>= 1;
    }
    return r;
}

bool is_irreducible(const Poly& f) {
    const int r = f.degree();
    if (r <= 0) return false;
    if (r == 1) return true;
    const Field& F = *f.field;
    for (std::uint64_t x = 0; x < F.q(); ++x)
        if (f.eval(static_cast<std::uint32_t>(x)) == 0) return false;
    // Trial division by monic polynomials of degree 2..r/2. Degree-1 factors
    // were excluded by the root scan.
    for (int d = 2; 2 * d <= r; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= F.q();
        for (std::uint64_t tail = 0; tail < count; ++tail) {
            std::vector<std::uint32_t> c;
            std::uint64_t t = tail;
            for (int i = 0; i < d; ++i) {
                c.push_back(static_cast<std::uint32_t>(t % F.q()));
                t /= F.q();
            }
            c.push_back(1);
            Poly div(f.field, std::move(c));
            if (poly_mod(f, div).is_zero()) return false;
        }
    }
    return true;
}

Poly minimal_polynomial(std::uint32_t a, const FieldPtr& K, const FieldPtr& F) {
    if (K->p() != F->p() || K->e() % F->e() != 0)
        throw precondition_error("incompatible fields: " + F->describe() +
                                 " is not a subfield of " + K->describe());
    K->check_element(a);
    const std::uint64_t q = F->q();
    const std::uint32_t r = K->e() / F->e();

    // Degree = size of the Frobenius orbit of a under x -> x^q.
    std::uint32_t d = 1;
    std::uint32_t fr = K->pow(a, q);
    while (fr != a) {
        fr = K->pow(fr, q);
        ++d;
        if (d > r) throw verification_error("Frobenius orbit exceeded extension degree");
    }

    // Embed F into K. For prime F the constants 0..p-1 already are the
    // subfield. Otherwise map F's generator to the smallest root of F's
    // modulus among the canonical subfield {0} u <Gamma^((Q-1)/(q-1))>.
    std::vector<std::uint32_t> emb(q, 0); // emb[x_F] = iota(x_F)
    if (F->e() == 1) {
        for (std::uint32_t i = 0; i < q; ++i) emb[i] = i;
    } else {
        std::vector<std::uint32_t> sub_elems;
        sub_elems.push_back(0);
        const std::uint64_t step = (K->q() - 1) / (q - 1);
        std::uint32_t g = K->pow(K->primitive(), step);
        std::uint32_t cur = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            sub_elems.push_back(cur);
            cur = K->mul(cur, g);
        }
        std::sort(sub_elems.begin(), sub_elems.end());
        // F's modulus has GF(p) coefficients, which embed as constants of K.
        std::vector<std::uint32_t> fc;
        std::uint64_t menc = F->modulus();
        while (menc) {
            fc.push_back(static_cast<std::uint32_t>(menc % F->p()));
            menc /= F->p();
        }
        std::uint32_t beta = 0;
        bool found = false;
        for (std::uint32_t cand : sub_elems) {
            std::uint32_t acc = 0;
            for (std::size_t i = fc.size(); i-- > 0;) acc = K->add(K->mul(acc, cand), fc[i]);
            if (acc == 0) {
                beta = cand;
                found = true;
                break;
            }
        }
        if (!found) throw verification_error("no subfield root of the base modulus (impossible)");
        // iota(sum a_i x^i) = sum a_i beta^i inside K.
        for (std::uint32_t v = 0; v < q; ++v) {
            auto digits = F->coords(v);
            std::uint32_t acc = 0, bp = 1;
            for (std::uint32_t i = 0; i < F->e(); ++i) {
                if (digits[i]) acc = K->add(acc, K->mul(digits[i], bp));
                bp = K->mul(bp, beta);
            }
            emb[v] = acc;
        }
    }
    std::vector<std::uint32_t> inv_emb(K->q(), UINT32_MAX);
    for (std::uint32_t v = 0; v < q; ++v) inv_emb[emb[v]] = v;

    // m(y) = prod over the Frobenius orbit of (y - a^(q^i)), computed in K.
    std::vector<std::uint32_t> m{1}; // monic, low-to-high, coefficients in K
    std::uint32_t conj = a;
    for (std::uint32_t i = 0; i < d; ++i) {
        std::vector<std::uint32_t> next(m.size() + 1, 0);
        for (std::size_t j = 0; j < m.size(); ++j) {
            next[j + 1] = K->add(next[j + 1], m[j]);
            next[j] = K->sub(next[j], K->mul(m[j], conj));
        }
        m = std::move(next);
        conj = K->pow(conj, q);
    }
    std::vector<std::uint32_t> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (inv_emb[m[i]] == UINT32_MAX)
            throw verification_error("minimal polynomial coefficient outside the subfield");
        out[i] = inv_emb[m[i]];
    }
    return Poly(F, std::move(out));
}

FieldPtr field_for_order(std::uint64_t q) {
    if (q < 2) throw precondition_error("field order must be >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t e = 0;
    std::uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    if (v != 1) throw precondition_error(std::to_string(q) + " is not a prime power");
    return Field::make(p, e);
}

// ----------------------------------------------------------- TowerField

TowerField::TowerField(FieldPtr base, std::uint32_t r) : base_(std::move(base)), r_(r) {
    if (r_ < 1) throw precondition_error("tower degree must be >= 1");
    order_ = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        if (order_ > Field::max_order / base_->q())
            throw precondition_error("tower field order q^r exceeds the supported maximum 2^20");
        order_ *= base_->q();
    }
    // Smallest monic irreducible degree-r polynomial over the base whose
    // root generates the multiplicative group.
    auto fac = prime_factors(order_ - 1);
    for (std::uint64_t tail = 0;; ++tail) {
        if (tail >= order_) throw verification_error("no primitive polynomial found (impossible)");
        Poly cand = Poly::from_encoding(base_, order_ + tail);
        if (cand.degree() != static_cast<int>(r_) || !cand.is_monic()) continue;
        if (!is_irreducible(cand)) continue;
        Poly y = Poly::x(base_);
        bool primitive = true;
        for (std::uint64_t f : fac) {
            Poly pw = poly_powmod(y, (order_ - 1) / f, cand);
            if (pw == Poly::constant(base_, 1)) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            modulus_ = cand;
            break;
        }
    }
}

std::vector<std::uint32_t> TowerField::coords(std::uint64_t a) const {
    std::vector<std::uint32_t> d(r_, 0);
    for (std::uint32_t i = 0; i < r_; ++i) {
        d[i] = static_cast<std::uint32_t>(a % base_->q());
        a /= base_->q();
    }
    return d;
}

std::uint64_t TowerField::from_coords(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * base_->q() + digits[i];
    return v;
}

std::uint64_t TowerField::add(std::uint64_t a, std::uint64_t b) const {
    auto da = coords(a), db = coords(b);
    for (std::uint32_t i = 0; i < r_; ++i) da[i] = base_->add(da[i], db[i]);
    return from_coords(da);
}

std::uint64_t TowerField::mul(std::uint64_t a, std::uint64_t b) const {
    Poly pa(base_, coords(a)), pb(base_, coords(b));
    Poly prod = poly_mod(pa * pb, modulus_);
    std::vector<std::uint32_t> c(r_, 0);
    for (std::uint32_t i = 0; i < r_; ++i) c[i] = prod.coeff(i);
    return from_coords(c);
}

std::uint64_t TowerField::pow(std::uint64_t a, std::uint64_t n) const {
    std::uint64_t r = 1, base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

} // namespace mincode
