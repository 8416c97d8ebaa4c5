#include "quadfree/galois.hpp"

#include <array>
#include <string>

namespace quadfree {

namespace {

// Digits of a base p, least significant first, padded to k entries.
void to_digits(unsigned a, unsigned p, unsigned k, unsigned* out) {
    for (unsigned i = 0; i < k; ++i) {
        out[i] = a % p;
        a /= p;
    }
}

unsigned from_digits(const unsigned* d, unsigned p, unsigned k) {
    unsigned a = 0;
    for (unsigned i = k; i-- > 0;) a = a * p + d[i];
    return a;
}

// True iff monic B (degree db) divides A (degree da) over GF(p);
// vectors indexed by power. Standard long division, remainder test.
bool divides(const std::vector<unsigned>& b, unsigned db,
             std::vector<unsigned> a, unsigned da, unsigned p) {
    for (unsigned i = da + 1; i-- > db;) {
        unsigned c = a[i];
        if (c == 0) continue;
        for (unsigned j = 0; j <= db; ++j) {
            unsigned sub = static_cast<unsigned>(
                (static_cast<uint64_t>(c) * b[j]) % p);
            a[i - db + j] = (a[i - db + j] + p - sub) % p;
        }
    }
    for (unsigned j = 0; j < db; ++j)
        if (a[j] != 0) return false;
    return true;
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const std::vector<unsigned>& f, unsigned k, unsigned p) {
    for (unsigned d = 1; d <= k / 2; ++d) {
        uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        std::vector<unsigned> g(d + 1);
        g[d] = 1;
        for (uint64_t t = 0; t < count; ++t) {
            unsigned rest = static_cast<unsigned>(t);
            for (unsigned i = 0; i < d; ++i) {
                g[i] = rest % p;
                rest /= p;
            }
            if (divides(g, d, f, k, p)) return false;
        }
    }
    return true;
}

} // namespace

Field::Field(unsigned q) {
    if (q < 2) throw NotPrimePower("field order must be at least 2, got " + std::to_string(q));
    if (q > max_order) throw TooLarge("field order " + std::to_string(q) + " exceeds the supported cap 65536");

    // Factor q = p^k.
    unsigned p = 0;
    for (unsigned c = 2; c * c <= q; ++c) {
        if (q % c == 0) {
            p = c;
            break;
        }
    }
    if (p == 0) p = q; // q itself is prime
    unsigned k = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    p_ = p;
    k_ = k;
    q_ = q;

    // Lexicographically smallest monic irreducible of degree k: ascend over
    // base-p encodings of the non-leading coefficients (most significant
    // digit is the x^(k-1) coefficient, so integer order is lex order).
    std::vector<unsigned> f(k + 1);
    f[k] = 1;
    for (unsigned t = 0;; ++t) {
        to_digits(t, p, k, f.data());
        if (is_irreducible(f, k, p)) break;
    }
    modulus_ = f;

    if (q_ <= table_threshold) {
        mul_table_.assign(static_cast<size_t>(q_) * q_, 0);
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = a; b < q_; ++b) {
                uint16_t v = static_cast<uint16_t>(mul_poly(a, b));
                mul_table_[static_cast<size_t>(a) * q_ + b] = v;
                mul_table_[static_cast<size_t>(b) * q_ + a] = v;
            }
        inv_table_.assign(q_, 0);
        for (unsigned a = 1; a < q_; ++a)
            for (unsigned b = 1; b < q_; ++b)
                if (mul_table_[static_cast<size_t>(a) * q_ + b] == 1) {
                    inv_table_[a] = static_cast<uint16_t>(b);
                    break;
                }
    }
}

void Field::check_index(unsigned a) const {
    if (a >= q_)
        throw DomainError("element index " + std::to_string(a) +
                          " out of range for GF(" + std::to_string(q_) + ")");
}

unsigned Field::add(unsigned a, unsigned b) const {
    check_index(a);
    check_index(b);
    if (k_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    unsigned da[32], db[32], dc[32];
    to_digits(a, p_, k_, da);
    to_digits(b, p_, k_, db);
    for (unsigned i = 0; i < k_; ++i) dc[i] = (da[i] + db[i]) % p_;
    return from_digits(dc, p_, k_);
}

unsigned Field::neg(unsigned a) const {
    check_index(a);
    if (p_ == 2) return a;
    if (k_ == 1) return (p_ - a) % p_;
    unsigned da[32], dc[32];
    to_digits(a, p_, k_, da);
    for (unsigned i = 0; i < k_; ++i) dc[i] = (p_ - da[i]) % p_;
    return from_digits(dc, p_, k_);
}

unsigned Field::sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

unsigned Field::mul_poly(unsigned a, unsigned b) const {
    unsigned da[32], db[32];
    to_digits(a, p_, k_, da);
    to_digits(b, p_, k_, db);
    std::array<unsigned, 63> prod{};
    for (unsigned i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = static_cast<unsigned>(
                (prod[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p_);
    }
    // Monic reduction: x^i = -(lower modulus part) * x^(i-k), for i >= k.
    for (unsigned i = 2 * k_ - 1; i-- > k_;) {
        unsigned c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < k_; ++j) {
            unsigned sub = static_cast<unsigned>(
                (static_cast<uint64_t>(c) * modulus_[j]) % p_);
            prod[i - k_ + j] = (prod[i - k_ + j] + p_ - sub) % p_;
        }
    }
    return from_digits(prod.data(), p_, k_);
}

unsigned Field::mul(unsigned a, unsigned b) const {
    check_index(a);
    check_index(b);
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
    return mul_poly(a, b);
}

unsigned Field::pow(unsigned a, unsigned long long e) const {
    check_index(a);
    unsigned base = a, result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

unsigned Field::inv(unsigned a) const {
    check_index(a);
    if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2); // a^(q-1) = 1 for a != 0
}

unsigned Field::div(unsigned a, unsigned b) const {
    check_index(a);
    if (b == 0) throw DivisionByZero("division by zero in GF(" + std::to_string(q_) + ")");
    return mul(a, inv(b));
}

FieldElement Field::element(unsigned index) const { return FieldElement(*this, index); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

FieldElement::FieldElement(const Field& f, unsigned index) : field_(&f), index_(index) {
    if (index >= f.q())
        throw DomainError("element index " + std::to_string(index) +
                          " out of range for GF(" + std::to_string(f.q()) + ")");
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field().q() != b.field().q())
        throw FieldMismatch("elements of GF(" + std::to_string(a.field().q()) +
                            ") and GF(" + std::to_string(b.field().q()) +
                            ") cannot be combined");
}
} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field(), a.field().add(a.index(), b.index()));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field(), a.field().sub(a.index(), b.index()));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field(), a.field().mul(a.index(), b.index()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field(), a.field().div(a.index(), b.index()));
}

FieldElement FieldElement::operator-() const {
    return FieldElement(*field_, field_->neg(index_));
}

FieldElement FieldElement::inverse() const {
    return FieldElement(*field_, field_->inv(index_));
}

FieldElement FieldElement::pow(unsigned long long e) const {
    return FieldElement(*field_, field_->pow(index_, e));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field().q() == b.field().q() && a.index() == b.index();
}

} // namespace quadfree
