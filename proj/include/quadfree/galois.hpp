#ifndef QUADFREE_GALOIS_HPP
#define QUADFREE_GALOIS_HPP

#include <cstdint>
#include <vector>

#include "quadfree/errors.hpp"

namespace quadfree {

class FieldElement;

// GF(p^k), constructed deterministically: the modulus is the
// lexicographically smallest monic irreducible polynomial of degree k over
// GF(p), comparing coefficient tuples from the x^(k-1) coefficient down
// (equivalently: ascending base-p integer encodings of the non-leading
// coefficients). Elements are the integers 0..q-1, read base-p as
// coefficient vectors; 0 is the additive and 1 the multiplicative identity.
//
// Immutable after construction; safe to share across threads.
class Field {
public:
    // Throws NotPrimePower unless q = p^k for a prime p, TooLarge above 2^16.
    explicit Field(unsigned q);

    unsigned p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned q() const { return q_; }

    // modulus()[i] is the x^i coefficient; size k+1, leading coefficient 1.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    // Arithmetic on element indices. Indices must be < q (DomainError).
    unsigned add(unsigned a, unsigned b) const;
    unsigned sub(unsigned a, unsigned b) const;
    unsigned neg(unsigned a) const;
    unsigned mul(unsigned a, unsigned b) const;
    unsigned inv(unsigned a) const;  // DivisionByZero on a = 0
    unsigned div(unsigned a, unsigned b) const;
    unsigned pow(unsigned a, unsigned long long e) const;

    FieldElement element(unsigned index) const;
    FieldElement zero() const;
    FieldElement one() const;

    static constexpr unsigned max_order = 1u << 16;
    // Full q*q multiplication and q inverse tables are precomputed up to
    // this order; larger fields reduce polynomials on the fly.
    static constexpr unsigned table_threshold = 256;

private:
    unsigned p_ = 0, k_ = 0, q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<uint16_t> mul_table_;  // q*q entries when q <= table_threshold
    std::vector<uint16_t> inv_table_;  // q entries, same condition

    unsigned mul_poly(unsigned a, unsigned b) const;
    void check_index(unsigned a) const;
};

// Fields of equal order are interchangeable (construction is deterministic).
inline bool operator==(const Field& a, const Field& b) { return a.q() == b.q(); }
inline bool operator!=(const Field& a, const Field& b) { return !(a == b); }

// An element bound to its Field. The Field must outlive the element.
// Arithmetic between elements of fields of different order throws
// FieldMismatch; equal-order fields are interchangeable.
class FieldElement {
public:
    FieldElement(const Field& f, unsigned index);

    unsigned index() const { return index_; }
    const Field& field() const { return *field_; }
    bool is_zero() const { return index_ == 0; }

    FieldElement inverse() const;
    FieldElement pow(unsigned long long e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) {
        return !(a == b);
    }

private:
    const Field* field_;
    unsigned index_;
};

} // namespace quadfree

#endif
