#ifndef QUADFREE_PROJECTIVE_HPP
#define QUADFREE_PROJECTIVE_HPP

#include <array>
#include <vector>

#include "quadfree/galois.hpp"

namespace quadfree {

// A point of PG(2,q): homogeneous coordinate triple, normalized so the
// first nonzero coordinate is 1. Equal projective points compare equal
// componentwise. The underlying Field must outlive the point.
class ProjPoint {
public:
    // Normalizes at construction. DomainError if all coordinates are zero;
    // FieldMismatch if the coordinates come from fields of different order.
    ProjPoint(const FieldElement& a, const FieldElement& b, const FieldElement& c);

    const FieldElement& x0() const { return c_[0]; }
    const FieldElement& x1() const { return c_[1]; }
    const FieldElement& x2() const { return c_[2]; }
    std::array<unsigned, 3> indices() const;
    const Field& field() const { return c_[0].field(); }

private:
    std::array<FieldElement, 3> c_;
};

// A line of PG(2,q) in line coordinates, normalized the same way.
// A point p lies on line l iff the coordinate dot product vanishes.
class ProjLine {
public:
    ProjLine(const FieldElement& a, const FieldElement& b, const FieldElement& c);

    const FieldElement& c0() const { return c_[0]; }
    const FieldElement& c1() const { return c_[1]; }
    const FieldElement& c2() const { return c_[2]; }
    std::array<unsigned, 3> indices() const;
    const Field& field() const { return c_[0].field(); }

private:
    std::array<FieldElement, 3> c_;
};

bool operator==(const ProjPoint& a, const ProjPoint& b);
bool operator!=(const ProjPoint& a, const ProjPoint& b);
bool operator<(const ProjPoint& a, const ProjPoint& b); // lex on index triples
bool operator==(const ProjLine& a, const ProjLine& b);
bool operator!=(const ProjLine& a, const ProjLine& b);

// All q^2+q+1 points in canonical order: lexicographic by coordinate
// indices, i.e. (0,0,1), then (0,1,t), then (1,s,t). This order fixes the
// vertex numbering of every downstream graph.
std::vector<ProjPoint> all_points(const Field& f);

// All q^2+q+1 lines, same normalization and order on coordinate triples.
std::vector<ProjLine> all_lines(const Field& f);

// The orthogonal polarity (identity Gram matrix): coordinate-preserving
// swap between points and lines. An involution that reverses containment.
ProjLine polar(const ProjPoint& p);
ProjPoint polar(const ProjLine& l);

// True iff the dot product of the coordinate triples vanishes.
// FieldMismatch if the two sides live over fields of different order.
bool incident(const ProjPoint& p, const ProjLine& l);

// The points lying on their own polar line: x0^2+x1^2+x2^2 = 0.
// Exactly q+1 of them for every prime power q.
std::vector<ProjPoint> absolute_points(const Field& f);

} // namespace quadfree

#endif
