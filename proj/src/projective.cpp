#include "quadfree/projective.hpp"

namespace quadfree {

namespace {

std::array<FieldElement, 3> normalize(const FieldElement& a, const FieldElement& b,
                                      const FieldElement& c) {
    if (a.field().q() != b.field().q() || a.field().q() != c.field().q())
        throw FieldMismatch("projective coordinates must come from one field");
    const Field& f = a.field();
    std::array<unsigned, 3> v = {a.index(), b.index(), c.index()};
    unsigned lead = 0;
    while (lead < 3 && v[lead] == 0) ++lead;
    if (lead == 3) throw DomainError("projective triple must not be all zero");
    unsigned s = f.inv(v[lead]);
    for (unsigned& x : v) x = f.mul(s, x);
    return {f.element(v[0]), f.element(v[1]), f.element(v[2])};
}

unsigned dot(const Field& f, const std::array<unsigned, 3>& a,
             const std::array<unsigned, 3>& b) {
    unsigned s = 0;
    for (unsigned i = 0; i < 3; ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

} // namespace

ProjPoint::ProjPoint(const FieldElement& a, const FieldElement& b, const FieldElement& c)
    : c_(normalize(a, b, c)) {}

ProjLine::ProjLine(const FieldElement& a, const FieldElement& b, const FieldElement& c)
    : c_(normalize(a, b, c)) {}

std::array<unsigned, 3> ProjPoint::indices() const {
    return {c_[0].index(), c_[1].index(), c_[2].index()};
}

std::array<unsigned, 3> ProjLine::indices() const {
    return {c_[0].index(), c_[1].index(), c_[2].index()};
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.field().q() == b.field().q() && a.indices() == b.indices();
}
bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
bool operator<(const ProjPoint& a, const ProjPoint& b) {
    return a.indices() < b.indices();
}
bool operator==(const ProjLine& a, const ProjLine& b) {
    return a.field().q() == b.field().q() && a.indices() == b.indices();
}
bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }

// Normalized triples enumerate as (0,0,1), (0,1,t), (1,s,t); emitting them
// in that nesting is exactly lexicographic order on the index triples.
std::vector<ProjPoint> all_points(const Field& f) {
    std::vector<ProjPoint> pts;
    pts.reserve(static_cast<size_t>(f.q()) * f.q() + f.q() + 1);
    FieldElement zero = f.zero(), one = f.one();
    pts.emplace_back(zero, zero, one);
    for (unsigned t = 0; t < f.q(); ++t) pts.emplace_back(zero, one, f.element(t));
    for (unsigned s = 0; s < f.q(); ++s)
        for (unsigned t = 0; t < f.q(); ++t)
            pts.emplace_back(one, f.element(s), f.element(t));
    return pts;
}

std::vector<ProjLine> all_lines(const Field& f) {
    std::vector<ProjLine> lines;
    lines.reserve(static_cast<size_t>(f.q()) * f.q() + f.q() + 1);
    FieldElement zero = f.zero(), one = f.one();
    lines.emplace_back(zero, zero, one);
    for (unsigned t = 0; t < f.q(); ++t) lines.emplace_back(zero, one, f.element(t));
    for (unsigned s = 0; s < f.q(); ++s)
        for (unsigned t = 0; t < f.q(); ++t)
            lines.emplace_back(one, f.element(s), f.element(t));
    return lines;
}

ProjLine polar(const ProjPoint& p) { return ProjLine(p.x0(), p.x1(), p.x2()); }
ProjPoint polar(const ProjLine& l) { return ProjPoint(l.c0(), l.c1(), l.c2()); }

bool incident(const ProjPoint& p, const ProjLine& l) {
    if (p.field().q() != l.field().q())
        throw FieldMismatch("point and line live over fields of different order");
    return dot(p.field(), p.indices(), l.indices()) == 0;
}

std::vector<ProjPoint> absolute_points(const Field& f) {
    std::vector<ProjPoint> result;
    for (const ProjPoint& p : all_points(f)) {
        std::array<unsigned, 3> v = p.indices();
        if (dot(f, v, v) == 0) result.push_back(p);
    }
    return result;
}

} // namespace quadfree
