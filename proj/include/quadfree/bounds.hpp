#ifndef QUADFREE_BOUNDS_HPP
#define QUADFREE_BOUNDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "quadfree/rational.hpp"

namespace quadfree {

// E0 = q(q+1)^2/2 - q, the target edge count on q^2+q vertices.
uint64_t e0(unsigned q); // DomainError for q = 0

// floor(n/4 * (1 + sqrt(4n-3))), the general C4-free edge ceiling.
// Computed as (n + isqrt(n^2(4n-3))) div 4 — exact across the floor
// boundary, no floating point.
uint64_t reiman_bound(uint64_t n);

// Outcome of one inequality check, evaluated in exact arithmetic.
struct LemmaVerdict {
    std::string lemma;
    unsigned q = 0;
    long long d = -1; // auxiliary degree parameter; -1 when not applicable
    Rational value;   // the decisive expression
    bool feasible = false;
    bool q_in_asserted_regime = false; // the regime the inequality targets: q even and q >= 6
    std::vector<std::pair<std::string, Rational>> extras;
};

// Maximum-degree feasibility at n = q^2+q, e = E0: compares both sides of
// the 2-path counting inequality
//   (q+1)(n-1)(n-d)(n-d-1) >= (q+1)(2e-n-d+1)(2e-2n-d+2)
// whose failure certifies that no C4-free graph with these parameters has
// a vertex of degree d. value = lhs - rhs; feasible = (value >= 0).
// extras carry the two auxiliary gap expressions. DomainError for q < 3.
LemmaVerdict max_degree_feasibility(unsigned q, uint64_t d);

// One admissible degree sequence at edge count E0 or E0+1.
struct DegreeSequenceRow {
    std::string family; // "theorem3-row1", "theorem3-row2", "final-A".."final-D"
    unsigned q = 0;
    long long z = 0;
    BigInt x_q_plus_2, x_q_plus_1, x_q, x_q_minus_1, x_q_minus_2;
};

// Both Theorem-3 families over every integer z keeping all counts
// nonnegative (row 1: 0 <= z <= q; row 2: 1 <= z <= q-1). Degree sums are
// verified to equal 2*E0 before returning. OddQ for odd q.
std::vector<DegreeSequenceRow> theorem3_rows(unsigned q);

// The 2-path ceiling q*e - |X_{q+1}| + |X_{q+2}|/2 for a graph on q^2+q
// vertices. A pure formula evaluator; its derivation assumes e = E0+1 and
// q even, and it majorizes the true 2-path count on the vertex-deleted
// polarity graphs.
Rational two_path_budget(unsigned q, uint64_t e, uint64_t x_q1, uint64_t x_q2);

// Unreachable-pair lower bound g for a vertex of degree d, q even:
// q(q+1-d) - 1 for d <= q, with corrections +2 at d = q+1 and +(q+1) at
// d = q+2 (closed form and the five-row table agree). OddQ for odd q,
// DegreeOutOfRange above q+2.
uint64_t g_table(unsigned q, uint64_t d);

// Feasibility of re-wiring a deleted vertex to reach degree q+3 at edge
// count E0 - q/2 + 1: value = -(2q^3-2q^2-10q+12)/(q^2+q-2), feasible
// iff >= 0. DomainError at q = 1.
LemmaVerdict lemma4_expression(unsigned q);

// The minimum-degree quadratic: delta must lie between
// 3/2 + q -+ sqrt(-7+12|X_{q+2}|)/2, and |X_{q+2}| >= 3+q-sqrt(5+3q).
struct Lemma6Result {
    unsigned q = 0;
    uint64_t x_q2 = 0;
    // rational brackets of the two roots, each of width 1e-9 or less
    Rational lower_root_lo, lower_root_hi;
    Rational upper_root_lo, upper_root_hi;
    bool threshold_holds = false;    // x_q2 >= 3+q-sqrt(5+3q), decided exactly
    uint64_t threshold_min_x_q2 = 0; // smallest integer satisfying the threshold
    bool implies_gt_q_half_plus_1 = false; // threshold forces x_q2 > q/2+1
};

// RadicandNegative when 12*x_q2 < 7.
Lemma6Result lemma6_roots(unsigned q, uint64_t x_q2);

// Two disjoint degree-(q+2) neighborhoods at e = E0+1:
// value = (-q^4-6q^3+17q^2+34q-48)/(q^2+q-2). DomainError at q = 1.
LemmaVerdict lemma7_expression(unsigned q);

// Overlapping degree-(q+2) neighborhoods at e = E0+1:
// value = -(6q^3-25q^2-28q+96)/(8q^2+8q-16) under the corrected
// denominator 8(q^2+q-2); printed_denominator evaluates the source's
// literal "8q^2+8-16" for audit. DomainError where the denominator is 0.
LemmaVerdict lemma8_expression(unsigned q, bool printed_denominator = false);

// Exact solve of the 2-path inequality for one final-table case.
struct FinalCaseResult {
    char case_id = 0; // 'A'..'D'
    unsigned q = 0;
    Rational z_bound;          // the inequality reduces to z <= z_bound
    long long z_min = 0;       // smallest integer z with all counts >= 0
    long long z_max = 0;       // largest such z
    bool integer_feasible = false; // an integer z satisfies both constraints
    DegreeSequenceRow row_at_z_min; // the case's counts instantiated at z_min
};

// Builds the case's degree counts symbolically in z at e = E0+1, solves
//   q*e - |X_{q+1}| + |X_{q+2}|/2 >= sum_k |X_k| * C(k,2)
// exactly (it is linear in z with negative slope), and reports the z upper
// bound plus integer feasibility against the nonnegativity window.
// OddQ for odd q; DomainError for a case outside A-D or q < 2.
FinalCaseResult final_case_z_bound(unsigned q, char case_id);

} // namespace quadfree

#endif
