#include "quadfree/bounds.hpp"

namespace quadfree {

namespace {

void require(bool condition, const std::string& what) {
    if (!condition) throw Error("bounds invariant violated: " + what);
}

// C(x,2) over the exact integers.
BigInt binom2(const BigInt& x) { return x * (x - 1) / 2; }

// A quantity linear in the parameter z.
struct Lin {
    Rational c0, c1; // value = c0 + c1*z
    Rational at(const BigInt& z) const { return c0 + c1 * Rational(z); }
};

} // namespace

uint64_t e0(unsigned q) {
    if (q == 0) throw DomainError("E0 requires q >= 1");
    return static_cast<uint64_t>(q) * (q + 1) * (q + 1) / 2 - q;
}

uint64_t reiman_bound(uint64_t n) {
    if (n == 0) return 0;
    BigInt nn(n);
    BigInt s = isqrt_floor(nn * nn * (4 * nn - 3));
    BigInt result = (nn + s) / 4;
    return result.convert_to<uint64_t>();
}

LemmaVerdict max_degree_feasibility(unsigned q, uint64_t d) {
    if (q < 3) throw DomainError("max-degree feasibility requires q >= 3");
    const BigInt Q(q), D(d);
    const BigInt n = Q * Q + Q;
    const BigInt e = Q * (Q + 1) * (Q + 1) / 2 - Q;
    const BigInt lhs = (Q + 1) * (n - 1) * (n - D) * (n - D - 1);
    const BigInt rhs = (Q + 1) * (2 * e - n - D + 1) * (2 * e - 2 * n - D + 2);
    LemmaVerdict v;
    v.lemma = "lemma1";
    v.q = q;
    v.d = static_cast<long long>(d);
    v.value = Rational(lhs - rhs);
    v.feasible = lhs >= rhs;
    v.q_in_asserted_regime = q > 2; // this lemma is stated for q > 2, any parity
    v.extras.emplace_back("gap2",
                          Rational((Q + 1) * (2 * e - 2 * n - D + 2) - (n - 1) * (n - D - 1)));
    v.extras.emplace_back("gap3", Rational((2 * e - n - D + 1) - (Q + 1) * (n - D)));
    return v;
}

std::vector<DegreeSequenceRow> theorem3_rows(unsigned q) {
    if (q % 2 != 0) throw OddQ("the degree-sequence table requires even q");
    if (q < 2) throw DomainError("the degree-sequence table requires q >= 2");
    const BigInt Q(q);
    const BigInt two_e0 = Q * (Q + 1) * (Q + 1) - 2 * Q;
    std::vector<DegreeSequenceRow> rows;
    auto emit = [&](const std::string& family, long long z, BigInt x1, BigInt x0,
                    BigInt xm1, BigInt xm2) {
        DegreeSequenceRow r;
        r.family = family;
        r.q = q;
        r.z = z;
        r.x_q_plus_2 = 0;
        r.x_q_plus_1 = x1;
        r.x_q = x0;
        r.x_q_minus_1 = xm1;
        r.x_q_minus_2 = xm2;
        require(x1 >= 0 && x0 >= 0 && xm1 >= 0 && xm2 >= 0, "negative class count");
        require(x1 + x0 + xm1 + xm2 == Q * Q + Q, "vertex total");
        require((Q + 1) * x1 + Q * x0 + (Q - 1) * xm1 + (Q - 2) * xm2 == two_e0,
                "degree sum must be 2*E0");
        rows.push_back(std::move(r));
    };
    for (long long z = 0; z <= static_cast<long long>(q); ++z)
        emit("theorem3-row1", z, Q * Q - Q + z, 2 * Q - 2 * z, BigInt(z), BigInt(0));
    for (long long z = 1; z + 1 <= static_cast<long long>(q); ++z)
        emit("theorem3-row2", z, Q * Q - Q + z + 1, 2 * Q - 2 * z - 1, BigInt(z - 1),
             BigInt(1));
    return rows;
}

Rational two_path_budget(unsigned q, uint64_t e, uint64_t x_q1, uint64_t x_q2) {
    return Rational(BigInt(q) * e - x_q1) + Rational(BigInt(x_q2), 2);
}

uint64_t g_table(unsigned q, uint64_t d) {
    if (q % 2 != 0) throw OddQ("the unreachable-pair table requires even q");
    if (d > static_cast<uint64_t>(q) + 2)
        throw DegreeOutOfRange("degree " + std::to_string(d) + " exceeds q+2");
    if (d == static_cast<uint64_t>(q) + 2) return 0;         // q(q+1-d)-1 + (q+1)
    if (d == static_cast<uint64_t>(q) + 1) return 1;         // q(q+1-d)-1 + 2
    return static_cast<uint64_t>(q) * (q + 1 - d) - 1;       // closed form, d <= q
}

namespace {

LemmaVerdict rational_lemma(const std::string& name, unsigned q, BigInt num, BigInt den) {
    if (q < 2) throw DomainError(name + " is undefined for q < 2");
    if (den == 0) throw DomainError(name + " has a zero denominator at q = " + std::to_string(q));
    LemmaVerdict v;
    v.lemma = name;
    v.q = q;
    v.value = Rational(num, den);
    v.feasible = v.value >= 0;
    v.q_in_asserted_regime = (q >= 6 && q % 2 == 0);
    return v;
}

} // namespace

LemmaVerdict lemma4_expression(unsigned q) {
    const BigInt Q(q);
    return rational_lemma("lemma4", q, -(2 * Q * Q * Q - 2 * Q * Q - 10 * Q + 12),
                          Q * Q + Q - 2);
}

Lemma6Result lemma6_roots(unsigned q, uint64_t x_q2) {
    const BigInt r = 12 * BigInt(x_q2) - 7;
    if (r < 0)
        throw RadicandNegative("discriminant -7 + 12|X_{q+2}| is negative for |X_{q+2}| = " +
                               std::to_string(x_q2));
    Lemma6Result out;
    out.q = q;
    out.x_q2 = x_q2;

    // sqrt(r) bracketed to width 1e-9: s/S <= sqrt(r) < (s+1)/S with S = 1e9
    const BigInt scale("1000000000");
    const BigInt s = isqrt_floor(r * scale * scale);
    const Rational sq_lo(s, scale), sq_hi(s + 1, scale);
    const Rational center = Rational(3, 2) + q;
    out.lower_root_lo = center - sq_hi / 2;
    out.lower_root_hi = center - sq_lo / 2;
    out.upper_root_lo = center + sq_lo / 2;
    out.upper_root_hi = center + sq_hi / 2;

    // x_q2 >= 3+q-sqrt(5+3q), decided by squaring, never by floating point
    const BigInt rad = 5 + 3 * BigInt(q);
    const BigInt L = BigInt(3) + q - BigInt(x_q2);
    out.threshold_holds = (L <= 0) || (L * L <= rad);

    // ceil(3+q-sqrt(5+3q)) = 3+q-isqrt(5+3q), for perfect squares and not
    BigInt min_x = BigInt(3) + q - isqrt_floor(rad);
    if (min_x < 0) min_x = 0;
    out.threshold_min_x_q2 = min_x.convert_to<uint64_t>();
    out.implies_gt_q_half_plus_1 = 2 * min_x > BigInt(q) + 2;
    return out;
}

LemmaVerdict lemma7_expression(unsigned q) {
    const BigInt Q(q);
    return rational_lemma("lemma7", q,
                          -(Q * Q * Q * Q) - 6 * Q * Q * Q + 17 * Q * Q + 34 * Q - 48,
                          Q * Q + Q - 2);
}

LemmaVerdict lemma8_expression(unsigned q, bool printed_denominator) {
    const BigInt Q(q);
    BigInt den = 8 * Q * Q - 16;
    den += printed_denominator ? BigInt(8) : 8 * Q;
    LemmaVerdict v = rational_lemma("lemma8", q, -(6 * Q * Q * Q - 25 * Q * Q - 28 * Q + 96), den);
    v.extras.emplace_back("denominator", Rational(den));
    return v;
}

FinalCaseResult final_case_z_bound(unsigned q, char case_id) {
    if (q % 2 != 0) throw OddQ("the final case table requires even q");
    if (q < 2) throw DomainError("the final case table requires q >= 2");
    const BigInt Q(q);

    // class counts as linear functions of z: {X_{q+1}, X_q, X_{q-1}, X_{q-2}};
    // X_{q+2} = 1 in every case
    Lin x1, x0, xm1, xm2;
    switch (case_id) {
        case 'A':
            x1 = {Rational(Q * Q - Q), 1};
            x0 = {Rational(2 * Q - 1), -2};
            xm1 = {0, 1};
            xm2 = {0, 0};
            break;
        case 'B':
            x1 = {Rational(Q * Q - Q), 1};
            x0 = {Rational(2 * Q), -2};
            xm1 = {-2, 1};
            xm2 = {1, 0};
            break;
        case 'C':
            x1 = {Rational(Q * Q - Q + 1), 1};
            x0 = {Rational(2 * Q - 2), -2};
            xm1 = {-1, 1};
            xm2 = {1, 0};
            break;
        case 'D':
            x1 = {Rational(Q * Q - Q - 1), 1};
            x0 = {Rational(2 * Q + 1), -2};
            xm1 = {-1, 1};
            xm2 = {0, 0};
            break;
        default:
            throw DomainError(std::string("unknown case '") + case_id + "', expected A-D");
    }

    const BigInt e = Q * (Q + 1) * (Q + 1) / 2 - Q + 1; // E0 + 1

    // budget - true 2-path count, as a linear function of z
    Lin diff;
    diff.c0 = Rational(Q * e) + Rational(1, 2) // q*e + |X_{q+2}|/2 with |X_{q+2}| = 1
              - Rational(binom2(Q + 2));       // |X_{q+2}| * C(q+2,2)
    diff.c1 = 0;
    auto subtract_class = [&diff](const Lin& x, const BigInt& weight) {
        diff.c0 -= x.c0 * Rational(weight);
        diff.c1 -= x.c1 * Rational(weight);
    };
    subtract_class(x1, BigInt(1) + binom2(Q + 1)); // the -|X_{q+1}| term and C(q+1,2)
    subtract_class(x0, binom2(Q));
    subtract_class(xm1, binom2(Q - 1));
    subtract_class(xm2, binom2(Q - 2));

    require(diff.c1 < 0, "the case inequality must have negative slope in z");
    FinalCaseResult out;
    out.case_id = case_id;
    out.q = q;
    out.z_bound = -diff.c0 / diff.c1;

    // integer window where every class count is nonnegative
    Rational lo, hi;
    bool has_lo = false, has_hi = false;
    for (const Lin* x : {&x1, &x0, &xm1, &xm2}) {
        if (x->c1 == 0) {
            require(x->c0 >= 0, "constant class count must be nonnegative");
        } else if (x->c1 > 0) {
            Rational b = -x->c0 / x->c1;
            if (!has_lo || b > lo) lo = b, has_lo = true;
        } else {
            Rational b = -x->c0 / x->c1;
            if (!has_hi || b < hi) hi = b, has_hi = true;
        }
    }
    require(has_lo && has_hi, "the nonnegativity window must be bounded");
    BigInt zmin = -rational_floor(-lo); // ceil
    BigInt zmax = rational_floor(hi);
    out.z_min = zmin.convert_to<long long>();
    out.z_max = zmax.convert_to<long long>();
    BigInt ceiling = rational_floor(out.z_bound);
    if (ceiling > zmax) ceiling = zmax;
    out.integer_feasible = zmin <= ceiling;

    // the instantiated row at z_min, with its own consistency checks
    DegreeSequenceRow row;
    row.family = std::string("final-") + case_id;
    row.q = q;
    row.z = out.z_min;
    row.x_q_plus_2 = 1;
    auto as_int = [&zmin](const Lin& x) {
        Rational v = x.at(zmin);
        require(rational_den(v) == 1, "class count must be an integer");
        return rational_num(v);
    };
    row.x_q_plus_1 = as_int(x1);
    row.x_q = as_int(x0);
    row.x_q_minus_1 = as_int(xm1);
    row.x_q_minus_2 = as_int(xm2);
    require(row.x_q_plus_2 + row.x_q_plus_1 + row.x_q + row.x_q_minus_1 + row.x_q_minus_2 ==
                Q * Q + Q,
            "final-case vertex total");
    require((Q + 2) * row.x_q_plus_2 + (Q + 1) * row.x_q_plus_1 + Q * row.x_q +
                    (Q - 1) * row.x_q_minus_1 + (Q - 2) * row.x_q_minus_2 ==
                2 * e,
            "final-case degree sum must be 2*(E0+1)");
    out.row_at_z_min = std::move(row);
    return out;
}

} // namespace quadfree
