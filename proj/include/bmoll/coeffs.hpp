#pragma once

// Boros-Moll coefficient rows, computed two independent ways.
//
// The quartic-integral polynomial P_m(a) = sum_{i=0..m} d_i(m) a^i has
// positive rational coefficients with the fixed denominator 4^m:
//
//   b_i(m) = 4^m d_i(m) = sum_{k=i..m} 2^k C(2m-2k, m-k) C(m+k, k) C(k, i)
//
// The canonical storage is the integer vector b_0..b_m; every inequality
// downstream is invariant under the positive scaling 4^m, so verifiers can
// compare integers and rationals only materialize at API boundaries.
//
// The same row also satisfies a three-term recurrence (valid for i >= 1,
// with b_i(m) = 0 outside 0 <= i <= m):
//
//   i(i-1) b_i = (i-1)(2m+1) b_{i-1} - (m+2-i)(m+i-1) b_{i-2}
//
// which is vacuous at i = 1, so row_recurrence seeds b_0, b_1 from the
// direct sum and applies the step from i = 2 on. Every division in the
// recurrence must be remainder-free; a remainder throws NonIntegralStep.

#include "arith.hpp"

#include <utility>
#include <vector>

namespace bmoll {

// C(n, k) by the multiplicative formula; 0 for k outside 0..n.
inline BigInt binomial(long n, long k) {
    if (n < 0)
        throw DomainError("binomial: n must be nonnegative");
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    // After step j the running product equals C(n-k+j, j), so each
    // division is exact.
    for (long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r = exact_div(r, BigInt(j));
    }
    return r;
}

// One coefficient row: b_0..b_m with implicit denominator 4^m.
struct CoeffRow {
    long m = 0;
    std::vector<BigInt> b;  // length m+1

    // b_i(m), with b_i = 0 for i outside 0..m.
    BigInt at(long i) const {
        if (i < 0 || i > m)
            return 0;
        return b[static_cast<size_t>(i)];
    }

    // d_i(m) = b_i(m) / 4^m, in lowest terms.
    Rational d_at(long i) const { return make_rational(at(i), pow4(m)); }

    friend bool operator==(const CoeffRow&, const CoeffRow&) = default;
};

// b_i(m) by direct summation of the defining sum.
inline BigInt b_direct(long m, long i) {
    if (m < 0)
        throw DomainError("b_direct: m must be nonnegative");
    if (i < 0 || i > m)
        return 0;
    BigInt sum = 0;
    for (long k = i; k <= m; ++k)
        sum += pow2(k) * binomial(2 * m - 2 * k, m - k) * binomial(m + k, k) * binomial(k, i);
    return sum;
}

// d_i(m) = b_i(m) / 4^m in lowest terms; exact zero for i outside 0..m.
inline Rational d_direct(long m, long i) {
    return make_rational(b_direct(m, i), pow4(m));
}

// Full row by direct summation. Equivalent to b_direct(m, i) for each i,
// but the k-th term's prefix 2^k C(2m-2k, m-k) C(m+k, k) is shared across
// all i <= k and C(k, i) is updated incrementally, so a row costs O(m^2)
// big-integer operations instead of O(m^3).
inline CoeffRow row_direct(long m) {
    if (m < 0)
        throw DomainError("row_direct: m must be nonnegative");
    CoeffRow row{m, std::vector<BigInt>(static_cast<size_t>(m) + 1, BigInt(0))};
    for (long k = 0; k <= m; ++k) {
        BigInt prefix = pow2(k) * binomial(2 * (m - k), m - k) * binomial(m + k, k);
        BigInt c = 1;  // C(k, i), stepped over i
        for (long i = 0; i <= k; ++i) {
            row.b[static_cast<size_t>(i)] += prefix * c;
            if (i < k) {
                c *= k - i;
                c = exact_div(c, BigInt(i + 1));
            }
        }
    }
    return row;
}

// Full row from the three-term recurrence, seeded with b_0, b_1 from the
// direct sum. Agrees with row_direct entrywise; a non-exact division step
// throws NonIntegralStep.
inline CoeffRow row_recurrence(long m) {
    if (m < 0)
        throw DomainError("row_recurrence: m must be nonnegative");
    CoeffRow row{m, std::vector<BigInt>(static_cast<size_t>(m) + 1)};
    row.b[0] = b_direct(m, 0);
    if (m >= 1)
        row.b[1] = b_direct(m, 1);
    for (long i = 2; i <= m; ++i) {
        BigInt num = BigInt(i - 1) * (2 * m + 1) * row.b[static_cast<size_t>(i - 1)] -
                     BigInt(m + 2 - i) * (m + i - 1) * row.b[static_cast<size_t>(i - 2)];
        row.b[static_cast<size_t>(i)] = exact_div(num, BigInt(i) * (i - 1));
    }
    return row;
}

// P_m(a) evaluated exactly, in Horner order.
inline Rational eval_poly(long m, const Rational& a) {
    if (m < 0)
        throw DomainError("eval_poly: m must be nonnegative");
    CoeffRow row = row_direct(m);
    Rational acc(row.b[static_cast<size_t>(m)]);
    for (long i = m - 1; i >= 0; --i)
        acc = acc * a + Rational(row.b[static_cast<size_t>(i)]);
    return acc / Rational(pow4(m));
}

// The top three coefficients in closed form (m >= 2):
//
//   d_m     = 2^-m C(2m, m)
//   d_{m-1} = 2^-(m+1) (2m+1) C(2m, m)
//   d_{m-2} = 2^-(m+2) (m-1)(4m^2+2m+1)/(2m-1) C(2m, m)
struct ClosedFormTriple {
    Rational d_m;
    Rational d_m_minus_1;
    Rational d_m_minus_2;

    friend bool operator==(const ClosedFormTriple&, const ClosedFormTriple&) = default;
};

inline ClosedFormTriple closed_forms(long m) {
    if (m < 2)
        throw DomainError("closed_forms: requires m >= 2");
    BigInt central = binomial(2 * m, m);
    BigInt mm(m);
    ClosedFormTriple t;
    t.d_m = make_rational(central, pow2(m));
    t.d_m_minus_1 = make_rational((2 * mm + 1) * central, pow2(m + 1));
    t.d_m_minus_2 =
        make_rational((mm - 1) * (4 * mm * mm + 2 * mm + 1) * central, pow2(m + 2) * (2 * mm - 1));
    return t;
}

}  // namespace bmoll
