#pragma once

// Floating-point cross-check of the quartic integral identity
//
//   int_0^inf dx / (x^4 + 2a x^2 + 1)^(m+1)
//     = pi / (2^(m+3/2) (a+1)^(m+1/2)) * P_m(a),   a > -1, m >= 0.
//
// The improper range is folded onto [0,1] through x -> 1/x, which maps the
// tail back onto the unit interval without introducing any singularity for
// a > -1:
//
//   int_0^inf f = int_0^1 (1 + x^(4m+2)) / (x^4 + 2a x^2 + 1)^(m+1) dx
//
// and the folded integrand is integrated by adaptive Simpson quadrature
// with Richardson error control. The closed form keeps P_m(a) exact until
// the final conversion to double.
//
// Near a = -1 the (a+1)^(m+1/2) factor amplifies rounding error; nothing is
// special-cased there, the reported rel_error is simply what it is.

#include "coeffs.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

namespace bmoll {

struct IntegralCheckResult {
    long m = 0;
    Rational a;
    double numeric_integral = 0;
    double closed_form = 0;
    double abs_error = 0;
    double rel_error = 0;
    double tol = 0;
    bool pass = false;
};

// 1 / (x^4 + 2a x^2 + 1)^(m+1), the raw integrand on [0, inf).
inline double integrand(double x, double a, long m) {
    const double x2 = x * x;
    return 1.0 / std::pow(x2 * x2 + 2.0 * a * x2 + 1.0, static_cast<double>(m + 1));
}

namespace detail {

// (1 + x^(4m+2)) / (x^4 + 2a x^2 + 1)^(m+1), the folded integrand on [0,1].
inline double folded_integrand(double x, double a, long m) {
    return (1.0 + std::pow(x, static_cast<double>(4 * m + 2))) * integrand(x, a, m);
}

constexpr long kIntervalBudget = 1000000;
constexpr int kMaxDepth = 60;

struct SimpsonState {
    double a;
    long m;
    long budget;
    long intervals = 0;
};

inline double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adapt(SimpsonState& st, double lo, double hi, double flo, double fmid, double fhi,
                    double whole, double eps, int depth) {
    if (++st.intervals > st.budget || depth > kMaxDepth)
        throw ConvergenceError("quartic_integral_numeric: subdivision budget exceeded");
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid);
    const double rmid = 0.5 * (mid + hi);
    const double flmid = folded_integrand(lmid, st.a, st.m);
    const double frmid = folded_integrand(rmid, st.a, st.m);
    const double left = simpson(flo, flmid, fmid, mid - lo);
    const double right = simpson(fmid, frmid, fhi, hi - mid);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adapt(st, lo, mid, flo, flmid, fmid, left, 0.5 * eps, depth + 1) +
           adapt(st, mid, hi, fmid, frmid, fhi, right, 0.5 * eps, depth + 1);
}

}  // namespace detail

// Adaptive-quadrature estimate of the quartic integral, folded onto [0,1],
// with target relative accuracy tol. Throws ConvergenceError once the
// refinement exceeds max_intervals subdivisions; an interval whose Richardson
// delta underflows to zero counts as converged at machine precision.
inline double quartic_integral_numeric(long m, const Rational& a, double tol,
                                       long max_intervals = detail::kIntervalBudget) {
    if (m < 0)
        throw DomainError("quartic_integral_numeric: m must be nonnegative");
    if (!(a > -1))
        throw DomainError("quartic_integral_numeric: requires a > -1");
    if (!(tol > 0))
        throw DomainError("quartic_integral_numeric: tol must be positive");
    const double ad = a.convert_to<double>();
    detail::SimpsonState st{ad, m, max_intervals};
    const double f0 = detail::folded_integrand(0.0, ad, m);
    const double fmid = detail::folded_integrand(0.5, ad, m);
    const double f1 = detail::folded_integrand(1.0, ad, m);
    const double whole = detail::simpson(f0, fmid, f1, 1.0);
    // Drive the local error estimate one order below the requested accuracy;
    // the Richardson-extrapolated leaves land well inside it.
    const double eps = 0.1 * tol * std::abs(whole);
    return detail::adapt(st, 0.0, 1.0, f0, fmid, f1, whole, eps, 0);
}

// Quadrature vs. closed form, with P_m(a) kept exact until the final
// conversion to double.
inline IntegralCheckResult check_integral_identity(long m, const Rational& a, double tol) {
    if (!(a > -1))
        throw DomainError("check_integral_identity: requires a > -1");
    if (!(tol > 0))
        throw DomainError("check_integral_identity: tol must be positive");
    IntegralCheckResult res;
    res.m = m;
    res.a = a;
    res.tol = tol;
    res.numeric_integral = quartic_integral_numeric(m, a, tol);
    const double ad = a.convert_to<double>();
    const double prefactor = std::numbers::pi / (std::pow(2.0, static_cast<double>(m) + 1.5) *
                                                 std::pow(ad + 1.0, static_cast<double>(m) + 0.5));
    res.closed_form = prefactor * eval_poly(m, a).convert_to<double>();
    res.abs_error = std::abs(res.numeric_integral - res.closed_form);
    res.rel_error = res.abs_error / std::abs(res.closed_form);
    res.pass = res.rel_error <= tol;
    return res;
}

}  // namespace bmoll
