#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tightgon {

/// Truncation parameters for series-accelerated evaluations.
struct SeriesConfig {
    int taylor_order = 12;  // highest eps power of the log-cos expansion
    int cutoff_M = 10;      // explicit-summation bound before tail acceleration
    int zeta_terms = 40;    // direct terms for zeta at odd integer arguments
};

/// A named constant with the truncation used and a conservative error bound.
struct ConstantResult {
    std::string name;
    double value = 0.0;
    SeriesConfig truncation;
    double error_estimate = 0.0;
};

/// Coefficients c_{2k} of log cos(eps) = -sum_{k>=1} c_{2k} eps^{2k},
/// generated from the tangent numbers; index k-1 holds c_{2k}.
std::span<const double> log_cos_coefficients(int order);

/// Truncated log-cos series up to eps^order (order even, 2..32).
/// Requires |eps| < pi/2.
double log_cos_series(double eps, int order);

/// Riemann zeta at integer t >= 2.  Even t by the Bernoulli closed form,
/// odd t by direct summation with an Euler-Maclaurin tail.
double zeta_int(int t);

/// sum_{n>M} n^{-s} for real s >= 2, evaluated as an incomplete zeta tail
/// (Euler-Maclaurin from the cutoff, no cancellation).
double zeta_tail(double s, int M);

/// sum_{n>M} sum_j c_j n^{-s_j}; every power must be >= 2.
double deferred_tail(std::span<const std::pair<int, double>> terms, int M);

/// Coefficients a_j (index j, starting at 0) of the 1/n expansion
/// log cos(pi/((2n+1)(n+1))) = sum_{j>=4} a_j n^{-j}, up to n^{-jmax}.
std::vector<double> two_pi_tail_expansion(int jmax);

/// T_e(2s) = sum_{k>=1} [(2k)(2k+1)]^{-2s}.  s in 1..8.
double T_even(int s);

/// T(2s) = sum_{n>=1} [n(n+1)]^{-2s}.  s in 1..8.
double T_all(int s);

/// T_o(2s) = T(2s) - T_e(2s): odd lower factor only.
double T_odd(int s);

/// sum over consecutive odd prime pairs of (p_j p_{j+1})^{-2s}.  s >= 1.
double prime_pair_sum(int s);

/// Prime zeta P(s) = sum_p p^{-s} for real s >= 2.
double prime_zeta(double s);

/// Named constants:
///   K_prime        prod_{n>=3} cos(pi/n)
///   K_p_prime      prod over odd primes of cos(pi/p)
///   C_e            prod_{n=2,4,6,..} cos(pi/(n(n+1)))
///   C_full         prod_{n>=2} cos(pi/(n(n+1)))
///   C_o            prod_{n=3,5,7,..} cos(pi/(n(n+1)))
///   P_2pi_odd      prod_{k=3,5,7,..} cos(2pi/(k(k+1)))
///   P_prime_pairs  prod over odd prime pairs of cos(pi/(p_j p_{j+1}))
///   quench_even    prod_{n=4,6,8,..} cos(pi/(n(n+1)))
ConstantResult constant(std::string_view name, const SeriesConfig& cfg = {});

/// All names accepted by constant().
std::vector<std::string> constant_names();

}  // namespace tightgon
