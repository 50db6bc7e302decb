#pragma once

#include "tightgon/analytic.hpp"

#include <vector>

namespace tightgon {

enum class Sequence { consecutive_up, consecutive_down, primes_up, primes_down };
enum class NestMode { standard, rotated };

struct CascadeSpec {
    Sequence sequence;
    int start;
    int end;
    NestMode mode = NestMode::standard;
};

struct CascadeResult {
    std::vector<int> sides;       // side counts, innermost first
    std::vector<double> ratios;   // per-step circumradius ratios
    std::vector<double> angles;   // per-step rotation increments (rad)
    double cumulative;            // product of ratios
    double wrench;                // sum of angles (rad)
};

/// Chains tight circumscriptions along a side-count sequence.
CascadeResult cascade(const CascadeSpec& spec);

/// Limit of the consecutive-up cascade, C_o / (2 K').
ConstantResult limit_consecutive_up(const SeriesConfig& cfg = {});

/// Limit of the consecutive-down cascade, quench_even / K'.
ConstantResult limit_consecutive_down(const SeriesConfig& cfg = {});

enum class Direction { up, down };

/// Limit of the prime-stride cascade; down is exactly twice up.
ConstantResult limit_primes(Direction dir, const SeriesConfig& cfg = {});

/// Limit of the rotated-nesting product series,
/// C_e * P_2pi_odd / (sqrt(3) K').
ConstantResult limit_rotated_up(const SeriesConfig& cfg = {});

/// Truncation of the infinite product defining limit_rotated_up, taken
/// over stages 3..last_side.  This is the product series itself; the
/// containment-valid rotated cascade (see cascade) has slightly larger
/// odd-stage factors.
double rotated_limit_partial(int last_side);

/// Cumulative wrench angle pi(5/6 - ln 2) of the rotated nesting.
ConstantResult wrench_angle_limit();

/// Partial wrench sum pi * sum_{n=2}^{N} 1/(2n(2n+1)).
double wrench_partial(int N);

}  // namespace tightgon
