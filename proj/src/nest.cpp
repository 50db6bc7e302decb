#include "tightgon/nest.hpp"

#include "tightgon/circumscribe.hpp"
#include "tightgon/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace tightgon {

namespace {

std::vector<int> side_sequence(const CascadeSpec& spec) {
    std::vector<int> sides;
    switch (spec.sequence) {
        case Sequence::consecutive_up:
            if (spec.start < 3 || spec.end < spec.start)
                throw std::domain_error("consecutive-up needs 3 <= start <= end");
            for (int k = spec.start; k <= spec.end; ++k)
                sides.push_back(k);
            break;
        case Sequence::consecutive_down:
            if (spec.end < 3 || spec.start < spec.end)
                throw std::domain_error("consecutive-down needs start >= end >= 3");
            for (int k = spec.start; k >= spec.end; --k)
                sides.push_back(k);
            break;
        case Sequence::primes_up: {
            if (spec.start < 3 || spec.end < spec.start)
                throw std::domain_error("primes-up needs 3 <= start <= end");
            for (int p : odd_primes_up_to(spec.end))
                if (p >= spec.start)
                    sides.push_back(p);
            break;
        }
        case Sequence::primes_down: {
            if (spec.end < 3 || spec.start < spec.end)
                throw std::domain_error("primes-down needs start >= end >= 3");
            const auto primes = odd_primes_up_to(spec.start);
            for (auto it = primes.rbegin(); it != primes.rend(); ++it)
                if (*it >= spec.end)
                    sides.push_back(*it);
            break;
        }
    }
    return sides;
}

}  // namespace

CascadeResult cascade(const CascadeSpec& spec) {
    CascadeResult out;
    out.sides = side_sequence(spec);
    out.cumulative = 1.0;
    out.wrench = 0.0;
    for (size_t i = 0; i + 1 < out.sides.size(); ++i) {
        const int a = out.sides[i];
        const int b = out.sides[i + 1];
        double ratio;
        double angle = 0.0;
        if (spec.mode == NestMode::rotated) {
            // tight placement at the heuristic lattice rotation; every
            // step remains a genuine containment
            const int s = s_heuristic(a, b);
            angle = s * M_PI / (static_cast<double>(a) * b);
            ratio = tight_lattice(a, b, s, 1).ratio;
        } else {
            ratio = tight_standard(a, b).ratio;
        }
        out.ratios.push_back(ratio);
        out.angles.push_back(angle);
        out.cumulative *= ratio;
        out.wrench += angle;
    }
    return out;
}

double rotated_limit_partial(int last_side) {
    if (last_side < 3)
        throw std::domain_error("rotated_limit_partial: need last side >= 3");
    // odd stages carry a two-unit contact offset in this product series
    double prod = 1.0;
    for (int a = 3; a < last_side; ++a) {
        const int offset = (a % 2 == 1) ? 2 : 1;
        const double unit = M_PI / (static_cast<double>(a) * (a + 1));
        prod *= std::cos(offset * unit) / std::cos(M_PI / (a + 1));
    }
    return prod;
}

ConstantResult limit_consecutive_up(const SeriesConfig& cfg) {
    const auto co = constant("C_o", cfg);
    const auto kp = constant("K_prime", cfg);
    ConstantResult out;
    out.name = "limit_consecutive_up";
    out.value = co.value / (2.0 * kp.value);
    out.truncation = cfg;
    out.error_estimate =
        out.value * (co.error_estimate / co.value + kp.error_estimate / kp.value);
    return out;
}

ConstantResult limit_consecutive_down(const SeriesConfig& cfg) {
    const auto q = constant("quench_even", cfg);
    const auto kp = constant("K_prime", cfg);
    ConstantResult out;
    out.name = "limit_consecutive_down";
    out.value = q.value / kp.value;
    out.truncation = cfg;
    out.error_estimate =
        out.value * (q.error_estimate / q.value + kp.error_estimate / kp.value);
    return out;
}

ConstantResult limit_primes(Direction dir, const SeriesConfig& cfg) {
    const auto pp = constant("P_prime_pairs", cfg);
    const auto kpp = constant("K_p_prime", cfg);
    ConstantResult out;
    out.name = dir == Direction::up ? "limit_primes_up" : "limit_primes_down";
    out.value = pp.value / (2.0 * kpp.value);
    if (dir == Direction::down)
        out.value *= 2.0;
    out.truncation = cfg;
    out.error_estimate =
        out.value * (pp.error_estimate / pp.value + kpp.error_estimate / kpp.value);
    return out;
}

ConstantResult limit_rotated_up(const SeriesConfig& cfg) {
    const auto ce = constant("C_e", cfg);
    const auto p2 = constant("P_2pi_odd", cfg);
    const auto kp = constant("K_prime", cfg);
    ConstantResult out;
    out.name = "limit_rotated_up";
    out.value = ce.value * p2.value / (std::sqrt(3.0) * kp.value);
    out.truncation = cfg;
    out.error_estimate = out.value * (ce.error_estimate / ce.value +
                                      p2.error_estimate / p2.value +
                                      kp.error_estimate / kp.value);
    return out;
}

ConstantResult wrench_angle_limit() {
    ConstantResult out;
    out.name = "wrench_angle";
    out.value = M_PI * (5.0 / 6.0 - std::log(2.0));
    out.error_estimate = 4.0 * 2.22e-16 * out.value;
    return out;
}

double wrench_partial(int N) {
    if (N < 2)
        return 0.0;
    double sum = 0.0;
    for (int n = N; n >= 2; --n)
        sum += 1.0 / (2.0 * n * (2.0 * n + 1.0));
    return M_PI * sum;
}

}  // namespace tightgon
