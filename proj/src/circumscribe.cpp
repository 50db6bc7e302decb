#include "tightgon/circumscribe.hpp"

#include "tightgon/polygon.hpp"
#include "tightgon/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tightgon {

namespace {

void check_sides(int n, int m) {
    if (n < 3 || m < 3)
        throw std::domain_error("side counts must be >= 3");
}

void check_indices(int n, int m, int j_i, int j_o) {
    if (j_i < 0 || j_i >= n || j_o < 0 || j_o >= m)
        throw std::out_of_range("contact indices out of range");
}

// Signed fold of x into (-half, half] for modulus 2*half.
std::int64_t fold(std::int64_t x, std::int64_t half) {
    const std::int64_t period = 2 * half;
    std::int64_t r = x % period;
    if (r <= -half)
        r += period;
    else if (r > half)
        r -= period;
    return r;
}

}  // namespace

double pair_ratio(int n, int m, int j_i, int j_o, double alpha) {
    check_sides(n, m);
    check_indices(n, m, j_i, j_o);
    const double phi_n = 2.0 * M_PI / n;
    const double phi_m = 2.0 * M_PI / m;
    return std::cos(j_i * phi_n - (j_o + 0.5) * phi_m - alpha) / std::cos(phi_m / 2.0);
}

std::int64_t mismatch(int n, int m, int j_i, int j_o) {
    check_sides(n, m);
    check_indices(n, m, j_i, j_o);
    return 2LL * j_i * m - (2LL * j_o + 1) * n;
}

ContactSolution tight_lattice(int n, int m, std::int64_t p, std::int64_t q) {
    check_sides(n, m);
    if (q < 1)
        throw std::domain_error("tight_lattice: rotation denominator must be >= 1");
    // Contact offsets live on the integer lattice of pi/(n*m*q); the pair
    // with the smallest |offset| is the binding one.  Exact integers keep
    // the tie-break (smallest j_i, then j_o) deterministic.
    const std::int64_t half = static_cast<std::int64_t>(n) * m * q;
    std::int64_t best_d = half + 1;
    std::int64_t best_signed = 0;
    int best_ji = 0, best_jo = 0;
    for (int j_i = 0; j_i < n; ++j_i) {
        for (int j_o = 0; j_o < m; ++j_o) {
            const std::int64_t D = 2LL * j_i * m - (2LL * j_o + 1) * n;
            const std::int64_t v = fold(D * q - p, half);
            const std::int64_t d = std::llabs(v);
            if (d < best_d) {
                best_d = d;
                best_signed = v;
                best_ji = j_i;
                best_jo = j_o;
            }
        }
    }
    ContactSolution sol;
    sol.ratio = std::cos(static_cast<double>(best_d) * M_PI / static_cast<double>(half)) /
                std::cos(M_PI / m);
    sol.j_i = best_ji;
    sol.j_o = best_jo;
    sol.mismatch = mismatch(n, m, best_ji, best_jo);
    // contact position along the edge from the linear contact system
    const double phi_m = 2.0 * M_PI / m;
    const double theta =
        static_cast<double>(best_signed) * M_PI / static_cast<double>(half) + phi_m / 2.0;
    double t = std::sin(theta) / (sol.ratio * std::sin(phi_m));
    if (t < -1e-9 || t > 1.0 + 1e-9)
        throw std::logic_error("tight_lattice: contact fell off the edge segment");
    sol.t = std::clamp(t, 0.0, 1.0);
    return sol;
}

ContactSolution tight_standard(int n, int m) {
    return tight_lattice(n, m, 0, 1);
}

ContactSolution tight_at_rotation(int n, int m, double alpha) {
    check_sides(n, m);
    double best = -2.0;
    int best_ji = 0, best_jo = 0;
    for (int j_i = 0; j_i < n; ++j_i) {
        for (int j_o = 0; j_o < m; ++j_o) {
            const double r = pair_ratio(n, m, j_i, j_o, alpha);
            if (r > best) {
                best = r;
                best_ji = j_i;
                best_jo = j_o;
            }
        }
    }
    ContactSolution sol;
    sol.ratio = best;
    sol.j_i = best_ji;
    sol.j_o = best_jo;
    sol.mismatch = mismatch(n, m, best_ji, best_jo);
    const double phi_n = 2.0 * M_PI / n;
    const double phi_m = 2.0 * M_PI / m;
    const double theta = best_ji * phi_n - best_jo * phi_m - alpha;
    sol.t = std::clamp(std::sin(theta) / (best * std::sin(phi_m)), 0.0, 1.0);
    return sol;
}

int s_heuristic(int n, int m) {
    check_sides(n, m);
    if (n % 2 == 1)
        return 0;
    // periodicity in m, then palindromic reflection about n/2
    int m_red = m % n;
    if (m_red > n / 2)
        m_red = n - m_red;
    if (m_red == 0)
        return 0;
    if (m_red == n / 2)
        return n / 2;
    if (m_red % 2 == 1)
        return std::gcd(n / 2, m_red);
    if ((n / 2) % 2 == 1)
        return 0;
    const int g2 = 2 * std::gcd(n / 2, m_red / 2);
    return (n / g2) % 2 == 0 ? g2 : 0;
}

double rotated_placement_angle(int n, int m, int s) {
    check_sides(n, m);
    if (s == 0)
        return 0.0;
    const int g = std::gcd(n, m);
    if ((n / g) % 4 == 0)
        return s * (24.0 / 25.0) * M_PI / (static_cast<double>(n) * m);
    return s * M_PI / (static_cast<double>(n) * m);
}

RotatedSolution tight_rotated(int n, int m) {
    const int s = s_heuristic(n, m);
    const int g = std::gcd(n, m);
    RotatedSolution out;
    if (s != 0 && (n / g) % 4 == 0)
        out.base = tight_lattice(n, m, 24LL * s, 25);
    else
        out.base = tight_lattice(n, m, s, 1);
    out.base.mismatch -= s;
    out.s = s;
    out.alpha = rotated_placement_angle(n, m, s);
    return out;
}

RotationSearch search_rotation(int n, int m) {
    check_sides(n, m);
    const std::int64_t period = 2LL * n * m;
    std::vector<char> achievable(static_cast<size_t>(period), 0);
    for (int j_i = 0; j_i < n; ++j_i)
        for (int j_o = 0; j_o < m; ++j_o) {
            const std::int64_t D = 2LL * j_i * m - (2LL * j_o + 1) * n;
            achievable[static_cast<size_t>(((D % period) + period) % period)] = 1;
        }
    const auto min_distance = [&](std::int64_t s) {
        for (std::int64_t d = 0;; ++d) {
            if (achievable[static_cast<size_t>(((s + d) % period + period) % period)] ||
                achievable[static_cast<size_t>(((s - d) % period + period) % period)])
                return d;
        }
    };
    const double denom = std::cos(M_PI / m);
    const auto ratio_of = [&](std::int64_t d) {
        return std::cos(static_cast<double>(d) * M_PI / (static_cast<double>(n) * m)) / denom;
    };
    const std::int64_t scan = 2LL * std::lcm<std::int64_t>(n, m);
    RotationSearch out;
    out.best_s = 0;
    out.best_ratio = ratio_of(min_distance(0));
    for (std::int64_t s = 1; s < scan; ++s) {
        const double r = ratio_of(min_distance(s));
        if (r < out.best_ratio - 1e-15) {
            out.best_ratio = r;
            out.best_s = static_cast<int>(s);
        }
    }
    out.heuristic_ratio = ratio_of(min_distance(s_heuristic(n, m)));
    return out;
}

double oracle_min_ratio(int n, int m, double alpha) {
    check_sides(n, m);
    const auto inner = vertices(PolygonSpec(n, 1.0));
    const auto fits = [&](double rho) {
        const PolygonSpec outer(m, rho, alpha);
        for (const auto& v : inner)
            if (!contains(outer, v, 1e-12))
                return false;
        return true;
    };
    double lo = 0.9;
    double hi = 1.0 / std::cos(M_PI / m) + 1e-9;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (fits(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

std::vector<PrimePairRow> prime_pair_table(int p_max) {
    if (p_max < 5)
        throw std::domain_error("prime_pair_table: bound must be >= 5");
    const auto primes = odd_primes_up_to(p_max);
    std::vector<PrimePairRow> rows;
    for (size_t i = 0; i + 1 < primes.size(); ++i) {
        const int n = primes[i], m = primes[i + 1];
        const ContactSolution sol = tight_standard(n, m);
        rows.push_back({n, m, sol.j_i, sol.j_o, sol.mismatch,
                        std::llabs(sol.mismatch) == 1});
    }
    return rows;
}

}  // namespace tightgon
