#include "tightgon/analytic.hpp"

#include "tightgon/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tightgon {

namespace {

constexpr int kMaxOrder = 32;  // highest eps power with a generated coefficient

// Compensated accumulation for the longer sums.
struct Kahan {
    double sum = 0.0, carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// c_{2k} = T_k / (2k)! with T_k the tangent numbers (Knuth-Buckholtz).
const std::array<double, kMaxOrder / 2>& coeff_table() {
    static const std::array<double, kMaxOrder / 2> table = [] {
        constexpr int K = kMaxOrder / 2;
        std::array<double, K + 1> t{};
        t[1] = 1.0;
        for (int n = 2; n <= K; ++n)
            t[n] = (n - 1) * t[n - 1];
        for (int n = 2; n <= K; ++n)
            for (int k = n; k <= K; ++k)
                t[k] = (k - n) * t[k - 1] + (k - n + 2) * t[k];
        std::array<double, K> c{};
        double fact = 1.0;
        for (int k = 1; k <= K; ++k) {
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            c[k - 1] = t[k] / fact;
        }
        return c;
    }();
    return table;
}

// Real-argument zeta for s >= 2: direct terms plus Euler-Maclaurin tail.
double zeta_real(double s, int terms) {
    if (s > 200.0)
        return 1.0 + std::pow(2.0, -s) + std::pow(3.0, -s) + std::pow(4.0, -s);
    const int N = std::max(terms, 16);
    Kahan acc;
    for (int k = N; k >= 1; --k)
        acc.add(std::pow(static_cast<double>(k), -s));
    return acc.sum + zeta_tail(s, N);
}

int checked_order(int order) {
    if (order < 2 || order > kMaxOrder || order % 2 != 0)
        throw std::domain_error("taylor order must be even and in [2, 32]");
    return order;
}

// sum_{k>M} den(k)^{-2s} by direct summation; den grows quadratically so
// the reach needed shrinks rapidly with s.
double tail_power_sum(const std::function<double(long long)>& den, int M, int s) {
    const long long limit = s == 1 ? 3000000LL : (s == 2 ? 40000LL : 4000LL);
    Kahan acc;
    for (long long k = M + 1; k <= limit; ++k) {
        const double term = std::pow(den(k), -2.0 * s);
        acc.add(term);
        if (term < 1e-25 * acc.sum && k > M + 16)
            break;
    }
    return acc.sum;
}

struct Evaluated {
    double value;
    double error_estimate;
};

// log prod_{k>=1} cos(pi/den(k)): explicit prefix of M factors, then the
// log-cos expansion with power-sum tails.  The error estimate is the first
// term omitted when both truncation parameters are halved.
Evaluated log_cos_product(const std::function<double(long long)>& den,
                          const SeriesConfig& cfg) {
    const int S = checked_order(cfg.taylor_order) / 2;
    const int M = std::max(1, cfg.cutoff_M);
    const auto& c = coeff_table();
    Kahan acc;
    for (long long k = 1; k <= M; ++k)
        acc.add(std::log(std::cos(M_PI / den(k))));
    double pipow = 1.0;
    for (int s = 1; s <= S; ++s) {
        pipow *= M_PI * M_PI;
        acc.add(-c[s - 1] * pipow * tail_power_sum(den, M, s));
    }
    const int s_half = std::max(1, S / 2) + 1;
    const int m_half = std::max(1, M / 2);
    double est = c[std::min(s_half, kMaxOrder / 2) - 1] *
                 std::pow(M_PI, 2.0 * s_half) * tail_power_sum(den, m_half, s_half);
    return {acc.sum, est};
}

long long binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

double eta_int(int t) {
    if (t == 1)
        return std::log(2.0);
    return (1.0 - std::pow(2.0, 1.0 - t)) * zeta_int(t);
}

// Closed binomial partial-fraction form; accurate for small s only.
double T_even_closed(int s) {
    double sum = 0.0;
    for (int t = 1; t <= 2 * s; ++t) {
        const double b = static_cast<double>(binom(4 * s - t - 1, 2 * s - 1));
        double z;
        if (t == 1)
            z = std::log(2.0);  // eta(1) at the pole of zeta(1)
        else if (t % 2 == 0)
            z = zeta_int(t);
        else
            z = eta_int(t);
        sum += b * (z - 1.0);
    }
    return sum;
}

double T_all_closed(int s) {
    double sum = 0.0;
    for (int t = 1; t <= 2 * s; ++t) {
        const double b = static_cast<double>(binom(4 * s - t - 1, 2 * s - 1));
        const double z = (t == 1) ? 0.0 : (t % 2 == 0 ? 2.0 * zeta_int(t) : 0.0);
        sum += b * (z - 1.0);
    }
    return sum;
}

double T_direct(const std::function<double(long long)>& den, int s) {
    Kahan acc;
    for (long long k = 1; k <= 5000; ++k) {
        const double term = std::pow(den(k), -2.0 * s);
        acc.add(term);
        if (term < 1e-25 * acc.sum && k > 16)
            break;
    }
    return acc.sum;
}

const std::vector<int>& odd_primes_1e6() {
    static const std::vector<int> p = odd_primes_up_to(1000000);
    return p;
}

int check_T_domain(int s) {
    if (s < 1 || s > 8)
        throw std::domain_error("T sums support s in 1..8");
    return s;
}

double mu_small(int n) {
    // Moebius for the prime-zeta expansion; n stays tiny.
    int m = n, cnt = 0;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0)
                return 0.0;
            ++cnt;
        }
    }
    if (m > 1)
        ++cnt;
    return cnt % 2 == 0 ? 1.0 : -1.0;
}

// 1/n expansion machinery for the 2pi-product tail: series in t = 1/n,
// coefficients carry a coherent sign (-1)^i so convolution is stable.
std::vector<double> series_mul(const std::vector<double>& a,
                               const std::vector<double>& b, int jmax) {
    std::vector<double> r(jmax + 1, 0.0);
    for (int i = 0; i <= jmax; ++i) {
        if (a[i] == 0.0)
            continue;
        for (int j = 0; i + j <= jmax; ++j)
            if (b[j] != 0.0)
                r[i + j] += a[i] * b[j];
    }
    return r;
}

// Coefficients of sum_{n>M} log cos(pi/((2n+1)(n+1))) as sum_j lc_j n^{-j}.
std::vector<double> two_pi_tail_coeffs(int jmax) {
    std::vector<double> v(jmax + 1, 0.0);
    for (int i = 2; i <= jmax; ++i)
        v[i] = ((i % 2 == 0) ? 1.0 : -1.0) * (1.0 - std::pow(2.0, 1.0 - i));
    const auto& c = coeff_table();
    std::vector<double> lc(jmax + 1, 0.0);
    std::vector<double> v2 = series_mul(v, v, jmax);
    std::vector<double> vp = v2;
    for (int k = 1; 4 * k <= jmax && k <= kMaxOrder / 2; ++k) {
        const double f = c[k - 1] * std::pow(M_PI, 2.0 * k);
        for (int j = 0; j <= jmax; ++j)
            lc[j] -= f * vp[j];
        vp = series_mul(vp, v2, jmax);
    }
    return lc;
}

// K' has a linear denominator, so its tails are pure incomplete zetas.
Evaluated eval_K_prime(const SeriesConfig& cfg) {
    const int S = checked_order(cfg.taylor_order) / 2;
    const int M = std::max(12, 4 * cfg.cutoff_M);
    const auto& c = coeff_table();
    Kahan acc;
    for (int n = 3; n <= M; ++n)
        acc.add(std::log(std::cos(M_PI / n)));
    double pipow = 1.0;
    for (int s = 1; s <= S; ++s) {
        pipow *= M_PI * M_PI;
        acc.add(-c[s - 1] * pipow * zeta_tail(2.0 * s, M));
    }
    const int s_half = std::max(1, S / 2) + 1;
    const double est = 4.0 * c[s_half - 1] * std::pow(M_PI, 2.0 * s_half) *
                       zeta_tail(2.0 * s_half, std::max(12, M / 2));
    return {acc.sum, est};
}

Evaluated eval_P_2pi_odd(const SeriesConfig& cfg) {
    const int jmax = std::max(8, cfg.taylor_order);
    const int M = std::max(2, cfg.cutoff_M);
    const auto lc = two_pi_tail_coeffs(jmax);
    Kahan acc;
    for (int n = 1; n <= M; ++n)
        acc.add(std::log(std::cos(M_PI / ((2.0 * n + 1.0) * (n + 1.0)))));
    for (int j = 4; j <= jmax; ++j)
        if (lc[j] != 0.0)
            acc.add(lc[j] * zeta_tail(j, M));
    const int j_half = std::max(8, jmax / 2);
    const auto lc_half = two_pi_tail_coeffs(j_half);
    const double est =
        4.0 * std::abs(lc_half[j_half]) * zeta_tail(j_half, std::max(2, M / 2));
    return {acc.sum, est};
}

Evaluated eval_K_p_prime(const SeriesConfig& cfg) {
    const auto& primes = odd_primes_1e6();
    const int P1 = 100000;
    Kahan logs, pow2;
    for (int p : primes) {
        if (p > P1)
            break;
        logs.add(std::log(std::cos(M_PI / p)));
        pow2.add(1.0 / (static_cast<double>(p) * p));
    }
    pow2.add(0.25);  // p = 2 re-enters through the prime zeta
    const double tail2 = prime_zeta(2.0) - pow2.sum;
    const auto& c = coeff_table();
    const double value = logs.sum - c[0] * M_PI * M_PI * tail2;
    // dropped orders bounded by the full integer tail at the same cutoff
    const double est = c[1] * std::pow(M_PI, 4.0) * zeta_tail(4.0, P1) + 1e-14;
    (void)cfg;
    return {value, est};
}

Evaluated eval_P_prime_pairs(const SeriesConfig& cfg) {
    const int S = std::clamp(cfg.taylor_order / 2 + 6, 7, 12);
    const auto& c = coeff_table();
    Kahan acc;
    double pipow = 1.0;
    for (int s = 1; s <= S; ++s) {
        pipow *= M_PI * M_PI;
        acc.add(-c[s - 1] * pipow * prime_pair_sum(s));
    }
    const double est = c[S] * std::pow(M_PI, 2.0 * (S + 1)) * prime_pair_sum(S + 1) * 4.0 + 1e-15;
    return {acc.sum, est};
}

using Evaluator = std::function<Evaluated(const SeriesConfig&)>;

const std::map<std::string, Evaluator, std::less<>>& evaluators() {
    static const std::map<std::string, Evaluator, std::less<>> table = {
        {"K_prime", eval_K_prime},
        {"K_p_prime", eval_K_p_prime},
        {"C_e",
         [](const SeriesConfig& cfg) {
             return log_cos_product(
                 [](long long k) { return 2.0 * k * (2.0 * k + 1.0); }, cfg);
         }},
        {"C_full",
         [](const SeriesConfig& cfg) {
             SeriesConfig local = cfg;
             local.cutoff_M = 2 * cfg.cutoff_M;  // same reach as the split products
             return log_cos_product(
                 [](long long k) { return static_cast<double>((k + 1) * (k + 2)); }, local);
         }},
        {"C_o",
         [](const SeriesConfig& cfg) {
             return log_cos_product(
                 [](long long k) { return (2.0 * k + 1.0) * (2.0 * k + 2.0); }, cfg);
         }},
        {"quench_even",
         [](const SeriesConfig& cfg) {
             return log_cos_product(
                 [](long long k) { return (2.0 * k + 2.0) * (2.0 * k + 3.0); }, cfg);
         }},
        {"P_2pi_odd", eval_P_2pi_odd},
        {"P_prime_pairs", eval_P_prime_pairs},
    };
    return table;
}

SeriesConfig default_config(std::string_view name) {
    SeriesConfig cfg;
    if (name == "P_2pi_odd")
        cfg.taylor_order = 30;
    return cfg;
}

}  // namespace

std::span<const double> log_cos_coefficients(int order) {
    const int S = checked_order(order) / 2;
    return {coeff_table().data(), static_cast<size_t>(S)};
}

double log_cos_series(double eps, int order) {
    if (!(std::abs(eps) < M_PI / 2.0))
        throw std::domain_error("log_cos_series: |eps| must be < pi/2");
    const auto c = log_cos_coefficients(order);
    const double e2 = eps * eps;
    double pw = 1.0;
    double sum = 0.0;
    for (double ck : c) {
        pw *= e2;
        sum -= ck * pw;
    }
    return sum;
}

double zeta_int(int t) {
    if (t < 2)
        throw std::domain_error("zeta_int: argument must be >= 2");
    if (t % 2 == 0 && t <= kMaxOrder) {
        // zeta(2n) = pi^(2n) * n * c_{2n} / (2^(2n) - 1), the Bernoulli
        // closed form written through the log-cos coefficients
        const int n = t / 2;
        return std::pow(M_PI, t) * n * coeff_table()[n - 1] /
               (std::pow(2.0, t) - 1.0);
    }
    return zeta_real(static_cast<double>(t), 40);
}

double zeta_tail(double s, int M) {
    if (!(s >= 2.0))
        throw std::domain_error("zeta_tail: power must be >= 2 (divergent otherwise)");
    if (M < 1)
        throw std::domain_error("zeta_tail: cutoff must be >= 1");
    double head = 0.0;
    int base = M;
    if (M < 12) {
        for (int n = M + 1; n <= 24; ++n)
            head += std::pow(static_cast<double>(n), -s);
        base = 24;
    }
    const double x = base;
    double tail = std::pow(x, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(x, -s);
    double deriv = s * std::pow(x, -s - 1.0);
    tail += deriv / 12.0;
    deriv *= (s + 1.0) * (s + 2.0) / (x * x);
    tail -= deriv / 720.0;
    deriv *= (s + 3.0) * (s + 4.0) / (x * x);
    tail += deriv / 30240.0;
    deriv *= (s + 5.0) * (s + 6.0) / (x * x);
    tail -= deriv / 1209600.0;
    return head + tail;
}

std::vector<double> two_pi_tail_expansion(int jmax) {
    if (jmax < 4)
        throw std::domain_error("two_pi_tail_expansion: order must be >= 4");
    return two_pi_tail_coeffs(jmax);
}

double deferred_tail(std::span<const std::pair<int, double>> terms, int M) {
    double sum = 0.0;
    for (const auto& [power, coeff] : terms) {
        if (power < 2)
            throw std::domain_error("deferred_tail: powers below 2 diverge");
        sum += coeff * zeta_tail(power, M);
    }
    return sum;
}

double T_even(int s) {
    check_T_domain(s);
    if (s <= 3)
        return T_even_closed(s);
    return T_direct([](long long k) { return 2.0 * k * (2.0 * k + 1.0); }, s);
}

double T_all(int s) {
    check_T_domain(s);
    if (s <= 3)
        return T_all_closed(s);
    return T_direct([](long long k) { return static_cast<double>(k) * (k + 1.0); }, s);
}

double T_odd(int s) {
    return T_all(s) - T_even(s);
}

double prime_pair_sum(int s) {
    if (s < 1 || s > 16)
        throw std::domain_error("prime_pair_sum: s must be in 1..16");
    const auto& p = odd_primes_1e6();
    Kahan acc;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        const double term =
            std::pow(static_cast<double>(p[i]) * p[i + 1], -2.0 * s);
        acc.add(term);
        if (term < 1e-30 && i > 8)
            break;
    }
    return acc.sum;
}

double prime_zeta(double s) {
    if (!(s >= 2.0))
        throw std::domain_error("prime_zeta: argument must be >= 2");
    double sum = 0.0;
    for (int n = 1; n <= 64; ++n) {
        const double mu = mu_small(n);
        if (mu == 0.0)
            continue;
        const double z = zeta_real(n * s, 40);
        if (z == 1.0)
            break;
        sum += mu / n * std::log(z);
    }
    return sum;
}

ConstantResult constant(std::string_view name, const SeriesConfig& cfg) {
    const auto& table = evaluators();
    const auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("unknown constant name: " + std::string(name));

    const SeriesConfig generic{};
    const bool is_generic = cfg.taylor_order == generic.taylor_order &&
                            cfg.cutoff_M == generic.cutoff_M &&
                            cfg.zeta_terms == generic.zeta_terms;
    const SeriesConfig effective = is_generic ? default_config(name) : cfg;

    const auto evaluate = [&] {
        const Evaluated log_result = it->second(effective);
        ConstantResult out;
        out.name = std::string(name);
        out.value = std::exp(log_result.value);
        out.truncation = effective;
        out.error_estimate = out.value * log_result.error_estimate +
                             16.0 * 2.22e-16 * out.value;
        return out;
    };

    if (!is_generic)
        return evaluate();

    static std::map<std::string, ConstantResult, std::less<>> cache;
    static std::mutex mutex;
    std::scoped_lock lock(mutex);
    const auto hit = cache.find(name);
    if (hit != cache.end())
        return hit->second;
    return cache.emplace(std::string(name), evaluate()).first->second;
}

std::vector<std::string> constant_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : evaluators())
        names.push_back(k);
    return names;
}

}  // namespace tightgon
