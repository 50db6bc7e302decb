#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tightgon/nest.hpp"

#include "tightgon/circumscribe.hpp"

#include <cmath>

using namespace tightgon;

namespace {

CascadeResult run(Sequence seq, int start, int end, NestMode mode) {
    return cascade({seq, start, end, mode});
}

// per-step tail bound: each remaining factor exceeds 1 by at most
// pi^2/(2 k^2)-ish, so the missing part of an infinite up-product is
// bounded by exp(pi^2/(2(N-1))) - 1 relative.
double up_tail_bound(double limit, int reached) {
    return limit * (std::exp(M_PI * M_PI / (2.0 * (reached - 1.0))) - 1.0);
}

}  // namespace

TEST_CASE("single consecutive step") {
    const auto res = run(Sequence::consecutive_up, 3, 4, NestMode::standard);
    REQUIRE(res.ratios.size() == 1);
    CHECK(res.cumulative ==
          doctest::Approx((1.0 + std::sqrt(3.0)) / 2.0).epsilon(1e-14));
}

TEST_CASE("consecutive up 3..16") {
    const auto res = run(Sequence::consecutive_up, 3, 16, NestMode::standard);
    REQUIRE(res.ratios.size() == 13);
    // first superdiagonal of the reference grid: (3,4), (4,5), (5,6)
    CHECK(res.ratios[0] == doctest::Approx(1.36602540).epsilon(1e-8));
    CHECK(res.ratios[1] == doctest::Approx(1.23606798).epsilon(1e-8));
    CHECK(res.ratios[2] == doctest::Approx(1.14837497).epsilon(1e-8));
    double prod = 1.0;
    for (int k = 3; k < 16; ++k)
        prod *= tight_standard(k, k + 1).ratio;
    CHECK(res.cumulative == doctest::Approx(prod).epsilon(1e-12));
}

TEST_CASE("consecutive down 16..3 frees a region about 6.2 times smaller") {
    const auto res = run(Sequence::consecutive_down, 16, 3, NestMode::standard);
    REQUIRE(res.sides.front() == 16);
    REQUIRE(res.sides.back() == 3);
    CHECK(std::abs(res.cumulative - 6.2) < 0.05);
}

TEST_CASE("prime cascade approaches its limit from below") {
    const auto res = run(Sequence::primes_up, 3, 541, NestMode::standard);
    const double limit = limit_primes(Direction::up).value;
    CHECK(res.cumulative < limit);
    CHECK(limit - res.cumulative < limit * (std::exp(M_PI * M_PI / (2.0 * 541.0)) - 1.0));
}

TEST_CASE("telescoping") {
    const auto a = run(Sequence::consecutive_up, 3, 10, NestMode::standard);
    const auto b = run(Sequence::consecutive_up, 10, 16, NestMode::standard);
    const auto c = run(Sequence::consecutive_up, 3, 16, NestMode::standard);
    CHECK(a.cumulative * b.cumulative == doctest::Approx(c.cumulative).epsilon(1e-12));

    const auto d = run(Sequence::consecutive_down, 16, 9, NestMode::standard);
    const auto e = run(Sequence::consecutive_down, 9, 3, NestMode::standard);
    const auto f = run(Sequence::consecutive_down, 16, 3, NestMode::standard);
    CHECK(d.cumulative * e.cumulative == doctest::Approx(f.cumulative).epsilon(1e-12));
}

TEST_CASE("up-cascade partial products never decrease") {
    const auto res = run(Sequence::consecutive_up, 3, 60, NestMode::standard);
    double partial = 1.0;
    for (double r : res.ratios) {
        CHECK(r >= 1.0);
        const double next = partial * r;
        CHECK(next >= partial);
        partial = next;
    }
}

TEST_CASE("rotated steps never exceed standard steps") {
    for (Sequence seq : {Sequence::consecutive_up, Sequence::consecutive_down,
                         Sequence::primes_up}) {
        const int start = seq == Sequence::consecutive_down ? 50 : 3;
        const int end = seq == Sequence::consecutive_down ? 3 : 50;
        const auto rot = run(seq, start, end, NestMode::rotated);
        const auto std_ = run(seq, start, end, NestMode::standard);
        REQUIRE(rot.ratios.size() == std_.ratios.size());
        for (size_t i = 0; i < rot.ratios.size(); ++i)
            CHECK(rot.ratios[i] <= std_.ratios[i] + 1e-12);
    }
}

TEST_CASE("limit values") {
    CHECK(std::abs(limit_consecutive_up().value - 4.16674437148793) < 1e-12);
    CHECK(std::abs(limit_consecutive_down().value - 8.5526818319553) < 1e-10);
    CHECK(std::abs(limit_primes(Direction::up).value - 1.5550895739) < 1e-10);
    CHECK(limit_primes(Direction::down).value ==
          doctest::Approx(2.0 * limit_primes(Direction::up).value).epsilon(1e-15));
    CHECK(std::abs(limit_rotated_up().value - 3.5809046865583) < 1e-10);

    // algebraic identities against the analytic constants
    CHECK(limit_consecutive_up().value ==
          doctest::Approx(constant("C_o").value / (2.0 * constant("K_prime").value))
              .epsilon(1e-13));
    CHECK(limit_consecutive_down().value * constant("K_prime").value ==
          doctest::Approx(0.98306273874458351).epsilon(1e-13));
}

TEST_CASE("cascades settle toward their limits within the tail bound") {
    const auto up = run(Sequence::consecutive_up, 3, 200, NestMode::standard);
    const double lup = limit_consecutive_up().value;
    CHECK(up.cumulative < lup);
    CHECK(lup - up.cumulative < up_tail_bound(lup, 200));

    // the rotated-nesting product series truncates toward its limit ...
    const double lrot = limit_rotated_up().value;
    const double partial = rotated_limit_partial(200);
    CHECK(partial < lrot);
    CHECK(lrot - partial < up_tail_bound(lrot, 200));

    // ... while the containment-valid rotated cascade approaches
    // C / (sqrt(3) K'), every stage being a true tight placement
    const auto rot = run(Sequence::consecutive_up, 3, 200, NestMode::rotated);
    const double lvalid = constant("C_full").value /
                          (std::sqrt(3.0) * constant("K_prime").value);
    CHECK(rot.cumulative < lvalid);
    CHECK(lvalid - rot.cumulative < up_tail_bound(lvalid, 200));
    CHECK(lrot < lvalid);  // the product series is the smaller of the two

    const auto down = run(Sequence::consecutive_down, 200, 3, NestMode::standard);
    const double ldown = limit_consecutive_down().value;
    CHECK(down.cumulative < ldown);
    CHECK(ldown - down.cumulative < up_tail_bound(ldown, 200));
}

TEST_CASE("rotated cascade steps are genuine containments") {
    const auto rot = run(Sequence::consecutive_up, 3, 24, NestMode::rotated);
    double angle = 0.0;
    for (size_t i = 0; i + 1 < rot.sides.size(); ++i) {
        // relative rotation between stage i and i+1 is the step angle;
        // the tight ratio at that angle is exactly the step ratio
        const double required =
            tight_at_rotation(rot.sides[i], rot.sides[i + 1], rot.angles[i]).ratio;
        CHECK(rot.ratios[i] == doctest::Approx(required).epsilon(1e-12));
        angle += rot.angles[i];
    }
    CHECK(angle == doctest::Approx(rot.wrench).epsilon(1e-15));
}

TEST_CASE("wrench angle") {
    const auto wrench = wrench_angle_limit();
    CHECK(wrench.value == doctest::Approx(M_PI * (5.0 / 6.0 - std::log(2.0)))
                              .epsilon(1e-15));
    CHECK(std::abs(wrench.value * 180.0 / M_PI - 25.23) < 0.005);

    // first rotated stage: s = 1 at the (4,5) step, pi/20 = 9 degrees
    const auto res = run(Sequence::consecutive_up, 3, 21, NestMode::rotated);
    CHECK(res.angles[0] == 0.0);
    CHECK(res.angles[1] == doctest::Approx(M_PI / 20.0).epsilon(1e-15));

    // cascade accumulation equals the closed partial sum
    CHECK(res.wrench == doctest::Approx(wrench_partial(10)).epsilon(1e-14));

    // partial to n = 1e4 sits within the integral tail bound of the limit
    const double acc = wrench_partial(10000);
    CHECK(wrench.value - acc > 0.0);
    CHECK(wrench.value - acc < M_PI / 4e4);
    CHECK(std::abs(acc * 180.0 / M_PI - 25.23) < 1e-3);
}

TEST_CASE("cascade spec validation") {
    CHECK_THROWS_AS(run(Sequence::consecutive_up, 5, 4, NestMode::standard),
                    std::domain_error);
    CHECK_THROWS_AS(run(Sequence::consecutive_down, 3, 5, NestMode::standard),
                    std::domain_error);
    CHECK_THROWS_AS(run(Sequence::consecutive_up, 2, 8, NestMode::standard),
                    std::domain_error);
    CHECK_THROWS_AS(run(Sequence::primes_down, 3, 541, NestMode::standard),
                    std::domain_error);
}

TEST_CASE("prime sequences use odd primes only") {
    const auto up = run(Sequence::primes_up, 3, 30, NestMode::standard);
    CHECK(up.sides == std::vector<int>{3, 5, 7, 11, 13, 17, 19, 23, 29});
    const auto down = run(Sequence::primes_down, 30, 3, NestMode::standard);
    CHECK(down.sides == std::vector<int>{29, 23, 19, 17, 13, 11, 7, 5, 3});
}
