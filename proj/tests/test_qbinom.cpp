#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "uqp/qbinom.hpp"

using uqp::Laurent;
using uqp::q_binomial;

TEST_CASE("boundary values") {
    for (int m = 0; m <= 6; ++m)
        for (int e : {1, 2}) {
            CHECK(q_binomial(m, 0, e) == Laurent(1));
            CHECK(q_binomial(m, m, e) == Laurent(1));
        }
    CHECK_THROWS_AS(q_binomial(2, 3, 1), std::domain_error);
}

// expected values frozen from the quantum-plane expansion oracle
TEST_CASE("small values") {
    CHECK(q_binomial(2, 1, 1) == Laurent(1) + Laurent::q_power(1));
    CHECK(q_binomial(3, 1, 2) == Laurent(1) + Laurent::q_power(2) + Laurent::q_power(4));
    CHECK(q_binomial(4, 2, 1) ==
          Laurent(1) + Laurent::q_power(1) + 2 * Laurent::q_power(2) + Laurent::q_power(3) +
              Laurent::q_power(4));
}

TEST_CASE("agrees with brute-force quantum-plane expansion") {
    for (int e : {1, 2})
        for (int m = 0; m <= 8; ++m) {
            const auto expansion = oracles::quantum_plane_expansion(m, e);
            for (int i = 0; i <= m; ++i) {
                INFO("m=" << m << " i=" << i << " e=" << e);
                CHECK(q_binomial(m, i, e) == expansion[static_cast<size_t>(i)]);
            }
        }
}

TEST_CASE("pascal recurrence") {
    for (int e : {1, 2, 3})
        for (int m = 1; m < 12; ++m)
            for (int i = 1; i <= m; ++i)
                CHECK(q_binomial(m + 1, i, e) ==
                      q_binomial(m, i - 1, e) +
                          Laurent::q_power(static_cast<long>(e) * i) * q_binomial(m, i, e));
}

TEST_CASE("alternating sum vanishes") {
    for (int m = 1; m <= 12; ++m) {
        Laurent sum;
        for (int i = 0; i <= m; ++i) {
            Laurent t = q_binomial(m, i, 2) * Laurent::q_power(static_cast<long>(i) * (i - 1));
            if (i % 2 == 1) t = -t;
            sum += t;
        }
        INFO("m=" << m);
        CHECK(sum.is_zero());
    }
}
