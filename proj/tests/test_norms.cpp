#include "opineq/opineq.hpp"

#include <gtest/gtest.h>

using namespace opineq;

namespace {

std::vector<NormSpec> all_specs() {
    auto specs = default_norm_sweep();
    specs.push_back(NormSpec::schatten(4.5));
    specs.push_back(NormSpec::ky_fan(1));
    return specs;
}

} // namespace

TEST(Norms, Examples) {
    EXPECT_NEAR(norm(ComplexMatrix::identity(2), NormSpec::schatten(2.0)), std::sqrt(2.0), 1e-15);
    const ComplexMatrix d = ComplexMatrix::diagonal({3.0, 4.0});
    EXPECT_NEAR(norm(d, NormSpec::schatten(1.0)), 7.0, 1e-14);
    EXPECT_NEAR(norm(d, NormSpec::operator_norm()), 4.0, 1e-14);
    EXPECT_NEAR(norm(ComplexMatrix::diagonal({5.0, 2.0, 1.0}), NormSpec::ky_fan(2)), 7.0, 1e-14);
}

TEST(Norms, ParseAndPrint) {
    for (const char* text : {"s1", "s1.5", "s2", "s3", "sinf", "kf2"}) {
        EXPECT_EQ(NormSpec::parse(text).to_string(), text);
    }
    EXPECT_EQ(NormSpec::parse("sinf"), NormSpec::operator_norm());
    EXPECT_EQ(NormSpec::parse("kf3"), NormSpec::ky_fan(3));
    for (const char* bad : {"", "x2", "s", "sfoo", "kf"}) {
        try {
            NormSpec::parse(bad);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
        }
    }
}

TEST(Norms, InvalidParameters) {
    for (const char* bad : {"s0.5", "kf0", "kf1.5"}) {
        try {
            NormSpec::parse(bad);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidParameter) << bad;
        }
    }
    try {
        norm(ComplexMatrix::identity(2), NormSpec::ky_fan(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidParameter);
    }
}

TEST(Norms, UnitaryInvariance) {
    for (const auto& spec : all_specs()) {
        for (std::size_t n = 2; n <= 5; ++n) {
            for (std::uint64_t k = 0; k < 100; ++k) {
                const std::uint64_t seed = 7919 * n + k;
                const ComplexMatrix a = gaussian_matrix(n, n, seed);
                const ComplexMatrix b = random_unitary(n, seed + 1) * a * random_unitary(n, seed + 2);
                const double na = norm(a, spec);
                ASSERT_NEAR(norm(b, spec), na, 1e-10 * na) << spec.to_string() << " n=" << n;
            }
        }
    }
}

TEST(Norms, IdealProperty) {
    for (const auto& spec : all_specs()) {
        for (std::uint64_t k = 0; k < 50; ++k) {
            const std::size_t n = 2 + k % 4;
            const ComplexMatrix x = gaussian_matrix(n, n, 3 * k + 1);
            const ComplexMatrix y = gaussian_matrix(n, n, 3 * k + 2);
            const ComplexMatrix z = gaussian_matrix(n, n, 3 * k + 3);
            const double lhs = norm(x * y * z, spec);
            const double rhs = operator_norm(x) * norm(y, spec) * operator_norm(z);
            EXPECT_LE(lhs, rhs + 1e-10 * std::max({lhs, rhs, 1.0})) << spec.to_string();
        }
    }
}

TEST(Norms, TriangleAndHomogeneity) {
    for (const auto& spec : all_specs()) {
        for (std::uint64_t k = 0; k < 50; ++k) {
            const std::size_t n = 2 + k % 5;
            const ComplexMatrix a = gaussian_matrix(n, n, 100 + 2 * k);
            const ComplexMatrix b = gaussian_matrix(n, n, 101 + 2 * k);
            const double na = norm(a, spec);
            const double nb = norm(b, spec);
            EXPECT_LE(norm(a + b, spec), (na + nb) * (1.0 + 1e-10)) << spec.to_string();
            const Complex c(-1.7, 2.3);
            EXPECT_NEAR(norm(c * a, spec), std::abs(c) * na, 1e-10 * std::abs(c) * na) << spec.to_string();
        }
    }
}

TEST(Norms, KyFanEndpointsExact) {
    for (std::uint64_t k = 0; k < 20; ++k) {
        const std::size_t n = 2 + k % 6;
        const ComplexMatrix a = gaussian_matrix(n, n, 500 + k);
        EXPECT_EQ(norm(a, NormSpec::ky_fan(1)), norm(a, NormSpec::operator_norm()));
        EXPECT_EQ(norm(a, NormSpec::ky_fan(n)), norm(a, NormSpec::schatten(1.0)));
    }
}

TEST(Norms, ZeroOnlyAtZero) {
    for (const auto& spec : all_specs()) {
        EXPECT_EQ(norm(ComplexMatrix::zeros(3, 3), spec), 0.0);
        ComplexMatrix tiny = ComplexMatrix::zeros(3, 3);
        tiny(1, 2) = 1e-100;
        EXPECT_GT(norm(tiny, spec), 0.0);
    }
}

TEST(Norms, SchattenMonotoneInP) {
    const ComplexMatrix a = gaussian_matrix(5, 5, 31);
    double prev = std::numeric_limits<double>::infinity();
    for (double p : {1.0, 1.5, 2.0, 3.0, 10.0}) {
        const double v = norm(a, NormSpec::schatten(p));
        EXPECT_LE(v, prev * (1.0 + 1e-14));
        prev = v;
    }
    EXPECT_NEAR(norm(a, NormSpec::schatten(2.0)), a.frobenius_norm(), 1e-12 * a.frobenius_norm());
}
