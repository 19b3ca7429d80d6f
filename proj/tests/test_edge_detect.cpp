#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sarseg/edge_detect.hpp"
#include "test_util.hpp"

using namespace sarseg;
using testutil::random_image;

namespace {

// Full 2-D convolution with the separable kernel's outer product,
// replicated at the borders — the slow reference for smooth().
ScalarField oracle_conv2(const ScalarField& f, const std::vector<double>& k) {
    const int h = static_cast<int>(k.size()) / 2;
    ScalarField out(f.width, f.height);
    for (int r = 0; r < f.height; ++r) {
        for (int c = 0; c < f.width; ++c) {
            double acc = 0.0;
            for (int dr = -h; dr <= h; ++dr)
                for (int dc = -h; dc <= h; ++dc)
                    acc += k[dr + h] * k[dc + h] * f.at_clamped(r + dr, c + dc);
            out.at(r, c) = acc;
        }
    }
    return out;
}

ScalarField oracle_edge_map(const ScalarField& f, const EdgeParams& p) {
    const ScalarField s = smooth(f, isef_kernel(p.sigma, p.kernel_size));
    ScalarField g(f.width, f.height);
    for (int r = 0; r < f.height; ++r) {
        for (int c = 0; c < f.width; ++c) {
            const double gx = (s.at_clamped(r, c + 1) - s.at_clamped(r, c - 1)) / 2.0;
            const double gy = (s.at_clamped(r + 1, c) - s.at_clamped(r - 1, c)) / 2.0;
            g.at(r, c) = 1.0 / (1.0 + p.beta * (gx * gx + gy * gy));
        }
    }
    return g;
}

}  // namespace

TEST_CASE("single-tap kernel normalizes to exactly one") {
    CHECK(isef_kernel(1.2, 1) == std::vector<double>{1.0});
}

TEST_CASE("15-tap kernel is positive, symmetric, and unit-sum") {
    const std::vector<double> k = isef_kernel(1.2, 15);
    REQUIRE(k.size() == 15);
    for (double tap : k) CHECK(tap > 0.0);
    for (int i = 0; i < 15; ++i) CHECK(k[i] == doctest::Approx(k[14 - i]).epsilon(1e-14));
    CHECK(std::accumulate(k.begin(), k.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("adjacent taps decay by exp(-1/sigma) away from the centre") {
    const double sigma = 1.7;
    const std::vector<double> k = isef_kernel(sigma, 11);
    const double expect = std::exp(-1.0 / sigma);
    for (int i = 5; i < 10; ++i)
        CHECK(k[i + 1] / k[i] == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("kernel construction rejects bad sizes and scales") {
    CHECK_THROWS_AS(isef_kernel(1.2, 2), std::invalid_argument);
    CHECK_THROWS_AS(isef_kernel(1.2, 0), std::invalid_argument);
    CHECK_THROWS_AS(isef_kernel(1.2, -3), std::invalid_argument);
    CHECK_THROWS_AS(isef_kernel(0.0, 5), std::invalid_argument);
}

TEST_CASE("smoothing a constant image returns the same constant") {
    const ScalarField f(9, 7, 42.5);
    const ScalarField s = smooth(f, isef_kernel(1.2, 15));
    for (double x : s.v) CHECK(x == doctest::Approx(42.5).epsilon(1e-13));
}

TEST_CASE("smoothing an impulse reproduces the kernel outer product") {
    ScalarField f(9, 9, 0.0);
    f.at(4, 4) = 1.0;
    const std::vector<double> k = isef_kernel(0.9, 5);
    const ScalarField s = smooth(f, k);
    for (int dr = -2; dr <= 2; ++dr)
        for (int dc = -2; dc <= 2; ++dc)
            CHECK(s.at(4 + dr, 4 + dc) ==
                  doctest::Approx(k[dr + 2] * k[dc + 2]).epsilon(1e-13));
    CHECK(s.at(0, 0) == 0.0);
}

TEST_CASE("separable smoothing equals brute-force 2-D convolution") {
    const ScalarField f = random_image(8, 8, 77u, 0.0, 255.0);
    const std::vector<double> k = isef_kernel(1.2, 5);
    const ScalarField fast = smooth(f, k);
    const ScalarField slow = oracle_conv2(f, k);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(fast.v[i] == doctest::Approx(slow.v[i]).epsilon(1e-12));
}

TEST_CASE("edge map of a constant image is identically one") {
    const ScalarField f(12, 9, 37.0);
    const ScalarField g = edge_map(f, EdgeParams{});
    for (double x : g.v) CHECK(x == 1.0);
}

TEST_CASE("edge map matches the pointwise formula and dips on the step") {
    EdgeParams p;  // beta 100, sigma 1.2, 15 taps
    const ScalarField f = random_image(10, 8, 88u, 0.0, 1.0);
    const ScalarField g = edge_map(f, p);
    const ScalarField want = oracle_edge_map(f, p);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(g.v[i] == doctest::Approx(want.v[i]).epsilon(1e-12));

    // vertical step edge: g smaller on the jump column than far from it
    ScalarField step(32, 16, 0.2);
    for (int r = 0; r < step.height; ++r)
        for (int c = 16; c < step.width; ++c) step.at(r, c) = 0.8;
    const ScalarField gs = edge_map(step, p);
    CHECK(gs.at(8, 16) < gs.at(8, 2));
    CHECK(gs.at(8, 16) < 0.5);
    for (double x : gs.v) {
        CHECK(x > 0.0);
        CHECK(x <= 1.0);
    }
}

TEST_CASE("edge map ignores constant offsets and never grows with beta") {
    const ScalarField f = random_image(9, 9, 99u, 10.0, 20.0);
    ScalarField shifted = f;
    for (double& x : shifted.v) x += 10.0;

    EdgeParams p;
    const ScalarField g = edge_map(f, p);
    const ScalarField gshift = edge_map(shifted, p);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(g.v[i] == doctest::Approx(gshift.v[i]).epsilon(1e-12));

    EdgeParams stronger = p;
    stronger.beta = 250.0;
    const ScalarField gstrong = edge_map(f, stronger);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(gstrong.v[i] <= g.v[i] + 1e-15);
}
