#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ptdarboux/chebyshev.hpp"
#include "ptdarboux/double_double.hpp"
#include "ptdarboux/errors.hpp"
#include "ptdarboux/quadrature.hpp"
#include "ptdarboux/rational.hpp"

using namespace ptd;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 12);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_SUITE("numerics_core") {
  TEST_CASE("pochhammer examples") {
    CHECK(pochhammer(Rational(7, 3), 0) == 1);
    CHECK(pochhammer(Rational(-2), 3) == 0);
    CHECK(pochhammer(Rational(5, 2), 2) == Rational(35, 4));
  }

  TEST_CASE("pochhammer step property") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
      const Rational a = random_rational(rng);
      for (unsigned n = 0; n < 50; ++n) {
        REQUIRE(pochhammer(a, n + 1) == pochhammer(a, n) * (a + n));
      }
    }
  }

  TEST_CASE("rational <-> double conversions") {
    CHECK(to_double(Rational(1, 3)) == 1.0 / 3.0);
    CHECK(to_double(Rational(-2, 7)) == -2.0 / 7.0);
    CHECK(to_double(Rational(0)) == 0.0);
    CHECK(from_double(0.375) == Rational(3, 8));
    CHECK(from_double(-1e-300) < 0);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 500; ++i) {
      const double x = u(rng) * std::pow(10.0, (i % 40) - 20);
      REQUIRE(to_double(from_double(x)) == x);
      // p/q with q odd exercises the sticky bit
      // numerator and denominator exact in double, so IEEE division is the
      // correctly rounded oracle
      const auto num = static_cast<long long>(u(rng) * 1e9);
      const long long den = 3 + 2 * (i % 50);
      REQUIRE(to_double(Rational(num, den)) ==
              static_cast<double>(num) / static_cast<double>(den));
    }
  }

  TEST_CASE("double-double products are error free") {
    const double a = 1.0 + std::ldexp(1.0, -30);
    const double b = 1.0 - std::ldexp(1.0, -29);
    const DoubleDouble p = two_prod(a, b);
    CHECK(from_double(p.hi) + from_double(p.lo) == from_double(a) * from_double(b));
    const DoubleDouble s = two_sum(1e16, 1.0 / 3.0);
    CHECK(from_double(s.hi) + from_double(s.lo) == from_double(1e16) + from_double(1.0 / 3.0));
  }

  TEST_CASE("gauss_legendre small orders") {
    const auto one = gauss_legendre(1);
    REQUIRE(one.order() == 1);
    CHECK(one.nodes()[0] == 0.0);
    CHECK(one.weights()[0] == 2.0);

    const auto two = gauss_legendre(2);
    CHECK(two.nodes()[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(two.nodes()[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(two.weights()[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(two.weights()[1] == doctest::Approx(1.0).epsilon(1e-15));
    double x2 = 0.0;
    for (unsigned i = 0; i < 2; ++i) x2 += two.weights()[i] * two.nodes()[i] * two.nodes()[i];
    CHECK(x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    CHECK_THROWS_AS(gauss_legendre(0), ParameterError);
  }

  TEST_CASE("gauss_legendre structure and exactness") {
    for (unsigned q : {2u, 3u, 4u, 8u, 16u, 17u, 32u, 64u}) {
      CAPTURE(q);
      const auto rule = gauss_legendre(q);
      const auto& x = rule.nodes();
      const auto& w = rule.weights();
      double wsum = 0.0;
      for (unsigned i = 0; i < q; ++i) {
        REQUIRE(x[i] > -1.0);
        REQUIRE(x[i] < 1.0);
        REQUIRE(w[i] > 0.0);
        if (i > 0) REQUIRE(x[i] > x[i - 1]);
        REQUIRE(x[i] == -x[q - 1 - i]);
        wsum += w[i];
      }
      CHECK(std::abs(wsum - 2.0) <= 1e-14);
      for (unsigned j = 0; j <= 2 * q - 1; ++j) {
        double sum = 0.0;
        for (unsigned i = 0; i < q; ++i) sum += w[i] * std::pow(x[i], j);
        const double exact = (j % 2 == 1) ? 0.0 : 2.0 / (j + 1);
        CAPTURE(j);
        if (exact == 0.0) {
          REQUIRE(std::abs(sum) <= 1e-14);
        } else {
          REQUIRE(std::abs(sum - exact) / exact <= 1e-13);
        }
      }
    }
  }

  TEST_CASE("gauss_legendre order 64 reproduces x^126") {
    const auto rule = gauss_legendre(64);
    double sum = 0.0;
    for (unsigned i = 0; i < 64; ++i) sum += rule.weights()[i] * std::pow(rule.nodes()[i], 126);
    CHECK(std::abs(sum - 2.0 / 127.0) / (2.0 / 127.0) < 1e-13);
  }

  TEST_CASE("gauss_legendre converges up to order 256") {
    const auto rule = gauss_legendre(256);
    double wsum = 0.0;
    for (double w : rule.weights()) wsum += w;
    CHECK(std::abs(wsum - 2.0) <= 1e-13);
  }

  TEST_CASE("chebyshev_u examples") {
    CHECK(chebyshev_u(0, 0.3) == 1.0);
    CHECK(chebyshev_u(1, 0.3) == 0.6);
    CHECK(chebyshev_u(3, 0.5) == doctest::Approx(-1.0).epsilon(1e-15));
  }

  TEST_CASE("chebyshev_u reproduces sin((k+1)t)/sin t") {
    for (unsigned k = 0; k <= 30; ++k) {
      for (int i = 1; i <= 1000; ++i) {
        const double t = std::numbers::pi * i / 1001.0;
        const double lhs = chebyshev_u(k, std::cos(t)) * std::sin(t);
        REQUIRE(std::abs(lhs - std::sin((k + 1) * t)) <= 1e-12);
      }
    }
  }

  TEST_CASE("chebyshev_u derivatives match the explicit U_3 and U_4") {
    for (double c : {-0.9, -0.2, 0.0, 0.35, 1.0}) {
      const auto u3 = chebyshev_u_derivatives(3, c);
      CHECK(u3[0] == doctest::Approx(8 * c * c * c - 4 * c));
      CHECK(u3[1] == doctest::Approx(24 * c * c - 4));
      CHECK(u3[2] == doctest::Approx(48 * c));
      CHECK(u3[3] == doctest::Approx(48));
      // U_4 = 16c^4 - 12c^2 + 1
      const auto u4 = chebyshev_u_derivatives(4, c);
      CHECK(u4[0] == doctest::Approx(16 * std::pow(c, 4) - 12 * c * c + 1));
      CHECK(u4[1] == doctest::Approx(64 * c * c * c - 24 * c));
      CHECK(u4[2] == doctest::Approx(192 * c * c - 24));
      CHECK(u4[3] == doctest::Approx(384 * c));
    }
  }

  TEST_CASE("integrate examples") {
    const double pi = std::numbers::pi;
    const double s2 = integrate([](double x) { return std::sin(x) * std::sin(x); }, 0.0, pi, 32, 8);
    CHECK(std::abs(s2 - pi / 2) <= 1e-13);
    const double lin = integrate([](double x) { return x; }, 0.0, pi, 32, 8);
    CHECK(std::abs(lin - pi * pi / 2) <= 1e-13);
    // Beta(5/2, 5/2) = Gamma(5/2)^2 / Gamma(5) = 3 pi / 128
    const double beta = std::tgamma(2.5) * std::tgamma(2.5) / std::tgamma(5.0);
    REQUIRE(beta == doctest::Approx(3 * pi / 128).epsilon(1e-15));
    const double b = integrate([](double z) { return std::pow(z * (1 - z), 1.5); }, 0.0, 1.0, 64, 32);
    CHECK(std::abs(b - 3 * pi / 128) <= 1e-12);
  }

  TEST_CASE("integrate rejects non-finite integrands with the abscissa") {
    try {
      (void)integrate([](double x) { return x > 0.5 ? std::nan("") : 1.0; }, 0.0, 1.0, 4, 2);
      FAIL("expected EvaluationError");
    } catch (const EvaluationError& e) {
      CHECK(std::string(e.what()).find("x = 0.") != std::string::npos);
    }
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0, 4, 2), ParameterError);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, 4, 0), ParameterError);
  }
}
