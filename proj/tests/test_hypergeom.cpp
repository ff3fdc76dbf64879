#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "ptdarboux/errors.hpp"
#include "ptdarboux/hypergeom.hpp"

using namespace ptd;

namespace {

// Term-by-term from scratch, no ratio recurrence.
Rational brute_force_f21(unsigned n, const Rational& b, const Rational& c, const Rational& z) {
  Rational sum{0};
  Rational z_pow{1};
  Rational factorial{1};
  for (unsigned j = 0; j <= n; ++j) {
    if (j > 0) {
      z_pow *= z;
      factorial *= j;
    }
    sum += pochhammer(Rational(-static_cast<long long>(n)), j) * pochhammer(b, j) /
           pochhammer(c, j) * z_pow / factorial;
  }
  return sum;
}

Rational lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                  const Rational& x) {
  Rational total{0};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational basis{1};
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j != i) basis *= (x - xs[j]) / (xs[i] - xs[j]);
    }
    total += ys[i] * basis;
  }
  return total;
}

TerminatingHypergeometric base(unsigned n) { return {n, Rational(n + 4), Rational(5, 2)}; }

}  // namespace

TEST_SUITE("hypergeom") {
  TEST_CASE("exact evaluation examples") {
    const Rational half{1, 2};
    CHECK(f21_eval_exact({0, Rational(4), Rational(5, 2)}, half) == 1);
    CHECK(f21_eval_exact({1, Rational(5), Rational(5, 2)}, half) == 0);
    CHECK(f21_eval_exact({2, Rational(6), Rational(5, 2)}, half) == Rational(-1, 5));
  }

  TEST_CASE("exact path matches brute-force summation") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 9);
    for (unsigned n = 0; n <= 20; ++n) {
      for (int trial = 0; trial < 4; ++trial) {
        const Rational b(num(rng), den(rng));
        Rational c(num(rng), 2 * den(rng) + 1);
        if (c <= 0 && boost::multiprecision::denominator(c) == 1) c += Rational(1, 3);
        const Rational z(num(rng), den(rng));
        REQUIRE(f21_eval_exact({n, b, c}, z) == brute_force_f21(n, b, c, z));
      }
    }
  }

  TEST_CASE("invalid c is rejected on both paths") {
    CHECK_THROWS_AS(f21_eval_exact({2, Rational(3), Rational(0)}, Rational(1, 2)), ParameterError);
    CHECK_THROWS_AS(f21_eval_real({2, Rational(3), Rational(-2)}, 0.5), ParameterError);
    CHECK_NOTHROW(f21_eval_real({2, Rational(3), Rational(-3, 2)}, 0.5));
  }

  TEST_CASE("real evaluation examples") {
    CHECK(std::abs(f21_eval_real({2, Rational(6), Rational(5, 2)}, 0.5) + 0.2) <= 1e-14);
    CHECK(f21_eval_real({7, Rational(3, 7), Rational(9, 4)}, 0.0) == 1.0);
    const double s = std::sin(std::numbers::pi / 6);
    CHECK(f21_eval_real({1, Rational(5), Rational(5, 2)}, s * s) == doctest::Approx(0.5).epsilon(1e-15));
  }

  TEST_CASE("exact and real paths agree up to n = 25") {
    const std::vector<Rational> zs{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                   Rational(1)};
    for (unsigned n = 0; n <= 25; ++n) {
      const HypergeomPolynomial poly(base(n));
      for (const auto& z : zs) {
        const Rational exact = poly(z);
        const double real = poly(to_double(z));
        CAPTURE(n);
        CAPTURE(to_double(z));
        if (exact == 0) {
          REQUIRE(std::abs(real) <= 1e-13);
        } else {
          const double ref = to_double(exact);
          REQUIRE(std::abs(real - ref) / std::abs(ref) <= 1e-13);
        }
      }
    }
  }

  TEST_CASE("polynomial degree bound via Lagrange interpolation") {
    for (unsigned n = 0; n <= 12; ++n) {
      const HypergeomPolynomial poly(base(n));
      std::vector<Rational> xs;
      std::vector<Rational> ys;
      for (unsigned i = 0; i < n + 2; ++i) {
        xs.emplace_back(i, n + 2);
        ys.push_back(poly(xs.back()));
      }
      const Rational probe(7, 3);
      REQUIRE(lagrange(xs, ys, probe) == poly(probe));
    }
  }

  TEST_CASE("derivative parameter shift") {
    const auto d = f21_derivative({1, Rational(5), Rational(5, 2)});
    CHECK(d.factor == -2);
    CHECK(d.shifted.n == 0);
    CHECK(d.shifted.b == 6);
    CHECK(d.shifted.c == Rational(7, 2));

    const auto zero = f21_derivative({0, Rational(9), Rational(5, 2)});
    CHECK(zero.factor == 0);
    CHECK(zero.shifted.n == 0);
    CHECK(zero.shifted.b == 9);
  }

  TEST_CASE("derivative relation against central differences") {
    const TerminatingHypergeometric h = base(4);
    const auto d = f21_derivative(h);
    const double z = 0.3;
    const double step = 1e-5;
    const double fd = (f21_eval_real(h, z + step) - f21_eval_real(h, z - step)) / (2 * step);
    const double analytic = to_double(d.factor) * f21_eval_real(d.shifted, z);
    CHECK(std::abs(fd - analytic) <= 1e-8 * std::abs(analytic));

    // and exactly, through the coefficients
    const HypergeomPolynomial p(h);
    const HypergeomPolynomial q(d.shifted);
    for (unsigned j = 1; j <= h.n; ++j) {
      REQUIRE(p.coefficients()[j] * j == d.factor * q.coefficients()[j - 1]);
    }
  }

  TEST_CASE("midpoint vanishing examples") {
    const auto m0 = midpoint_vanishing(0);
    CHECK(m0.odd_vanishes());
    CHECK_FALSE(m0.shifted_vanishes().has_value());

    for (unsigned m : {1u, 5u}) {
      const auto mv = midpoint_vanishing(m);
      CHECK(mv.odd_vanishes());
      REQUIRE(mv.shifted_vanishes().has_value());
      CHECK(*mv.shifted_vanishes());
    }
  }

  TEST_CASE("midpoint vanishing is an exact zero for m <= 25") {
    for (unsigned m = 0; m <= 25; ++m) {
      const auto mv = midpoint_vanishing(m);
      REQUIRE(mv.odd_value == 0);
      if (m >= 1) REQUIRE(*mv.shifted_value == 0);
    }
  }

  TEST_CASE("even-index midpoint values do not vanish") {
    // the even-n normalization divides by these
    for (unsigned m = 0; m <= 30; ++m) {
      REQUIRE(f21_eval_exact({2 * m, Rational(2 * m + 4), Rational(5, 2)}, Rational(1, 2)) != 0);
      REQUIRE(f21_eval_exact({2 * m, Rational(2 * m + 6), Rational(7, 2)}, Rational(1, 2)) != 0);
    }
  }
}
