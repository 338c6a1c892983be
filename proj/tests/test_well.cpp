#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <stdexcept>

#include "doctest.h"
#include "grid.hpp"
#include "quadrature.hpp"
#include "well.hpp"

using namespace condex::well;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

double quad01(const std::function<double(double)>& f) {
  return condex::simpson(f, 0.0, 1.0, 2000);
}

}  // namespace

TEST_CASE("adam wave boundary and peak values") {
  CHECK(adam_wave(1, 0.5) == doctest::Approx(kSqrt2).epsilon(1e-15));
  for (int n : {1, 2, 5, 9}) {
    CHECK(adam_wave(n, 0.0) == 0.0);
  }
}

TEST_CASE("adam and eve waves are unit normalized") {
  for (int n = 1; n <= 10; ++n) {
    const double adam_mass = quad01([n](double x) { return adam_wave(n, x) * adam_wave(n, x); });
    const double eve_mass = quad01([n](double x) { return eve_wave(n, x) * eve_wave(n, x); });
    CHECK(std::abs(adam_mass - 1.0) <= 1e-10);
    CHECK(std::abs(eve_mass - 1.0) <= 1e-10);
  }
}

TEST_CASE("adam waves are orthonormal") {
  for (int p = 1; p <= 10; ++p) {
    for (int q = p; q <= 10; ++q) {
      const double inner = quad01([&](double x) { return adam_wave(p, x) * adam_wave(q, x); });
      CHECK(std::abs(inner - (p == q ? 1.0 : 0.0)) <= 1e-8);
    }
  }
}

TEST_CASE("eve wave starts at the amplitude") {
  CHECK(eve_wave(1, 0.0) == kSqrt2);
  CHECK(eve_wave(3, 0.0) == kSqrt2);
}

TEST_CASE("eve is adam shifted by a quarter period") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> pick(0.0, 1.0);
  for (int n : {1, 2, 3, 8}) {
    const double shift = 1.0 / (2 * n);
    for (int trial = 0; trial < 500; ++trial) {
      const double x = pick(rng) * (1.0 - shift);
      CHECK(std::abs(eve_wave(n, x) - adam_wave(n, x + shift)) <= 1e-12);
    }
  }
}

TEST_CASE("two-phase normalization of the essence pair") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> pick(0.0, 1.0);
  std::uniform_int_distribution<int> pick_n(1, 50);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = pick_n(rng);
    const double x = pick(rng);
    const double s = adam_essence(n, x);
    const double c = eve_essence(n, x);
    CHECK(std::abs(s * s + c * c - 1.0) <= 1e-12);
  }
}

TEST_CASE("complex wave has constant squared modulus") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> pick(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::complex<double> value = complex_wave(1 + trial % 7, pick(rng));
    CHECK(std::abs(std::norm(value) - 2.0) <= 1e-12);
  }
  CHECK(complex_wave(1, 0.0) == std::complex<double>(kSqrt2, 0.0));
  const std::complex<double> quarter = complex_wave(2, 0.25);
  CHECK(std::abs(quarter.real()) <= 1e-15);
  CHECK(quarter.imag() == doctest::Approx(kSqrt2).epsilon(1e-15));
}

TEST_CASE("stationary phases preserve the modulus") {
  for (double t : {0.0, 0.3, 2.7}) {
    const std::complex<double> a = adam_wave_at_time(3, 0.21, t);
    CHECK(std::abs(std::abs(a) - std::abs(adam_wave(3, 0.21))) <= 1e-12);
    const std::complex<double> e = eve_wave_at_time(3, 0.21, t);
    CHECK(std::abs(std::abs(e) - std::abs(eve_wave(3, 0.21))) <= 1e-12);
  }
}

TEST_CASE("energies scale with the squared quantum number") {
  CHECK(energy(2) == 4.0 * energy(1));
  CHECK(energy(3) == 9.0 * energy(1));
  CHECK(energy(4) == 16.0 * energy(1));
  CHECK(energy(1, 1.0) == 1.0);
  CHECK(energy(3, 0.5) == 4.5);
  CHECK_THROWS_AS(energy(0), std::invalid_argument);
  CHECK_THROWS_AS(energy(2, -1.0), std::invalid_argument);
}

TEST_CASE("wave duality numbers cancel exactly") {
  const DualityNumbers five = duality_numbers(5);
  CHECK(five.nu == 2.5);
  CHECK(five.lambda == 0.4);
  CHECK(five.product == 1.0);
  const DualityNumbers one = duality_numbers(1);
  CHECK(one.nu == 0.5);
  CHECK(one.lambda == 2.0);
  CHECK(one.product == 1.0);
  for (int n = 1; n <= 1000; ++n) {
    CHECK(duality_numbers(n).product == 1.0);
  }
  CHECK_THROWS_AS(duality_numbers(0), std::invalid_argument);
}

TEST_CASE("local ground state covers its subinterval") {
  const auto at_lo = local_ground_state(2.0, 3.5, 2.0);
  CHECK(at_lo.adam_sq == 0.0);
  CHECK(at_lo.eve_sq == 1.0);
  const auto at_hi = local_ground_state(2.0, 3.5, 3.5);
  CHECK(at_hi.adam_sq == 1.0);
  CHECK(at_hi.eve_sq <= 1e-30);
  const auto at_mid = local_ground_state(2.0, 3.5, 2.75);
  CHECK(at_mid.adam_sq == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(at_mid.eve_sq == doctest::Approx(0.5).epsilon(1e-12));
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> pick(2.0, 3.5);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto state = local_ground_state(2.0, 3.5, pick(rng));
    CHECK(std::abs(state.adam_sq + state.eve_sq - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(local_ground_state(1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(local_ground_state(2.0, 3.5, 4.0), std::domain_error);
}

TEST_CASE("descendant ledgers count two per level") {
  const auto f = [](double x) { return x * (1.0 - x); };
  for (int level : {1, 3, 6}) {
    const auto values = condex::sample_nodes(f, condex::make_grid({0.0, 1.0}, 2 * level));
    const DescendantLedger ledger = descendant_ledger(values, level);
    CHECK(ledger.count == 2 * level);
    REQUIRE(ledger.subintervals.size() == static_cast<std::size_t>(2 * level));
    for (std::size_t i = 0; i < ledger.subintervals.size(); ++i) {
      CHECK(ledger.subintervals[i].first <= ledger.subintervals[i].second);
      if (i > 0) CHECK(ledger.subintervals[i - 1].second == ledger.subintervals[i].first);
    }
  }
  int cumulative = 0;
  for (int level = 1; level <= 12; ++level) {
    cumulative += descendant_ledger(condex::sample_nodes(f, condex::make_grid({0.0, 1.0}, 2 * level)), level).count;
  }
  CHECK(cumulative == 12 * 13);
  const auto values = condex::sample_nodes(f, condex::make_grid({0.0, 1.0}, 4));
  CHECK_THROWS_AS(descendant_ledger(values, 3), std::invalid_argument);
}

TEST_CASE("well coordinates outside the unit interval are rejected") {
  CHECK_THROWS_AS(adam_wave(1, -0.1), std::domain_error);
  CHECK_THROWS_AS(eve_wave(1, 1.1), std::domain_error);
  CHECK_THROWS_AS(adam_wave(0, 0.5), std::invalid_argument);
}
