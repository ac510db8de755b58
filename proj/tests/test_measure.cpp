#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "rajchman/errors.hpp"
#include "rajchman/io.hpp"
#include "rajchman/measure.hpp"

using namespace rajchman;

namespace {
const double kTwoPi = 6.283185307179586476925286766559;
}

TEST_CASE("dirac at angle zero has all coefficients equal to one") {
  const Measure m = Measure::dirac(0.0);
  for (long n = -1000; n <= 1000; ++n)
    CHECK(std::abs(fourier_coefficient(m, n) - cplx(1.0)) < 1e-12);
}

TEST_CASE("two symmetric diracs give 1 + (-1)^n") {
  Measure m;
  m.atoms = {{0.0, 1.0}, {0.5, 1.0}};
  const FourierTable t = fourier_table(m, 100);
  for (long n = -100; n <= 100; ++n) {
    const double expected = (n % 2 == 0) ? 2.0 : 0.0;
    CHECK(std::abs(t.at(n) - cplx(expected)) < 1e-12);
  }
}

TEST_CASE("dirac at a generic angle is a pure phase") {
  const double alpha = 0.1375;
  const Measure m = Measure::dirac(alpha, 0.75);
  for (long n : {-7L, -1L, 0L, 1L, 5L, 997L}) {
    const cplx expected = 0.75 * std::polar(1.0, kTwoPi * n * alpha);
    CHECK(std::abs(fourier_coefficient(m, n) - expected) < 1e-12);
  }
}

TEST_CASE("lebesgue coefficients are a delta at zero") {
  const FourierTable t = fourier_table(Measure::lebesgue(), 64);
  CHECK(t.at(0) == cplx(1.0));
  for (long k = 1; k <= 64; ++k) {
    CHECK(t.at(k) == cplx(0.0));
    CHECK(t.at(-k) == cplx(0.0));
  }
}

TEST_CASE("raised-cosine density has the three expected coefficients") {
  Measure m;
  m.density = Density::registered("raised-cosine");
  const FourierTable t = fourier_table(m, 16);
  CHECK(std::abs(t.at(0) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(t.at(1) - cplx(0.25)) < 1e-15);
  CHECK(std::abs(t.at(-1) - cplx(0.25)) < 1e-15);
  for (long k = 2; k <= 16; ++k) CHECK(std::abs(t.at(k)) == 0.0);
}

TEST_CASE("sampled density agrees with the closed form within its bound") {
  Measure exact;
  exact.density = Density::registered("raised-cosine");

  const long n = 1 << 12;
  std::vector<double> samples(n);
  for (long j = 0; j < n; ++j)
    samples[j] = 1.0 + 0.5 * std::cos(kTwoPi * j / static_cast<double>(n));
  Measure sampled;
  sampled.density = Density::from_samples(std::move(samples));

  const int K = 64;
  const FourierTable te = fourier_table(exact, K);
  const FourierTable ts = fourier_table(sampled, K, n);
  CHECK(ts.error_bound > 0.0);
  for (long k = -K; k <= K; ++k)
    CHECK(std::abs(ts.at(k) - te.at(k)) <= ts.error_bound + 1e-12);
}

TEST_CASE("sampled density rejects coefficients beyond the safe window") {
  Measure m;
  m.density = Density::from_samples(std::vector<double>(64, 1.0));
  CHECK_NOTHROW(fourier_coefficient(m, 16));
  CHECK_THROWS_AS(fourier_coefficient(m, 17), resolution_error);
  CHECK_THROWS_AS(fourier_table(m, 17), resolution_error);
  CHECK_THROWS_AS(fourier_table(m, 8, 100), spec_error);  // not a power of two
}

TEST_CASE("cantor coefficients match the cosine-product closed form") {
  const IFSMeasure cantor = IFSMeasure::cantor_lebesgue();
  for (long k = -333; k <= 333; ++k)
    CHECK(std::abs(ifs_coefficient(cantor, k) -
                   oracles::cantor_product_oracle(k)) < 1e-12);
}

TEST_CASE("cantor coefficients match depth-20 branch enumeration") {
  const Measure m = parse_measure_file(oracles::data_path("cantor.json"));
  REQUIRE(m.ifs.has_value());
  const auto branches = oracles::enumerate_branches(*m.ifs);
  for (long k = -100; k <= 100; ++k)
    CHECK(std::abs(ifs_coefficient(*m.ifs, k) - branches.coefficient(k)) <
          1e-8);
}

TEST_CASE("windowed cantor matches branch enumeration") {
  const Measure m = parse_measure_file(oracles::data_path("cantor_q1.json"));
  REQUIRE(m.ifs.has_value());
  const auto branches = oracles::enumerate_branches(*m.ifs);
  for (long k = -100; k <= 100; ++k)
    CHECK(std::abs(ifs_coefficient(*m.ifs, k) - branches.coefficient(k)) <
          1e-8);
}

TEST_CASE("self-similarity under tripling holds to 1e-10") {
  const FourierTable t =
      fourier_table(parse_measure_file(oracles::data_path("cantor.json")), 999);
  for (long k = 1; k <= 333; ++k)
    CHECK(std::abs(t.at(k) - t.at(3 * k)) < 1e-10);
}

TEST_CASE("asymmetric IFS with a window matches branch enumeration") {
  IFSMeasure f;
  f.base = 5;
  f.digits = {{0, 0.25}, {1, 0.25}, {4, 0.5}};
  f.mass = 0.7;
  f.window = AffineWindow{0.2, 0.125};
  f.validate();
  const auto branches = oracles::enumerate_branches(f, 12);
  for (long k : {-57L, -3L, 0L, 1L, 2L, 10L, 88L})
    CHECK(std::abs(ifs_coefficient(f, k) - branches.coefficient(k)) < 1e-8);
}

TEST_CASE("conjugate symmetry and mass for a mixed measure") {
  Measure m;
  m.atoms = {{0.3, 0.2}};
  m.density = Density::registered("two-sin-squared");
  m.ifs = IFSMeasure::cantor_lebesgue();
  m.ifs->mass = 0.5;
  const FourierTable t = fourier_table(m, 200);
  CHECK(std::abs(t.at(0) - cplx(m.total_mass())) < 1e-12);
  for (long k = 1; k <= 200; ++k)
    CHECK(std::abs(t.at(-k) - std::conj(t.at(k))) < 1e-12);
}

TEST_CASE("coefficients are additive over the decomposition") {
  Measure atoms_only;
  atoms_only.atoms = {{0.3, 0.2}, {0.71, 0.4}};
  Measure density_only;
  density_only.density = Density::registered("raised-cosine");
  Measure both = atoms_only;
  both.density = density_only.density;

  const FourierTable ta = fourier_table(atoms_only, 50);
  const FourierTable td = fourier_table(density_only, 50);
  const FourierTable tb = fourier_table(both, 50);
  for (long k = -50; k <= 50; ++k)
    CHECK(std::abs(tb.at(k) - ta.at(k) - td.at(k)) < 1e-14);
}

TEST_CASE("table lookup outside the window is rejected") {
  const FourierTable t = fourier_table(Measure::lebesgue(), 4);
  CHECK_THROWS_AS(t.at(5), resolution_error);
}

TEST_CASE("interval masses: lebesgue, atoms, density") {
  const Measure leb = Measure::lebesgue();
  CHECK(induced_angle_measure(leb, {{0.2, 0.5}}) == doctest::Approx(0.3));
  CHECK(induced_angle_measure(leb, {{0.0, 0.25}, {0.5, 1.0}}) ==
        doctest::Approx(0.75));

  Measure m;
  m.atoms = {{0.25, 2.0}};
  m.density = Density::registered("raised-cosine");
  // int_0^{1/4} (1 + cos(2 pi a)/2) da = 1/4 + 1/(4 pi); atom at 0.25 excluded
  const double expected = 0.25 + 1.0 / (4.0 * 3.14159265358979323846);
  CHECK(induced_angle_measure(m, {{0.0, 0.25}}) == doctest::Approx(expected));
  CHECK(induced_angle_measure(m, {{0.25, 0.26}}) > 2.0);
}

TEST_CASE("cantor interval masses are dyadic in the digit cylinders") {
  Measure m;
  m.ifs = IFSMeasure::cantor_lebesgue();
  CHECK(induced_angle_measure(m, {{0.0, 1.0 / 3.0}}) == doctest::Approx(0.5));
  CHECK(induced_angle_measure(m, {{1.0 / 3.0, 2.0 / 3.0}}) ==
        doctest::Approx(0.0));
  CHECK(induced_angle_measure(m, {{0.0, 1.0 / 9.0}}) == doctest::Approx(0.25));
  CHECK(induced_angle_measure(m, {{0.0, 1.0}}) == doctest::Approx(1.0));
}

TEST_CASE("invalid interval sets are rejected") {
  const Measure leb = Measure::lebesgue();
  CHECK_THROWS_AS(induced_angle_measure(leb, {{-0.1, 0.5}}), spec_error);
  CHECK_THROWS_AS(induced_angle_measure(leb, {{0.0, 0.5}, {0.4, 0.6}}),
                  spec_error);
}

TEST_CASE("validation rejects malformed measures") {
  Measure bad = Measure::dirac(1.5);
  CHECK_THROWS_AS(bad.validate(), spec_error);
  bad = Measure::dirac(0.5, 1e-16);
  CHECK_THROWS_AS(bad.validate(), spec_error);
  bad.atoms = {{0.5, 1.0}, {0.5, 1.0}};
  CHECK_THROWS_AS(bad.validate(), spec_error);

  IFSMeasure f = IFSMeasure::cantor_lebesgue();
  f.digits[0].second = 0.6;  // probabilities no longer sum to one
  CHECK_THROWS_AS(f.validate(), spec_error);
  f = IFSMeasure::cantor_lebesgue();
  f.window = AffineWindow{0.0, 1.5};
  CHECK_THROWS_AS(f.validate(), spec_error);

  CHECK_THROWS_AS(Density::trig_poly({{0, 1.0}, {1, 0.25}}).validate(),
                  spec_error);  // missing the mirrored coefficient
  CHECK_THROWS_AS(Density::trig_poly({{-1, 0.8}, {0, 1.0}, {1, 0.8}}).validate(),
                  spec_error);  // dips negative
  CHECK_THROWS_AS(Density::registered("bogus"), spec_error);
}

TEST_CASE("json round trip through the canonical dump") {
  const Measure m = parse_measure_file(oracles::data_path("cantor_q1.json"));
  const std::string canon = canonical_measure_text(m);
  const Measure again = parse_measure_text(canon, "canon");
  CHECK(canonical_measure_text(again) == canon);
  const FourierTable t1 = fourier_table(m, 32);
  const FourierTable t2 = fourier_table(again, 32);
  for (long k = -32; k <= 32; ++k) CHECK(t1.at(k) == t2.at(k));
}

TEST_CASE("malformed json specs report their origin") {
  CHECK_THROWS_AS(parse_measure_text("{", "inline"), spec_error);
  CHECK_THROWS_AS(parse_measure_text("{\"atoms\": [[0.5]]}", "inline"),
                  spec_error);
  CHECK_THROWS_AS(
      parse_measure_text("{\"density\": {\"kind\": \"mystery\"}}", "inline"),
      spec_error);
  CHECK_THROWS_AS(parse_measure_text("{}", "inline"), spec_error);  // zero mass
}
