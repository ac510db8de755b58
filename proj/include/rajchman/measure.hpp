#pragma once

// Finite positive measures on the unit circle, represented by their
// canonical decomposition
//
//     mu = mu_a + mu_sc + mu_sd
//
// into an absolutely continuous part (a density g on [0,1)), a
// singular-continuous part (a self-similar IFS measure), and a discrete
// part (a finite list of atoms). Angles are dimensionless in [0,1),
// z = e^{2*pi*i*alpha}.
//
// The k-th Fourier-Stieltjes coefficient is
//
//     mu_hat(k) = int_T z^k dmu = int_[0,1) e^{2*pi*i*k*alpha} deta(alpha).
//
// Atoms contribute exact exponential sums; densities contribute either
// exact coefficients (closed forms) or one FFT of a uniform sample; the
// IFS part is evaluated by the truncated self-similarity product with a
// certified tail bound.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rajchman {

using cplx = std::complex<double>;

inline constexpr double kMinAtomMass = 1e-15;

struct AffineWindow {
  double shift = 0.0;
  double scale = 1.0;  // in (0, 1]
};

// Self-similar measure: the invariant measure of the maps
// alpha -> (alpha + d_i)/m chosen with probabilities p_i, optionally
// compressed into a subinterval by an affine window t + s*alpha.
struct IFSMeasure {
  int base = 3;                                // m >= 2
  std::vector<std::pair<int, double>> digits;  // (d_i, p_i), sum p_i = 1
  double mass = 1.0;
  std::optional<AffineWindow> window;

  void validate() const;
  // Barycenter of the (windowed) attractor measure.
  double barycenter() const;
  static IFSMeasure cantor_lebesgue();
};

struct Density {
  enum class Kind { Constant, TrigPoly, Samples };

  Kind kind = Kind::Constant;
  double constant = 1.0;
  // Real symmetric coefficients g_hat(m); g(alpha) = sum g_hat(m) e^{2 pi i m alpha}.
  std::map<int, double> trig;
  std::vector<double> samples;  // uniform on [0,1), power-of-two length
  std::string expr_id;          // non-empty when built from a registered form

  void validate() const;
  double total_mass() const;
  bool exact() const { return kind != Kind::Samples; }
  double value_at(double alpha) const;

  static Density constant_density(double value);
  static Density trig_poly(std::map<int, double> coeffs);
  static Density from_samples(std::vector<double> values);
  // Registered closed forms: "one", "raised-cosine" (1 + cos(2 pi a)/2),
  // "two-sin-squared" (2 sin^2(pi a)).
  static Density registered(const std::string& id);
};

struct Measure {
  std::vector<std::pair<double, double>> atoms;  // (alpha in [0,1), mass > 0)
  std::optional<Density> density;
  std::optional<IFSMeasure> ifs;

  void validate() const;
  double total_mass() const;

  static Measure dirac(double alpha, double mass = 1.0);
  static Measure lebesgue();
};

// Cached coefficients mu_hat(k) for |k| <= window, plus a worst-case
// per-entry absolute error bound.
struct FourierTable {
  int window = 0;
  std::vector<cplx> values;  // index k + window
  double error_bound = 0.0;

  const cplx& at(long k) const;
  double abs_at(long k) const { return std::abs(at(k)); }
};

// Single coefficient. quadrature_points bounds the sampled-density path;
// 0 picks a default resolution. Exact parts ignore it.
cplx fourier_coefficient(const Measure& m, long k, long quadrature_points = 0);

// Batch table. Requires quadrature_points to be a power of two >= 4K when
// the measure carries a sampled density (exact paths have no resolution).
FourierTable fourier_table(const Measure& m, int K, long quadrature_points = 0);

// eta(set) for a finite union of pairwise disjoint subintervals
// [lo, hi) of [0,1).
double induced_angle_measure(const Measure& m,
                             const std::vector<std::pair<double, double>>& set,
                             double tol = 1e-12);

// Truncated self-similarity product for the IFS part alone (mass included).
// Exposed so the table builder and the tests can talk about it directly.
cplx ifs_coefficient(const IFSMeasure& ifs, long k);
double ifs_tail_bound(const IFSMeasure& ifs, long k);

}  // namespace rajchman
