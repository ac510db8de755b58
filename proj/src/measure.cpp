#include "rajchman/measure.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rajchman/errors.hpp"
#include "rajchman/fft.hpp"

namespace rajchman {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr long kDefaultQuadPoints = 1L << 14;
// Sampled-density quadrature error: c_quad * (modulus of continuity at the
// grid spacing) * total mass.
constexpr double kQuadErrorConst = 1.0;

cplx unit(double turns) { return std::polar(1.0, kTwoPi * turns); }

bool finite(double x) { return std::isfinite(x); }

}  // namespace

// ---------- IFSMeasure ----------

void IFSMeasure::validate() const {
  if (base < 2) throw spec_error("ifs: base must be >= 2");
  if (digits.empty()) throw spec_error("ifs: needs at least one digit");
  if (!finite(mass) || mass <= 0.0) throw spec_error("ifs: mass must be positive");
  std::set<int> seen;
  double psum = 0.0;
  for (const auto& [d, p] : digits) {
    if (d < 0 || d >= base) throw spec_error("ifs: digit out of [0, base)");
    if (!seen.insert(d).second) throw spec_error("ifs: duplicate digit");
    if (!finite(p) || p <= 0.0) throw spec_error("ifs: digit probability must be positive");
    psum += p;
  }
  if (std::abs(psum - 1.0) > 1e-12)
    throw spec_error("ifs: digit probabilities must sum to 1");
  if (window) {
    if (!finite(window->shift) || !finite(window->scale) ||
        window->scale <= 0.0 || window->scale > 1.0)
      throw spec_error("ifs: window scale must lie in (0, 1]");
  }
}

double IFSMeasure::barycenter() const {
  double dbar = 0.0;
  for (const auto& [d, p] : digits) dbar += p * d;
  double b = dbar / (base - 1);  // fixed point of b -> (b + dbar)/m
  if (window) b = window->shift + window->scale * b;
  return b;
}

IFSMeasure IFSMeasure::cantor_lebesgue() {
  IFSMeasure ifs;
  ifs.base = 3;
  ifs.digits = {{0, 0.5}, {2, 0.5}};
  ifs.mass = 1.0;
  return ifs;
}

// Depth rule: truncate the product at the smallest J with
// m^J > 2*pi*max(1,|k|*s*dmax) * 1e12, so the neglected tail multiplies the
// result by 1 + O(1e-12).
namespace {

int ifs_depth(const IFSMeasure& ifs, long k) {
  const double s = ifs.window ? ifs.window->scale : 1.0;
  int dmax = 0;
  for (const auto& [d, p] : ifs.digits) dmax = std::max(dmax, d);
  const double target =
      kTwoPi * std::max(1.0, std::abs(static_cast<double>(k)) * s * dmax) * 1e12;
  const double j = std::log(target) / std::log(static_cast<double>(ifs.base));
  return std::clamp(static_cast<int>(std::ceil(j)) + 1, 2, 96);
}

}  // namespace

double ifs_tail_bound(const IFSMeasure& ifs, long k) {
  const double s = ifs.window ? ifs.window->scale : 1.0;
  int dmax = 0;
  for (const auto& [d, p] : ifs.digits) dmax = std::max(dmax, d);
  const int J = ifs_depth(ifs, k);
  // sum_{j>J} 2 pi |k| s dmax / m^j = (2 pi |k| s dmax / m^J) * 1/(m-1)
  const double mJ = std::pow(static_cast<double>(ifs.base), J);
  return ifs.mass * kTwoPi * std::abs(static_cast<double>(k)) * s * dmax /
         (mJ * (ifs.base - 1));
}

cplx ifs_coefficient(const IFSMeasure& ifs, long k) {
  const double s = ifs.window ? ifs.window->scale : 1.0;
  const double t = ifs.window ? ifs.window->shift : 0.0;
  const int J = ifs_depth(ifs, k);
  cplx prod = unit(static_cast<double>(k) * t);
  double level = s / ifs.base;  // s / m^j
  for (int j = 1; j <= J; ++j) {
    cplx factor = 0.0;
    for (const auto& [d, p] : ifs.digits)
      factor += p * unit(static_cast<double>(k) * level * d);
    prod *= factor;
    level /= ifs.base;
  }
  return ifs.mass * prod;
}

// ---------- Density ----------

void Density::validate() const {
  switch (kind) {
    case Kind::Constant:
      if (!finite(constant) || constant <= 0.0)
        throw spec_error("density: constant must be positive");
      break;
    case Kind::TrigPoly: {
      if (trig.empty()) throw spec_error("density: empty coefficient list");
      double mass = 0.0;
      for (const auto& [m, g] : trig) {
        if (!finite(g)) throw spec_error("density: non-finite coefficient");
        auto it = trig.find(-m);
        if (it == trig.end() || std::abs(it->second - g) > 1e-12)
          throw spec_error("density: coefficients must be symmetric (real g)");
        if (m == 0) mass = g;
      }
      if (mass <= 0.0) throw spec_error("density: total mass must be positive");
      // nonnegativity spot check on a fixed grid
      for (int i = 0; i < 720; ++i) {
        if (value_at(i / 720.0) < -1e-9)
          throw spec_error("density: negative values detected");
      }
      break;
    }
    case Kind::Samples: {
      if (samples.size() < 4 || !is_power_of_two(static_cast<long>(samples.size())))
        throw spec_error("density: sample count must be a power of two >= 4");
      double sum = 0.0;
      for (double v : samples) {
        if (!finite(v) || v < 0.0)
          throw spec_error("density: samples must be finite and nonnegative");
        sum += v;
      }
      if (sum <= 0.0) throw spec_error("density: total mass must be positive");
      break;
    }
  }
}

double Density::total_mass() const {
  switch (kind) {
    case Kind::Constant:
      return constant;
    case Kind::TrigPoly: {
      auto it = trig.find(0);
      return it == trig.end() ? 0.0 : it->second;
    }
    case Kind::Samples: {
      double sum = 0.0;
      for (double v : samples) sum += v;
      return sum / static_cast<double>(samples.size());
    }
  }
  return 0.0;
}

double Density::value_at(double alpha) const {
  switch (kind) {
    case Kind::Constant:
      return constant;
    case Kind::TrigPoly: {
      double v = 0.0;
      for (const auto& [m, g] : trig) v += g * std::cos(kTwoPi * m * alpha);
      // symmetric real coefficients: sin parts cancel pairwise
      return v;
    }
    case Kind::Samples: {
      const auto n = static_cast<double>(samples.size());
      double x = alpha - std::floor(alpha);
      auto i = static_cast<std::size_t>(x * n);
      if (i >= samples.size()) i = samples.size() - 1;
      return samples[i];
    }
  }
  return 0.0;
}

Density Density::constant_density(double value) {
  Density d;
  d.kind = Kind::Constant;
  d.constant = value;
  return d;
}

Density Density::trig_poly(std::map<int, double> coeffs) {
  Density d;
  d.kind = Kind::TrigPoly;
  d.trig = std::move(coeffs);
  return d;
}

Density Density::from_samples(std::vector<double> values) {
  Density d;
  d.kind = Kind::Samples;
  d.samples = std::move(values);
  return d;
}

Density Density::registered(const std::string& id) {
  Density d;
  if (id == "one") {
    d = constant_density(1.0);
  } else if (id == "raised-cosine") {
    d = trig_poly({{-1, 0.25}, {0, 1.0}, {1, 0.25}});
  } else if (id == "two-sin-squared") {
    d = trig_poly({{-1, -0.5}, {0, 1.0}, {1, -0.5}});
  } else {
    throw spec_error("density: unknown registered form '" + id + "'");
  }
  d.expr_id = id;
  return d;
}

// ---------- Measure ----------

void Measure::validate() const {
  std::set<double> positions;
  for (const auto& [alpha, mass] : atoms) {
    if (!finite(alpha) || alpha < 0.0 || alpha >= 1.0)
      throw spec_error("measure: atom position must lie in [0,1)");
    if (!finite(mass) || mass < kMinAtomMass)
      throw spec_error("measure: atom mass below 1e-15 rejected");
    if (!positions.insert(alpha).second)
      throw spec_error("measure: duplicate atom position");
  }
  if (density) density->validate();
  if (ifs) ifs->validate();
  const double total = total_mass();
  if (!finite(total) || total <= 0.0)
    throw spec_error("measure: total mass must be finite and positive");
}

double Measure::total_mass() const {
  double total = 0.0;
  for (const auto& [alpha, mass] : atoms) total += mass;
  if (density) total += density->total_mass();
  if (ifs) total += ifs->mass;
  return total;
}

Measure Measure::dirac(double alpha, double mass) {
  Measure m;
  m.atoms = {{alpha, mass}};
  return m;
}

Measure Measure::lebesgue() {
  Measure m;
  m.density = Density::constant_density(1.0);
  return m;
}

// ---------- FourierTable ----------

const cplx& FourierTable::at(long k) const {
  if (std::labs(k) > window)
    throw resolution_error("fourier table: index " + std::to_string(k) +
                           " outside window " + std::to_string(window));
  return values[static_cast<std::size_t>(k + window)];
}

// ---------- coefficients ----------

namespace {

cplx atoms_coefficient(const Measure& m, long k) {
  cplx acc = 0.0;
  for (const auto& [alpha, mass] : m.atoms)
    acc += mass * unit(static_cast<double>(k) * alpha);
  return acc;
}

cplx density_coefficient_exact(const Density& d, long k) {
  switch (d.kind) {
    case Density::Kind::Constant:
      return k == 0 ? cplx(d.constant) : cplx(0.0);
    case Density::Kind::TrigPoly: {
      // int g(a) e^{2 pi i k a} da = g_hat(-k)
      auto it = d.trig.find(static_cast<int>(-k));
      return it == d.trig.end() ? cplx(0.0) : cplx(it->second);
    }
    default:
      throw invariant_error("density: exact path called on sampled density");
  }
}

cplx density_coefficient_sampled(const Density& d, long k) {
  const long n = static_cast<long>(d.samples.size());
  if (4 * std::labs(k) > n)
    throw resolution_error(
        "density: coefficient index " + std::to_string(k) +
        " exceeds the safe window of a " + std::to_string(n) + "-point grid");
  cplx acc = 0.0;
  for (long j = 0; j < n; ++j)
    acc += d.samples[static_cast<std::size_t>(j)] *
           unit(static_cast<double>(k) * j / static_cast<double>(n));
  return acc / static_cast<double>(n);
}

double density_error_bound(const Density& d) {
  if (d.exact()) return 0.0;
  double omega = 0.0;
  const std::size_t n = d.samples.size();
  for (std::size_t i = 0; i < n; ++i)
    omega = std::max(omega, std::abs(d.samples[(i + 1) % n] - d.samples[i]));
  return kQuadErrorConst * omega * d.total_mass();
}

}  // namespace

cplx fourier_coefficient(const Measure& m, long k, long quadrature_points) {
  m.validate();
  cplx acc = atoms_coefficient(m, k);
  if (m.density) {
    if (m.density->exact()) {
      acc += density_coefficient_exact(*m.density, k);
    } else {
      const long n = static_cast<long>(m.density->samples.size());
      const long budget = quadrature_points > 0 ? quadrature_points : n;
      if (4 * std::labs(k) > std::min(n, budget > 0 ? budget : kDefaultQuadPoints))
        throw resolution_error("fourier_coefficient: k beyond the safe window "
                               "for the chosen quadrature resolution");
      acc += density_coefficient_sampled(*m.density, k);
    }
  }
  if (m.ifs) acc += ifs_coefficient(*m.ifs, k);
  return acc;
}

FourierTable fourier_table(const Measure& m, int K, long quadrature_points) {
  m.validate();
  if (K < 0) throw spec_error("fourier_table: window must be >= 0");

  FourierTable table;
  table.window = K;
  table.values.assign(static_cast<std::size_t>(2 * K + 1), cplx(0.0));
  double err = 0.0;

  auto add = [&](long k, cplx v) {
    table.values[static_cast<std::size_t>(k + K)] += v;
  };

  // atoms: exact
  for (long k = -K; k <= K; ++k) add(k, atoms_coefficient(m, k));

  // density
  if (m.density) {
    const Density& d = *m.density;
    if (d.exact()) {
      for (long k = -K; k <= K; ++k) add(k, density_coefficient_exact(d, k));
    } else {
      const long n = static_cast<long>(d.samples.size());
      long quad = quadrature_points > 0 ? quadrature_points : n;
      if (!is_power_of_two(quad))
        throw spec_error("fourier_table: quadrature_points must be a power of two");
      if (quad < 4L * K || n < 4L * K)
        throw resolution_error("fourier_table: quadrature_points < 4K");
      // one FFT of the sample vector gives every coefficient
      std::vector<cplx> buf(d.samples.begin(), d.samples.end());
      fft_radix2(buf, -1);
      // mu_hat(k) = (1/n) sum_j v_j e^{+2 pi i k j / n} = DFT(v)[(n-k) mod n]/n
      for (long k = -K; k <= K; ++k) {
        const long idx = ((n - k) % n + n) % n;
        add(k, buf[static_cast<std::size_t>(idx)] / static_cast<double>(n));
      }
      err = std::max(err, density_error_bound(d));
    }
  }

  // IFS
  if (m.ifs) {
    double tail = 0.0;
    for (long k = -K; k <= K; ++k) {
      add(k, ifs_coefficient(*m.ifs, k));
      tail = std::max(tail, ifs_tail_bound(*m.ifs, k));
    }
    err += tail;
  }

  table.error_bound = err;
  return table;
}

// ---------- induced angle measure ----------

namespace {

// Mass the base IFS attractor measure assigns to [a,b) within [0,1).
double ifs_interval_mass(const IFSMeasure& ifs, double a, double b, int depth) {
  if (b <= 0.0 || a >= 1.0 || b <= a) return 0.0;
  if (a <= 0.0 && b >= 1.0) return 1.0;
  if (depth == 0) return 0.5;  // unresolved sliver; caller controls depth
  double acc = 0.0;
  const double m = ifs.base;
  for (const auto& [d, p] : ifs.digits) {
    // branch cylinder [d/m, (d+1)/m); pull the interval back through the map
    const double lo = std::max(a * m - d, 0.0);
    const double hi = std::min(b * m - d, 1.0);
    if (hi > lo) acc += p * ifs_interval_mass(ifs, lo, hi, depth - 1);
  }
  return acc;
}

double density_interval_mass(const Density& d, double a, double b) {
  switch (d.kind) {
    case Density::Kind::Constant:
      return d.constant * (b - a);
    case Density::Kind::TrigPoly: {
      double acc = 0.0;
      for (const auto& [m, g] : d.trig) {
        if (m == 0) {
          acc += g * (b - a);
        } else {
          // int_a^b cos(2 pi m t) dt; sin parts vanish by symmetry of trig
          acc += g * (std::sin(kTwoPi * m * b) - std::sin(kTwoPi * m * a)) /
                 (kTwoPi * m);
        }
      }
      return acc;
    }
    case Density::Kind::Samples: {
      const double n = static_cast<double>(d.samples.size());
      double acc = 0.0;
      for (std::size_t i = 0; i < d.samples.size(); ++i) {
        const double lo = std::max(a, i / n);
        const double hi = std::min(b, (i + 1) / n);
        if (hi > lo) acc += d.samples[i] * (hi - lo);
      }
      return acc;
    }
  }
  return 0.0;
}

}  // namespace

double induced_angle_measure(const Measure& m,
                             const std::vector<std::pair<double, double>>& set,
                             double tol) {
  m.validate();
  auto intervals = set;
  std::sort(intervals.begin(), intervals.end());
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto& [lo, hi] = intervals[i];
    if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi))
      throw spec_error("induced_angle_measure: interval outside [0,1)");
    if (i > 0 && intervals[i - 1].second > lo)
      throw spec_error("induced_angle_measure: overlapping intervals");
  }

  double acc = 0.0;
  for (const auto& [lo, hi] : intervals) {
    for (const auto& [alpha, mass] : m.atoms)
      if (alpha >= lo && alpha < hi) acc += mass;
    if (m.density) acc += density_interval_mass(*m.density, lo, hi);
    if (m.ifs) {
      const IFSMeasure& ifs = *m.ifs;
      double a = lo, b = hi;
      if (ifs.window) {
        a = (a - ifs.window->shift) / ifs.window->scale;
        b = (b - ifs.window->shift) / ifs.window->scale;
      }
      double pmax = 0.0;
      for (const auto& [d, p] : ifs.digits) pmax = std::max(pmax, p);
      // two partially resolved boundary chains, each worth <= pmax^depth
      int depth = 8;
      while (std::pow(pmax, depth) * ifs.mass > tol / 4.0 && depth < 512) ++depth;
      acc += ifs.mass * ifs_interval_mass(ifs, a, b, depth);
    }
  }
  return acc;
}

}  // namespace rajchman
