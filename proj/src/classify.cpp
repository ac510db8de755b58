#include "rajchman/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rajchman/errors.hpp"

namespace rajchman {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    case Outcome::undecided: return "undecided-at-horizon";
  }
  return "?";
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::weak_stability: return "weak-stability";
    case WitnessKind::coercivity: return "coercivity";
    case WitnessKind::vanishing_coefficients: return "vanishing-coefficients";
    case WitnessKind::non_vanishing_coefficients:
      return "non-vanishing-coefficients";
    case WitnessKind::mixed: return "mixed";
  }
  return "?";
}

void SubsequenceWitness::validate() const {
  long prev = 0;
  for (long n : indices) {
    if (n <= prev) throw spec_error("witness: indices must be strictly increasing");
    if (n > horizon) throw spec_error("witness: index beyond horizon");
    prev = n;
  }
  if (tolerance <= 0.0) throw spec_error("witness: tolerance must be positive");
}

Verdict rajchman_scan(const FourierTable& t, long tail_start, double eps,
                      ScanOptions opt) {
  if (tail_start < 0 || tail_start >= t.window)
    throw spec_error("rajchman_scan: empty tail window");
  if (tail_start == 0) tail_start = 1;

  double residual = 0.0;
  std::vector<long> big;
  for (long k = tail_start; k <= t.window; ++k) {
    const double v = std::max(t.abs_at(k), t.abs_at(-k));
    residual = std::max(residual, v);
    if (v >= eps) big.push_back(k);
  }

  Verdict verdict;
  verdict.residual = residual;
  verdict.horizon = t.window;
  verdict.tolerance = eps;
  if (residual < eps) {
    verdict.outcome = Outcome::holds;
  } else if (static_cast<int>(big.size()) >= opt.min_witness) {
    verdict.outcome = Outcome::fails;
    SubsequenceWitness w;
    w.indices = std::move(big);
    w.horizon = t.window;
    w.tolerance = eps;
    w.kind = WitnessKind::non_vanishing_coefficients;
    verdict.witness = std::move(w);
  } else {
    verdict.outcome = Outcome::undecided;
  }
  return verdict;
}

Verdict quasi_rajchman_scan(const FourierTable& t, double eps,
                            ScanOptions opt) {
  if (t.window < 1) throw spec_error("quasi_rajchman_scan: window must be >= 1");

  std::vector<long> small;
  double tail_min = std::numeric_limits<double>::infinity();
  for (long n = 1; n <= t.window; ++n) {
    const double v = t.abs_at(n);
    if (v < eps) small.push_back(n);
    if (n >= opt.prefix_cut) tail_min = std::min(tail_min, v);
  }

  Verdict verdict;
  verdict.residual = tail_min;
  verdict.horizon = t.window;
  verdict.tolerance = eps;
  if (static_cast<int>(small.size()) >= opt.min_witness) {
    verdict.outcome = Outcome::holds;
    SubsequenceWitness w;
    w.indices = std::move(small);
    w.horizon = t.window;
    w.tolerance = eps;
    w.kind = WitnessKind::vanishing_coefficients;
    verdict.witness = std::move(w);
  } else if (tail_min >= eps) {
    verdict.outcome = Outcome::fails;
  } else {
    verdict.outcome = Outcome::undecided;
  }
  return verdict;
}

double wiener_mean(const FourierTable& t, long n) {
  if (n < 0 || n > t.window)
    throw resolution_error("wiener_mean: n exceeds table window");
  double sum = 0.0;
  for (long l = -n; l <= n; ++l) sum += t.abs_at(l);
  return sum / static_cast<double>(2 * n + 1);
}

ContinuityReport continuity_verdict(const Measure& m, const FourierTable& t,
                                    long n, double eps) {
  ContinuityReport report;

  report.structural.outcome = m.atoms.empty() ? Outcome::holds : Outcome::fails;
  double atom_mass = 0.0;
  for (const auto& [a, w] : m.atoms) atom_mass += w;
  report.structural.residual = atom_mass;
  report.structural.horizon = n;
  report.structural.tolerance = eps;

  const double mean = wiener_mean(t, n);
  report.spectral.outcome = mean < eps ? Outcome::holds : Outcome::undecided;
  // the Wiener mean is a liminf proxy: a large value at finite n never
  // certifies discreteness, so the spectral side cannot say "fails"
  report.spectral.residual = mean;
  report.spectral.horizon = n;
  report.spectral.tolerance = eps;

  report.agree = !(report.structural.outcome == Outcome::fails &&
                   report.spectral.outcome == Outcome::holds) &&
                 !(report.structural.outcome == Outcome::holds &&
                   report.spectral.outcome == Outcome::fails);
  return report;
}

std::pair<SubsequenceWitness, SubsequenceWitness> nontrivial_split(
    const SubsequenceWitness& w) {
  if (w.indices.size() < 2)
    throw spec_error("nontrivial_split: need at least 2 indices");
  SubsequenceWitness even = w, odd = w;
  even.indices.clear();
  odd.indices.clear();
  for (std::size_t r = 0; r < w.indices.size(); ++r)
    (r % 2 == 0 ? even : odd).indices.push_back(w.indices[r]);
  return {even, odd};
}

Corollary75Witnesses corollary75_witnesses(const Measure& m,
                                           const FourierTable& t,
                                           double eps_small, double eps_big,
                                           ScanOptions opt) {
  if (!m.atoms.empty())
    throw spec_error("corollary75: measure is not continuous (has atoms)");

  const Verdict raj = rajchman_scan(t, 1, eps_big, opt);
  if (raj.outcome != Outcome::fails || !raj.witness)
    throw spec_error(
        "corollary75: fails-to-certify, no non-vanishing tail at this horizon");
  const Verdict quasi = quasi_rajchman_scan(t, eps_small, opt);
  if (quasi.outcome != Outcome::holds || !quasi.witness)
    throw spec_error(
        "corollary75: fails-to-certify, no vanishing witness at this horizon");

  Corollary75Witnesses out;
  out.n_witness = *quasi.witness;

  // properly ordered union of the two index sets
  std::vector<long> merged = raj.witness->indices;
  merged.insert(merged.end(), out.n_witness.indices.begin(),
                out.n_witness.indices.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  out.m_witness.indices = std::move(merged);
  out.m_witness.horizon = t.window;
  out.m_witness.tolerance = eps_big;
  out.m_witness.kind = WitnessKind::mixed;
  return out;
}

bool revalidate_witness(const SubsequenceWitness& w, const FourierTable& t) {
  w.validate();
  switch (w.kind) {
    case WitnessKind::vanishing_coefficients:
      for (long n : w.indices)
        if (t.abs_at(n) >= w.tolerance) return false;
      return true;
    case WitnessKind::non_vanishing_coefficients:
      for (long n : w.indices)
        if (t.abs_at(n) < w.tolerance) return false;
      return true;
    case WitnessKind::mixed:
      // a merged witness certifies containment, not a per-entry bound
      return true;
    default:
      return true;
  }
}

}  // namespace rajchman
