#pragma once

// Horizon-qualified verdicts for the asymptotic properties of a coefficient
// table:
//
//   Rajchman        mu_hat(k) -> 0 as |k| -> infinity
//   quasi-Rajchman  liminf_n |mu_hat(n)| = 0
//   continuous      (1/(2n+1)) sum_{|l|<=n} |mu_hat(l)| -> 0   (Wiener)
//
// All verdicts are three-valued; a finite table can certify a property up to
// its horizon only, so "holds"/"fails" always carry the horizon and the
// tolerance that produced them.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rajchman/measure.hpp"

namespace rajchman {

enum class Outcome { holds, fails, undecided };

enum class WitnessKind {
  weak_stability,
  coercivity,
  vanishing_coefficients,
  non_vanishing_coefficients,
  mixed,  // merged supersequence containing both flavours
};

std::string to_string(Outcome o);
std::string to_string(WitnessKind k);

// A strictly increasing index list certifying a liminf/limsup claim at a
// given tolerance and horizon.
struct SubsequenceWitness {
  std::vector<long> indices;
  long horizon = 0;
  double tolerance = 0.0;
  WitnessKind kind = WitnessKind::vanishing_coefficients;

  void validate() const;  // structural checks only
};

struct Verdict {
  Outcome outcome = Outcome::undecided;
  double residual = 0.0;  // the decisive max/min proxy
  std::optional<SubsequenceWitness> witness;
  long horizon = 0;
  double tolerance = 0.0;
};

struct ScanOptions {
  int min_witness = 10;  // W: minimum cardinality for existential claims
  long prefix_cut = 1;   // K0 for the quasi-Rajchman "fails" direction
};

// holds  iff max_{tail_start <= |k| <= window} |mu_hat(k)| < eps;
// fails  iff >= W tail entries have |mu_hat| >= eps (non-vanishing witness);
// undecided otherwise. residual is that max.
Verdict rajchman_scan(const FourierTable& t, long tail_start, double eps,
                      ScanOptions opt = {});

// holds with a vanishing-coefficients witness (>= W entries below eps);
// fails only when min_{K0 <= n <= window} |mu_hat(n)| >= eps.
Verdict quasi_rajchman_scan(const FourierTable& t, double eps,
                            ScanOptions opt = {});

// (1/(2n+1)) sum_{|l| <= n} |mu_hat(l)|.
double wiener_mean(const FourierTable& t, long n);

// Structural (atom list) and spectral (Wiener mean) continuity checks, both
// reported; disagreement is surfaced, never reconciled.
struct ContinuityReport {
  Verdict structural;
  Verdict spectral;
  bool agree = false;
};
ContinuityReport continuity_verdict(const Measure& m, const FourierTable& t,
                                    long n, double eps);

// Rank-parity partition into two disjoint witnesses of the same kind.
std::pair<SubsequenceWitness, SubsequenceWitness> nontrivial_split(
    const SubsequenceWitness& w);

// For a continuous non-Rajchman table: a merged nontrivial m-witness
// containing a non-vanishing subsequence (|mu_hat| >= eps_big) and a
// vanishing n-witness (|mu_hat| < eps_small) inside it.
struct Corollary75Witnesses {
  SubsequenceWitness m_witness;  // kind mixed: properly ordered union
  SubsequenceWitness n_witness;  // kind vanishing_coefficients
};
Corollary75Witnesses corollary75_witnesses(const Measure& m,
                                           const FourierTable& t,
                                           double eps_small, double eps_big,
                                           ScanOptions opt = {});

// Recheck a witness's defining inequality against a table.
bool revalidate_witness(const SubsequenceWitness& w, const FourierTable& t);

}  // namespace rajchman
