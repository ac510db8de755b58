#include "rajchman/position_op.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rajchman/errors.hpp"

namespace rajchman {

// ---------- TrigPolynomial ----------

int TrigPolynomial::min_degree() const {
  return coeffs.empty() ? 0 : coeffs.begin()->first;
}

int TrigPolynomial::max_degree() const {
  return coeffs.empty() ? 0 : coeffs.rbegin()->first;
}

TrigPolynomial TrigPolynomial::one() { return monomial(0); }

TrigPolynomial TrigPolynomial::monomial(int k, cplx c) {
  TrigPolynomial p;
  p.coeffs[k] = c;
  return p;
}

TrigPolynomial TrigPolynomial::parse(const std::string& literal) {
  TrigPolynomial p;
  std::stringstream terms(literal);
  std::string term;
  while (std::getline(terms, term, ';')) {
    if (term.empty()) continue;
    const auto colon = term.find(':');
    if (colon == std::string::npos)
      throw spec_error("polynomial literal: expected k:re[,im] in '" + term + "'");
    try {
      const int k = std::stoi(term.substr(0, colon));
      const std::string value = term.substr(colon + 1);
      const auto comma = value.find(',');
      double re = 0.0, im = 0.0;
      if (comma == std::string::npos) {
        re = std::stod(value);
      } else {
        re = std::stod(value.substr(0, comma));
        im = std::stod(value.substr(comma + 1));
      }
      p.coeffs[k] += cplx(re, im);
    } catch (const std::logic_error&) {
      throw spec_error("polynomial literal: bad number in '" + term + "'");
    }
  }
  if (p.coeffs.empty())
    throw spec_error("polynomial literal: no terms in '" + literal + "'");
  return p;
}

// ---------- pairings ----------

cplx matrix_element(const FourierTable& t, long n, const TrigPolynomial& psi,
                    const TrigPolynomial& phi) {
  if (psi.coeffs.empty() || phi.coeffs.empty()) return 0.0;
  const long reach =
      std::max(std::labs(n + psi.max_degree() - phi.min_degree()),
               std::labs(n + psi.min_degree() - phi.max_degree()));
  if (reach > t.window)
    throw resolution_error("matrix_element: pairing needs window >= " +
                           std::to_string(reach) + ", table has " +
                           std::to_string(t.window));
  cplx acc = 0.0;
  for (const auto& [a, c] : psi.coeffs)
    for (const auto& [b, d] : phi.coeffs)
      acc += c * std::conj(d) * t.at(n + a - b);
  return acc;
}

double poly_norm(const FourierTable& t, const TrigPolynomial& psi) {
  const double sq = matrix_element(t, 0, psi, psi).real();
  return std::sqrt(std::max(sq, 0.0));
}

// ---------- Gram matrix ----------

const cplx& GramMatrix::at(int j, int k) const {
  const int K = half_window;
  if (std::abs(j) > K || std::abs(k) > K)
    throw spec_error("gram: index outside [-K, K]");
  return entries[static_cast<std::size_t>((j + K) * dim() + (k + K))];
}

GramMatrix gram_matrix(const FourierTable& t, int K) {
  if (2 * K > t.window)
    throw resolution_error("gram_matrix: needs window >= 2K");
  GramMatrix g;
  g.half_window = K;
  const int n = g.dim();
  g.entries.resize(static_cast<std::size_t>(n) * n);
  for (int j = -K; j <= K; ++j)
    for (int k = -K; k <= K; ++k)
      g.entries[static_cast<std::size_t>((j + K) * n + (k + K))] = t.at(j - k);
  return g;
}

// ---------- facets ----------

namespace {

// Tail-decay scan over an index-indexed value, same three-valued semantics
// as rajchman_scan.
Verdict decay_scan(const std::function<double(long)>& value, long tail_start,
                   long horizon, double eps, const ScanOptions& opt) {
  double residual = 0.0;
  std::vector<long> big;
  for (long k = tail_start; k <= horizon; ++k) {
    const double v = value(k);
    residual = std::max(residual, v);
    if (v >= eps) big.push_back(k);
  }
  Verdict verdict;
  verdict.residual = residual;
  verdict.horizon = horizon;
  verdict.tolerance = eps;
  if (residual < eps) {
    verdict.outcome = Outcome::holds;
  } else if (static_cast<int>(big.size()) >= opt.min_witness) {
    verdict.outcome = Outcome::fails;
    SubsequenceWitness w;
    w.indices = std::move(big);
    w.horizon = horizon;
    w.tolerance = eps;
    w.kind = WitnessKind::non_vanishing_coefficients;
    verdict.witness = std::move(w);
  } else {
    verdict.outcome = Outcome::undecided;
  }
  return verdict;
}

}  // namespace

FacetReport weak_stability_facets(const Measure& m, const FourierTable& t,
                                  long horizon, double eps, long tail_start,
                                  ScanOptions opt) {
  m.validate();
  if (tail_start <= 0) tail_start = std::max<long>(1, horizon / 10);

  const TrigPolynomial unit = TrigPolynomial::one();
  // (f): 1 + z/2 has no zeros on the circle
  TrigPolynomial psi_f;
  psi_f.coeffs[0] = 1.0;
  psi_f.coeffs[1] = 0.5;
  // (d): fixed positive bounded density multiplier 1 + cos(2 pi a)/2
  TrigPolynomial g_d;
  g_d.coeffs[-1] = 0.25;
  g_d.coeffs[0] = 1.0;
  g_d.coeffs[1] = 0.25;
  // (b)/(c): nonnegative trig-polynomial squares |q|^2 via <U^k q; q>
  std::vector<TrigPolynomial> squares;
  {
    TrigPolynomial q1;
    q1.coeffs[0] = 1.0;
    q1.coeffs[1] = 0.5;
    TrigPolynomial q2;
    q2.coeffs[0] = 1.0;
    q2.coeffs[1] = -1.0;
    TrigPolynomial q3;
    q3.coeffs[-1] = 0.5;
    q3.coeffs[0] = 1.0;
    q3.coeffs[2] = 0.25;
    squares = {q1, q2, q3};
  }
  // (e): general matrix-element pairs
  std::vector<std::pair<TrigPolynomial, TrigPolynomial>> pairs;
  {
    TrigPolynomial z = TrigPolynomial::monomial(1);
    TrigPolynomial z2 = TrigPolynomial::monomial(2);
    TrigPolynomial onez;
    onez.coeffs[0] = 1.0;
    onez.coeffs[1] = 1.0;
    TrigPolynomial onemz;
    onemz.coeffs[0] = 1.0;
    onemz.coeffs[1] = -1.0;
    pairs = {{psi_f, unit}, {z, z2}, {onez, onemz}};
  }

  const long max_deg = 4;
  if (horizon + max_deg > t.window)
    throw resolution_error("weak_stability_facets: table window too small for horizon");

  auto scaled = [&](const TrigPolynomial& a, const TrigPolynomial& b) {
    return std::max(poly_norm(t, a) * poly_norm(t, b), 1e-30);
  };

  FacetReport report;
  report.labels = {"(a) coefficients vanish",
                   "(b) L^p densities, p >= 1",
                   "(c) L^p densities, some p",
                   "(d) one positive bounded density",
                   "(e) polynomial pairings vanish",
                   "(f) one zero-free psi",
                   "(g) <U^n 1;1> vanishes"};

  // (a)
  report.facets[0] = rajchman_scan(t, tail_start, eps, opt);
  // (b): max over the square family
  report.facets[1] = decay_scan(
      [&](long k) {
        double v = 0.0;
        for (const auto& q : squares)
          v = std::max(v, std::abs(matrix_element(t, k, q, q)) /
                              scaled(q, q));
        return v;
      },
      tail_start, horizon, eps, opt);
  // (c): one square from the family
  report.facets[2] = decay_scan(
      [&](long k) {
        return std::abs(matrix_element(t, k, squares[0], squares[0])) /
               scaled(squares[0], squares[0]);
      },
      tail_start, horizon, eps, opt);
  // (d)
  report.facets[3] = decay_scan(
      [&](long k) {
        return std::abs(matrix_element(t, k, g_d, unit)) / scaled(g_d, unit);
      },
      tail_start, horizon, eps, opt);
  // (e)
  report.facets[4] = decay_scan(
      [&](long k) {
        double v = 0.0;
        for (const auto& [a, b] : pairs)
          v = std::max(v, std::abs(matrix_element(t, k, a, b)) / scaled(a, b));
        return v;
      },
      tail_start, horizon, eps, opt);
  // (f)
  report.facets[5] = decay_scan(
      [&](long k) {
        return std::abs(matrix_element(t, k, psi_f, psi_f)) /
               scaled(psi_f, psi_f);
      },
      tail_start, horizon, eps, opt);
  // (g)
  report.facets[6] = decay_scan(
      [&](long k) { return t.abs_at(k) / std::max(t.abs_at(0), 1e-30); },
      tail_start, horizon, eps, opt);

  report.agree = true;
  for (const auto& a : report.facets)
    for (const auto& b : report.facets)
      if (a.outcome != Outcome::undecided && b.outcome != Outcome::undecided &&
          a.outcome != b.outcome)
        report.agree = false;
  return report;
}

// ---------- homogeneous quasistability ----------

Verdict homogeneous_quasistability_witness(
    const Measure& m, const FourierTable& t, double eps,
    const std::vector<TrigPolynomial>& family, ScanOptions opt) {
  m.validate();
  if (!m.atoms.empty())
    throw spec_error(
        "homogeneous_quasistability_witness: measure is not continuous");

  long max_deg = 0;
  std::vector<double> norms;
  norms.reserve(family.size());
  for (const auto& p : family) {
    max_deg = std::max<long>(max_deg, std::max(std::abs(p.min_degree()),
                                               std::abs(p.max_degree())));
    norms.push_back(std::max(poly_norm(t, p), 1e-30));
  }
  const long horizon = t.window - 2 * max_deg;
  if (horizon < 1)
    throw resolution_error("homogeneous_quasistability_witness: window too small");

  // seed with the psi = 1 scan, then keep indices surviving every pair
  Verdict seed = quasi_rajchman_scan(t, eps, opt);
  std::vector<long> candidates;
  if (seed.witness) {
    for (long n : seed.witness->indices)
      if (n <= horizon) candidates.push_back(n);
  }

  std::vector<long> common;
  for (long n : candidates) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < family.size(); ++i)
      for (std::size_t j = 0; ok && j < family.size(); ++j) {
        const double bound = eps * norms[i] * norms[j];
        if (std::abs(matrix_element(t, n, family[i], family[j])) >= bound)
          ok = false;
      }
    if (ok) common.push_back(n);
  }

  Verdict verdict;
  verdict.horizon = horizon;
  verdict.tolerance = eps;
  verdict.residual = seed.residual;
  if (static_cast<int>(common.size()) >= opt.min_witness) {
    verdict.outcome = Outcome::holds;
    SubsequenceWitness w;
    w.indices = std::move(common);
    w.horizon = horizon;
    w.tolerance = eps;
    w.kind = WitnessKind::weak_stability;
    verdict.witness = std::move(w);
  } else {
    verdict.outcome = Outcome::undecided;
  }
  return verdict;
}

// ---------- polarisation ----------

cplx polarisation_reconstruct(const QuadraticForm& q,
                              const std::vector<cplx>& x,
                              const std::vector<cplx>& y) {
  if (x.size() != y.size())
    throw spec_error("polarisation: dimension mismatch");
  const cplx i(0.0, 1.0);
  auto combine = [&](cplx s) {
    std::vector<cplx> u(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) u[k] = x[k] + s * y[k];
    return u;
  };
  return 0.25 * (q(combine(1.0)) - q(combine(-1.0)) + i * q(combine(i)) -
                 i * q(combine(-i)));
}

}  // namespace rajchman
