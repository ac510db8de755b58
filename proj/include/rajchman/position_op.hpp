#pragma once

// Finite simulation of the position operator U on L^2(T, mu): multiplication
// by z. Test vectors are trigonometric polynomials, so every pairing reduces
// exactly to table entries:
//
//     <U^n psi; phi> = sum_{a,b} c_a conj(d_b) mu_hat(n + a - b).
//
// This drives the Gram matrix G[j][k] = mu_hat(j-k) of {z^k}, the seven
// equivalent weak-stability facets, and homogeneous quasistability witnesses.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "rajchman/classify.hpp"
#include "rajchman/measure.hpp"

namespace rajchman {

// psi(z) = sum_k c_k z^k, finite support over Z.
struct TrigPolynomial {
  std::map<int, cplx> coeffs;

  int min_degree() const;
  int max_degree() const;
  static TrigPolynomial one();
  static TrigPolynomial monomial(int k, cplx c = 1.0);
  // Literal format: "k:re[,im];k:re[,im];..."
  static TrigPolynomial parse(const std::string& literal);
};

cplx matrix_element(const FourierTable& t, long n, const TrigPolynomial& psi,
                    const TrigPolynomial& phi);

// ||psi|| in L^2(T, mu), via <psi; psi>.
double poly_norm(const FourierTable& t, const TrigPolynomial& psi);

// Row-major (2K+1) x (2K+1), G[(j+K)*(2K+1) + (k+K)] = mu_hat(j-k) for
// j, k in [-K, K]. Hermitian Toeplitz, positive semidefinite.
struct GramMatrix {
  int half_window = 0;
  std::vector<cplx> entries;

  int dim() const { return 2 * half_window + 1; }
  const cplx& at(int j, int k) const;  // j, k in [-K, K]
};
GramMatrix gram_matrix(const FourierTable& t, int K);

// The seven pairwise-equivalent weak-stability criteria, each rendered as a
// tail-decay verdict at the same horizon. agree is true when no two decided
// facets disagree.
struct FacetReport {
  std::array<Verdict, 7> facets;
  std::array<std::string, 7> labels;
  bool agree = false;
};
FacetReport weak_stability_facets(const Measure& m, const FourierTable& t,
                                  long horizon, double eps,
                                  long tail_start = 0, ScanOptions opt = {});

// One subsequence witness that drives |<U^{n_j} psi; phi>| < eps ||psi|| ||phi||
// for every pair from the family simultaneously. Requires a continuous
// measure (empty atom list).
Verdict homogeneous_quasistability_witness(
    const Measure& m, const FourierTable& t, double eps,
    const std::vector<TrigPolynomial>& family, ScanOptions opt = {});

// <T x; y> reconstructed from quadratic-form values Q(u) = <T u; u> via
//   <Tx;y> = (Q(x+y) - Q(x-y) + i Q(x+iy) - i Q(x-iy)) / 4.
using QuadraticForm = std::function<cplx(const std::vector<cplx>&)>;
cplx polarisation_reconstruct(const QuadraticForm& q,
                              const std::vector<cplx>& x,
                              const std::vector<cplx>& y);

}  // namespace rajchman
