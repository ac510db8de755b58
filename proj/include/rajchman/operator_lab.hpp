#pragma once

// Exact simulation of banded counterexample operators on l^2:
//
//   * the Foguel operator F = [[S*, P], [0, S]] with P the projection onto
//     span{e_j : j in J} for a sparse set J (i, j in J, i < j implies 2i < j);
//   * block-nilpotent operators (scaled Jordan cells of growing size) that
//     are power unbounded yet annihilate every finitely supported vector;
//   * diagonal operators and plain shifts.
//
// For finitely supported vectors all pairings are computed symbolically from
// the band structure, so the results are exact in infinite dimensions; dense
// finite sections exist only as independent oracles in the tests.

#include <functional>
#include <optional>
#include <vector>

#include "rajchman/classify.hpp"
#include "rajchman/measure.hpp"

namespace rajchman {

using Vec = std::vector<cplx>;  // finitely supported, index = basis position

// Sparse index set with the Foguel admissibility property.
struct SparseSet {
  std::vector<long> indices;  // strictly increasing, >= 1

  explicit SparseSet(std::vector<long> idx);
  bool contains(long j) const;
  // {3^k : k >= 0} up to the given bound.
  static SparseSet powers_of_three(long bound = 100000000L);
};

struct FoguelVector {
  Vec first;   // component in the upper copy of H
  Vec second;  // component in the lower copy
};

// <S^n x; y> and <S*^n x; y> for the unilateral shift S e_k = e_{k+1}.
cplx shift_pairing(long n, const Vec& x, const Vec& y);
cplx adjoint_shift_pairing(long n, const Vec& x, const Vec& y);

// <P_n x2; y1> with P_n = sum_{i=0}^{n-1} S*^{n-1-i} P S^i; applied per
// basis element through the index rule, never materialised.
cplx projection_power_pairing(const SparseSet& J, long n, const Vec& x2,
                              const Vec& y1);

// <F^n x; y> via the three-term decomposition
//   <F^n x; y> = <S*^n x1; y1> + <P_n x2; y1> + <S^n x2; y2>.
// If a truncation dimension is supplied it must leave exact-tail margin
// (>= n + max support + 1), otherwise the call is rejected.
cplx foguel_pairing(const SparseSet& J, long n, const FoguelVector& x,
                    const FoguelVector& y,
                    std::optional<long> truncation = std::nullopt);

// <F*^n y; x>, assembled from the adjoint block structure.
cplx foguel_adjoint_pairing(const SparseSet& J, long n, const FoguelVector& y,
                            const FoguelVector& x);

// All n <= horizon with |<P_n x2; y1>| < eps.
SubsequenceWitness foguel_quasistability_scan(const SparseSet& J, const Vec& x2,
                                              const Vec& y1, long horizon,
                                              double eps);

// Finite-section spectral norm ||F^n|| at the given section size of H,
// via power iteration on (F^n)* F^n. A lower bound for the true norm.
double foguel_power_norm(const SparseSet& J, long n, long section);

// Direct sum of scaled Jordan cells: block k (k >= 1) is a strictly
// upper-triangular shift of size size(k) scaled by scale(k). The default
// rule size(k) = k+1, scale(k) = k^{1/k} makes the peak block norm
// ||block_k^{size-1}|| equal k exactly, so sup_n ||T^n|| = infinity while
// every block is nilpotent.
struct BlockOperator {
  std::function<long(long)> size;
  std::function<double(long)> scale;
};

BlockOperator block_unbounded_quasistable(
    std::function<double(long)> scale = {}, std::function<long(long)> size = {});

// Exact ||T^n|| for the block rule: sup_{k : size(k) > n} scale(k)^n.
double block_power_norm(const BlockOperator& op, long n);

// Exact ||T^n|| for a diagonal operator: (sup |d_k|)^n.
double diagonal_power_norm(const std::vector<double>& diag, long n);

// Vector supported on finitely many blocks.
struct BlockVector {
  // (block index k, coefficients over that block's basis, length size(k))
  std::vector<std::pair<long, Vec>> parts;
};

// T^n x, exact (each block power is again a scaled shift within the block).
BlockVector block_apply_power(const BlockOperator& op, const BlockVector& x,
                              long n);
double block_vector_norm(const BlockVector& x);     // l^2
double block_vector_sup(const BlockVector& x);      // max |<.; e_j>|

// Coercivity set C = {n <= horizon : ||T^n x0|| > M} against the
// weak-stability set S = {n <= horizon : sup_j |<T^n x0; e_j>| < eps}.
struct DisjointnessReport {
  std::vector<long> coercive;
  std::vector<long> stable;
  std::vector<long> common;
  long horizon = 0;
};
DisjointnessReport theorem43_disjointness(const BlockOperator& op,
                                          const BlockVector& x0, long horizon,
                                          double eps, double M);

// Unified operator description used by the CLI and the JSON envelope.
struct TruncatedOperator {
  enum class Kind {
    unilateral_shift,
    adjoint_shift,
    sparse_projection,
    foguel_composite,
    block_nilpotent,
    diagonal,
  };
  Kind kind = Kind::unilateral_shift;
  std::optional<SparseSet> sparse;                  // projection / foguel
  std::vector<std::pair<long, double>> blocks;      // explicit (size, scale)
  bool rule_blocks = false;                         // default unbounded rule
  std::vector<double> diag;
  long dimension = 600;                             // finite-section size
};

// ||T^n||: exact for diagonal and block kinds, finite-section for Foguel,
// exactly 1 for shifts and projections.
double power_norm(const TruncatedOperator& op, long n);

}  // namespace rajchman
