#include "rajchman/operator_lab.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>

#include "rajchman/errors.hpp"

namespace rajchman {

// ---------- SparseSet ----------

SparseSet::SparseSet(std::vector<long> idx) : indices(std::move(idx)) {
  if (indices.empty()) throw spec_error("sparse set: empty");
  long prev = 0;
  for (long j : indices) {
    if (j < 1) throw spec_error("sparse set: entries must be positive");
    if (j <= prev) throw spec_error("sparse set: entries must be strictly increasing");
    if (prev > 0 && 2 * prev >= j)
      throw spec_error("sparse set: sparsity violated (need 2i < j)");
    prev = j;
  }
}

bool SparseSet::contains(long j) const {
  return std::binary_search(indices.begin(), indices.end(), j);
}

SparseSet SparseSet::powers_of_three(long bound) {
  std::vector<long> idx;
  for (long p = 1; p <= bound; p *= 3) idx.push_back(p);
  return SparseSet(std::move(idx));
}

// ---------- shifts ----------

cplx shift_pairing(long n, const Vec& x, const Vec& y) {
  if (n < 0) throw spec_error("shift_pairing: n must be >= 0");
  // <S^n x; y> = sum_k x[k] conj(y[k+n])
  cplx acc = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const std::size_t j = k + static_cast<std::size_t>(n);
    if (j < y.size()) acc += x[k] * std::conj(y[j]);
  }
  return acc;
}

cplx adjoint_shift_pairing(long n, const Vec& x, const Vec& y) {
  if (n < 0) throw spec_error("adjoint_shift_pairing: n must be >= 0");
  // <S*^n x; y> = sum_k x[k+n] conj(y[k])
  cplx acc = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    const std::size_t j = k + static_cast<std::size_t>(n);
    if (j < x.size()) acc += x[j] * std::conj(y[k]);
  }
  return acc;
}

// ---------- Foguel ----------

cplx projection_power_pairing(const SparseSet& J, long n, const Vec& x2,
                              const Vec& y1) {
  if (n < 0) throw spec_error("projection_power_pairing: n must be >= 0");
  // P_n e_k = sum_{i=0}^{n-1} [k+i in J][k+2i >= n-1] e_{k+2i-(n-1)}
  cplx acc = 0.0;
  for (std::size_t k = 0; k < x2.size(); ++k) {
    if (x2[k] == cplx(0.0)) continue;
    for (long i = 0; i < n; ++i) {
      const long kk = static_cast<long>(k);
      if (kk + 2 * i < n - 1) continue;
      if (!J.contains(kk + i)) continue;
      const long target = kk + 2 * i - (n - 1);
      if (target >= 0 && target < static_cast<long>(y1.size()))
        acc += x2[k] * std::conj(y1[static_cast<std::size_t>(target)]);
    }
  }
  return acc;
}

namespace {

long max_support(const FoguelVector& v) {
  long m = 0;
  m = std::max(m, static_cast<long>(v.first.size()));
  m = std::max(m, static_cast<long>(v.second.size()));
  return m;
}

}  // namespace

cplx foguel_pairing(const SparseSet& J, long n, const FoguelVector& x,
                    const FoguelVector& y, std::optional<long> truncation) {
  if (n < 0) throw spec_error("foguel_pairing: n must be >= 0");
  if (truncation) {
    const long margin = n + std::max(max_support(x), max_support(y)) + 1;
    if (*truncation < margin)
      throw resolution_error("foguel_pairing: truncation " +
                             std::to_string(*truncation) +
                             " below exact-tail margin " +
                             std::to_string(margin));
  }
  if (n == 0) {
    return shift_pairing(0, x.first, y.first) +
           shift_pairing(0, x.second, y.second);
  }
  return adjoint_shift_pairing(n, x.first, y.first) +
         projection_power_pairing(J, n, x.second, y.first) +
         shift_pairing(n, x.second, y.second);
}

cplx foguel_adjoint_pairing(const SparseSet& J, long n, const FoguelVector& y,
                            const FoguelVector& x) {
  // F*^n = [[S^n, 0], [P_n*, S*^n]]; <F*^n y; x> =
  //   <S^n y1; x1> + <P_n* y1; x2> + <S*^n y2; x2>
  // with <P_n* y1; x2> = conj(<P_n x2; y1>).
  if (n == 0) {
    return shift_pairing(0, y.first, x.first) +
           shift_pairing(0, y.second, x.second);
  }
  return shift_pairing(n, y.first, x.first) +
         std::conj(projection_power_pairing(J, n, x.second, y.first)) +
         adjoint_shift_pairing(n, y.second, x.second);
}

SubsequenceWitness foguel_quasistability_scan(const SparseSet& J, const Vec& x2,
                                              const Vec& y1, long horizon,
                                              double eps) {
  SubsequenceWitness w;
  w.horizon = horizon;
  w.tolerance = eps;
  w.kind = WitnessKind::weak_stability;
  for (long n = 1; n <= horizon; ++n)
    if (std::abs(projection_power_pairing(J, n, x2, y1)) < eps)
      w.indices.push_back(n);
  return w;
}

namespace {

// One application of F (resp. F*) on a 2N-coefficient finite section.
void foguel_apply(const SparseSet& J, long N, const Vec& in, Vec& out,
                  bool adjoint) {
  out.assign(static_cast<std::size_t>(2 * N), cplx(0.0));
  auto x1 = [&](long k) { return in[static_cast<std::size_t>(k)]; };
  auto x2 = [&](long k) { return in[static_cast<std::size_t>(N + k)]; };
  if (!adjoint) {
    // F (x1, x2) = (S* x1 + P x2, S x2)
    for (long k = 0; k + 1 < N; ++k) out[static_cast<std::size_t>(k)] = x1(k + 1);
    for (long k = 0; k < N; ++k)
      if (J.contains(k)) out[static_cast<std::size_t>(k)] += x2(k);
    for (long k = 0; k + 1 < N; ++k)
      out[static_cast<std::size_t>(N + k + 1)] = x2(k);
  } else {
    // F* (y1, y2) = (S y1, P y1 + S* y2)
    for (long k = 0; k + 1 < N; ++k)
      out[static_cast<std::size_t>(k + 1)] = x1(k);
    for (long k = 0; k < N; ++k)
      if (J.contains(k)) out[static_cast<std::size_t>(N + k)] = x1(k);
    for (long k = 0; k + 1 < N; ++k)
      out[static_cast<std::size_t>(N + k)] += x2(k + 1);
  }
}

double vec_norm(const Vec& v) {
  double s = 0.0;
  for (const cplx& c : v) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace

double foguel_power_norm(const SparseSet& J, long n, long section) {
  if (n < 0) throw spec_error("foguel_power_norm: n must be >= 0");
  if (n == 0) return 1.0;
  // power iteration on (F^n)* F^n with a fixed-seed start
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec v(static_cast<std::size_t>(2 * section));
  for (auto& c : v) c = cplx(u(rng), u(rng));
  double nv = vec_norm(v);
  for (auto& c : v) c /= nv;

  Vec tmp;
  double sigma = 0.0;
  for (int it = 0; it < 200; ++it) {
    Vec w = v;
    for (long i = 0; i < n; ++i) {
      foguel_apply(J, section, w, tmp, false);
      w.swap(tmp);
    }
    const double forward = vec_norm(w);
    for (long i = 0; i < n; ++i) {
      foguel_apply(J, section, w, tmp, true);
      w.swap(tmp);
    }
    const double back = vec_norm(w);
    if (back == 0.0) return 0.0;
    for (auto& c : w) c /= back;
    v.swap(w);
    const double next = forward;  // ||F^n v|| for the current unit v
    if (it > 4 && std::abs(next - sigma) < 1e-12 * std::max(1.0, next)) {
      sigma = next;
      break;
    }
    sigma = next;
  }
  return sigma;
}

// ---------- block-nilpotent ----------

BlockOperator block_unbounded_quasistable(std::function<double(long)> scale,
                                          std::function<long(long)> size) {
  BlockOperator op;
  op.size = size ? std::move(size) : [](long k) { return k + 1; };
  op.scale = scale ? std::move(scale)
                   : [](long k) {
                       return std::pow(static_cast<double>(k),
                                       1.0 / static_cast<double>(k));
                     };
  // certify unbounded growth of the peak block norms scale(k)^{size(k)-1}
  double prev = 0.0;
  for (long k = 1; k <= 64; ++k) {
    const long sz = op.size(k);
    if (sz < 2) throw spec_error("block operator: block sizes must be >= 2");
    if (k > 1 && op.size(k) <= op.size(k - 1))
      throw spec_error("block operator: sizes must be strictly increasing");
    const double peak = std::pow(op.scale(k), static_cast<double>(sz - 1));
    if (peak + 1e-12 < prev)
      throw spec_error("block operator: peak block norms must be nondecreasing");
    prev = peak;
  }
  if (prev < 32.0)
    throw spec_error("block operator: scale rule produces bounded norms");
  return op;
}

double block_power_norm(const BlockOperator& op, long n) {
  if (n < 0) throw spec_error("block_power_norm: n must be >= 0");
  if (n == 0) return 1.0;
  // ||block_k^n|| = scale(k)^n when size(k) > n, else 0; scale(k)^n is
  // decreasing in k past k = e, so scanning a short range above the first
  // alive block reaches the supremum.
  double best = 0.0;
  long k0 = 1;
  while (op.size(k0) <= n) ++k0;
  for (long k = k0; k <= k0 + 64; ++k)
    best = std::max(best, std::pow(op.scale(k), static_cast<double>(n)));
  return best;
}

double diagonal_power_norm(const std::vector<double>& diag, long n) {
  if (n < 0) throw spec_error("diagonal_power_norm: n must be >= 0");
  double sup = 0.0;
  for (double d : diag) sup = std::max(sup, std::abs(d));
  return std::pow(sup, static_cast<double>(n));
}

BlockVector block_apply_power(const BlockOperator& op, const BlockVector& x,
                              long n) {
  if (n < 0) throw spec_error("block_apply_power: n must be >= 0");
  BlockVector out;
  for (const auto& [k, coeffs] : x.parts) {
    const long sz = op.size(k);
    if (static_cast<long>(coeffs.size()) != sz)
      throw spec_error("block vector: coefficient length must match block size");
    if (n >= sz) continue;  // block is nilpotent of index size(k)
    // (s J)^n moves e_i to s^n e_{i-n} (J = down-shift within the block)
    const double sn = std::pow(op.scale(k), static_cast<double>(n));
    Vec v(static_cast<std::size_t>(sz), cplx(0.0));
    bool nonzero = false;
    for (long i = n; i < sz; ++i) {
      v[static_cast<std::size_t>(i - n)] =
          sn * coeffs[static_cast<std::size_t>(i)];
      if (v[static_cast<std::size_t>(i - n)] != cplx(0.0)) nonzero = true;
    }
    if (nonzero || n == 0) out.parts.emplace_back(k, std::move(v));
  }
  return out;
}

double block_vector_norm(const BlockVector& x) {
  double s = 0.0;
  for (const auto& [k, v] : x.parts)
    for (const cplx& c : v) s += std::norm(c);
  return std::sqrt(s);
}

double block_vector_sup(const BlockVector& x) {
  double s = 0.0;
  for (const auto& [k, v] : x.parts)
    for (const cplx& c : v) s = std::max(s, std::abs(c));
  return s;
}

DisjointnessReport theorem43_disjointness(const BlockOperator& op,
                                          const BlockVector& x0, long horizon,
                                          double eps, double M) {
  DisjointnessReport report;
  report.horizon = horizon;
  for (long n = 1; n <= horizon; ++n) {
    const BlockVector y = block_apply_power(op, x0, n);
    if (block_vector_norm(y) > M) report.coercive.push_back(n);
    if (block_vector_sup(y) < eps) report.stable.push_back(n);
  }
  std::set_intersection(report.coercive.begin(), report.coercive.end(),
                        report.stable.begin(), report.stable.end(),
                        std::back_inserter(report.common));
  return report;
}

// ---------- unified power norm ----------

double power_norm(const TruncatedOperator& op, long n) {
  if (n < 0) throw spec_error("power_norm: n must be >= 0");
  using Kind = TruncatedOperator::Kind;
  switch (op.kind) {
    case Kind::unilateral_shift:
    case Kind::adjoint_shift:
      return 1.0;  // isometry / coisometry
    case Kind::sparse_projection:
      return 1.0;  // idempotent
    case Kind::diagonal:
      return diagonal_power_norm(op.diag, n);
    case Kind::block_nilpotent: {
      if (op.rule_blocks)
        return block_power_norm(block_unbounded_quasistable(), n);
      if (n == 0) return 1.0;
      double best = 0.0;
      for (const auto& [sz, sc] : op.blocks)
        if (sz > n) best = std::max(best, std::pow(sc, static_cast<double>(n)));
      return best;
    }
    case Kind::foguel_composite: {
      if (!op.sparse) throw spec_error("power_norm: foguel needs a sparse set");
      return foguel_power_norm(*op.sparse, n, op.dimension);
    }
  }
  throw invariant_error("power_norm: unknown kind");
}

}  // namespace rajchman
