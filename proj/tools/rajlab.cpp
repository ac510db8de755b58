// rajlab: Fourier coefficients of circle measures, Rajchman/quasi-Rajchman
// classification with explicit subsequence witnesses, and finite simulations
// of the position operator and related counterexample operators.
//
// Exit codes: 0 success (verdicts are data, not errors), 2 input error,
// 3 resolution error, 4 internal invariant breach.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rajchman/classify.hpp"
#include "rajchman/errors.hpp"
#include "rajchman/io.hpp"
#include "rajchman/measure.hpp"
#include "rajchman/operator_lab.hpp"
#include "rajchman/position_op.hpp"

namespace {

using namespace rajchman;

struct RunConfig {
  std::string input;
  std::string output;         // empty = stdout
  int window = 64;            // K
  long horizon = 1000;        // N
  double eps = 1e-8;
  double eps_small = 1e-6;
  double eps_big = 0.0;       // 0 = half the observed tail supremum
  long quadrature_points = 0; // 0 = default rule
  std::string format = "csv";
  bool dump_canonical = false;
  long wiener_n = 0;          // 0 = window
  std::string x2 = "e0";
  std::string y1 = "e0";
  double level_m = 10.0;      // coercivity level M
};

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.output.empty())
    std::cout << content;
  else
    write_text_file(cfg.output, content);
}

Vec parse_vector(const std::string& literal) {
  if (!literal.empty() && literal[0] == 'e') {
    const long k = std::stol(literal.substr(1));
    if (k < 0) throw spec_error("vector literal: negative basis index");
    Vec v(static_cast<std::size_t>(k + 1), cplx(0.0));
    v.back() = 1.0;
    return v;
  }
  const TrigPolynomial p = TrigPolynomial::parse(literal);
  if (p.min_degree() < 0)
    throw spec_error("vector literal: indices must be >= 0");
  Vec v(static_cast<std::size_t>(p.max_degree() + 1), cplx(0.0));
  for (const auto& [k, c] : p.coeffs) v[static_cast<std::size_t>(k)] = c;
  return v;
}

std::string verdict_row(const std::string& property, const Verdict& v) {
  std::ostringstream row;
  row << property << ',' << to_string(v.outcome) << ',' << fmt17(v.residual)
      << ',' << v.horizon << ',' << fmt17(v.tolerance) << ','
      << (v.witness ? fmt_indices(v.witness->indices) : "");
  row << '\n';
  return row.str();
}

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["outcome"] = to_string(v.outcome);
  j["residual"] = v.residual;
  j["horizon"] = v.horizon;
  j["tolerance"] = v.tolerance;
  if (v.witness) j["witness"] = v.witness->indices;
  return j;
}

int cmd_fourier(const RunConfig& cfg) {
  const Measure m = parse_measure_file(cfg.input);
  if (cfg.dump_canonical) {
    emit(cfg, canonical_measure_text(m));
    return 0;
  }
  const FourierTable t = fourier_table(m, cfg.window, cfg.quadrature_points);
  std::ostringstream out;
  out << "k,re,im,abs,error_bound\n";
  for (long k = -t.window; k <= t.window; ++k) {
    const cplx v = t.at(k);
    out << k << ',' << fmt17(v.real()) << ',' << fmt17(v.imag()) << ','
        << fmt17(std::abs(v)) << ',' << fmt17(t.error_bound) << '\n';
  }
  emit(cfg, out.str());
  return 0;
}

int cmd_classify(const RunConfig& cfg) {
  const Measure m = parse_measure_file(cfg.input);
  const FourierTable t = fourier_table(m, cfg.window, cfg.quadrature_points);
  const long n = cfg.wiener_n > 0 ? cfg.wiener_n : cfg.window;

  const Verdict raj = rajchman_scan(t, 1, std::max(cfg.eps, 1e-300));
  const Verdict quasi = quasi_rajchman_scan(t, std::max(cfg.eps, 1e-300));
  const ContinuityReport cont = continuity_verdict(m, t, n, 0.1);

  if (cfg.format == "json") {
    nlohmann::json j;
    j["rajchman"] = verdict_json(raj);
    j["quasi-rajchman"] = verdict_json(quasi);
    j["continuous-structural"] = verdict_json(cont.structural);
    j["continuous-spectral"] = verdict_json(cont.spectral);
    j["continuity-agreement"] = cont.agree;
    j["wiener-mean"] = wiener_mean(t, n);
    emit(cfg, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "property,outcome,residual,horizon,tolerance,witness-indices\n";
  out << verdict_row("rajchman", raj);
  out << verdict_row("quasi-rajchman", quasi);
  out << verdict_row("continuous-structural", cont.structural);
  out << verdict_row("continuous-spectral", cont.spectral);
  out << "continuity-agreement," << (cont.agree ? "true" : "false") << ",,,,\n";
  out << "wiener-mean," << fmt17(wiener_mean(t, n)) << ",," << n << ",,\n";
  emit(cfg, out.str());
  return 0;
}

int cmd_gram(const RunConfig& cfg) {
  const Measure m = parse_measure_file(cfg.input);
  const FourierTable t = fourier_table(m, 2 * cfg.window, cfg.quadrature_points);
  const GramMatrix g = gram_matrix(t, cfg.window);
  std::ostringstream out;
  out << "j,k,re,im\n";
  for (int j = -g.half_window; j <= g.half_window; ++j)
    for (int k = -g.half_window; k <= g.half_window; ++k) {
      const cplx v = g.at(j, k);
      out << j << ',' << k << ',' << fmt17(v.real()) << ','
          << fmt17(v.imag()) << '\n';
    }
  emit(cfg, out.str());
  return 0;
}

int cmd_facets(const RunConfig& cfg) {
  const Measure m = parse_measure_file(cfg.input);
  const FourierTable t =
      fourier_table(m, static_cast<int>(cfg.horizon + 8), cfg.quadrature_points);
  const FacetReport report =
      weak_stability_facets(m, t, cfg.horizon, std::max(cfg.eps, 1e-300));
  std::ostringstream out;
  out << "facet,outcome,residual,horizon,tolerance\n";
  for (std::size_t i = 0; i < report.facets.size(); ++i) {
    const Verdict& v = report.facets[i];
    out << '"' << report.labels[i] << "\"," << to_string(v.outcome) << ','
        << fmt17(v.residual) << ',' << v.horizon << ',' << fmt17(v.tolerance)
        << '\n';
  }
  out << "agreement," << (report.agree ? "true" : "false") << ",,,\n";
  emit(cfg, out.str());
  return 0;
}

int cmd_foguel(const RunConfig& cfg) {
  SparseSet J = SparseSet::powers_of_three();
  if (!cfg.input.empty()) {
    const TruncatedOperator op = parse_operator_file(cfg.input);
    if (op.sparse) J = *op.sparse;
  }
  const Vec x2 = parse_vector(cfg.x2);
  const Vec y1 = parse_vector(cfg.y1);
  const SubsequenceWitness w =
      foguel_quasistability_scan(J, x2, y1, cfg.horizon, cfg.eps);
  std::ostringstream out;
  out << "n,value,in_witness\n";
  for (long n = 1; n <= cfg.horizon; ++n) {
    const double v = std::abs(projection_power_pairing(J, n, x2, y1));
    const bool member =
        std::binary_search(w.indices.begin(), w.indices.end(), n);
    out << n << ',' << fmt17(v) << ',' << (member ? 1 : 0) << '\n';
  }
  emit(cfg, out.str());
  return 0;
}

int cmd_blocks(const RunConfig& cfg) {
  BlockOperator op = block_unbounded_quasistable();
  // x0 spanning blocks 1..5, bottom basis vector of each block
  BlockVector x0;
  for (long k = 1; k <= 5; ++k) {
    Vec v(static_cast<std::size_t>(op.size(k)), cplx(0.0));
    v.back() = 1.0;
    x0.parts.emplace_back(k, std::move(v));
  }
  const DisjointnessReport report =
      theorem43_disjointness(op, x0, cfg.horizon, cfg.eps, cfg.level_m);
  std::ostringstream out;
  out << "n,power_norm,orbit_norm,coercive,stable\n";
  for (long n = 1; n <= std::min<long>(cfg.horizon, 64); ++n) {
    const BlockVector y = block_apply_power(op, x0, n);
    const bool c = std::binary_search(report.coercive.begin(),
                                      report.coercive.end(), n);
    const bool s =
        std::binary_search(report.stable.begin(), report.stable.end(), n);
    out << n << ',' << fmt17(block_power_norm(op, n)) << ','
        << fmt17(block_vector_norm(y)) << ',' << (c ? 1 : 0) << ','
        << (s ? 1 : 0) << '\n';
  }
  out << "common," << fmt_indices(report.common) << ",,,\n";
  emit(cfg, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier coefficients and weak-stability experiments for "
               "finite positive measures on the unit circle"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--in", cfg.input, "input spec file (JSON)");
    if (needs_input) in->required();
    sub->add_option("--out", cfg.output, "output file (default stdout)");
    sub->add_option("--K", cfg.window, "coefficient window");
    sub->add_option("--horizon", cfg.horizon, "scan horizon");
    sub->add_option("--eps", cfg.eps, "tolerance");
    sub->add_option("--quad", cfg.quadrature_points,
                    "quadrature points (power of two)");
    sub->add_option("--format", cfg.format, "csv or json");
  };

  auto* fourier = app.add_subcommand("fourier", "coefficient table");
  add_common(fourier, true);
  fourier->add_flag("--dump-canonical", cfg.dump_canonical,
                    "re-emit the canonical measure spec instead");

  auto* classify = app.add_subcommand("classify", "classification verdicts");
  add_common(classify, true);
  classify->add_option("--wiener-n", cfg.wiener_n, "Wiener mean cutoff");

  auto* gram = app.add_subcommand("gram", "Gram matrix of {z^k}");
  add_common(gram, true);

  auto* facets = app.add_subcommand("facets", "weak-stability facet report");
  add_common(facets, true);

  auto* foguel = app.add_subcommand("foguel", "Foguel quasistability scan");
  add_common(foguel, false);
  foguel->add_option("--x2", cfg.x2, "lower component of x (e<k> or k:re,im;...)");
  foguel->add_option("--y1", cfg.y1, "upper component of y");

  auto* blocks = app.add_subcommand("blocks", "block-nilpotent disjointness");
  add_common(blocks, false);
  blocks->add_option("--M", cfg.level_m, "coercivity level");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fourier->parsed()) return cmd_fourier(cfg);
    if (classify->parsed()) return cmd_classify(cfg);
    if (gram->parsed()) return cmd_gram(cfg);
    if (facets->parsed()) return cmd_facets(cfg);
    if (foguel->parsed()) return cmd_foguel(cfg);
    if (blocks->parsed()) return cmd_blocks(cfg);
  } catch (const rajchman::resolution_error& e) {
    std::cerr << "resolution error: " << e.what() << "\n";
    return 3;
  } catch (const rajchman::spec_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
