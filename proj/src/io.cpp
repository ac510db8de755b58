#include "rajchman/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rajchman/errors.hpp"

namespace rajchman {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spec_error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw spec_error(origin + ": " + e.what());
  }
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) throw spec_error(where + ": expected a number");
  return j.get<double>();
}

}  // namespace

// ---------- measures ----------

Measure parse_measure_text(const std::string& text, const std::string& origin) {
  const json spec = parse_json(text, origin);
  if (!spec.is_object()) throw spec_error(origin + ": expected a JSON object");
  Measure m;

  if (spec.contains("atoms")) {
    for (const auto& a : spec["atoms"]) {
      if (!a.is_array() || a.size() != 2)
        throw spec_error(origin + ": atoms entries must be [alpha, mass]");
      m.atoms.emplace_back(number_at(a[0], origin + ": atom alpha"),
                           number_at(a[1], origin + ": atom mass"));
    }
  }

  if (spec.contains("density")) {
    const json& d = spec["density"];
    if (!d.is_object() || !d.contains("kind"))
      throw spec_error(origin + ": density needs a kind");
    const std::string kind = d["kind"].get<std::string>();
    if (kind == "constant") {
      m.density = Density::constant_density(
          number_at(d.at("value"), origin + ": density value"));
    } else if (kind == "trigpoly") {
      std::map<int, double> coeffs;
      for (const auto& c : d.at("coeffs")) {
        if (!c.is_array() || c.size() != 2)
          throw spec_error(origin + ": trigpoly coeffs must be [m, g]");
        coeffs[c[0].get<int>()] = number_at(c[1], origin + ": trigpoly g");
      }
      m.density = Density::trig_poly(std::move(coeffs));
    } else if (kind == "samples") {
      std::vector<double> values;
      for (const auto& v : d.at("values"))
        values.push_back(number_at(v, origin + ": density sample"));
      m.density = Density::from_samples(std::move(values));
    } else {
      m.density = Density::registered(kind);
    }
  }

  if (spec.contains("ifs")) {
    const json& f = spec["ifs"];
    IFSMeasure ifs;
    ifs.base = f.at("base").get<int>();
    ifs.digits.clear();
    for (const auto& dp : f.at("digits")) {
      if (!dp.is_array() || dp.size() != 2)
        throw spec_error(origin + ": ifs digits must be [d, p]");
      ifs.digits.emplace_back(dp[0].get<int>(),
                              number_at(dp[1], origin + ": ifs probability"));
    }
    ifs.mass = f.contains("mass") ? number_at(f["mass"], origin + ": ifs mass")
                                  : 1.0;
    if (f.contains("window")) {
      AffineWindow w;
      w.shift = number_at(f["window"].at("shift"), origin + ": window shift");
      w.scale = number_at(f["window"].at("scale"), origin + ": window scale");
      ifs.window = w;
    }
    m.ifs = ifs;
  }

  try {
    m.validate();
  } catch (const spec_error& e) {
    throw spec_error(origin + ": " + e.what());
  }
  return m;
}

Measure parse_measure_file(const std::string& path) {
  return parse_measure_text(slurp(path), path);
}

std::string canonical_measure_text(const Measure& m) {
  json spec = json::object();
  if (!m.atoms.empty()) {
    json atoms = json::array();
    for (const auto& [alpha, mass] : m.atoms)
      atoms.push_back(json::array({alpha, mass}));
    spec["atoms"] = atoms;
  }
  if (m.density) {
    const Density& d = *m.density;
    json dj = json::object();
    if (!d.expr_id.empty()) {
      dj["kind"] = d.expr_id;
    } else {
      switch (d.kind) {
        case Density::Kind::Constant:
          dj["kind"] = "constant";
          dj["value"] = d.constant;
          break;
        case Density::Kind::TrigPoly: {
          dj["kind"] = "trigpoly";
          json coeffs = json::array();
          for (const auto& [k, g] : d.trig)
            coeffs.push_back(json::array({k, g}));
          dj["coeffs"] = coeffs;
          break;
        }
        case Density::Kind::Samples:
          dj["kind"] = "samples";
          dj["values"] = d.samples;
          break;
      }
    }
    spec["density"] = dj;
  }
  if (m.ifs) {
    const IFSMeasure& f = *m.ifs;
    json fj = json::object();
    fj["base"] = f.base;
    json digits = json::array();
    for (const auto& [d, p] : f.digits) digits.push_back(json::array({d, p}));
    fj["digits"] = digits;
    fj["mass"] = f.mass;
    if (f.window) {
      fj["window"] = json::object(
          {{"shift", f.window->shift}, {"scale", f.window->scale}});
    }
    spec["ifs"] = fj;
  }
  return spec.dump(2) + "\n";
}

// ---------- operators ----------

TruncatedOperator parse_operator_text(const std::string& text,
                                      const std::string& origin) {
  const json spec = parse_json(text, origin);
  if (!spec.is_object() || !spec.contains("kind"))
    throw spec_error(origin + ": operator spec needs a kind");
  TruncatedOperator op;
  const std::string kind = spec["kind"].get<std::string>();
  using Kind = TruncatedOperator::Kind;
  if (kind == "shift") {
    op.kind = Kind::unilateral_shift;
  } else if (kind == "adjoint-shift") {
    op.kind = Kind::adjoint_shift;
  } else if (kind == "projection") {
    op.kind = Kind::sparse_projection;
  } else if (kind == "foguel") {
    op.kind = Kind::foguel_composite;
  } else if (kind == "blocks") {
    op.kind = Kind::block_nilpotent;
  } else if (kind == "diagonal") {
    op.kind = Kind::diagonal;
  } else {
    throw spec_error(origin + ": unknown operator kind '" + kind + "'");
  }

  if (spec.contains("J")) {
    std::vector<long> idx;
    for (const auto& j : spec["J"]) idx.push_back(j.get<long>());
    try {
      op.sparse = SparseSet(std::move(idx));
    } catch (const spec_error& e) {
      throw spec_error(origin + ": " + e.what());
    }
  } else if (op.kind == Kind::foguel_composite ||
             op.kind == Kind::sparse_projection) {
    op.sparse = SparseSet::powers_of_three();
  }

  if (spec.contains("rule")) {
    if (spec["rule"].get<std::string>() != "default")
      throw spec_error(origin + ": only the default block rule is supported");
    op.rule_blocks = true;
  }
  if (spec.contains("blocks")) {
    for (const auto& b : spec["blocks"]) {
      if (!b.is_array() || b.size() != 2)
        throw spec_error(origin + ": blocks entries must be [size, scale]");
      op.blocks.emplace_back(b[0].get<long>(),
                             number_at(b[1], origin + ": block scale"));
    }
  }
  if (op.kind == Kind::block_nilpotent && !op.rule_blocks && op.blocks.empty())
    throw spec_error(origin + ": block operator needs blocks or rule");

  if (spec.contains("diag")) {
    for (const auto& d : spec["diag"])
      op.diag.push_back(number_at(d, origin + ": diag entry"));
  }
  if (op.kind == Kind::diagonal && op.diag.empty())
    throw spec_error(origin + ": diagonal operator needs diag entries");

  if (spec.contains("dimension")) op.dimension = spec["dimension"].get<long>();
  if (op.dimension < 2) throw spec_error(origin + ": dimension must be >= 2");
  return op;
}

TruncatedOperator parse_operator_file(const std::string& path) {
  return parse_operator_text(slurp(path), path);
}

// ---------- formatting ----------

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_indices(const std::vector<long>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(idx[i]);
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw spec_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace rajchman
