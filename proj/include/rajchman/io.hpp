#pragma once

// JSON spec ingestion and CSV report emission.
//
// Measure spec:
//   { "atoms": [[alpha, mass], ...],
//     "density": {"kind": "constant", "value": v}
//              | {"kind": "trigpoly", "coeffs": [[m, g], ...]}
//              | {"kind": "samples", "values": [...]}
//              | {"kind": "<registered id>"},
//     "ifs": {"base": m, "digits": [[d, p], ...], "mass": w,
//             "window": {"shift": t, "scale": s}} }
//
// Operator spec:
//   { "kind": "foguel" | "blocks" | "diagonal" | "shift" | "adjoint-shift"
//           | "projection",
//     "J": [...], "blocks": [[size, scale], ...] | "rule": "default",
//     "diag": [...], "dimension": N }
//
// CSV cells use 17-significant-digit scientific notation so identical runs
// are byte-identical.

#include <string>
#include <vector>

#include "rajchman/measure.hpp"
#include "rajchman/operator_lab.hpp"

namespace rajchman {

Measure parse_measure_file(const std::string& path);
Measure parse_measure_text(const std::string& text, const std::string& origin);
std::string canonical_measure_text(const Measure& m);

TruncatedOperator parse_operator_file(const std::string& path);
TruncatedOperator parse_operator_text(const std::string& text,
                                      const std::string& origin);

std::string fmt17(double v);
std::string fmt_indices(const std::vector<long>& idx);  // space-separated

void write_text_file(const std::string& path, const std::string& content);

}  // namespace rajchman
