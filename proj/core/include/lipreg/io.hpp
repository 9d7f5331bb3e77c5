#pragma once

#include <iosfwd>
#include <string>

#include "lipreg/admm.hpp"
#include "lipreg/dataset.hpp"
#include "lipreg/envelope.hpp"
#include "lipreg/fit.hpp"
#include "lipreg/relu_net.hpp"

namespace lipreg {

// JSON schemas (arrays index-aligned):
//   CPWL:    {"c0": num, "c1": num, "knots": [num...], "coeffs": [num...]}
//   ReLU:    {"K": int, "v": [...], "w": [...], "b": [...], "c0": num, "c1": num}
//   report:  {"z": [...], "iterations": n, "primal_residual": r,
//             "dual_residual": s, "objective": o, "converged": bool}
//   fit:     {"model": CPWL, "z": [...], "metrics": {...}, "solver": report}

std::string to_json(const CpwlFunction& f);
std::string to_json(const ReluNetParams& p);
std::string to_json(const AdmmReport& rep);
std::string to_json(const FitResult& result);
std::string to_json(const std::vector<FitResult>& results);

CpwlFunction cpwl_from_json(const std::string& text);
ReluNetParams relu_from_json(const std::string& text);

/// CSV "x,y" with a header line; rows sorted by x on read. Throws
/// std::runtime_error on malformed input or duplicate abscissas.
DataSet read_xy_csv(std::istream& in);
void write_xy_csv(std::ostream& out, const DataSet& data);

/// CSV "x,lo,hi" of envelope bands over a uniform grid on [from, to].
void write_envelope_csv(std::ostream& out, const InterpolationInstance& inst, int grid_points,
                        double from, double to);

} // namespace lipreg
