#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vortex/moduli.hpp"

namespace vortex {

// A parsed model file. Schema (rationals are "p/q" strings or JSON integers;
// floating-point numbers are rejected):
//
//   {
//     "manifold": {"type": "projective_space", "m": 1, "lambda": "1"},
//     "weights": [[1, 1]],
//     "tau": ["100"],
//     "e2": "1",
//     "bundles": [{"degree": 3}, {"degree": 3}],
//     "principal": [{"degree": 3}],        optional when it can be inferred
//     "constraint": {"degree": 2},         optional
//     "analysis": ["stability", "volume"]  optional; all sections when absent
//   }
//
// Manifold types (lambda defaults to 1 where it is optional):
// projective_space {m, lambda?}, grassmannian {n, k, lambda?},
// hirzebruch {k, lambda, delta}, abelian {lambdas}, generic_pic_z {m, t,
// lambda?, sections?: {"d": r}}, generic_simply_connected {m, vol, entries:
// [{r, slope_vol, c1_squared?, trivial?}]}.
// Bundles: {"degree": d}, {"bidegree": [a, b]}, {"deltas": [...]}, {"table": i}.
struct ModelFile {
  GlsmModel model;
  std::optional<long> constraint_degree;
  std::vector<std::string> analysis;
};

// Throws ParseError with 1-based line and column of the offending value.
ModelFile parse_model(std::string_view text);
// "-" reads standard input.
ModelFile load_model_file(const std::string& path);
// Canonical JSON text; parse_model(model_to_json(f)) reproduces f.
std::string model_to_json(const ModelFile& file);

}  // namespace vortex
