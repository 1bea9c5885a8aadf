// Copyright 2026 The orbitvol Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORBITVOL_JSON_IO_HPP
#define ORBITVOL_JSON_IO_HPP

#include <json.hpp>

#include "orbitvol/eigdensity.hpp"
#include "orbitvol/exactnum.hpp"
#include "orbitvol/liegeom.hpp"
#include "orbitvol/linalg.hpp"
#include "orbitvol/twoqubit.hpp"

namespace orbitvol::io {

using json = nlohmann::json;

// Matrix schema: {"rows": r, "cols": c, "re": [...], "im": [...]} with
// row-major entries. Density matrices add {"dims": [m, n]}. Malformed input
// raises InputError (or DimensionError for shape problems).

json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json to_json(const DensityMatrix& rho);
/// Requires "dims"; a missing field raises DimensionError.
DensityMatrix density_from_json(const json& j);

/// {"rational": "p/q", "pi_power": k, "approx": float}
json to_json(const ExactVolume& v);
ExactVolume exact_volume_from_json(const json& j);

/// [{"exp": [...], "coeff": "big-int-string"}, ...]
json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);

/// {"estimate": float, "stderr": float, "samples": int, "seed": int}
json to_json(const McEstimate& e);

/// {"value": float, "regular": bool}
json to_json(const OrbitVolume& v);

/// {"locally_diagonalizable": bool, "witness": {...} | null, "method": "..."}
json to_json(const LocalDiagDecision& d);

json to_json(const DiagTriple& t);

}  // namespace orbitvol::io

#endif  // ORBITVOL_JSON_IO_HPP
