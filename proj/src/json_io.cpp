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

#include "orbitvol/json_io.hpp"

#include <string>
#include <vector>

#include "orbitvol/errors.hpp"

namespace orbitvol::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get_as(const json& j, const char* key) {
  try {
    return require(j, key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

json to_json(const ComplexMatrix& m) {
  std::vector<double> re;
  std::vector<double> im;
  re.reserve(static_cast<std::size_t>(m.size()));
  im.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const auto rows = get_as<long>(j, "rows");
  const auto cols = get_as<long>(j, "cols");
  if (rows < 1 || cols < 1) throw DimensionError("matrix: rows and cols must be positive");
  const auto re = get_as<std::vector<double>>(j, "re");
  // "im" may be omitted for real matrices.
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = get_as<std::vector<double>>(j, "im");
  const auto count = static_cast<std::size_t>(rows * cols);
  if (re.size() != count || im.size() != count) {
    throw DimensionError("matrix: expected " + std::to_string(count) + " entries");
  }
  ComplexMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    for (long c = 0; c < cols; ++c) {
      const auto k = static_cast<std::size_t>(i * cols + c);
      m(i, c) = cplx(re[k], im[k]);
    }
  }
  return m;
}

json to_json(const DensityMatrix& rho) {
  json j = to_json(rho.matrix());
  j["dims"] = {rho.dims().m, rho.dims().n};
  return j;
}

DensityMatrix density_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dims")) {
    throw DimensionError("density matrix: missing 'dims' metadata");
  }
  const auto dims = get_as<std::vector<int>>(j, "dims");
  if (dims.size() != 2) throw DimensionError("density matrix: 'dims' must be [m, n]");
  return DensityMatrix(matrix_from_json(j), {dims[0], dims[1]});
}

json to_json(const ExactVolume& v) {
  return json{{"rational", to_string(v.coeff())},
              {"pi_power", v.pi_power()},
              {"approx", v.approx()}};
}

ExactVolume exact_volume_from_json(const json& j) {
  return ExactVolume(parse_rational(get_as<std::string>(j, "rational")),
                     get_as<int>(j, "pi_power"));
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(json{{"exp", e}, {"coeff", to_string(c)}});
  }
  return terms;
}

MultiPoly poly_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw InputError("polynomial: expected a non-empty array of terms");
  }
  const auto first = get_as<Exponent>(j.front(), "exp");
  MultiPoly p(static_cast<int>(first.size()));
  for (const auto& term : j) {
    const auto e = get_as<Exponent>(term, "exp");
    BigInt c;
    if (c.set_str(get_as<std::string>(term, "coeff"), 10) != 0) {
      throw InputError("polynomial: bad coefficient");
    }
    p.add_term(e, c);
  }
  return p;
}

json to_json(const McEstimate& e) {
  return json{{"estimate", e.estimate},
              {"stderr", e.std_error},
              {"samples", e.samples},
              {"seed", e.seed}};
}

json to_json(const OrbitVolume& v) { return json{{"value", v.value}, {"regular", v.regular}}; }

json to_json(const DiagTriple& t) {
  return json{{"a_z", t.a_z}, {"b_z", t.b_z}, {"r_zz", t.r_zz}};
}

json to_json(const LocalDiagDecision& d) {
  return json{{"locally_diagonalizable", d.locally_diagonalizable},
              {"witness", d.witness ? to_json(*d.witness) : json(nullptr)},
              {"method", std::string(to_string(d.method))}};
}

}  // namespace orbitvol::io
