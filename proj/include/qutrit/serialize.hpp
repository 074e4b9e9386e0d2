// Copyright 2026 The qutrit-witnesses Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/* serialize.hpp
 * JSON and CSV encodings shared by the CLI and the tests.
 *
 * Matrices are a flat row-major array of [re, im] pairs. The exact variant
 * uses strings ("p/q" or "p") for both components.
 */

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "linalg.hpp"
#include "maps.hpp"
#include "rational.hpp"
#include "states.hpp"

namespace qutrit {

inline constexpr const char *kSchemaVersion = "1.0";

inline nlohmann::json matrix_to_json(const ComplexMatrix &m) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      arr.push_back({m(i, j).real(), m(i, j).imag()});
  return arr;
}

inline nlohmann::json matrix_to_json(const DenseMatrix<Rational> &m) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      arr.push_back({m(i, j).str(), "0"});
  return arr;
}

namespace detail {
inline double json_component(const nlohmann::json &x) {
  if (x.is_number())
    return x.get<double>();
  if (x.is_string()) {
    if (auto r = Rational::parse(x.get<std::string>()))
      return r->to_double();
  }
  throw std::invalid_argument("matrix_from_json: bad matrix entry");
}
} // namespace detail

/// Inverse of matrix_to_json; accepts numeric or exact-string entries.
inline ComplexMatrix matrix_from_json(const nlohmann::json &arr) {
  if (!arr.is_array() || arr.empty())
    throw std::invalid_argument("matrix_from_json: expected a non-empty array");
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(double(arr.size()))));
  if (d * d != arr.size())
    throw std::invalid_argument("matrix_from_json: entry count is not a square");
  ComplexMatrix m(d);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto &e = arr[k];
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("matrix_from_json: entries must be [re, im] pairs");
    m(k / d, k % d) = {detail::json_component(e[0]), detail::json_component(e[1])};
  }
  return m;
}

inline nlohmann::json params_to_json(const MapParams &p) { return {{"a", p.a}, {"b", p.b}, {"c", p.c}}; }

/// JSON has no infinity; unbounded ends are the string "inf".
inline nlohmann::json real_or_inf(double x) {
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  return x;
}

inline nlohmann::json interval_to_json(const std::optional<EpsInterval> &iv) {
  if (!iv)
    return nullptr;
  return {{"lo", real_or_inf(iv->lo)}, {"hi", real_or_inf(iv->hi)}};
}

/// Decimal text with 17 significant digits.
inline std::string csv_number(double x) {
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << x;
  return os.str();
}

} // namespace qutrit
