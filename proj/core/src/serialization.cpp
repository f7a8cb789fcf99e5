// Copyright 2026 The Ergolab Authors.
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

#include "ergolab/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ergolab {

namespace {

using nlohmann::json;

json tensor_entries(const Tensor3& t) {
  json out = json::array();
  for (int i = 0; i < t.dim0(); ++i)
    for (int j = 0; j < t.dim1(); ++j)
      for (int k = 0; k < t.dim2(); ++k) {
        const cplx v = t(i, j, k);
        if (v != cplx(0.0))
          out.push_back(json::array({i, j, k, v.real(), v.imag()}));
      }
  return out;
}

json matrix_entries(const Matrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k)
      if (m(i, k) != cplx(0.0))
        out.push_back(json::array({i, k, m(i, k).real(), m(i, k).imag()}));
  return out;
}

json vector_entries(const Vector& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i)
    if (v(i) != cplx(0.0))
      out.push_back(json::array({i, v(i).real(), v(i).imag()}));
  return out;
}

int index_at(const json& entry, std::size_t pos, int dim, const char* field) {
  const long v = entry.at(pos).get<long>();
  if (v < 0 || v >= dim)
    throw StructuralError(std::string("json field '") + field +
                          "': index out of range");
  return static_cast<int>(v);
}

}  // namespace

std::string group_to_json(const FiniteQuantumGroup& g) {
  g.check_shapes();
  json out;
  out["name"] = g.name;
  out["dim"] = g.dim;
  out["unit_index"] = g.unit_index();
  if (g.unit_index() < 0) out["unit"] = vector_entries(g.unit);
  out["mult"] = tensor_entries(g.mult);
  out["coproduct"] = tensor_entries(g.coproduct);
  out["counit"] = vector_entries(g.counit);
  out["involution"] = matrix_entries(g.involution);
  out["antipode"] = matrix_entries(g.antipode);
  return out.dump(2);
}

FiniteQuantumGroup group_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("invalid group json: ") + e.what());
  }
  FiniteQuantumGroup g;
  try {
    g.name = in.value("name", "unnamed");
    g.dim = in.at("dim").get<int>();
    if (g.dim <= 0 || g.dim > 4096)
      throw StructuralError("group json: dim out of range");
    const int n = g.dim;
    g.mult = Tensor3(n, n, n);
    g.coproduct = Tensor3(n, n, n);
    g.counit = Vector::Zero(n);
    g.involution = Matrix::Zero(n, n);
    g.antipode = Matrix::Zero(n, n);
    g.unit = Vector::Zero(n);

    const int unit_index = in.at("unit_index").get<int>();
    if (unit_index >= 0) {
      if (unit_index >= n)
        throw StructuralError("group json: unit_index out of range");
      g.unit(unit_index) = 1.0;
    } else {
      for (const auto& e : in.at("unit"))
        g.unit(index_at(e, 0, n, "unit")) =
            cplx(e.at(1).get<double>(), e.at(2).get<double>());
    }
    for (const auto& e : in.at("mult"))
      g.mult(index_at(e, 0, n, "mult"), index_at(e, 1, n, "mult"),
             index_at(e, 2, n, "mult")) =
          cplx(e.at(3).get<double>(), e.at(4).get<double>());
    for (const auto& e : in.at("coproduct"))
      g.coproduct(index_at(e, 0, n, "coproduct"),
                  index_at(e, 1, n, "coproduct"),
                  index_at(e, 2, n, "coproduct")) =
          cplx(e.at(3).get<double>(), e.at(4).get<double>());
    for (const auto& e : in.at("counit"))
      g.counit(index_at(e, 0, n, "counit")) =
          cplx(e.at(1).get<double>(), e.at(2).get<double>());
    for (const auto& e : in.at("involution"))
      g.involution(index_at(e, 0, n, "involution"),
                   index_at(e, 1, n, "involution")) =
          cplx(e.at(2).get<double>(), e.at(3).get<double>());
    for (const auto& e : in.at("antipode"))
      g.antipode(index_at(e, 0, n, "antipode"),
                 index_at(e, 1, n, "antipode")) =
          cplx(e.at(2).get<double>(), e.at(3).get<double>());
  } catch (const json::exception& e) {
    throw StructuralError(std::string("group json: ") + e.what());
  }
  // Counit normalization gate: eps(1) = 1 is required of any input.
  if (std::abs(cplx(g.counit.transpose() * g.unit) - cplx(1.0)) > 1e-10)
    throw StructuralError("group json: counit not normalized, eps(1) != 1");
  return g;
}

FiniteQuantumGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return group_from_json(buf.str());
}

void save_group_file(const FiniteQuantumGroup& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write group file '" + path + "'");
  out << group_to_json(g) << "\n";
}

CorepBlock block_from_json(const std::string& text, bool normalize) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("invalid block json: ") + e.what());
  }
  try {
    const std::string label = in.value("label", "block");
    const int d = in.at("dim").get<int>();
    if (d <= 0 || d > 512) throw StructuralError("block json: dim out of range");
    const auto& entries = in.at("F");
    if (static_cast<int>(entries.size()) != d * d)
      throw StructuralError("block json: F must have dim^2 [re,im] entries");
    Matrix f(d, d);
    int idx = 0;
    for (const auto& e : entries) {
      f(idx / d, idx % d) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
      ++idx;
    }
    return block_from_f(label, f, normalize);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("block json: ") + e.what());
  }
}

CorepBlock load_block_file(const std::string& path, bool normalize) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read block file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return block_from_json(buf.str(), normalize);
}

}  // namespace ergolab
