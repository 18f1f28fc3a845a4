// Copyright 2026 The boxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "boxlab/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <optional>
#include <sstream>

#include "boxlab/error.hpp"

namespace boxlab {

namespace {

double number_at(const Json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string(what) + " must be a number");
  return j.get<double>();
}

Eigen::MatrixXd real_matrix(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw InvalidInput(std::string(what) + " must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].is_array() ? j[0].size() : 0);
  if (cols == 0) throw InvalidInput(std::string(what) + " rows must be nonempty arrays");
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw InvalidInput(std::string(what) + " is ragged");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = number_at(row[static_cast<std::size_t>(k)], what);
  }
  return m;
}

Eigen::VectorXd real_vector(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw InvalidInput(std::string(what) + " must be a nonempty array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number_at(j[i], what);
  return v;
}

void dump(const Json& j, std::ostringstream& out, int indent, int depth) {
  const std::string pad = indent >= 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent >= 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent >= 0 ? "\n" : "";
  const char* sep = indent >= 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // nlohmann::json keeps keys sorted
        if (!first) out << ',' << nl;
        first = false;
        out << pad << Json(it.key()).dump() << sep;
        dump(it.value(), out, indent, depth + 1);
      }
      out << nl << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << '[' << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ',' << nl;
        out << pad;
        dump(j[i], out, indent, depth + 1);
      }
      out << nl << close_pad << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out << "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << buf;
      return;
    }
    default:
      out << j.dump();
  }
}

}  // namespace

Json box_to_json(const BipartiteBox& box) {
  Json p = Json::array();
  for (int x = 0; x < 2; ++x) {
    Json px = Json::array();
    for (int y = 0; y < 2; ++y) {
      Json py = Json::array();
      for (int a = 0; a < 2; ++a) py.push_back(Json::array({box(x, y, a, 0), box(x, y, a, 1)}));
      px.push_back(py);
    }
    p.push_back(px);
  }
  return Json{{"p", p}};
}

BipartiteBox box_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p")) throw InvalidInput("box JSON must be an object with key \"p\"");
  const Json& p = j["p"];
  BipartiteBox::Table table{};
  auto check = [](const Json& node) {
    if (!node.is_array() || node.size() != 2) throw InvalidInput("box \"p\" must be nested 2x2x2x2");
  };
  check(p);
  for (int x = 0; x < 2; ++x) {
    check(p[x]);
    for (int y = 0; y < 2; ++y) {
      check(p[x][y]);
      for (int a = 0; a < 2; ++a) {
        check(p[x][y][a]);
        for (int b = 0; b < 2; ++b) table[table_index(x, y, a, b)] = number_at(p[x][y][a][b], "box entry");
      }
    }
  }
  return new_box(table);
}

Json matrix_to_json(const Matrix& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rr = Json::array(), ri = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ri.push_back(m(i, k).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return Json{{"re", re}, {"im", im}};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re")) throw InvalidInput("matrix JSON must be an object with key \"re\"");
  Eigen::MatrixXd re = real_matrix(j["re"], "matrix \"re\"");
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(re.rows(), re.cols());
  if (j.contains("im")) {
    im = real_matrix(j["im"], "matrix \"im\"");
    if (im.rows() != re.rows() || im.cols() != re.cols()) throw InvalidInput("matrix \"re\" and \"im\" differ in shape");
  }
  Matrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

Observable observable_from_json(const Json& j) { return Observable(matrix_from_json(j)); }

Json state_to_json(const QuantumState& state) {
  if (!state.is_pure()) return matrix_to_json(state.density());
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < state.vector().size(); ++i) {
    re.push_back(state.vector()(i).real());
    im.push_back(state.vector()(i).imag());
  }
  return Json{{"re", re}, {"im", im}};
}

QuantumState state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j["re"].is_array() || j["re"].empty())
    throw InvalidInput("state JSON must be an object with a nonempty \"re\" array");
  if (j["re"][0].is_array()) return QuantumState::mixed(matrix_from_json(j));
  Eigen::VectorXd re = real_vector(j["re"], "state \"re\"");
  Eigen::VectorXd im = Eigen::VectorXd::Zero(re.size());
  if (j.contains("im")) {
    im = real_vector(j["im"], "state \"im\"");
    if (im.size() != re.size()) throw InvalidInput("state \"re\" and \"im\" differ in length");
  }
  Vector psi(re.size());
  psi.real() = re;
  psi.imag() = im;
  return QuantumState::pure(std::move(psi));
}

void write_transcript(std::ostream& out, const GameTranscript& transcript) {
  out << canonical_dump(Json{{"box_id", transcript.box_id},
                             {"rounds", transcript.rounds.size()},
                             {"seed", transcript.seed}},
                        -1)
      << '\n';
  for (const Round& r : transcript.rounds)
    out << "{\"a\":" << r.a << ",\"b\":" << r.b << ",\"t\":" << r.t << ",\"x\":" << r.x << ",\"y\":" << r.y << "}\n";
}

GameTranscript read_transcript(std::istream& in) {
  GameTranscript tr;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::optional<std::uint64_t> declared;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw InvalidInput("transcript line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!j.contains("t")) {
      if (header_seen || !tr.rounds.empty()) throw InvalidInput("transcript header must come first");
      header_seen = true;
      tr.box_id = j.value("box_id", "");
      tr.seed = j.value("seed", std::uint64_t{0});
      if (j.contains("rounds")) declared = j["rounds"].get<std::uint64_t>();
      continue;
    }
    Round r{};
    try {
      r = Round{j.at("t").get<std::uint64_t>(), j.at("x").get<int>(), j.at("y").get<int>(), j.at("a").get<int>(),
                j.at("b").get<int>()};
    } catch (const Json::exception& e) {
      throw InvalidInput("transcript line " + std::to_string(line_no) + ": " + e.what());
    }
    for (int v : {r.x, r.y, r.a, r.b})
      if (v != 0 && v != 1) throw InvalidInput("transcript line " + std::to_string(line_no) + ": values must be 0/1");
    tr.rounds.push_back(r);
  }
  if (declared && *declared != tr.rounds.size())
    throw InvalidInput("transcript header declares " + std::to_string(*declared) + " rounds, found " +
                       std::to_string(tr.rounds.size()));
  return tr;
}

std::string canonical_dump(const Json& j, int indent) {
  std::ostringstream out;
  dump(j, out, indent, 0);
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

}  // namespace boxlab
