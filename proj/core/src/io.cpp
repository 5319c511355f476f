#include "ccodes/io.hpp"

#include <fstream>
#include <sstream>

#include "ccodes/error.hpp"
#include "json.hpp"

namespace ccodes {

using json = nlohmann::ordered_json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

json matrix_json(const Matrix& m) { return json(m.to_rows()); }

Matrix matrix_from(const json& j, const char* key, std::size_t rows, std::size_t cols, const Field& f) {
  const auto r = get<std::vector<std::vector<Felt>>>(j, key);
  if (r.size() != rows) throw InvalidInput(std::string("'") + key + "' must have " + std::to_string(rows) + " rows");
  for (const auto& row : r) {
    if (row.size() != cols)
      throw InvalidInput(std::string("'") + key + "' rows must have " + std::to_string(cols) + " entries");
    for (Felt x : row)
      if (!f.contains(x)) throw InvalidInput(std::string("'") + key + "' has an entry outside the field");
  }
  Matrix m = Matrix::from_rows(r);
  if (rows > 0 && cols == 0) m = Matrix(rows, 0);
  return m;
}

}  // namespace

ConstraintGraph graph_from_json(std::string_view text) {
  const json j = parse(text);
  const auto s = get<std::size_t>(j, "s");
  const auto n = get<std::size_t>(j, "n");
  const auto rows = get<std::vector<std::vector<int>>>(j, "adjacency");
  if (rows.size() != s) throw InvalidInput("adjacency has " + std::to_string(rows.size()) + " rows but s = " + std::to_string(s));
  for (const auto& r : rows)
    if (r.size() != n) throw InvalidInput("adjacency row has " + std::to_string(r.size()) + " entries but n = " + std::to_string(n));
  return ConstraintGraph::from_rows(rows);
}

std::string graph_to_json(const ConstraintGraph& g) {
  json j;
  j["s"] = g.messages();
  j["n"] = g.length();
  j["adjacency"] = g.adjacency().to_rows();
  return j.dump(2);
}

std::string bounds_to_json(const BoundsReport& r) {
  json j;
  j["d_min"] = r.d_min;
  j["k_min"] = r.k_min;
  j["d_sys"] = r.has_matching ? json(r.d_sys) : json(nullptr);
  j["k_sys"] = r.has_matching ? json(r.k_sys) : json(nullptr);
  j["exact"] = r.search_exact;
  j["witness_subset"] = r.witness_subset;
  j["witness_matching"] = r.has_matching ? json(r.witness_matching.column) : json(nullptr);
  j["a"] = r.a;
  j["r_M"] = r.r_m;
  j["thm2_feasible"] = r.thm2_feasible;
  return j.dump(2);
}

std::string code_to_json(const CodeSpec& spec) {
  json j;
  j["field"] = {{"p", spec.field.characteristic()},
                {"m", spec.field.degree()},
                {"poly", spec.field.reduction_coeffs()},
                {"alpha", spec.field.primitive()}};
  j["defining_set"] = spec.defining_set;
  j["k"] = spec.k;
  j["T"] = matrix_json(spec.transform);
  j["G"] = matrix_json(spec.generator);
  j["mode"] = std::string(to_string(spec.mode));
  j["matching"] = spec.matching ? json(spec.matching->column) : json(nullptr);
  j["claimed_distance"] = spec.claimed_distance;
  j["distance_exact"] = spec.distance_exact;
  return j.dump(2);
}

CodeSpec code_from_json(std::string_view text) {
  const json j = parse(text);
  const json fj = get<json>(j, "field");
  const auto coeffs = get<std::vector<std::uint32_t>>(fj, "poly");
  std::optional<std::uint32_t> poly;
  if (!coeffs.empty()) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] > 1 || i >= 32) throw InvalidInput("reduction polynomial coefficients must be binary");
      mask |= coeffs[i] << i;
    }
    poly = mask;
  }
  const Field f = Field::make(get<std::uint32_t>(fj, "p"), get<std::uint32_t>(fj, "m"), get<Felt>(fj, "alpha"), poly);

  const auto nodes = get<std::vector<Felt>>(j, "defining_set");
  const auto k = get<std::size_t>(j, "k");
  const auto g_rows = get<std::vector<std::vector<Felt>>>(j, "G");
  const std::size_t s = g_rows.size();
  const std::size_t n = s ? g_rows.front().size() : 0;
  if (s == 0 || n == 0) throw InvalidInput("generator matrix is empty");
  if (!nodes.empty() && nodes.size() != n) throw InvalidInput("defining set length differs from code length");

  CodeSpec spec{f, nodes, k, matrix_from(j, "T", s, k, f), matrix_from(j, "G", s, n, f),
                parse_mode(get<std::string>(j, "mode")), std::nullopt,
                get<std::size_t>(j, "claimed_distance"), get<bool>(j, "distance_exact")};
  if (!j.contains("matching")) throw InvalidInput("missing field 'matching'");
  if (!j.at("matching").is_null()) {
    Matching m{get<std::vector<std::size_t>>(j, "matching")};
    if (m.column.size() != s) throw InvalidInput("matching must have one column per message symbol");
    for (auto c : m.column)
      if (c >= n) throw InvalidInput("matching column out of range");
    spec.matching = std::move(m);
  }
  if (!nodes.empty()) RSCode(f, nodes, k);  // validates nodes and k
  return spec;
}

std::string verify_to_json(const VerifyReport& r) {
  json j;
  j["distance"] = r.distance.distance;
  j["witness_message"] = r.distance.witness_message;
  j["rank_G"] = r.rank_g;
  j["rank_T"] = r.rank_t;
  j["valid_pattern"] = r.valid_pattern;
  j["systematic"] = r.systematic;
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

}  // namespace ccodes
