#include "relinv/spec_file.hpp"

#include "relinv/expr_parser.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace relinv {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw SpecError(where + ": missing key '" + key + "'");
  }
  return obj.at(key);
}

long require_int(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_integer()) throw SpecError(where + "." + key + ": expected an integer");
  return v.get<long>();
}

CycNum parse_entry(const json& v, const std::string& where, std::uint32_t order) {
  CycNum c;
  if (v.is_number_integer()) {
    c = CycNum(v.get<long>());
  } else if (v.is_string()) {
    try {
      c = parse_scalar(v.get<std::string>());
    } catch (const ParseError& e) {
      throw SpecError(where + ": " + e.what());
    }
  } else {
    throw SpecError(where + ": expected an expression string or integer");
  }
  if (order % c.order() != 0) {
    throw SpecError(where + ": coefficient lies outside Q(zeta(" + std::to_string(order) + "))");
  }
  return c;
}

LinearMap parse_linear(const json& gen, const TablePtr& table, const std::string& where,
                       std::uint32_t order) {
  const json& rows = require(gen, "matrix", where);
  const std::size_t n = table->size();
  if (!rows.is_array() || rows.size() != n) {
    throw SpecError(where + ".matrix: expected " + std::to_string(n) + " rows");
  }
  LinearMap::Matrix matrix;
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    const std::string rw = where + ".matrix[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != n) {
      throw SpecError(rw + ": expected " + std::to_string(n) + " entries");
    }
    std::vector<CycNum> r;
    for (std::size_t j = 0; j < n; ++j) {
      r.push_back(parse_entry(row[j], rw + "[" + std::to_string(j) + "]", order));
    }
    matrix.push_back(std::move(r));
  }
  return LinearMap(table, std::move(matrix));
}

TorusWeights parse_torus(const json& gen, std::size_t n, const std::string& where) {
  const json& w = require(gen, "weights", where);
  TorusWeights out;
  auto read_vector = [&](const json& arr, const std::string& at) {
    if (!arr.is_array() || arr.size() != n) {
      throw SpecError(at + ": expected one integer weight per variable (" + std::to_string(n) + ")");
    }
    std::vector<long> v;
    for (const auto& x : arr) {
      if (!x.is_number_integer()) throw SpecError(at + ": weights must be integers");
      v.push_back(x.get<long>());
    }
    return v;
  };
  if (w.is_array() && !w.empty() && w.front().is_array()) {
    for (std::size_t p = 0; p < w.size(); ++p) {
      out.weights.push_back(read_vector(w[p], where + ".weights[" + std::to_string(p) + "]"));
    }
  } else {
    out.weights.push_back(read_vector(w, where + ".weights"));
  }
  return out;
}

TablePtr parse_variables(const json& vars) {
  if (!vars.is_array() || vars.empty()) throw SpecError("variables: expected a nonempty list");
  std::vector<std::string> names;
  std::vector<std::string> partners;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string where = "variables[" + std::to_string(i) + "]";
    const json& v = vars[i];
    if (v.is_string()) {
      names.push_back(v.get<std::string>());
      partners.emplace_back();
      continue;
    }
    const json& name = require(v, "name", where);
    if (!name.is_string()) throw SpecError(where + ".name: expected a string");
    names.push_back(name.get<std::string>());
    if (v.contains("conjugate") && !v.at("conjugate").is_null()) {
      if (!v.at("conjugate").is_string()) throw SpecError(where + ".conjugate: expected a string");
      partners.push_back(v.at("conjugate").get<std::string>());
    } else {
      partners.emplace_back();
    }
  }
  std::vector<VarTable::Var> table(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) table[i].name = names[i];
  auto index_of = [&](const std::string& name, std::size_t i) {
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (names[k] == name) return k;
    }
    throw SpecError("variables[" + std::to_string(i) + "].conjugate: unknown variable '" + name + "'");
  };
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (partners[i].empty()) continue;
    const std::size_t j = index_of(partners[i], i);
    if (j == i) throw SpecError("variables[" + std::to_string(i) + "]: a variable cannot be its own conjugate");
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
      if (table[a].conjugate && *table[a].conjugate != b) {
        throw SpecError("variables: conflicting conjugate for '" + names[a] + "'");
      }
      table[a].conjugate = b;
    }
  }
  try {
    return VarTable::make(std::move(table));
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("variables: ") + e.what());
  }
}

}  // namespace

LoadedSpec parse_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError("spec file must contain a JSON object");

  const long order = require_int(doc, "cyclotomic_order", "spec");
  if (order < 1) throw SpecError("cyclotomic_order: must be positive");
  const TablePtr table = parse_variables(require(doc, "variables", "spec"));
  const auto n = static_cast<std::uint32_t>(order);

  std::vector<HGenerator> gens;
  const json& hg = require(doc, "h_generators", "spec");
  if (!hg.is_array()) throw SpecError("h_generators: expected a list");
  for (std::size_t i = 0; i < hg.size(); ++i) {
    const std::string where = "h_generators[" + std::to_string(i) + "]";
    const json& type = require(hg[i], "type", where);
    if (type == "linear") {
      gens.emplace_back(parse_linear(hg[i], table, where, n));
    } else if (type == "torus") {
      gens.emplace_back(parse_torus(hg[i], table->size(), where));
    } else {
      throw SpecError(where + ".type: expected \"linear\" or \"torus\"");
    }
  }

  const json& delta = require(doc, "delta", "spec");
  if (delta.is_object() && delta.contains("type") && delta.at("type") != "linear") {
    throw SpecError("delta.type: δ must be \"linear\"");
  }
  LinearMap delta_map = parse_linear(delta, table, "delta", n);

  const long m = require_int(doc, "m", "spec");
  if (m < 2) throw SpecError("m: index must be at least 2");
  const long k = require_int(doc, "sigma_delta_power", "spec");

  LoadedSpec spec{n, GroupSpec{table, std::move(gens), std::move(delta_map),
                               static_cast<std::uint32_t>(m), k},
                  {}, {}, {}};

  const json& basis = require(doc, "h_basis", "spec");
  if (!basis.is_array()) throw SpecError("h_basis: expected a list of expression strings");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string where = "h_basis[" + std::to_string(i) + "]";
    if (!basis[i].is_string()) throw SpecError(where + ": expected an expression string");
    const std::string src = basis[i].get<std::string>();
    Poly p(table);
    try {
      p = parse_poly(src, table);
    } catch (const ParseError& e) {
      throw SpecError(where + ": " + e.what());
    }
    for (const auto& [mono, c] : p.terms()) {
      if (n % c.order() != 0) {
        throw SpecError(where + ": coefficient lies outside Q(zeta(" + std::to_string(n) + "))");
      }
    }
    spec.h_basis.push_back(std::move(p));
    spec.basis_names.push_back("u" + std::to_string(i + 1));
    spec.basis_sources.push_back(src);
  }
  return spec;
}

LoadedSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read spec file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

}  // namespace relinv
