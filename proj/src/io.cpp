#include "hgg/io.hpp"

#include <fstream>
#include <sstream>

#include "hgg/error.hpp"

namespace hgg {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::ParseError, std::string("missing key \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<Elem> as_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<Elem> out;
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

Table as_table(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array of rows");
  std::vector<std::vector<Elem>> rows;
  for (const auto& row : j) rows.push_back(as_list(row, what));
  try {
    return Table::from_rows(rows);
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedTables, std::string(what) + ": " + e.what());
  }
}

Json table_json(const Table& t) { return Json(t.to_rows()); }

}  // namespace

Json to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["table"] = table_json(g.table());
  j["name"] = g.name();
  return j;
}

Json to_json(const HypergroupOverGroup& hg) {
  Json j;
  j["m_size"] = hg.m_size;
  j["h"] = to_json(hg.h);
  j["phi"] = table_json(hg.phi);
  j["psi"] = table_json(hg.psi);
  j["xi"] = table_json(hg.xi);
  j["lam"] = table_json(hg.lam);
  j["o"] = hg.o;
  if (hg.ambient) {
    Json a;
    a["group"] = to_json(hg.ambient->group);
    a["subgroup"] = hg.ambient->subgroup.elements;
    a["transversal"] = hg.ambient->transversal;
    j["ambient"] = std::move(a);
  }
  return j;
}

Json to_json(const AxiomReport& report) {
  Json j;
  j["overall"] = report.overall;
  Json list = Json::array();
  for (const auto& s : report.statuses) {
    Json e;
    e["axiom"] = to_string(s.axiom);
    e["pass"] = s.pass;
    if (s.witness) {
      e["witness"] = {{"law", s.witness->law}, {"args", s.witness->args}, {"detail", s.witness->detail}};
    }
    list.push_back(std::move(e));
  }
  j["axioms"] = std::move(list);
  return j;
}

Json to_json(const FiniteField& f) {
  Json j;
  j["name"] = f.name;
  j["order"] = f.order();
  j["p"] = f.p;
  j["m"] = f.m;
  j["modulus"] = f.modulus;
  j["add"] = table_json(f.add_table);
  j["mul"] = table_json(f.mul_table);
  return j;
}

Json morphism_to_json(const std::vector<Elem>& f0, const std::vector<Elem>& f1) {
  Json j;
  j["f0"] = f0;
  j["f1"] = f1;
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  const int order = as_int(require(j, "order"), "order");
  Table table = as_table(require(j, "table"), "table");
  if (table.rows() != order) throw Error(ErrorCode::ParseError, "\"order\" does not match the table");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(ErrorCode::ParseError, "name must be a string");
    name = j["name"].get<std::string>();
  }
  return group_from_cayley_table(table, std::move(name));
}

HypergroupOverGroup hypergroup_from_json(const Json& j) {
  HypergroupOverGroup hg;
  hg.m_size = as_int(require(j, "m_size"), "m_size");
  hg.h = group_from_json(require(j, "h"));
  hg.phi = as_table(require(j, "phi"), "phi");
  hg.psi = as_table(require(j, "psi"), "psi");
  hg.xi = as_table(require(j, "xi"), "xi");
  hg.lam = as_table(require(j, "lam"), "lam");
  hg.o = as_int(require(j, "o"), "o");
  check_shapes(hg);
  if (j.contains("ambient") && !j["ambient"].is_null()) {
    const Json& a = j["ambient"];
    Ambient amb{group_from_json(require(a, "group")), Subgroup{as_list(require(a, "subgroup"), "subgroup")},
                as_list(require(a, "transversal"), "transversal")};
    if (subgroup_closure(amb.group, amb.subgroup.elements) != amb.subgroup)
      throw Error(ErrorCode::ParseError, "ambient subgroup is not a sorted subgroup");
    amb.to_transversal();  // throws NotATransversal
    hg.ambient = std::move(amb);
  }
  return hg;
}

std::pair<std::vector<Elem>, std::vector<Elem>> morphism_from_json(const Json& j) {
  return {as_list(require(j, "f0"), "f0"), as_list(require(j, "f1"), "f1")};
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string load_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json_file(const std::filesystem::path& path) { return parse_json(load_text_file(path)); }

void save_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << text;
}

}  // namespace hgg
