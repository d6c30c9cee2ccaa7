#include <glat/latfile.hpp>

#include <glat/errors.hpp>
#include <glat/group.hpp>

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>
#include <vector>

namespace glat {

namespace {

using json = nlohmann::ordered_json;

json encode_int(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

mpz_class decode_int(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(j.get<unsigned long>());
    return mpz_class(j.get<long>());
  }
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
      throw ParseError(where + ": not a decimal integer string");
    }
  }
  throw ParseError(where +
                   ": expected an integer (quote values beyond 64 bits)");
}

json encode_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(encode_int(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix decode_matrix(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rows");
  int rows = static_cast<int>(j.size());
  if (rows == 0) return IntMatrix(0, 0);
  if (!j[0].is_array())
    throw ParseError(where + "[0]: expected an array of integers");
  int cols = static_cast<int>(j[0].size());
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[static_cast<size_t>(i)];
    std::string rw = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError(rw + ": expected " + std::to_string(cols) +
                       " entries");
    for (int c = 0; c < cols; ++c)
      m.at(i, c) =
          decode_int(row[static_cast<size_t>(c)], rw + "[" + std::to_string(c) + "]");
  }
  return m;
}

std::vector<std::pair<std::string, IntMatrix>> decode_generators(
    const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("generators"))
    throw ParseError(where + ": expected an object with a generators list");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "generators") throw ParseError(where + "." + key + ": unknown field");
  }
  const json& list = j["generators"];
  if (!list.is_array() || list.empty())
    throw ParseError(where + ".generators: expected a non-empty array");
  std::vector<std::pair<std::string, IntMatrix>> out;
  for (size_t i = 0; i < list.size(); ++i) {
    std::string gw = where + ".generators[" + std::to_string(i) + "]";
    const json& g = list[i];
    if (!g.is_object() || !g.contains("name") || !g.contains("matrix"))
      throw ParseError(gw + ": expected an object with name and matrix");
    for (const auto& [key, value] : g.items()) {
      (void)value;
      if (key != "name" && key != "matrix")
        throw ParseError(gw + "." + key + ": unknown field");
    }
    if (!g["name"].is_string()) throw ParseError(gw + ".name: expected a string");
    out.emplace_back(g["name"].get<std::string>(),
                     decode_matrix(g["matrix"], gw + ".matrix"));
  }
  return out;
}

}  // namespace

GLattice read_lattice(std::istream& in, int element_cap) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level: expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "name" && key != "rank" && key != "group" && key != "action" &&
        key != "basis_labels")
      throw ParseError(key + ": unknown field");
  }
  for (const char* req : {"name", "rank", "group", "action"})
    if (!j.contains(req))
      throw ParseError(std::string(req) + ": missing field");
  if (!j["name"].is_string()) throw ParseError("name: expected a string");
  if (!j["rank"].is_number_integer() || j["rank"].get<long>() < 0)
    throw ParseError("rank: expected a non-negative integer");

  auto group_gens = decode_generators(j["group"], "group");
  auto action_gens = decode_generators(j["action"], "action");
  if (group_gens.size() != action_gens.size())
    throw ParseError("action.generators: expected " +
                     std::to_string(group_gens.size()) + " entries like group.generators");
  for (size_t i = 0; i < group_gens.size(); ++i)
    if (group_gens[i].first != action_gens[i].first)
      throw ParseError("action.generators[" + std::to_string(i) +
                       "].name: expected \"" + group_gens[i].first + "\"");

  int degree = group_gens[0].second.rows();
  for (size_t i = 0; i < group_gens.size(); ++i) {
    const IntMatrix& m = group_gens[i].second;
    if (!m.is_square() || m.rows() != degree)
      throw ParseError("group.generators[" + std::to_string(i) +
                       "].matrix: expected " + std::to_string(degree) + "x" +
                       std::to_string(degree));
  }
  long rank = j["rank"].get<long>();
  for (size_t i = 0; i < action_gens.size(); ++i) {
    const IntMatrix& m = action_gens[i].second;
    if (!m.is_square() || m.rows() != rank)
      throw ParseError("action.generators[" + std::to_string(i) +
                       "].matrix: expected " + std::to_string(rank) + "x" +
                       std::to_string(rank));
  }

  std::vector<std::string> labels;
  if (j.contains("basis_labels")) {
    const json& bl = j["basis_labels"];
    if (!bl.is_array() || static_cast<long>(bl.size()) != rank)
      throw ParseError("basis_labels: expected an array of " +
                       std::to_string(rank) + " strings");
    for (size_t i = 0; i < bl.size(); ++i) {
      if (!bl[i].is_string())
        throw ParseError("basis_labels[" + std::to_string(i) +
                         "]: expected a string");
      labels.push_back(bl[i].get<std::string>());
    }
  }

  GroupPtr g = generate(degree, group_gens, element_cap);
  return make_lattice(g, action_gens, std::move(labels),
                      j["name"].get<std::string>());
}

GLattice read_lattice_file(const std::string& path, int element_cap) {
  if (path == "-") return read_lattice(std::cin, element_cap);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_lattice(in, element_cap);
}

std::string lattice_to_string(const GLattice& n) {
  json j;
  j["name"] = n.name;
  j["rank"] = n.rank;
  json ggens = json::array();
  json agens = json::array();
  for (size_t i = 0; i < n.group->generator_names.size(); ++i) {
    json g;
    g["name"] = n.group->generator_names[i];
    g["matrix"] = encode_matrix(n.group->generator_matrices[i]);
    ggens.push_back(std::move(g));
    json a;
    a["name"] = n.group->generator_names[i];
    a["matrix"] = encode_matrix(n.action[n.group->index_of(
        n.group->generator_matrices[i])]);
    agens.push_back(std::move(a));
  }
  j["group"] = json::object({{"generators", std::move(ggens)}});
  j["action"] = json::object({{"generators", std::move(agens)}});
  if (!n.basis_labels.empty()) j["basis_labels"] = n.basis_labels;
  return j.dump(2) + "\n";
}

void write_lattice(std::ostream& out, const GLattice& n) {
  out << lattice_to_string(n);
}

}  // namespace glat
