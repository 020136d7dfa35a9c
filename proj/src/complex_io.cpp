#include "augtopo/complex_io.hpp"

#include <fstream>
#include <sstream>

namespace augtopo {

nlohmann::json to_json(const Complex& c) {
  nlohmann::json j;
  j["void"] = c.is_void();
  nlohmann::json facets = nlohmann::json::array();
  // {∅ₒ} is written with an empty facet list; its only facet is the empty simplex.
  for (Simplex f : c.facets())
    if (!f.is_empty()) facets.push_back(f.vertices());
  j["facets"] = std::move(facets);
  if (!c.labels().empty()) {
    nlohmann::json labels = nlohmann::json::object();
    for (const auto& [id, text] : c.labels()) labels[std::to_string(id)] = text;
    j["labels"] = std::move(labels);
  }
  return j;
}

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw TopologyError("complex JSON must be an object");
  const bool is_void = j.value("void", false);
  std::vector<std::vector<int>> facets;
  if (j.contains("facets")) {
    if (!j["facets"].is_array()) throw TopologyError("\"facets\" must be an array");
    for (const auto& f : j["facets"]) {
      if (!f.is_array()) throw TopologyError("each facet must be an array of vertex ids");
      std::vector<int> ids;
      for (const auto& v : f) {
        if (!v.is_number_integer()) throw TopologyError("vertex ids must be integers");
        ids.push_back(v.get<int>());
      }
      facets.push_back(std::move(ids));
    }
  }
  Complex c = Complex::from_facets(facets, is_void);
  if (j.contains("labels")) {
    std::map<int, std::string> labels;
    for (const auto& [key, value] : j["labels"].items()) {
      try {
        labels[std::stoi(key)] = value.get<std::string>();
      } catch (const std::exception&) {
        throw TopologyError("bad label entry \"" + key + "\"");
      }
    }
    c = c.with_labels(std::move(labels));
  }
  return c;
}

std::string to_text(const Complex& c) {
  if (c.is_void()) return "VOID\n";
  if (c.num_vertices() == 0) return "EMPTY\n";
  std::ostringstream out;
  for (Simplex f : c.facets()) {
    bool first = true;
    for (int v : f.vertices()) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Complex complex_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<int>> facets;
  bool saw_empty = false, saw_void = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string tok;
    std::vector<int> ids;
    while (tokens >> tok) {
      if (tok == "EMPTY") {
        saw_empty = true;
        continue;
      }
      if (tok == "VOID") {
        saw_void = true;
        continue;
      }
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw TopologyError("line " + std::to_string(line_no) + ": bad vertex id '" + tok + "'");
      ids.push_back(v);
    }
    if (!ids.empty()) facets.push_back(std::move(ids));
  }
  if (saw_void || saw_empty) {
    if (!facets.empty() || (saw_void && saw_empty)) throw TopologyError("EMPTY/VOID must be the only content");
    return saw_void ? Complex::void_complex() : Complex::empty_simplex();
  }
  if (facets.empty()) throw TopologyError("no facets found; write EMPTY or VOID explicitly");
  return Complex::from_facets(facets);
}

Complex parse_complex(const std::string& content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
      throw TopologyError(std::string("invalid JSON: ") + e.what());
    }
    return complex_from_json(j);
  }
  return complex_from_text(content);
}

Complex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TopologyError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

}  // namespace augtopo
