#include "pfd/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace pfd {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string fnv1a_hex(const std::string& data) {
  unsigned long long h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

json to_json(const Decomposition& dec) {
  json j;
  j["classes"] = dec.classes;
  j["red"] = dec.red;
  return j;
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition dec;
  dec.classes = j.at("classes").get<std::vector<std::vector<int>>>();
  dec.red = j.at("red").get<std::vector<int>>();
  dec.k = static_cast<int>(dec.classes.size());
  return dec;
}

json to_json(const Certificate& cert) {
  json j;
  j["kind"] = cert.kind == Certificate::Kind::Stuck ? "stuck" : "infeasible";
  j["vertices"] = cert.vertices;
  if (cert.kind == Certificate::Kind::Infeasible) {
    j["edges"] = cert.edges;
    return j;
  }
  j["red_edges"] = cert.red_edges;
  json arcs = json::array();
  for (auto [e, tail] : cert.blue_arcs) arcs.push_back({e, tail});
  j["blue_arcs"] = arcs;
  json cells = json::array();
  for (const auto& cell : cert.cells) {
    json jc;
    jc["k"] = {{"vertices", cell.k.vertices}, {"edges", cell.k.edges}};
    jc["k_is_bad"] = cell.k_is_bad;
    json kids = json::array();
    for (const auto& ch : cell.children)
      kids.push_back({{"vertices", ch.vertices}, {"edges", ch.edges}});
    jc["children"] = kids;
    cells.push_back(jc);
  }
  j["cells"] = cells;
  return j;
}

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  cert.kind = j.at("kind") == "stuck" ? Certificate::Kind::Stuck : Certificate::Kind::Infeasible;
  cert.vertices = j.at("vertices").get<std::vector<int>>();
  if (cert.kind == Certificate::Kind::Infeasible) {
    cert.edges = j.at("edges").get<std::vector<int>>();
    return cert;
  }
  cert.red_edges = j.at("red_edges").get<std::vector<int>>();
  for (const auto& a : j.at("blue_arcs")) cert.blue_arcs.emplace_back(a[0], a[1]);
  for (const auto& jc : j.at("cells")) {
    Certificate::Cell cell;
    cell.k.vertices = jc.at("k").at("vertices").get<std::vector<int>>();
    cell.k.edges = jc.at("k").at("edges").get<std::vector<int>>();
    cell.k_is_bad = jc.at("k_is_bad").get<bool>();
    for (const auto& ch : jc.at("children")) {
      CertComp c;
      c.vertices = ch.at("vertices").get<std::vector<int>>();
      c.edges = ch.at("edges").get<std::vector<int>>();
      cell.children.push_back(std::move(c));
    }
    cert.cells.push_back(std::move(cell));
  }
  return cert;
}

json to_json(const Report& r) {
  json j;
  j["pass"] = r.pass();
  j["partition"] = r.partition_ok;
  j["classes_pseudoforest"] = r.classes_pseudoforest_ok;
  j["red_forest"] = r.red_forest_ok;
  j["component_size"] = r.size_ok;
  j["component_diameter"] = r.diam_ok;
  j["z_clause"] = r.zclause_ok;
  j["star_shape"] = r.star_ok;
  j["failing_components"] = r.failing_components;
  j["notes"] = r.notes;
  return j;
}

json decompose_result_json(const DecomposeResult& res) {
  json j;
  j["classes"] = res.decomposition ? json(res.decomposition->classes) : json::array();
  j["red"] = res.decomposition ? json(res.decomposition->red) : json::array();
  j["certificate"] = res.certificate ? to_json(*res.certificate) : json();
  j["iterations"] = res.iterations;
  return j;
}

json sidecar_json(const ExampleColouring& ex, const json& params, const Rational& predicted,
                  const ConstructionValidity& validity) {
  json j;
  j["params"] = params;
  j["k"] = ex.k;
  j["s_vertices"] = ex.s_vertices;
  j["colour"] = ex.colour;
  j["tail"] = ex.tail;
  json copies = json::array();
  for (const auto& c : ex.copies)
    copies.push_back({{"root", c.root},
                      {"t_vertices", c.t_vertices},
                      {"t_depth", c.t_depth},
                      {"first_vertex", c.first_vertex},
                      {"last_vertex", c.last_vertex}});
  j["copies"] = copies;
  json comps = json::array();
  for (const auto& rc : ex.red_comps)
    comps.push_back({{"anchor", rc.anchor}, {"edges", rc.edges}, {"size_class", rc.size_class}});
  j["red_components"] = comps;
  j["decomposition"] = to_json(ex.to_decomposition());
  j["predicted_density"] = predicted.str();
  json v;
  v["delta_odd"] = validity.delta_odd;
  if (validity.delta_large_enough) v["delta_large_enough"] = *validity.delta_large_enough;
  if (validity.p_large_enough) v["p_large_enough"] = *validity.p_large_enough;
  j["validity"] = v;
  return j;
}

void emit_manifest(const ManifestInfo& info) {
  json j;
  j["command"] = info.command;
  j["parameters"] = info.parameters;
  j["input_hash"] = info.input_hash;
  j["outcome"] = info.outcome;
  j["iterations"] = info.iterations;
  j["wall_ms"] = info.wall_ms;
  std::cerr << j.dump() << "\n";
}

}  // namespace pfd
