#include "regsm/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace regsm {

using nlohmann::json;

namespace {

Mask mask_from_list(const json& arr, int n) {
  Mask m = 0;
  for (const auto& e : arr) {
    int u = e.get<int>();
    if (u < 0 || u >= n) throw ParseError("element index out of range");
    m |= 1ULL << u;
  }
  return m;
}

json mask_to_list(Mask m, int n) {
  json arr = json::array();
  for (int u = 0; u < n; ++u)
    if (contains(m, u)) arr.push_back(u);
  return arr;
}

SubmodularFn parse_f(const json& jf, int n) {
  std::string type = jf.at("type").get<std::string>();
  if (type == "dicut") {
    std::vector<DirectedEdge> edges;
    for (const auto& e : jf.at("edges"))
      edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
    return SubmodularFn::directed_cut(n, std::move(edges));
  }
  if (type == "cut") {
    std::vector<UndirectedEdge> edges;
    for (const auto& e : jf.at("edges"))
      edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
    return SubmodularFn::undirected_cut(n, std::move(edges));
  }
  if (type == "hyperdicut") {
    std::vector<DirectedHyperedge> edges;
    for (const auto& e : jf.at("hyperedges"))
      edges.push_back({mask_from_list(e.at("tails"), n), mask_from_list(e.at("heads"), n),
                       e.at("weight").get<double>()});
    return SubmodularFn::hyper_directed_cut(n, std::move(edges));
  }
  if (type == "coverage") {
    CoverageData data;
    for (const auto& w : jf.at("item_weights")) data.item_weights.push_back(w.get<double>());
    for (const auto& c : jf.at("covers")) data.coverers.push_back(mask_from_list(c, n));
    return SubmodularFn::coverage(n, std::move(data));
  }
  if (type == "table") {
    std::vector<double> values;
    for (const auto& v : jf.at("values")) values.push_back(v.get<double>());
    return SubmodularFn::table(n, std::move(values));
  }
  throw ParseError("unknown function type: " + type);
}

json f_to_json(const SubmodularFn& f) {
  json jf;
  jf["type"] = f.kind();
  int n = f.n();
  if (f.is_directed_cut()) {
    json edges = json::array();
    for (const auto& e : f.as_directed_cut().edges) edges.push_back({e.tail, e.head, e.w});
    jf["edges"] = edges;
  } else if (f.is_undirected_cut()) {
    json edges = json::array();
    for (const auto& e : f.as_undirected_cut().edges) edges.push_back({e.a, e.b, e.w});
    jf["edges"] = edges;
  } else if (const auto* h = f.as_hyper()) {
    json edges = json::array();
    for (const auto& e : h->edges)
      edges.push_back({{"tails", mask_to_list(e.tails, n)},
                       {"heads", mask_to_list(e.heads, n)},
                       {"weight", e.w}});
    jf["hyperedges"] = edges;
  } else if (const auto* c = f.as_coverage()) {
    jf["item_weights"] = c->data.item_weights;
    json covers = json::array();
    for (Mask m : c->data.coverers) covers.push_back(mask_to_list(m, n));
    jf["covers"] = covers;
  } else {
    jf["values"] = f.as_explicit_table()->values;
  }
  return jf;
}

std::optional<Matroid> parse_constraint(const json& jc, int n) {
  std::string type = jc.at("type").get<std::string>();
  if (type == "none") return std::nullopt;
  if (type == "cardinality") return Matroid::uniform(n, jc.at("k").get<int>());
  if (type == "partition") {
    std::vector<Mask> blocks;
    std::vector<int> caps;
    for (const auto& b : jc.at("blocks")) blocks.push_back(mask_from_list(b, n));
    for (const auto& c : jc.at("caps")) caps.push_back(c.get<int>());
    return Matroid::partition(n, std::move(blocks), std::move(caps));
  }
  if (type == "explicit") {
    std::vector<Mask> sets;
    for (const auto& s : jc.at("independent")) {
      if (s.is_string())
        sets.push_back(std::stoull(s.get<std::string>()));
      else
        sets.push_back(s.get<Mask>());
    }
    return Matroid::explicit_family(n, std::move(sets));
  }
  throw ParseError("unknown constraint type: " + type);
}

json constraint_to_json(const std::optional<Matroid>& m, int n) {
  json jc;
  if (!m) {
    jc["type"] = "none";
    return jc;
  }
  jc["type"] = m->kind();
  if (const auto* u = m->as_uniform()) {
    jc["k"] = u->k;
  } else if (const auto* p = m->as_partition()) {
    json blocks = json::array();
    for (Mask b : p->blocks) blocks.push_back(mask_to_list(b, n));
    jc["blocks"] = blocks;
    jc["caps"] = p->caps;
  } else {
    jc["independent"] = m->as_explicit()->sets;
  }
  return jc;
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    int n = j.at("n").get<int>();
    if (n < 1 || n > 63) throw ParseError("n out of supported range");
    SubmodularFn f = parse_f(j.at("f"), n);
    std::vector<double> ell = j.at("ell").get<std::vector<double>>();
    if (static_cast<int>(ell.size()) != n) throw ParseError("ell must have n entries");
    Vec w(n);
    for (int u = 0; u < n; ++u) w[u] = ell[u];
    std::optional<Matroid> constraint =
        j.contains("constraint") ? parse_constraint(j.at("constraint"), n) : std::nullopt;
    return Instance{std::move(f), LinearFn(std::move(w)), std::move(constraint)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  } catch (const StructuralError& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

std::string instance_to_json(const Instance& inst) {
  json j;
  int n = inst.n();
  j["n"] = n;
  j["f"] = f_to_json(inst.f);
  std::vector<double> ell(n);
  for (int u = 0; u < n; ++u) ell[u] = inst.ell(u);
  j["ell"] = ell;
  j["constraint"] = constraint_to_json(inst.constraint, n);
  return j.dump(2);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write instance file: " + path);
  out << instance_to_json(inst) << "\n";
}

}  // namespace regsm
