#include "qubatch/serialize.hpp"

#include <set>

#include <json.hpp>

namespace qubatch {

using ordered_json = nlohmann::ordered_json;

std::string slice_to_json(const LatticeSlice& slice) {
  ordered_json j;
  j["p"] = slice.amb.p;
  j["k"] = slice.amb.k;
  j["dim"] = slice.dim;
  j["count"] = slice.subspaces.size();
  auto& arr = j["subspaces"] = ordered_json::array();
  for (const Subspace& s : slice.subspaces) arr.push_back(to_string(s));
  return j.dump(2) + "\n";
}

namespace {

ordered_json descriptor_core(const QuasiUniformCode& code) {
  ordered_json j;
  j["p"] = code.ambient().p;
  j["k"] = code.ambient().k;
  auto& pos = j["positions"] = ordered_json::array();
  for (const Subspace& s : code.system().positions()) pos.push_back(to_string(s));
  j["alphabets"] = code.alphabet_sizes();
  return j;
}

}  // namespace

std::string descriptor_to_json(const QuasiUniformCode& code) {
  return descriptor_core(code).dump(2) + "\n";
}

std::string descriptor_to_json(const BatchCode& bc) {
  ordered_json j = descriptor_core(bc.code());
  auto& pairs = j["pairs"] = ordered_json::array();
  for (const auto& [a, b] : bc.plan().pairs) pairs.push_back(ordered_json::array({a, b}));
  const BatchParams& prm = bc.params();
  ordered_json rep;
  rep["n"] = prm.n;
  rep["k"] = prm.k_info;
  rep["t"] = prm.t;
  rep["r"] = prm.r;
  rep["rho"] = prm.rho;
  auto& prs = rep["pairs"] = ordered_json::array();
  for (const auto& [a, b] : bc.plan().pairs) prs.push_back(ordered_json::array({a, b}));
  ordered_json gaps;
  for (const auto& [r, gap] : bound_gaps(bc)) gaps[std::to_string(r)] = gap;
  rep["bound_gaps"] = std::move(gaps);
  j["report"] = std::move(rep);
  return j.dump(2) + "\n";
}

SubgroupSystem system_from_descriptor(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw data_error(std::string("descriptor is not valid JSON: ") + e.what());
  }
  try {
    const Ambient amb{j.at("p").get<uint32_t>(), j.at("k").get<uint32_t>()};
    validate_ambient(amb);
    std::vector<Subspace> positions;
    for (const auto& s : j.at("positions")) {
      positions.push_back(subspace_from_string(amb, s.get<std::string>()));
    }
    return SubgroupSystem(amb, std::move(positions));
  } catch (const nlohmann::json::exception& e) {
    throw data_error(std::string("descriptor is missing fields: ") + e.what());
  }
}

std::optional<RecoveryPlan> plan_from_descriptor(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw data_error(std::string("descriptor is not valid JSON: ") + e.what());
  }
  if (!j.contains("pairs")) return std::nullopt;
  RecoveryPlan plan;
  for (const auto& pr : j["pairs"]) {
    plan.pairs.emplace_back(pr.at(0).get<uint32_t>(), pr.at(1).get<uint32_t>());
  }
  return plan;
}

std::string graph_to_json(const IntersectionGraph& g, const Matching* matching) {
  ordered_json j;
  auto& verts = j["vertices"] = ordered_json::array();
  for (const Subspace& s : g.vertices) verts.push_back(to_string(s));
  auto& edges = j["edges"] = ordered_json::array();
  for (uint32_t u = 0; u < g.vertex_count(); ++u) {
    for (uint32_t v : g.adj[u]) {
      if (u < v) edges.push_back(ordered_json::array({u, v}));
    }
  }
  auto& m = j["matching"] = ordered_json::array();
  if (matching) {
    for (const auto& [a, b] : matching->pairs) m.push_back(ordered_json::array({a, b}));
  }
  return j.dump(2) + "\n";
}

std::string graph_to_dot(const IntersectionGraph& g, const Matching* matching) {
  std::set<std::pair<uint32_t, uint32_t>> matched;
  if (matching) {
    for (auto [a, b] : matching->pairs) matched.insert(std::minmax(a, b));
  }
  std::string out = "graph intersection {\n";
  for (uint32_t v = 0; v < g.vertex_count(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + to_string(g.vertices[v]) + "\"];\n";
  }
  for (uint32_t u = 0; u < g.vertex_count(); ++u) {
    for (uint32_t v : g.adj[u]) {
      if (u >= v) continue;
      out += "  v" + std::to_string(u) + " -- v" + std::to_string(v);
      if (matched.count({u, v})) out += " [style=bold]";
      out += ";\n";
    }
  }
  out += "}\n";
  return out;
}

std::string uniformity_to_json(const oracle::UniformityResult& result) {
  ordered_json j;
  j["seed"] = result.seed;
  j["sampled"] = result.sampled;
  j["all_pass"] = result.all_pass();
  auto& checks = j["checks"] = ordered_json::array();
  for (const auto& rep : result.reports) {
    ordered_json c;
    c["subset"] = rep.subset;
    c["support"] = rep.support_size;
    c["expected_support"] = rep.expected_support;
    c["uniform"] = rep.uniform;
    c["pass"] = rep.pass;
    if (!rep.pass) {
      auto& cex = c["counterexample"] = ordered_json::array();
      size_t shown = 0;
      for (const auto& [key, cnt] : rep.multiplicities) {
        if (shown++ == 4) break;
        cex.push_back(ordered_json{{"symbols", key}, {"count", cnt}});
      }
    }
    checks.push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

}  // namespace qubatch
