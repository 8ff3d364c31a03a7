#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qubatch/batch.hpp"
#include "qubatch/graph.hpp"
#include "qubatch/matching.hpp"
#include "qubatch/oracle.hpp"
#include "qubatch/serialize.hpp"

using namespace qubatch;

namespace {

uint64_t env_cap() {
  if (const char* v = std::getenv("QUBATCH_CAP")) {
    try {
      return std::stoull(v);
    } catch (const std::exception&) {
      throw domain_error("QUBATCH_CAP is not a number");
    }
  }
  return kDefaultCap;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Heavy outputs go to --out with a one-line summary on stdout; without --out
// everything goes to stdout.
void emit(const std::string& content, const std::string& out_path,
          const std::string& summary) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw domain_error("cannot write " + out_path);
  out << content;
  std::cout << summary << " -> " << out_path << "\n";
}

struct SubgroupsOpts {
  uint32_t p = 2, k = 0;
  int32_t dim = -1;
  std::string format = "text", out;
  uint64_t cap = 0;
};

void run_subgroups(const SubgroupsOpts& o) {
  const Ambient amb{o.p, o.k};
  if (o.dim >= 0) {
    if (o.dim < 1 || static_cast<uint32_t>(o.dim) > o.k - 1) {
      throw domain_error("--dim must lie in 1..k-1 (nontrivial slices)");
    }
    LatticeSlice slice = enumerate_subspaces(amb, static_cast<uint32_t>(o.dim), o.cap);
    std::string summary = "p=" + std::to_string(o.p) + " k=" + std::to_string(o.k) +
                          " dim=" + std::to_string(o.dim) +
                          " count=" + std::to_string(slice.subspaces.size());
    if (o.format == "json") {
      emit(slice_to_json(slice), o.out, summary);
    } else if (o.format == "csv") {
      std::string csv = "dim,subspace\n";
      for (const Subspace& s : slice.subspaces) {
        csv += std::to_string(slice.dim) + "," + to_string(s) + "\n";
      }
      emit(csv, o.out, summary);
    } else {
      std::string text = summary + "\n";
      for (const Subspace& s : slice.subspaces) text += "  " + to_string(s) + "\n";
      emit(text, o.out, summary);
    }
    return;
  }
  const auto slices = enumerate_lattice(amb, o.cap);
  size_t total = 0;
  for (const auto& s : slices) total += s.subspaces.size();
  std::string summary = "p=" + std::to_string(o.p) + " k=" + std::to_string(o.k) +
                        " nontrivial subgroups=" + std::to_string(total);
  if (o.format == "json") {
    std::string body = "[\n";
    for (size_t i = 0; i < slices.size(); ++i) {
      std::string one = slice_to_json(slices[i]);
      one.pop_back();  // newline
      body += one;
      body += i + 1 < slices.size() ? ",\n" : "\n";
    }
    body += "]\n";
    emit(body, o.out, summary);
  } else if (o.format == "csv") {
    std::string csv = "dim,subspace\n";
    for (const auto& slice : slices) {
      for (const Subspace& s : slice.subspaces) {
        csv += std::to_string(slice.dim) + "," + to_string(s) + "\n";
      }
    }
    emit(csv, o.out, summary);
  } else {
    std::string text = summary + "\n";
    for (const auto& slice : slices) {
      text += "dim " + std::to_string(slice.dim) + ": " +
              std::to_string(slice.subspaces.size()) + " subgroups\n";
    }
    emit(text, o.out, summary);
  }
}

struct BuildOpts {
  uint32_t p = 2, k = 0;
  std::vector<uint32_t> dims;
  bool full = false, shorten = false;
  std::string out;
  uint64_t cap = 0;
};

BatchCode build_dims_code(const BuildOpts& o) {
  const Ambient amb{o.p, o.k};
  std::vector<uint32_t> dims = o.dims;
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  for (uint32_t m : dims) {
    if (m < 1 || m > o.k - 1) throw domain_error("--dims entries must lie in 1..k-1");
  }
  if (dims.empty()) throw domain_error("pass --dims or --full");

  std::vector<Subspace> positions;
  std::vector<uint32_t> offset_of(o.k, 0);
  for (uint32_t m : dims) {
    LatticeSlice slice = enumerate_subspaces(amb, m, o.cap);
    offset_of[m] = static_cast<uint32_t>(positions.size());
    positions.insert(positions.end(), slice.subspaces.begin(), slice.subspaces.end());
  }

  RecoveryPlan plan;
  auto in_dims = [&](uint32_t m) {
    return std::binary_search(dims.begin(), dims.end(), m);
  };
  for (uint32_t m : dims) {
    if (2 * m < o.k && in_dims(o.k - m)) {
      IntersectionGraph g = build_bipartite_graph(o.k, m, o.p, o.cap);
      Matching match = max_bipartite_matching(g);
      for (const auto& [u, v] : match.pairs) {
        plan.pairs.emplace_back(offset_of[m] + u, offset_of[o.k - m] + (v - g.n_left));
      }
    } else if (2 * m > o.k && in_dims(o.k - m)) {
      continue;  // already paired from the other side
    } else if (m == 1) {
      // distinct 1-dimensional subgroups always intersect trivially
      const uint32_t count = static_cast<uint32_t>(
          enumerate_subspaces(amb, 1, o.cap).subspaces.size());
      for (uint32_t i = 0; i + 1 < count; i += 2) {
        plan.pairs.emplace_back(offset_of[1] + i, offset_of[1] + i + 1);
      }
    } else if (2 * m == o.k && o.p == 2) {
      IntersectionGraph g = build_halfdim_graph(o.k, o.cap);
      Matching match = max_general_matching(g);
      for (const auto& [u, v] : match.pairs) {
        plan.pairs.emplace_back(offset_of[m] + u, offset_of[m] + v);
      }
    } else {
      throw domain_error("no pairing rule for dim " + std::to_string(m) +
                         " in this selection (partner dim " +
                         std::to_string(o.k - m) + " missing)");
    }
  }

  if (o.shorten) {
    std::vector<bool> keep(positions.size(), false);
    for (const auto& [a, b] : plan.pairs) keep[a] = keep[b] = true;
    std::vector<uint32_t> remap(positions.size(), 0);
    std::vector<Subspace> kept;
    for (uint32_t i = 0; i < positions.size(); ++i) {
      if (keep[i]) {
        remap[i] = static_cast<uint32_t>(kept.size());
        kept.push_back(positions[i]);
      }
    }
    if (kept.empty()) throw domain_error("--shorten removed every position (empty plan)");
    for (auto& [a, b] : plan.pairs) {
      a = remap[a];
      b = remap[b];
    }
    positions = std::move(kept);
  }
  return build_batch_code(SubgroupSystem(amb, std::move(positions)), std::move(plan));
}

void run_build(const BuildOpts& o) {
  BatchCode bc = o.full ? build_full_lattice_batch_code(o.k, o.p, o.cap)
                        : build_dims_code(o);
  const BatchParams& prm = bc.params();
  std::string summary = "(n,k,t,r) = (" + std::to_string(prm.n) + "," +
                        std::to_string(prm.k_info) + "," + std::to_string(prm.t) + "," +
                        std::to_string(prm.r) + "), rho=" + std::to_string(prm.rho);
  emit(descriptor_to_json(bc), o.out, summary);
}

struct CodeIoOpts {
  std::string code, info, word, req, out;
};

QuasiUniformCode load_code(const std::string& path) {
  return build_code(system_from_descriptor(read_file(path)));
}

void run_encode(const CodeIoOpts& o) {
  QuasiUniformCode code = load_code(o.code);
  const FpVector g = vector_from_string(code.ambient(), o.info);
  emit(to_string(code.encode(g)) + "\n", o.out, "encoded " + o.info);
}

void run_decode(const CodeIoOpts& o) {
  QuasiUniformCode code = load_code(o.code);
  const Codeword w = codeword_from_string(o.word);
  emit(to_string(code.decode_full(w)) + "\n", o.out, "decoded");
}

void run_serve(const CodeIoOpts& o) {
  const std::string text = read_file(o.code);
  SubgroupSystem sys = system_from_descriptor(text);
  auto plan = plan_from_descriptor(text);
  if (!plan) throw domain_error("descriptor carries no recovery plan; build one first");
  BatchCode bc = build_batch_code(std::move(sys), std::move(*plan));
  Codeword w;
  if (!o.word.empty()) {
    w = codeword_from_string(o.word);
  } else if (!o.info.empty()) {
    w = bc.code().encode(vector_from_string(bc.code().ambient(), o.info));
  } else {
    throw domain_error("pass --word or --info");
  }
  const ServiceAssignment sa = serve_request(bc, w, request_from_string(o.req));
  std::string body;
  for (const auto& item : sa.items) {
    body += "x_" + std::to_string(item.request_index) + " = " +
            std::to_string(item.value) + "  (pair " +
            std::to_string(item.pair_used.first) + "," +
            std::to_string(item.pair_used.second) + ", vector " +
            to_string(item.decoded) + ")\n";
  }
  emit(body, o.out, "served " + std::to_string(sa.items.size()) + " requests");
}

struct MatchOpts {
  uint32_t p = 2, k = 0, m = 0;
  std::string format = "text", out;
  uint64_t cap = 0;
  bool edge_conn = false;
};

void run_match(const MatchOpts& o) {
  const bool halfdim = 2 * o.m == o.k;
  IntersectionGraph g = halfdim ? build_halfdim_graph(o.k, o.cap)
                                : build_bipartite_graph(o.k, o.m, o.p, o.cap);
  Matching match = halfdim ? max_general_matching(g) : max_bipartite_matching(g);
  const auto components = connected_components(g);
  const auto profile = degree_profile(g);

  std::string summary = "vertices=" + std::to_string(g.vertex_count()) +
                        " edges=" + std::to_string(g.edge_count) +
                        " matching=" + std::to_string(match.size()) +
                        " components=" + std::to_string(components.size());
  if (o.edge_conn) summary += " edge_connectivity=" + std::to_string(edge_connectivity(g));

  if (o.format == "json") {
    emit(graph_to_json(g, &match), o.out, summary);
  } else if (o.format == "dot") {
    emit(graph_to_dot(g, &match), o.out, summary);
  } else if (o.format == "csv") {
    std::string csv = "degree,count\n";
    for (const auto& [deg, cnt] : profile) {
      csv += std::to_string(deg) + "," + std::to_string(cnt) + "\n";
    }
    emit(csv, o.out, summary);
  } else {
    std::string text = summary + "\ndegree profile:";
    for (const auto& [deg, cnt] : profile) {
      text += " " + std::to_string(deg) + "x" + std::to_string(cnt);
    }
    text += "\npairs:\n";
    for (const auto& [a, b] : match.pairs) {
      text += "  " + to_string(g.vertices[a]) + "  |  " + to_string(g.vertices[b]) + "\n";
    }
    emit(text, o.out, summary);
  }
}

struct VerifyOpts {
  std::string code, out;
  uint32_t max_subset = 3;
  uint64_t seed = oracle::kDefaultSeed;
  uint32_t samples = 256;
};

int run_verify(const VerifyOpts& o) {
  QuasiUniformCode code = load_code(o.code);
  const auto result = oracle::check_quasi_uniform(code, o.max_subset,
                                                  /*allow_sampling=*/true, o.seed,
                                                  o.samples);
  const bool ok = result.all_pass();
  std::string summary = std::string(ok ? "PASS" : "FAIL") + " (" +
                        std::to_string(result.reports.size()) + " subsets, " +
                        (result.sampled ? "sampled, " : "exhaustive, ") +
                        "seed=" + std::to_string(result.seed) + ")";
  emit(uniformity_to_json(result), o.out, summary);
  return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-uniform batch codes from subgroup lattices of (Z_p)^k"};
  app.require_subcommand(1);

  const uint64_t cap_default = [] {
    try {
      return env_cap();
    } catch (const std::exception&) {
      return kDefaultCap;
    }
  }();

  SubgroupsOpts sg;
  sg.cap = cap_default;
  auto* sub_sg = app.add_subcommand("subgroups", "enumerate subgroup lattice slices");
  sub_sg->add_option("--p", sg.p, "prime modulus")->capture_default_str();
  sub_sg->add_option("--k", sg.k, "ambient dimension")->required();
  sub_sg->add_option("--dim", sg.dim, "single slice dimension (default: all)");
  sub_sg->add_option("--format", sg.format, "text|json|csv")->capture_default_str();
  sub_sg->add_option("--out", sg.out, "output file");
  sub_sg->add_option("--cap", sg.cap, "resource cap")->capture_default_str();

  BuildOpts bd;
  bd.cap = cap_default;
  auto* sub_bd = app.add_subcommand("build", "build a quasi-uniform batch code");
  sub_bd->add_option("--p", bd.p, "prime modulus")->capture_default_str();
  sub_bd->add_option("--k", bd.k, "ambient dimension")->required();
  sub_bd->add_option("--dims", bd.dims, "subgroup dimensions to use")->delimiter(',');
  sub_bd->add_flag("--full", bd.full, "use every nontrivial subgroup");
  sub_bd->add_flag("--shorten", bd.shorten, "drop positions not covered by the plan");
  sub_bd->add_option("--out", bd.out, "descriptor file");
  sub_bd->add_option("--cap", bd.cap, "resource cap")->capture_default_str();

  CodeIoOpts enc;
  auto* sub_enc = app.add_subcommand("encode", "encode an information vector");
  sub_enc->add_option("--code", enc.code, "code descriptor file")->required();
  sub_enc->add_option("--info", enc.info, "information vector digits")->required();
  sub_enc->add_option("--out", enc.out, "output file");

  CodeIoOpts dec;
  auto* sub_dec = app.add_subcommand("decode", "decode a codeword");
  sub_dec->add_option("--code", dec.code, "code descriptor file")->required();
  sub_dec->add_option("--word", dec.word, "codeword labels")->required();
  sub_dec->add_option("--out", dec.out, "output file");

  CodeIoOpts srv;
  auto* sub_srv = app.add_subcommand("serve", "serve a batch request");
  sub_srv->add_option("--code", srv.code, "code descriptor file")->required();
  sub_srv->add_option("--info", srv.info, "information vector digits");
  sub_srv->add_option("--word", srv.word, "codeword labels");
  sub_srv->add_option("--req", srv.req, "request indices, e.g. 1,2,2")->required();
  sub_srv->add_option("--out", srv.out, "output file");

  MatchOpts mt;
  mt.cap = cap_default;
  auto* sub_mt = app.add_subcommand("match", "build an intersection graph and match it");
  sub_mt->add_option("--p", mt.p, "prime modulus")->capture_default_str();
  sub_mt->add_option("--k", mt.k, "ambient dimension")->required();
  sub_mt->add_option("--m", mt.m, "slice dimension")->required();
  sub_mt->add_option("--format", mt.format, "text|json|dot|csv")->capture_default_str();
  sub_mt->add_flag("--edge-connectivity", mt.edge_conn, "also compute edge connectivity");
  sub_mt->add_option("--out", mt.out, "output file");
  sub_mt->add_option("--cap", mt.cap, "resource cap")->capture_default_str();

  VerifyOpts vf;
  auto* sub_vf = app.add_subcommand("verify", "check quasi-uniformity of a code");
  sub_vf->add_option("--code", vf.code, "code descriptor file")->required();
  sub_vf->add_option("--max-subset", vf.max_subset, "largest subset size")->capture_default_str();
  sub_vf->add_option("--seed", vf.seed, "sampling seed")->capture_default_str();
  sub_vf->add_option("--samples", vf.samples, "sampled subsets per size")->capture_default_str();
  sub_vf->add_option("--out", vf.out, "report file");

  int rc = 0;
  try {
    app.parse(argc, argv);
    if (sub_sg->parsed()) run_subgroups(sg);
    if (sub_bd->parsed()) run_build(bd);
    if (sub_enc->parsed()) run_encode(enc);
    if (sub_dec->parsed()) run_decode(dec);
    if (sub_srv->parsed()) run_serve(srv);
    if (sub_mt->parsed()) run_match(mt);
    if (sub_vf->parsed()) rc = run_verify(vf);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const cap_error& e) {
    std::cerr << "error (resource cap): " << e.what() << "\n";
    return 3;
  } catch (const data_error& e) {
    std::cerr << "error (corrupt data): " << e.what() << "\n";
    return 4;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
