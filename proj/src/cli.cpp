#include "pfd/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "pfd/density.hpp"
#include "pfd/io.hpp"

namespace pfd {

using nlohmann::json;

namespace {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

long long env_ll(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::atoll(v);
}

std::string vertices_line(const std::vector<int>& vs) {
  std::ostringstream oss;
  for (size_t i = 0; i < vs.size(); ++i) oss << (i ? " " : "") << vs[i];
  return oss.str();
}

MultiGraph load_graph(const std::string& path) {
  std::string text = read_file(path);
  return parse_graph(text);
}

struct Run {
  ManifestInfo manifest;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  int finish(int code, const std::string& outcome) {
    manifest.outcome = outcome;
    manifest.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    emit_manifest(manifest);
    return code;
  }
};

}  // namespace

CorpusOutcome run_corpus(unsigned long long seed, int count, int n_max, int m_max) {
  std::mt19937_64 rng(seed);
  json by_k;
  long long total_runs = 0, total_ok = 0;
  for (int k : {1, 2, 3}) {
    json row;
    row["decomposed"] = 0;
    row["certificates"] = 0;
    row["verified_ok"] = 0;
    row["failed"] = 0;
    by_k[std::to_string(k)] = row;
  }
  for (int i = 0; i < count; ++i) {
    MultiGraph g;
    g.n = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(n_max));
    int m = static_cast<int>(rng() % static_cast<unsigned long long>(m_max + 1));
    for (int e = 0; e < m; ++e) {
      int u = static_cast<int>(rng() % static_cast<unsigned long long>(g.n));
      int v = static_cast<int>(rng() % static_cast<unsigned long long>(g.n));
      g.edges.push_back({u, v});
    }
    Rational density = g.n > 0 ? max_density(g).value : Rational(0);
    for (int k : {1, 2, 3}) {
      json& row = by_k[std::to_string(k)];
      auto dmin = minimal_valid_d(density, k);
      ++total_runs;
      bool ok = false;
      if (dmin) {
        Params p(k, *dmin);
        auto res = decompose(g, p);
        if (res.outcome == DecomposeResult::Outcome::Success) {
          row["decomposed"] = row["decomposed"].get<int>() + 1;
          ok = verify_decomposition(g, *res.decomposition, p).pass();
        }
      } else {
        Params p(k, 1);
        auto res = decompose(g, p);
        if (res.outcome == DecomposeResult::Outcome::Refuted) {
          row["certificates"] = row["certificates"].get<int>() + 1;
          ok = verify_certificate(g, *res.certificate, p);
        }
      }
      if (ok) {
        row["verified_ok"] = row["verified_ok"].get<int>() + 1;
        ++total_ok;
      } else {
        row["failed"] = row["failed"].get<int>() + 1;
      }
    }
  }
  CorpusOutcome out;
  out.summary["seed"] = seed;
  out.summary["count"] = count;
  out.summary["n_max"] = n_max;
  out.summary["m_max"] = m_max;
  out.summary["by_k"] = by_k;
  out.summary["runs"] = total_runs;
  out.summary["verified_ok"] = total_ok;
  out.summary["all_verified"] = total_ok == total_runs;
  out.all_ok = total_ok == total_runs;
  return out;
}

namespace {

int cmd_density(Run& run, const std::string& graph_path) {
  std::string text = read_file(graph_path);
  run.manifest.input_hash = fnv1a_hex(text);
  MultiGraph g = parse_graph(text);
  auto md = max_density(g);
  std::string gamma = "undefined";
  std::string gamma_witness;
  if (g.n >= 2 && g.edge_count() >= 1) {
    auto fa = fractional_arboricity(g);
    gamma = fa.value.str();
    gamma_witness = vertices_line(fa.vertices);
  }
  std::cout << "mad/2 = " << md.value.str() << ", gamma = " << gamma << "\n";
  std::cout << "mad_witness: " << vertices_line(md.vertices) << "\n";
  if (!gamma_witness.empty()) std::cout << "gamma_witness: " << gamma_witness << "\n";
  return run.finish(0, "ok");
}

int cmd_decompose(Run& run, int k, int d, long long cap, const std::string& graph_path,
                  const std::string& out_path) {
  std::string text = read_file(graph_path);
  run.manifest.input_hash = fnv1a_hex(text);
  MultiGraph g = parse_graph(text);
  Params p(k, d);
  auto res = decompose(g, p, cap);
  run.manifest.iterations = res.iterations;
  json j = decompose_result_json(res);
  if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
  switch (res.outcome) {
    case DecomposeResult::Outcome::Success: {
      auto rep = verify_decomposition(g, *res.decomposition, p);
      std::cout << "success: " << (k + 1) << " classes, red forest with "
                << res.decomposition->red.size() << " edges, iterations=" << res.iterations
                << ", verified=" << (rep.pass() ? "yes" : "NO") << "\n";
      if (out_path.empty()) std::cout << j.dump() << "\n";
      return run.finish(rep.pass() ? 0 : 1, rep.pass() ? "success" : "verify-failed");
    }
    case DecomposeResult::Outcome::Refuted: {
      bool ok = verify_certificate(g, *res.certificate, p);
      std::cout << "certificate: density above " << k << " + " << d << "/" << (d + k + 1)
                << ", verified=" << (ok ? "yes" : "NO") << "\n";
      if (out_path.empty()) std::cout << j.dump() << "\n";
      return run.finish(ok ? 1 : 2, ok ? "certificate" : "certificate-invalid");
    }
    default:
      std::cout << "iteration cap reached after " << res.iterations << " moves\n";
      return run.finish(3, "iteration-cap");
  }
}

int cmd_verify(Run& run, int k, int d, const std::string& graph_path,
               const std::string& result_path) {
  std::string text = read_file(graph_path);
  run.manifest.input_hash = fnv1a_hex(text);
  MultiGraph g = parse_graph(text);
  Params p(k, d);
  json j = json::parse(read_file(result_path));
  if (j.contains("certificate") && !j.at("certificate").is_null()) {
    Certificate cert = certificate_from_json(j.at("certificate"));
    bool ok = verify_certificate(g, cert, p);
    json out;
    out["certificate_valid"] = ok;
    std::cout << out.dump() << "\n";
    return run.finish(ok ? 0 : 1, ok ? "certificate-valid" : "certificate-invalid");
  }
  if (j.at("classes").empty() && g.edge_count() > 0) {
    std::cout << "{\"error\":\"no decomposition or certificate in result\"}\n";
    return run.finish(1, "nothing-to-verify");
  }
  Decomposition dec = decomposition_from_json(j);
  Report rep = verify_decomposition(g, dec, p);
  std::cout << to_json(rep).dump() << "\n";
  return run.finish(rep.pass() ? 0 : 1, rep.pass() ? "pass" : "fail");
}

int cmd_generate_diam(Run& run, const DiamSpec& spec, const std::string& out_base) {
  auto [g, ex] = build_diameter_example(spec);
  std::string text = serialize_graph(g);
  run.manifest.input_hash = fnv1a_hex(text);
  json params;
  params["family"] = "diam";
  params["k"] = spec.k;
  params["ell"] = spec.ell;
  params["alpha"] = spec.alpha;
  params["delta"] = spec.delta;
  params["p"] = spec.p;
  if (spec.big_d) params["D"] = *spec.big_d;
  if (spec.eps) params["eps"] = spec.eps->str();
  json side = sidecar_json(ex, params, predicted_density(spec), check_validity(spec));
  write_file(out_base + ".txt", text);
  write_file(out_base + ".json", side.dump(2) + "\n");
  std::cout << "wrote " << out_base << ".txt (n=" << g.n << ", m=" << g.edge_count() << ") and "
            << out_base << ".json\n";
  return run.finish(0, "ok");
}

int cmd_generate_zbig(Run& run, const ZSpec& spec, const std::string& out_base) {
  auto [g, ex] = build_z_example(spec);
  std::string text = serialize_graph(g);
  run.manifest.input_hash = fnv1a_hex(text);
  json params;
  params["family"] = "zbig";
  params["k"] = spec.k;
  params["d"] = spec.d;
  params["z"] = spec.z;
  params["delta"] = spec.delta;
  params["p"] = spec.p;
  if (spec.eps) params["eps"] = spec.eps->str();
  json side = sidecar_json(ex, params, predicted_density(spec), check_validity(spec));
  write_file(out_base + ".txt", text);
  write_file(out_base + ".json", side.dump(2) + "\n");
  std::cout << "wrote " << out_base << ".txt (n=" << g.n << ", m=" << g.edge_count() << ") and "
            << out_base << ".json\n";
  return run.finish(0, "ok");
}

int cmd_oracle(Run& run, int k, const BruteConstraints& cons, int cap,
               const std::string& graph_path) {
  std::string text = read_file(graph_path);
  run.manifest.input_hash = fnv1a_hex(text);
  MultiGraph g = parse_graph(text);
  auto res = brute_force_search(g, k, cons, cap);
  run.manifest.iterations = res.nodes;
  switch (res.outcome) {
    case BruteResult::Outcome::Found:
      std::cout << to_json(*res.dec).dump() << "\n";
      return run.finish(0, "found");
    case BruteResult::Outcome::Unsat:
      std::cout << "unsat\n";
      return run.finish(1, "unsat");
    default:
      std::cout << "edge cap exceeded\n";
      return run.finish(3, "cap");
  }
}

int cmd_lbcheck(Run& run, int k, int max_red_degree, int diam_bound, std::optional<int> size_floor,
                long long timeout_ms, int cap, const std::string& graph_path,
                const std::string& out_path) {
  std::string text = read_file(graph_path);
  run.manifest.input_hash = fnv1a_hex(text);
  MultiGraph g = parse_graph(text);
  auto res = check_lower_bound(g, k, max_red_degree, diam_bound, size_floor, timeout_ms, cap);
  run.manifest.iterations = res.nodes;
  switch (res.outcome) {
    case LowerBoundResult::Outcome::Found: {
      bool ok = verify_lb_witness(g, *res.dec, k, max_red_degree, diam_bound, size_floor);
      json j = to_json(*res.dec);
      j["reverified"] = ok;
      if (!out_path.empty())
        write_file(out_path, j.dump(2) + "\n");
      else
        std::cout << j.dump() << "\n";
      return run.finish(ok ? 0 : 2, ok ? "witness" : "witness-invalid");
    }
    case LowerBoundResult::Outcome::Unsat:
      std::cout << "unsat: every bounded-degree decomposition has a forbidden red component\n";
      return run.finish(1, "unsat");
    case LowerBoundResult::Outcome::Timeout:
      std::cout << "timeout\n";
      return run.finish(3, "timeout");
    default:
      std::cout << "edge cap exceeded\n";
      return run.finish(3, "cap");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"pseudoforest decomposition toolkit"};
  app.require_subcommand(1);

  Run run;
  for (auto& a : args) run.manifest.parameters.push_back(a);
  run.manifest.command = args.empty() ? "" : args[0];
  run.manifest.input_hash = "-";

  // density
  auto* density_cmd = app.add_subcommand("density", "exact mad/2 and fractional arboricity");
  std::string density_graph;
  density_cmd->add_option("graph", density_graph)->required();

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "k+1 pseudoforests, one a bounded forest");
  int dec_k = 1, dec_d = 1;
  long long dec_cap = env_ll("PFD_ITERATION_CAP", 1000000);
  std::string dec_graph, dec_out;
  dec_cmd->add_option("--k", dec_k)->required();
  dec_cmd->add_option("--d", dec_d)->required();
  dec_cmd->add_option("--cap", dec_cap);
  dec_cmd->add_option("-o,--out", dec_out);
  dec_cmd->add_option("graph", dec_graph)->required();

  // generate diam | zbig
  auto* gen_cmd = app.add_subcommand("generate", "lower-bound construction generators");
  gen_cmd->require_subcommand(1);
  auto* diam_cmd = gen_cmd->add_subcommand("diam", "diameter lower-bound family");
  DiamSpec dspec;
  int diam_D = -1;
  std::string diam_eps, diam_out = "diam_example";
  diam_cmd->add_option("--k", dspec.k)->required();
  diam_cmd->add_option("--ell", dspec.ell)->required();
  diam_cmd->add_option("--alpha", dspec.alpha)->required();
  diam_cmd->add_option("--delta", dspec.delta)->required();
  diam_cmd->add_option("--p", dspec.p)->required();
  diam_cmd->add_option("--D", diam_D);
  diam_cmd->add_option("--eps", diam_eps);
  diam_cmd->add_option("-o,--out", diam_out);
  auto* zbig_cmd = gen_cmd->add_subcommand("zbig", "big-component lower-bound family");
  ZSpec zspec;
  std::string zbig_eps, zbig_out = "zbig_example";
  zbig_cmd->add_option("--k", zspec.k)->required();
  zbig_cmd->add_option("--d", zspec.d)->required();
  zbig_cmd->add_option("--z", zspec.z)->required();
  zbig_cmd->add_option("--delta", zspec.delta)->required();
  zbig_cmd->add_option("--p", zspec.p)->required();
  zbig_cmd->add_option("--eps", zbig_eps);
  zbig_cmd->add_option("-o,--out", zbig_out);

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "check a decomposition or certificate file");
  int ver_k = 1, ver_d = 1;
  std::string ver_graph, ver_result;
  ver_cmd->add_option("--k", ver_k)->required();
  ver_cmd->add_option("--d", ver_d)->required();
  ver_cmd->add_option("graph", ver_graph)->required();
  ver_cmd->add_option("result", ver_result)->required();

  // oracle
  auto* or_cmd = app.add_subcommand("oracle", "exhaustive decomposition search");
  int or_k = 1, or_cap = 14;
  bool or_red_forest = false;
  int or_max_edges = -1, or_max_diam = -1, or_max_deg = -1;
  std::string or_graph;
  or_cmd->add_option("--k", or_k)->required();
  or_cmd->add_flag("--red-forest", or_red_forest);
  or_cmd->add_option("--max-component-edges", or_max_edges);
  or_cmd->add_option("--max-diam", or_max_diam);
  or_cmd->add_option("--max-red-degree", or_max_deg);
  or_cmd->add_option("--cap", or_cap);
  or_cmd->add_option("graph", or_graph)->required();

  // lbcheck
  auto* lb_cmd = app.add_subcommand("lbcheck", "lower-bound unsatisfiability search");
  int lb_k = 1, lb_deg = 1, lb_diam = 1, lb_floor = -1, lb_cap = 40;
  long long lb_timeout = env_ll("PFD_SEARCH_TIMEOUT_MS", 300000);
  std::string lb_graph, lb_out;
  lb_cmd->add_option("--k", lb_k)->required();
  lb_cmd->add_option("--max-red-degree", lb_deg)->required();
  lb_cmd->add_option("--diam-bound", lb_diam)->required();
  lb_cmd->add_option("--size-floor", lb_floor);
  lb_cmd->add_option("--timeout-ms", lb_timeout);
  lb_cmd->add_option("--cap", lb_cap);
  lb_cmd->add_option("-o,--out", lb_out);
  lb_cmd->add_option("graph", lb_graph)->required();

  // corpus
  auto* cor_cmd = app.add_subcommand("corpus", "seeded random-multigraph driver");
  unsigned long long cor_seed = 0;
  int cor_count = 100, cor_nmax = 10, cor_mmax = 20;
  cor_cmd->add_option("--seed", cor_seed)->required();
  cor_cmd->add_option("--count", cor_count);
  cor_cmd->add_option("--n-max", cor_nmax);
  cor_cmd->add_option("--m-max", cor_mmax);

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  std::string prog = "pfdecomp";
  argv.push_back(prog.data());
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    if (code == 0) return run.finish(0, "help");
    return run.finish(2, "usage-error");
  }

  try {
    if (*density_cmd) return cmd_density(run, density_graph);
    if (*dec_cmd) return cmd_decompose(run, dec_k, dec_d, dec_cap, dec_graph, dec_out);
    if (*diam_cmd) {
      if (diam_D >= 0) dspec.big_d = diam_D;
      if (!diam_eps.empty()) dspec.eps = parse_rational(diam_eps);
      return cmd_generate_diam(run, dspec, diam_out);
    }
    if (*zbig_cmd) {
      if (!zbig_eps.empty()) zspec.eps = parse_rational(zbig_eps);
      return cmd_generate_zbig(run, zspec, zbig_out);
    }
    if (*ver_cmd) return cmd_verify(run, ver_k, ver_d, ver_graph, ver_result);
    if (*or_cmd) {
      BruteConstraints cons;
      cons.red_forest = or_red_forest;
      if (or_max_edges >= 0) cons.max_component_edges = or_max_edges;
      if (or_max_diam >= 0) cons.max_diam = or_max_diam;
      if (or_max_deg >= 0) cons.max_red_degree = or_max_deg;
      return cmd_oracle(run, or_k, cons, or_cap, or_graph);
    }
    if (*lb_cmd) {
      std::optional<int> floor;
      if (lb_floor >= 0) floor = lb_floor;
      return cmd_lbcheck(run, lb_k, lb_deg, lb_diam, floor, lb_timeout, lb_cap, lb_graph, lb_out);
    }
    if (*cor_cmd) {
      auto out = run_corpus(cor_seed, cor_count, cor_nmax, cor_mmax);
      std::cout << out.summary.dump() << "\n";
      return run.finish(out.all_ok ? 0 : 1, out.all_ok ? "all-verified" : "failures");
    }
  } catch (const ParseError& e) {
    std::cerr << "graph parse error: " << e.what() << "\n";
    return run.finish(2, "parse-error");
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return run.finish(2, "invalid-arguments");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return run.finish(2, "error");
  }
  return 2;
}

}  // namespace pfd
