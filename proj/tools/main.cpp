// sahq: trace generation, replay, verification, growth benchmarks and a
// Dijkstra harness for the self-adjusting heap library.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sah/bench.hpp"
#include "sah/graph.hpp"
#include "sah/verify.hpp"

namespace {

using namespace sah;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

bool parse_mix(const std::string& s, double& wi, double& wd, double& wk) {
  char c1 = 0, c2 = 0;
  std::istringstream is(s);
  if (!(is >> wi >> c1 >> wd >> c2 >> wk) || c1 != ':' || c2 != ':') return false;
  return wi >= 0 && wd >= 0 && wk >= 0 && wi + wd + wk > 0;
}

VariantId need_variant(const std::string& s) {
  VariantId v{};
  if (!parse_variant(s, v)) throw CLI::ValidationError("--variant", "unknown variant " + s);
  return v;
}

Mode need_mode(const std::string& s) {
  Mode m{};
  if (!parse_mode(s, m)) throw CLI::ValidationError("--mode", "unknown mode " + s);
  return m;
}

constexpr VariantId kAllVariants[] = {VariantId::pairing, VariantId::multipass,
                                      VariantId::slim, VariantId::smooth};

int cmd_gen(std::uint64_t seed, int n, const std::string& mix, int heaps,
            bool sorting, const std::string& out_path) {
  Trace t;
  if (sorting) {
    t = gen_sorting_trace(n, seed);
  } else {
    double wi = 5, wd = 3, wk = 2;
    if (!mix.empty() && !parse_mix(mix, wi, wd, wk)) {
      std::cerr << "bad --mix, expected i:d:k\n";
      return 2;
    }
    RandomTraceCfg cfg;
    cfg.w_insert = wi;
    cfg.w_delete_min = wd;
    cfg.w_decrease_key = wk;
    cfg.w_meld = heaps > 1 ? 0.2 : 0;
    cfg.w_erase = 0.2;
    cfg.w_find_min = 0.2;
    cfg.n_ops = n;
    cfg.n_heaps = heaps;
    t = gen_random_trace(cfg, seed);
  }
  emit(out_path, serialize_trace(t));
  return 0;
}

int cmd_replay(const std::string& trace_path, const std::string& variant,
               const std::string& mode, const std::string& out_path) {
  const Trace t = parse_trace(slurp(trace_path));
  const ReplayResult r = replay(t, need_variant(variant), need_mode(mode));
  for (const OutputRec& o : r.outputs)
    std::cout << (o.has_key ? std::to_string(o.key) : std::string("none")) << "\n";
  if (!out_path.empty()) emit(out_path, summary_csv(amortized_summary(r.metrics)));
  return 0;
}

int cmd_verify(const std::string& trace_path, const std::string& variant,
               const std::string& mode) {
  const Trace t = parse_trace(slurp(trace_path));
  const std::vector<OutputRec> expect = oracle_replay(t);

  std::vector<VariantId> vs;
  if (variant.empty())
    vs.assign(std::begin(kAllVariants), std::end(kAllVariants));
  else
    vs.push_back(need_variant(variant));
  std::vector<Mode> ms;
  if (mode.empty())
    ms = {Mode::eager, Mode::lazy};
  else
    ms.push_back(need_mode(mode));

  bool ok = true;
  for (VariantId v : vs) {
    for (Mode m : ms) {
      const ReplayResult r = replay(t, v, m);
      const bool oracle_ok = r.outputs == expect;
      std::cout << variant_name(v) << "/" << mode_name(m) << " ORACLE "
                << (oracle_ok ? "PASS" : "FAIL") << "\n";
      const Classification c = classify(t, r);
      const Report rep = check_lemmas(t, r, c, v);
      std::cout << rep.render();
      ok = ok && oracle_ok && rep.ok();
    }
  }
  return ok ? 0 : 1;
}

int cmd_bench(std::uint64_t seed, int max_exp, const std::string& mix,
              const std::string& mode, const std::string& out_path) {
  const Mode m = need_mode(mode.empty() ? "eager" : mode);
  std::vector<std::uint64_t> ns;
  for (int e = 10; e <= max_exp; ++e) ns.push_back(std::uint64_t{1} << e);
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 5; ++s) seeds.push_back(seed + s);

  std::ostringstream os;
  const auto cells = bench_sorting(kAllVariants, m, ns, seeds);
  os << sorting_csv(cells);
  os << "variant,model,coefficient\n";
  for (VariantId v : kAllVariants) {
    const GrowthFit f = sorting_fit(cells, v, GrowthModel::lg);
    os << variant_name(v) << "," << growth_model_name(f.model) << ","
       << f.coefficient << "\n";
  }

  if (!mix.empty()) {
    double wi = 1, wd = 1, wk = 8;
    if (!parse_mix(mix, wi, wd, wk)) {
      std::cerr << "bad --mix, expected i:d:k\n";
      return 2;
    }
    const VariantId lm[] = {VariantId::slim, VariantId::smooth};
    const auto mcells = bench_mix(lm, m, ns, seeds, wi, wd, wk, 4.0);
    os << mix_csv(mcells);
    os << "variant,model,coefficient,ratio_small,ratio_large\n";
    for (VariantId v : lm) {
      const DkGrowth g = dk_growth(mcells, v);
      os << variant_name(v) << "," << growth_model_name(g.lglg_fit.model) << ","
         << g.lglg_fit.coefficient << "," << g.ratio_smallest_n << ","
         << g.ratio_largest_n << "\n";
    }
  }
  emit(out_path, os.str());
  return 0;
}

int cmd_dijkstra(const std::string& graph_path, const std::string& variant,
                 const std::string& mode, std::uint32_t source, bool check,
                 const std::string& out_path) {
  const Graph g = parse_dimacs(slurp(graph_path));
  const DijkstraResult r =
      run_dijkstra(g, source, need_variant(variant), need_mode(mode));
  emit(out_path, render_distances(r.dist));
  std::cerr << "links " << r.metrics.links << " comparisons "
            << r.metrics.comparisons << " cuts " << r.metrics.cuts << "\n";
  if (check) {
    const auto ref = reference_dijkstra(g, source);
    if (ref != r.dist) {
      std::cerr << "distance mismatch against reference\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-adjusting heap workbench"};
  app.require_subcommand(1);

  std::string variant, mode, mix, out_path, trace_path, graph_path;
  std::uint64_t seed = 1;
  int n = 1000, heaps = 1, max_exp = 18;
  std::uint32_t source = 1;
  bool sorting = false, check = false;

  auto* gen = app.add_subcommand("gen", "generate a trace");
  gen->add_option("--seed", seed);
  gen->add_option("--n", n, "operation count (or size with --sorting)");
  gen->add_option("--mix", mix, "insert:delete-min:decrease-key weights");
  gen->add_option("--heaps", heaps);
  gen->add_flag("--sorting", sorting, "n inserts then n delete-mins");
  gen->add_option("--out", out_path);

  auto* rep = app.add_subcommand("replay", "replay a trace");
  rep->add_option("trace", trace_path)->required();
  rep->add_option("--variant", variant)->required();
  rep->add_option("--mode", mode)->required();
  rep->add_option("--out", out_path, "metrics CSV");

  auto* ver = app.add_subcommand("verify", "oracle check and lemma report");
  ver->add_option("trace", trace_path)->required();
  ver->add_option("--variant", variant, "default: all");
  ver->add_option("--mode", mode, "default: both");

  auto* ben = app.add_subcommand("bench", "growth sweeps");
  ben->add_option("--seed", seed);
  ben->add_option("--n", max_exp, "largest size exponent (sizes 2^10..2^n)");
  ben->add_option("--mix", mix, "also run a decrease-key mix sweep");
  ben->add_option("--mode", mode);
  ben->add_option("--out", out_path);

  auto* dij = app.add_subcommand("dijkstra", "shortest paths on a DIMACS graph");
  dij->add_option("graph", graph_path)->required();
  dij->add_option("--variant", variant)->required();
  dij->add_option("--mode", mode);
  dij->add_option("--source", source);
  dij->add_flag("--check", check, "compare against a binary-heap reference");
  dij->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(seed, n, mix, heaps, sorting, out_path);
    if (rep->parsed()) return cmd_replay(trace_path, variant, mode, out_path);
    if (ver->parsed()) return cmd_verify(trace_path, variant, mode);
    if (ben->parsed()) return cmd_bench(seed, max_exp, mix, mode, out_path);
    if (dij->parsed())
      return cmd_dijkstra(graph_path, variant, mode, source, check, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const TraceError& e) {
    std::cerr << "trace error: " << e.what() << "\n";
    return 2;
  } catch (const GraphError& e) {
    std::cerr << "graph error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
