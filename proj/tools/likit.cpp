// likit command-line front end: named verification suites plus direct
// commands for root-system info, representation weights, stabilizer search,
// branching along a toral embedding, and trace-word membership.
//
// Exit codes: 0 all checks pass, 1 a check failed or errored, 2 usage or I/O.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "likit/suites.hpp"

namespace {

using namespace likit;

struct CliConfig {
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<int> max_rank;
  std::optional<long> group_cap, node_cap, dim_cap, sampler_bound;
  std::string config_path;
  std::string out_path;
  bool parallel = false;
};

SuiteOptions resolve_options(const CliConfig& cli) {
  SuiteOptions opt;
  if (!cli.config_path.empty()) {
    Json j = load_json(cli.config_path);
    if (j.contains("seed")) opt.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("max_rank")) opt.max_rank = j["max_rank"].get<int>();
    if (j.contains("group_cap")) opt.group_cap = j["group_cap"].get<long>();
    if (j.contains("node_cap")) opt.node_cap = j["node_cap"].get<long>();
    if (j.contains("dim_cap")) opt.dim_cap = j["dim_cap"].get<long>();
    if (j.contains("sampler_bound")) opt.sampler_bound = j["sampler_bound"].get<long>();
  }
  // Flags override file values.
  if (cli.seed) opt.seed = *cli.seed;
  if (cli.max_rank) opt.max_rank = *cli.max_rank;
  if (cli.group_cap) opt.group_cap = *cli.group_cap;
  if (cli.node_cap) opt.node_cap = *cli.node_cap;
  if (cli.dim_cap) opt.dim_cap = *cli.dim_cap;
  if (cli.sampler_bound) opt.sampler_bound = *cli.sampler_bound;
  opt.parallel = cli.parallel;
  return opt;
}

int write_output(const CliConfig& cli, const std::string& text, const Json& json) {
  std::string payload = cli.format == "json" ? json.dump(2) + "\n" : text;
  if (cli.out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(cli.out_path);
  if (!out) {
    std::cerr << "cannot open output file '" << cli.out_path << "'\n";
    return 2;
  }
  out << payload;
  return 0;
}

int run_suite_command(const std::string& name, const CliConfig& cli) {
  SuiteOptions opt = resolve_options(cli);
  SuiteReport report = run_suite(name, opt);
  int io = write_output(cli, to_text(report), report_to_json(report));
  if (io != 0) return io;
  return report.all_pass() ? 0 : 1;
}

Vec parse_weight_arg(const RootSystem& rs, const std::string& arg) {
  if (arg == "adjoint") return highest_root(rs);
  bool numeric = !arg.empty() && arg.find_first_not_of("0123456789") == std::string::npos;
  if (numeric) {
    int idx = std::stoi(arg);
    if (idx < 1 || idx > rs.rank)
      throw value_error("fundamental index out of range for " + rs.name());
    return rs.fundamental_weights[static_cast<std::size_t>(idx - 1)];
  }
  Json j = load_json(arg);
  return vec_from_json(j.contains("coords") ? j["coords"] : j);
}

int cmd_rootsys_info(const std::string& name, const CliConfig& cli) {
  RootSystem rs = build_root_system(name);
  Json j;
  j["name"] = rs.name();
  j["rank"] = rs.rank;
  j["ambient_dim"] = rs.ambient_dim;
  j["roots"] = rs.all_roots.size();
  Json simple = Json::array();
  for (const Vec& s : rs.simple_roots) simple.push_back(to_json(s));
  j["simple_roots"] = std::move(simple);
  SuiteOptions opt = resolve_options(cli);
  std::string weyl_order;
  try {
    weyl_order = weyl_group(rs, false, opt.group_cap).order.get_str();
  } catch (const resource_error& e) {
    weyl_order = std::string("too large: ") + e.what();
  }
  j["weyl_order"] = weyl_order;
  j["diagram_automorphisms"] = diagram_automorphisms(rs).size() + 1;
  LatticeIndex pq = lattice_index(rs.root_lattice, rs.weight_lattice);
  Json div = Json::array();
  for (const Int& d : pq.divisors) div.push_back(d.get_str());
  j["weight_over_root_index"] = pq.index.get_str();
  j["weight_over_root_divisors"] = std::move(div);

  std::ostringstream os;
  os << rs.name() << ": rank " << rs.rank << ", ambient dimension " << rs.ambient_dim << ", "
     << rs.all_roots.size() << " roots\n";
  os << "  simple roots:\n";
  for (const Vec& s : rs.simple_roots) os << "    (" << key_string(s) << ")\n";
  os << "  Weyl group order: " << weyl_order << "\n";
  os << "  diagram automorphism group order: " << diagram_automorphisms(rs).size() + 1 << "\n";
  os << "  weight lattice over root lattice: index " << pq.index.get_str() << ", divisors (";
  for (std::size_t i = 0; i < pq.divisors.size(); ++i)
    os << (i ? "," : "") << pq.divisors[i].get_str();
  os << ")\n";
  return write_output(cli, os.str(), j);
}

int cmd_rep_weights(const std::string& name, const std::string& weight_arg,
                    const CliConfig& cli) {
  RootSystem rs = build_root_system(name);
  Vec hw = parse_weight_arg(rs, weight_arg);
  SuiteOptions opt = resolve_options(cli);
  WeightMultiset ws = freudenthal_weights(rs, hw, opt.dim_cap);
  Json j;
  j["system"] = rs.name();
  j["highest_weight"] = to_json(hw);
  j["dimension"] = ws.dimension();
  j["multiset"] = to_json(ws);
  std::ostringstream os;
  os << rs.name() << " representation with highest weight (" << key_string(hw) << "): dimension "
     << ws.dimension() << "\n";
  for (const auto& [w, m] : ws.entries) os << "  (" << key_string(w) << ") x" << m << "\n";
  return write_output(cli, os.str(), j);
}

int cmd_stab_weights(const std::string& path, const CliConfig& cli) {
  WeightMultiset ws = weight_multiset_from_json(load_json(path));
  SuiteOptions opt = resolve_options(cli);
  StabilizerResult res = weight_multiset_stabilizer(ws, {opt.node_cap});
  std::ostringstream os;
  os << "stabilizer order " << res.group.order.get_str() << " ("
     << res.group.generators.size() << " generators, " << res.stats.nodes << " nodes, "
     << res.stats.prunes << " prunes, " << res.stats.elapsed_sec << "s)\n";
  if (res.restricted_to_span)
    os << "  weights do not span; the group is the identity extension of the stabilizer on "
          "the span\n";
  if (res.ignored_zero_multiplicity > 0)
    os << "  zero weight of multiplicity " << res.ignored_zero_multiplicity
       << " recorded but ignored (zero never constrains an orthogonal map)\n";
  return write_output(cli, os.str(), to_json(res));
}

int cmd_embed_branch(const std::string& emb_arg, const std::string& rep_arg,
                     const CliConfig& cli) {
  ToralEmbedding emb = [&] {
    try {
      return preset_embedding(emb_arg);
    } catch (const value_error&) {
      return embedding_from_json(load_json(emb_arg));
    }
  }();
  SuiteOptions opt = resolve_options(cli);
  Vec hw = parse_weight_arg(emb.target, rep_arg);
  WeightMultiset target_ws = freudenthal_weights(emb.target, hw, opt.dim_cap);
  WeightMultiset pulled = pullback(emb, target_ws);

  Json j;
  j["embedding"] = to_json(emb);
  j["representation_dimension"] = target_ws.dimension();
  j["pullback"] = to_json(pulled);
  std::ostringstream os;
  os << emb.source_name() << " -> " << emb.target.name() << ": pulled back "
     << target_ws.dimension() << "-dimensional weight system\n";
  for (const auto& [w, m] : pulled.entries) os << "  (" << key_string(w) << ") x" << m << "\n";

  if (emb.source) {
    WeightMultiset amb = coroot_multiset_to_ambient(*emb.source, pulled);
    auto dec = decompose(amb, *emb.source, opt.dim_cap);
    Json parts = Json::array();
    os << "decomposition over " << emb.source->name() << ":\n";
    for (const auto& [shw, m] : dec) {
      Json p;
      // Highest weight reported in coroot coordinates of the source.
      Vec cc(emb.source->rank);
      for (int i = 0; i < emb.source->rank; ++i)
        cc(i) = Rat(2) * dot(shw, emb.source->simple_roots[static_cast<std::size_t>(i)]) /
                norm2(emb.source->simple_roots[static_cast<std::size_t>(i)]);
      p["highest_weight"] = to_json(cc);
      p["dimension"] = weyl_dim(*emb.source, shw).get_str();
      p["multiplicity"] = m;
      parts.push_back(std::move(p));
      os << "  " << m << " x (highest weight (" << key_string(cc) << "), dimension "
         << weyl_dim(*emb.source, shw).get_str() << ")\n";
    }
    j["decomposition"] = std::move(parts);
  }
  return write_output(cli, os.str(), j);
}

int cmd_trace_member(const std::string& target_path, const std::string& gens_path,
                     const std::string& algebra, int arity, int degree, const CliConfig& cli) {
  TracePolynomial target = trace_polynomial_from_json(load_json(target_path));
  std::vector<TracePolynomial> gens;
  for (const auto& g : load_json(gens_path)) gens.push_back(trace_polynomial_from_json(g));

  std::size_t split = algebra.find_first_of("0123456789");
  if (split == std::string::npos) throw value_error("algebra must look like gl2, so5, sp4");
  MatrixAlgebra alg = algebra_from_string(algebra.substr(0, split));
  int m = std::stoi(algebra.substr(split));

  std::vector<long> target_degree = multidegree(target, arity);
  long total = 0;
  for (long d : target_degree) total += d;
  if (degree > 0 && total != degree)
    throw value_error("target has total degree " + std::to_string(total) +
                      ", not the requested " + std::to_string(degree));

  std::vector<TracePolynomial> candidates =
      suites::products_of_degree(gens, target_degree, arity);
  SuiteOptions opt = resolve_options(cli);
  TupleSampler sampler(alg, m, opt.seed, opt.sampler_bound);
  MembershipResult res = membership_in_span(target, candidates, sampler, arity);

  Json j;
  j["member"] = res.member;
  j["candidates"] = candidates.size();
  j["samples"] = res.samples_used;
  j["seed"] = opt.seed;
  Json coeffs = Json::array();
  for (const Rat& c : res.coefficients) coeffs.push_back(c.get_str());
  j["coefficients"] = std::move(coeffs);
  std::ostringstream os;
  os << (res.member ? "member" : "not a member") << " (" << candidates.size()
     << " candidate products, " << res.samples_used << " samples, seed " << opt.seed << ")\n";
  if (res.member) {
    os << "  coefficients:";
    for (const Rat& c : res.coefficients) os << " " << c.get_str();
    os << "\n";
  }
  return write_output(cli, os.str(), j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"likit - exact computational Lie theory toolkit"};
  app.set_version_flag("--version", std::string("likit ") + LIKIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cli;
  app.add_option("--format", cli.format, "output format")->check(CLI::IsMember({"text", "json"}));
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "sampler seed");
  int max_rank_value = 0;
  auto* rank_opt = app.add_option("--max-rank", max_rank_value, "rank bound for sweeps");
  long group_cap = 0, node_cap = 0, dim_cap = 0, sampler_bound = 0;
  auto* gc = app.add_option("--group-cap", group_cap, "group materialization cap");
  auto* nc = app.add_option("--node-cap", node_cap, "stabilizer search node cap");
  auto* dc = app.add_option("--dim-cap", dim_cap, "representation dimension cap");
  auto* sb = app.add_option("--sampler-bound", sampler_bound, "entry bound for samplers");
  app.add_option("--config", cli.config_path, "JSON config file overriding default caps");
  app.add_option("--out", cli.out_path, "write output to a file instead of stdout");
  app.add_flag("--parallel", cli.parallel, "run suite checks concurrently");

  for (const std::string& name : likit::suite_names())
    app.add_subcommand(name, "run the " + name + " verification suite");

  auto* rootsys = app.add_subcommand("rootsys", "root system commands");
  auto* rootsys_info = rootsys->add_subcommand("info", "print invariants of a root system");
  std::string rs_name;
  rootsys_info->add_option("name", rs_name, "system name, e.g. F4")->required();

  auto* rep = app.add_subcommand("rep", "representation commands");
  auto* rep_weights = rep->add_subcommand("weights", "weight multiset of an irreducible");
  std::string rep_system, rep_weight;
  rep_weights->add_option("system", rep_system, "system name, e.g. F4")->required();
  rep_weights->add_option("weight", rep_weight, "fundamental index, 'adjoint', or weight JSON")
      ->required();

  auto* stab = app.add_subcommand("stab", "stabilizer commands");
  auto* stab_weights = stab->add_subcommand("weights", "stabilizer of a weight multiset");
  std::string stab_path;
  stab_weights->add_option("file", stab_path, "weight multiset JSON file")->required();

  auto* embed = app.add_subcommand("embed", "toral embedding commands");
  auto* embed_branch = embed->add_subcommand("branch", "pull a representation back");
  std::string emb_arg, emb_rep;
  embed_branch->add_option("embedding", emb_arg, "embedding JSON file or preset name")->required();
  embed_branch->add_option("rep", emb_rep, "fundamental index, 'adjoint', or weight JSON")
      ->required();

  auto* trace = app.add_subcommand("trace", "trace-word commands");
  auto* trace_member = trace->add_subcommand("member", "invariant-span membership test");
  std::string member_target, member_gens, member_algebra = "gl2";
  int member_arity = 2, member_degree = 0;
  trace_member->add_option("target", member_target, "target trace polynomial JSON")->required();
  trace_member->add_option("generators", member_gens, "generator list JSON")->required();
  trace_member->add_option("--algebra", member_algebra, "sampled matrix algebra, e.g. gl2");
  trace_member->add_option("--arity", member_arity, "tuple arity");
  trace_member->add_option("--degree", member_degree, "expected total degree of the target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (seed_opt->count()) cli.seed = seed_value;
  if (rank_opt->count()) cli.max_rank = max_rank_value;
  if (gc->count()) cli.group_cap = group_cap;
  if (nc->count()) cli.node_cap = node_cap;
  if (dc->count()) cli.dim_cap = dim_cap;
  if (sb->count()) cli.sampler_bound = sampler_bound;

  try {
    for (const std::string& name : likit::suite_names())
      if (app.got_subcommand(name)) return run_suite_command(name, cli);
    if (app.got_subcommand(rootsys)) return cmd_rootsys_info(rs_name, cli);
    if (app.got_subcommand(rep)) return cmd_rep_weights(rep_system, rep_weight, cli);
    if (app.got_subcommand(stab)) return cmd_stab_weights(stab_path, cli);
    if (app.got_subcommand(embed)) return cmd_embed_branch(emb_arg, emb_rep, cli);
    if (app.got_subcommand(trace))
      return cmd_trace_member(member_target, member_gens, member_algebra, member_arity,
                              member_degree, cli);
  } catch (const likit::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const likit::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "JSON error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
