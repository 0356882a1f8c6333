// Command-line front end: verify families, compute layer weights, run the
// exact extremal search, build the stock constructions, and drive the
// probing tools (peeling, walks, chains, zone estimates, bound calculators).
//
// Report contract: stdout carries one report per run — a JSON object
// {command, inputs_digest, seed, results, elapsed_ms, version} or its CSV
// rendering.  With a fixed (argv, seed), everything except elapsed_ms is
// byte-identical across runs.  Exit codes: 0 pass/success, 1 violation or
// failed walk, 2 usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "sperner/bounds.hpp"
#include "sperner/chain.hpp"
#include "sperner/dhj.hpp"
#include "sperner/family.hpp"
#include "sperner/peel.hpp"
#include "sperner/restrictions.hpp"
#include "sperner/search.hpp"
#include "sperner/weight.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sperner;

constexpr const char* kVersion = "0.1.0";

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

struct Ctx {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::optional<long> time_limit_ms;
  bool quiet = false;

  std::string command;
  std::string digest_src;  // canonical input description, hashed into the report

  void note(const std::string& key, const std::string& value) {
    digest_src += key;
    digest_src += '=';
    digest_src += value;
    digest_src += '\x1f';
  }
};

void flatten_csv(const ordered_json& j, const std::string& prefix, std::ostream& os) {
  for (const auto& [key, value] : j.items()) {
    std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten_csv(value, name, os);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ';';
        joined += item.is_string() ? item.get<std::string>() : item.dump();
      }
      os << name << ",\"" << joined << "\"\n";
    } else if (value.is_string()) {
      os << name << ",\"" << value.get<std::string>() << "\"\n";
    } else {
      os << name << "," << value.dump() << "\n";
    }
  }
}

// Emits the report; `extra_rows` lets `experiment` print its own CSV table.
void emit(const Ctx& ctx, const ordered_json& results, long elapsed_ms,
          const std::optional<std::string>& csv_table = std::nullopt) {
  if (ctx.quiet) return;
  if (ctx.format == "csv") {
    if (csv_table) {
      std::cout << *csv_table;
      return;
    }
    std::cout << "command," << ctx.command << "\n";
    std::cout << "inputs_digest," << hex64(fnv1a64(ctx.digest_src)) << "\n";
    std::cout << "seed," << ctx.seed << "\n";
    flatten_csv(results, "results", std::cout);
    std::cout << "version," << kVersion << "\n";
    std::cout << "elapsed_ms," << elapsed_ms << "\n";
    return;
  }
  ordered_json report;
  report["command"] = ctx.command;
  report["inputs_digest"] = hex64(fnv1a64(ctx.digest_src));
  report["seed"] = ctx.seed;
  report["results"] = results;
  report["elapsed_ms"] = elapsed_ms;
  report["version"] = kVersion;
  std::cout << report.dump(2) << "\n";
}

// sperner | tilted:p:q | ordered-tilted | <path to system JSON>
PairCondition parse_condition(Ctx& ctx, const std::string& text, std::optional<int> n_flag) {
  if (text == "sperner") {
    if (!n_flag) throw std::invalid_argument("--n is required with built-in conditions");
    ctx.note("condition", text);
    return sperner_system(*n_flag);
  }
  if (text == "ordered-tilted") {
    if (!n_flag) throw std::invalid_argument("--n is required with built-in conditions");
    ctx.note("condition", text);
    return OrderedTilted{*n_flag};
  }
  if (text.rfind("tilted:", 0) == 0) {
    int p, q;
    char sep;
    std::istringstream is(text.substr(7));
    if (!(is >> p >> sep >> q) || sep != ':' || !is.eof())
      throw std::invalid_argument("tilted condition: expected tilted:<p>:<q>");
    if (!n_flag) throw std::invalid_argument("--n is required with built-in conditions");
    ctx.note("condition", text);
    return make_tilted_ratio(*n_flag, p, q);
  }
  std::string content = read_file(text);
  ctx.note("condition-file", content);
  RestrictionSystem sys = parse_system(content);
  if (n_flag && *n_flag != sys.n)
    throw std::invalid_argument("--n does not match the system file");
  return sys;
}

// Like parse_condition but must yield a restriction system (for weight).
RestrictionSystem parse_system_arg(Ctx& ctx, const std::string& text,
                                   std::optional<int> n_flag) {
  if (text == "ordered-tilted")
    throw std::invalid_argument("the ordered condition has no restriction-system form");
  if (text == "sperner" || text.rfind("tilted:", 0) == 0) {
    if (!n_flag) throw std::invalid_argument("--n is required with built-in systems");
    if (text == "sperner") {
      ctx.note("system", text);
      return sperner_system(*n_flag);
    }
    int p, q;
    char sep;
    std::istringstream is(text.substr(7));
    if (!(is >> p >> sep >> q) || sep != ':' || !is.eof())
      throw std::invalid_argument("tilted system: expected tilted:<p>:<q>");
    ctx.note("system", text);
    return tilted_system(*n_flag, p, q);
  }
  std::string content = read_file(text);
  ctx.note("system-file", content);
  RestrictionSystem sys = parse_system(content);
  if (n_flag && *n_flag != sys.n)
    throw std::invalid_argument("--n does not match the system file");
  return sys;
}

ordered_json violation_json(const Violation& v) {
  ordered_json out;
  out["A"] = v.a.to_string();
  out["B"] = v.b.to_string();
  switch (v.kind) {
    case Violation::Kind::edge:
      out["witness"] = ordered_json{{"type", "edge"}, {"i", v.edge.i}, {"j", v.edge.j},
                                    {"x", v.edge.x}};
      break;
    case Violation::Kind::ratio:
      out["witness"] = ordered_json{{"type", "ratio"}, {"p", v.p}, {"q", v.q}};
      break;
    case Violation::Kind::ordered:
      out["witness"] = ordered_json{{"type", "ordered-tilted"}};
      break;
  }
  return out;
}

ordered_json family_json(const SetFamily& f) {
  ordered_json arr = ordered_json::array();
  for (const SubsetWord& m : f.members()) arr.push_back(m.to_string());
  return arr;
}

long elapsed_since(std::chrono::steady_clock::time_point t0) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count());
}

// ---------------------------------------------------------------------------

int run_verify(Ctx& ctx, const std::string& family_path, const std::string& cond_text,
               std::optional<int> n_flag) {
  ctx.command = "verify";
  const auto t0 = std::chrono::steady_clock::now();
  std::string family_text = read_file(family_path);
  ctx.note("family", family_text);
  SetFamily f = parse_family(family_text);
  PairCondition cond = parse_condition(ctx, cond_text, n_flag ? n_flag : std::optional<int>(f.ground()));
  if (condition_ground(cond) != f.ground()) throw std::invalid_argument("ground-set mismatch");
  Verdict verdict = verify(f, cond);
  ordered_json results;
  results["n"] = f.ground();
  results["family_size"] = f.size();
  results["condition"] = condition_name(cond);
  if (verdict) {
    results["verdict"] = "violation";
    results["violation"] = violation_json(*verdict);
  } else {
    results["verdict"] = "pass";
  }
  emit(ctx, results, elapsed_since(t0));
  return verdict ? 1 : 0;
}

int run_weight(Ctx& ctx, const std::string& system_text, std::optional<int> n_flag) {
  ctx.command = "weight";
  const auto t0 = std::chrono::steady_clock::now();
  RestrictionSystem sys = parse_system_arg(ctx, system_text, n_flag);
  WeightResult res = weight(sys);
  ordered_json results;
  results["n"] = sys.n;
  results["w"] = res.w.get_str();
  results["I"] = res.layers;
  emit(ctx, results, elapsed_since(t0));
  return 0;
}

int run_search(Ctx& ctx, const std::string& cond_text, std::optional<int> n_flag, int max_n,
               const std::optional<std::string>& cert_path) {
  ctx.command = "search";
  const auto t0 = std::chrono::steady_clock::now();
  PairCondition cond = parse_condition(ctx, cond_text, n_flag);
  const int n = condition_ground(cond);
  ctx.note("n", std::to_string(n));
  ExtremalResult res = max_family(cond, n, ctx.time_limit_ms, max_n);
  if (cert_path) write_file(*cert_path, serialize_family(res.certificate));
  ordered_json results;
  results["n"] = n;
  results["condition"] = condition_name(cond);
  results["size"] = res.size;
  results["optimal"] = res.optimal;
  results["nodes"] = res.nodes;
  emit(ctx, results, elapsed_since(t0));
  return 0;
}

int run_construct_layered(Ctx& ctx, int n, const std::string& layers_text,
                          const std::optional<std::string>& out_path) {
  ctx.command = "construct layered";
  const auto t0 = std::chrono::steady_clock::now();
  ctx.note("n", std::to_string(n));
  ctx.note("layers", layers_text);
  std::vector<int> layers;
  std::istringstream is(layers_text);
  std::string tok;
  while (std::getline(is, tok, ',')) layers.push_back(std::stoi(tok));
  SetFamily f = layered_family(n, layers);
  if (out_path) write_file(*out_path, serialize_family(f));
  ordered_json results;
  results["n"] = n;
  results["size"] = f.size();
  results["family"] = family_json(f);
  emit(ctx, results, elapsed_since(t0));
  return 0;
}

int run_construct_counterexample(Ctx& ctx, int n, const std::string& beta_text,
                                 const std::optional<std::string>& out_path) {
  ctx.command = "construct counterexample";
  const auto t0 = std::chrono::steady_clock::now();
  ctx.note("n", std::to_string(n));
  ctx.note("beta", beta_text);
  mpq_class beta;
  try {
    beta = mpq_class(beta_text);
    beta.canonicalize();
  } catch (const std::exception&) {
    throw std::invalid_argument("beta: expected a rational like 1 or 3/2");
  }
  BigCount count = count_counterexample(n, beta);
  ordered_json results;
  results["n"] = n;
  results["beta"] = beta.get_str();
  results["count"] = count.get_str();
  if (n <= 24) {
    SetFamily f = counterexample_family(n, beta);
    if (out_path) write_file(*out_path, serialize_family(f));
    results["family"] = family_json(f);
  } else if (out_path) {
    throw std::invalid_argument("counterexample: materialization to a file is capped at n <= 24");
  }
  emit(ctx, results, elapsed_since(t0));
  return 0;
}

int run_construct_dhj_line(Ctx& ctx, int m, const std::string& template_text) {
  ctx.command = "construct dhj-line";
  const auto t0 = std::chrono::steady_clock::now();
  ctx.note("m", std::to_string(m));
  ctx.note("template", template_text);
  DhjLine line;
  std::istringstream is(template_text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok == "*") {
      line.tmpl.push_back(DhjLine::kStar);
    } else {
      line.tmpl.push_back(std::stoi(tok));
    }
  }
  DhjForbiddenPair pair = dhj_forbidden_pair(line, m);
  ordered_json results;
  results["m"] = m;
  results["n"] = 3 * m;
  results["active"] = line.active();
  results["A"] = pair.a.to_string();
  results["B"] = pair.b.to_string();
  results["check"] = pair.check;
  emit(ctx, results, elapsed_since(t0));
  return pair.check ? 0 : 1;
}

int run_probe_peel(Ctx& ctx, const std::string& family_path, int theta,
                   const std::optional<std::string>& out_path) {
  ctx.command = "probe peel";
  const auto t0 = std::chrono::steady_clock::now();
  std::string family_text = read_file(family_path);
  ctx.note("family", family_text);
  ctx.note("theta", std::to_string(theta));
  SetFamily b = parse_family(family_text);
  SetFamily e = peel(b, theta);
  if (out_path) write_file(*out_path, serialize_family(e));
  ordered_json results;
  results["n"] = b.ground();
  results["theta"] = theta;
  results["input_size"] = b.size();
  results["survivors"] = e.size();
  results["family"] = family_json(e);
  emit(ctx, results, elapsed_since(t0));
  return 0;
}

int run_probe_walk(Ctx& ctx, const std::string& family_path, const std::string& start_text,
                   int x) {
  ctx.command = "probe walk";
  const auto t0 = std::chrono::steady_clock::now();
  std::string family_text = read_file(family_path);
  ctx.note("family", family_text);
  ctx.note("start", start_text);
  ctx.note("x", std::to_string(x));
  SetFamily d = parse_family(family_text);
  SubsetWord start = SubsetWord::parse(d.ground(), start_text);
  WalkResult res = neighbor_walk(d, start, x);
  ordered_json results;
  results["n"] = d.ground();
  results["x"] = x;
  results["complete"] = res.complete;
  ordered_json path = ordered_json::array();
  for (const SubsetWord& s : res.path) path.push_back(s.to_string());
  results["path"] = path;
  emit(ctx, results, elapsed_since(t0));
  return res.complete ? 0 : 1;
}

int run_probe_chain(Ctx& ctx, int n, int i, int j, const std::optional<std::string>& out_path) {
  ctx.command = "probe chain";
  const auto t0 = std::chrono::steady_clock::now();
  ctx.note("n", std::to_string(n));
  ctx.note("i", std::to_string(i));
  ctx.note("j", std::to_string(j));
  ChainSample cs = sample_chain(n, i, j, ctx.seed);
  long checked = 0, violating = 0;
  for (std::size_t k = 0; k < cs.chain.size(); ++k) {
    for (std::size_t l = k + 1; l < cs.chain.size(); ++l) {
      ++checked;
      if (pair_violates_ordered(cs.chain[k], cs.chain[l])) ++violating;
    }
  }
  if (out_path) {
    SetFamily f = SetFamily::from_members(n, cs.chain);
    write_file(*out_path, serialize_family(f));
  }
  ordered_json results;
  results["n"] = n;
  results["i"] = i;
  results["j"] = j;
  results["K"] = cs.K;
  results["s1_size"] = cs.s1.size();
  results["s2_size"] = cs.s2.size();
  ordered_json sizes = ordered_json::array(), rs = ordered_json::array(),
               ss = ordered_json::array();
  for (const SubsetWord& c : cs.chain) {
    sizes.push_back(c.size());
    ZoneStats st = zone_of(c);
    rs.push_back(st.r);
    ss.push_back(st.s);
  }
  results["sizes"] = sizes;
  results["r"] = rs;
  results["s"] = ss;
  results["pairs_checked"] = checked;
  results["pairs_violating"] = violating;
  emit(ctx, results, elapsed_since(t0));
  return 0;
}

int run_probe_zone_prob(Ctx& ctx, int n, int i, int j, int k, long trials) {
  ctx.command = "probe zone-prob";
  const auto t0 = std::chrono::steady_clock::now();
  ctx.note("n", std::to_string(n));
  ctx.note("i", std::to_string(i));
  ctx.note("j", std::to_string(j));
  ctx.note("k", std::to_string(k));
  ctx.note("trials", std::to_string(trials));
  ZoneEstimate est = estimate_zone_prob(n, ZoneIndex{i, j}, k, trials, ctx.seed);
  ordered_json results;
  results["n"] = n;
  results["i"] = i;
  results["j"] = j;
  results["k"] = k;
  results["trials"] = est.trials;
  results["estimate"] = est.estimate;
  results["std_error"] = est.std_error;
  emit(ctx, results, elapsed_since(t0));
  return 0;
}

int run_probe_fr_bound(Ctx& ctx, long t, long l) {
  ctx.command = "probe fr-bound";
  const auto t0 = std::chrono::steady_clock::now();
  ctx.note("t", std::to_string(t));
  ctx.note("l", std::to_string(l));
  FrBound b = fr_bound(t, l);
  ordered_json results;
  results["t"] = t;
  results["l"] = l;
  results["log_e"] = static_cast<double>(b.log_e);
  results["log10"] = b.log10_value;
  results["mantissa"] = b.mantissa;
  results["exponent10"] = b.exponent10;
  results["branch"] = b.branch;
  emit(ctx, results, elapsed_since(t0));
  return 0;
}

int run_probe_fr_brute(Ctx& ctx, int s, int l) {
  ctx.command = "probe fr-brute";
  const auto t0 = std::chrono::steady_clock::now();
  ctx.note("s", std::to_string(s));
  ctx.note("l", std::to_string(l));
  long best = fr_brute(s, l);
  ordered_json results;
  results["s"] = s;
  results["l"] = l;
  results["max_product"] = best;
  emit(ctx, results, elapsed_since(t0));
  return 0;
}

int run_probe_bounds(Ctx& ctx, const std::string& which, long n, std::optional<int> p,
                     std::optional<int> q, const std::optional<std::string>& w_text) {
  ctx.command = "probe bounds";
  const auto t0 = std::chrono::steady_clock::now();
  ctx.note("which", which);
  ctx.note("n", std::to_string(n));
  PaperBound b;
  ordered_json results;
  results["which"] = which;
  results["n"] = n;
  if (which == "thm1") {
    if (!p || !q) throw std::invalid_argument("thm1 needs --p and --q");
    ctx.note("p", std::to_string(*p));
    ctx.note("q", std::to_string(*q));
    b = paper_bound_thm1(static_cast<int>(n), *p, *q);
    results["value"] = b.value->get_str();
  } else if (which == "thm2") {
    if (!w_text) throw std::invalid_argument("thm2 needs --w (a decimal weight)");
    ctx.note("w", *w_text);
    BigCount w;
    try {
      w = BigCount(*w_text);
    } catch (const std::exception&) {
      throw std::invalid_argument("--w: expected a decimal integer");
    }
    b = paper_bound_thm2(n, w);
  } else if (which == "thm3") {
    b = paper_bound_thm3(n);
  } else {
    throw std::invalid_argument("--which must be thm1, thm2 or thm3");
  }
  results["log2"] = b.log2_value;
  results["vacuous"] = b.vacuous;
  emit(ctx, results, elapsed_since(t0));
  return 0;
}

int run_experiment(Ctx& ctx, const std::string& recipe_path) {
  ctx.command = "experiment";
  const auto t0 = std::chrono::steady_clock::now();
  std::string recipe_text = read_file(recipe_path);
  ctx.note("recipe", recipe_text);
  nlohmann::json recipe;
  try {
    recipe = nlohmann::json::parse(recipe_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("recipe JSON: ") + e.what());
  }
  if (!recipe.is_object() || !recipe.contains("cells") || !recipe["cells"].is_array())
    throw std::invalid_argument("recipe JSON: expected {\"cells\": [...]}");

  ordered_json rows = ordered_json::array();
  std::vector<long> row_elapsed;
  std::ostringstream csv;
  csv << "n,condition,size,w,ratio,optimal,elapsed_ms\n";
  for (const auto& cell : recipe["cells"]) {
    if (!cell.contains("condition") || !cell.contains("n_from") || !cell.contains("n_to"))
      throw std::invalid_argument("recipe cell: needs condition, n_from, n_to");
    const std::string cond_text = cell["condition"].get<std::string>();
    const int n_from = cell["n_from"].get<int>();
    const int n_to = cell["n_to"].get<int>();
    if (n_from < 0 || n_to < n_from) throw std::invalid_argument("recipe cell: bad n range");
    std::optional<long> budget = ctx.time_limit_ms;
    if (cell.contains("time_limit_ms")) budget = cell["time_limit_ms"].get<long>();
    for (int n = n_from; n <= n_to; ++n) {
      const auto cell_t0 = std::chrono::steady_clock::now();
      Ctx scratch = ctx;  // parse_condition notes into the digest source
      PairCondition cond = parse_condition(scratch, cond_text, n);
      ExtremalResult res = max_family(cond, n, budget);
      std::string w_str, ratio_str;
      if (!std::holds_alternative<OrderedTilted>(cond)) {
        RestrictionSystem sys = std::holds_alternative<RestrictionSystem>(cond)
                                    ? std::get<RestrictionSystem>(cond)
                                    : tilted_system(n, std::get<TiltedRatio>(cond).p,
                                                    std::get<TiltedRatio>(cond).q);
        WeightResult wr = weight(sys);
        w_str = wr.w.get_str();
        const double ratio =
            mpq_class(BigCount(res.size), wr.w).get_d();
        std::ostringstream rs;
        rs << std::fixed << std::setprecision(6) << ratio;
        ratio_str = rs.str();
      }
      long cell_ms = elapsed_since(cell_t0);
      csv << n << "," << cond_text << "," << res.size << "," << w_str << "," << ratio_str
          << "," << (res.optimal ? "true" : "false") << "," << cell_ms << "\n";
      ordered_json row;
      row["n"] = n;
      row["condition"] = cond_text;
      row["size"] = res.size;
      row["w"] = w_str;
      row["ratio"] = ratio_str;
      row["optimal"] = res.optimal;
      rows.push_back(row);
      row_elapsed.push_back(cell_ms);
    }
  }
  ctx.note("recipe-path", recipe_path);
  if (ctx.format == "csv") {
    if (!ctx.quiet) std::cout << csv.str();
    return 0;
  }
  ordered_json results;
  results["rows"] = rows;
  if (!ctx.quiet) {
    ordered_json report;
    report["command"] = ctx.command;
    report["inputs_digest"] = hex64(fnv1a64(ctx.digest_src));
    report["seed"] = ctx.seed;
    report["results"] = results;
    report["row_elapsed_ms"] = row_elapsed;
    report["elapsed_ms"] = elapsed_since(t0);
    report["version"] = kVersion;
    std::cout << report.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered set-family toolkit: verification, extremal search, probes"};
  app.require_subcommand(1);

  Ctx ctx;
  app.add_option("--seed", ctx.seed, "Random seed for all sampling (default 0)");
  app.add_option("--format", ctx.format, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--time-limit-ms", ctx.time_limit_ms, "Budget for the exact search");
  app.add_flag("--quiet", ctx.quiet, "Suppress the report (exit code only)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a family against a condition");
  std::string verify_family, verify_cond;
  std::optional<int> verify_n;
  verify_cmd->add_option("--family", verify_family, "Family file")->required();
  verify_cmd->add_option("--condition", verify_cond,
                         "sperner | tilted:p:q | ordered-tilted | system file")
      ->required();
  verify_cmd->add_option("--n", verify_n, "Expected ground size (checked)");

  // weight
  auto* weight_cmd = app.add_subcommand("weight", "Max independent layer mass w(G)");
  std::string weight_system;
  std::optional<int> weight_n;
  weight_cmd->add_option("--system", weight_system, "sperner | tilted:p:q | system file")
      ->required();
  weight_cmd->add_option("--n", weight_n, "Ground size for built-in systems");

  // search
  auto* search_cmd = app.add_subcommand("search", "Exact maximum family");
  std::string search_cond;
  std::optional<int> search_n;
  int search_max_n = 14;
  std::optional<std::string> search_cert;
  search_cmd->add_option("--condition", search_cond,
                         "sperner | tilted:p:q | ordered-tilted | system file")
      ->required();
  search_cmd->add_option("--n", search_n, "Ground size");
  search_cmd->add_option("--max-n", search_max_n, "Raise the default n cap (<= 20)");
  search_cmd->add_option("--emit-certificate", search_cert, "Write the family found");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Stock constructions");
  construct_cmd->require_subcommand(1);
  construct_cmd->require_subcommand(1);
  auto* layered_cmd = construct_cmd->add_subcommand("layered", "Union of full layers");
  int layered_n = 0;
  std::string layered_layers;
  std::optional<std::string> layered_out;
  layered_cmd->add_option("--n", layered_n, "Ground size")->required();
  layered_cmd->add_option("--layers", layered_layers, "Comma list, e.g. 0,2,5")->required();
  layered_cmd->add_option("--out", layered_out, "Write the family file here");
  auto* counter_cmd = construct_cmd->add_subcommand("counterexample", "Tilted counterexample");
  int counter_n = 0;
  std::string counter_beta;
  std::optional<std::string> counter_out;
  counter_cmd->add_option("--n", counter_n, "Even ground size")->required();
  counter_cmd->add_option("--beta", counter_beta, "Positive rational, e.g. 1 or 3/2")
      ->required();
  counter_cmd->add_option("--out", counter_out, "Write the family file here");
  auto* dhj_cmd = construct_cmd->add_subcommand("dhj-line", "Forbidden pair of a line");
  int dhj_m = 0;
  std::string dhj_template;
  dhj_cmd->add_option("--m", dhj_m, "Word length")->required();
  dhj_cmd->add_option("--template", dhj_template, "Comma digits 0-7 with * active, e.g. *,3")
      ->required();

  // probe
  auto* probe_cmd = app.add_subcommand("probe", "Structural probes");
  probe_cmd->require_subcommand(1);
  probe_cmd->require_subcommand(1);
  auto* peel_cmd = probe_cmd->add_subcommand("peel", "Min-degree peeling");
  std::string peel_family;
  int peel_theta = 0;
  std::optional<std::string> peel_out;
  peel_cmd->add_option("--family", peel_family, "Family file (single layer)")->required();
  peel_cmd->add_option("--theta", peel_theta, "Degree threshold")->required();
  peel_cmd->add_option("--out", peel_out, "Write survivors here");
  auto* walk_cmd = probe_cmd->add_subcommand("walk", "Greedy neighbor walk");
  std::string walk_family, walk_start;
  int walk_x = 0;
  walk_cmd->add_option("--family", walk_family, "Family file (single layer)")->required();
  walk_cmd->add_option("--start", walk_start, "Start member, e.g. 1,2")->required();
  walk_cmd->add_option("--x", walk_x, "Target |D_l \\ start|")->required();
  auto* chain_cmd = probe_cmd->add_subcommand("chain", "Sample one random chain");
  int chain_n = 0, chain_i = 0, chain_j = 0;
  std::optional<std::string> chain_out;
  chain_cmd->add_option("--n", chain_n, "Ground size (divisible by 6)")->required();
  chain_cmd->add_option("--i", chain_i, "Zone index i");
  chain_cmd->add_option("--j", chain_j, "Zone index j");
  chain_cmd->add_option("--emit-family", chain_out, "Write C_0..C_K here");
  auto* zone_cmd = probe_cmd->add_subcommand("zone-prob", "Monte Carlo zone probability");
  int zone_n = 0, zone_i = 0, zone_j = 0, zone_k = 0;
  long zone_trials = 10000;
  zone_cmd->add_option("--n", zone_n, "Ground size (divisible by 6)")->required();
  zone_cmd->add_option("--i", zone_i, "Zone index i");
  zone_cmd->add_option("--j", zone_j, "Zone index j");
  zone_cmd->add_option("--k", zone_k, "Chain position k");
  zone_cmd->add_option("--trials", zone_trials, "Trial count (default 10000)");
  auto* frb_cmd = probe_cmd->add_subcommand("fr-bound", "Log-domain mass bound");
  long frb_t = 0, frb_l = 0;
  frb_cmd->add_option("--t", frb_t, "Ground size t")->required();
  frb_cmd->add_option("--l", frb_l, "Forbidden intersection size")->required();
  auto* frbrute_cmd = probe_cmd->add_subcommand("fr-brute", "Exact micro mass bound");
  int frbrute_s = 0, frbrute_l = 0;
  frbrute_cmd->add_option("--s", frbrute_s, "Ground size s <= 4")->required();
  frbrute_cmd->add_option("--l", frbrute_l, "Forbidden intersection size")->required();
  auto* bounds_cmd = probe_cmd->add_subcommand("bounds", "Headline size bounds");
  std::string bounds_which;
  long bounds_n = 0;
  std::optional<int> bounds_p, bounds_q;
  std::optional<std::string> bounds_w;
  bounds_cmd->add_option("--which", bounds_which, "thm1 | thm2 | thm3")->required();
  bounds_cmd->add_option("--n", bounds_n, "Ground size")->required();
  bounds_cmd->add_option("--p", bounds_p, "Ratio p (thm1)");
  bounds_cmd->add_option("--q", bounds_q, "Ratio q (thm1)");
  bounds_cmd->add_option("--w", bounds_w, "Weight w as a decimal integer (thm2)");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "Sweep conditions over n ranges");
  std::string exp_recipe;
  exp_cmd->add_option("--recipe", exp_recipe, "Recipe JSON")->required();

  // Global options (--seed, --format, ...) are accepted after subcommands too.
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands([](CLI::App*) { return true; }))
      nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ctx.note("seed", std::to_string(ctx.seed));
    if (app.got_subcommand(verify_cmd))
      return run_verify(ctx, verify_family, verify_cond, verify_n);
    if (app.got_subcommand(weight_cmd)) return run_weight(ctx, weight_system, weight_n);
    if (app.got_subcommand(search_cmd))
      return run_search(ctx, search_cond, search_n, search_max_n, search_cert);
    if (app.got_subcommand(construct_cmd)) {
      if (construct_cmd->got_subcommand(layered_cmd))
        return run_construct_layered(ctx, layered_n, layered_layers, layered_out);
      if (construct_cmd->got_subcommand(counter_cmd))
        return run_construct_counterexample(ctx, counter_n, counter_beta, counter_out);
      return run_construct_dhj_line(ctx, dhj_m, dhj_template);
    }
    if (app.got_subcommand(probe_cmd)) {
      if (probe_cmd->got_subcommand(peel_cmd))
        return run_probe_peel(ctx, peel_family, peel_theta, peel_out);
      if (probe_cmd->got_subcommand(walk_cmd))
        return run_probe_walk(ctx, walk_family, walk_start, walk_x);
      if (probe_cmd->got_subcommand(chain_cmd))
        return run_probe_chain(ctx, chain_n, chain_i, chain_j, chain_out);
      if (probe_cmd->got_subcommand(zone_cmd))
        return run_probe_zone_prob(ctx, zone_n, zone_i, zone_j, zone_k, zone_trials);
      if (probe_cmd->got_subcommand(frb_cmd)) return run_probe_fr_bound(ctx, frb_t, frb_l);
      if (probe_cmd->got_subcommand(frbrute_cmd))
        return run_probe_fr_brute(ctx, frbrute_s, frbrute_l);
      return run_probe_bounds(ctx, bounds_which, bounds_n, bounds_p, bounds_q, bounds_w);
    }
    return run_experiment(ctx, exp_recipe);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
