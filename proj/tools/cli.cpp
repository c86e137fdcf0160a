#include "cli.hpp"

#include "bgposet/bigrassmannian.hpp"
#include "bgposet/bruhat_order.hpp"
#include "bgposet/dot.hpp"
#include "bgposet/error.hpp"
#include "bgposet/oracles.hpp"
#include "bgposet/permutation.hpp"
#include "bgposet/poset.hpp"
#include "bgposet/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>

namespace bgposet::cli {

namespace {

using json = nlohmann::ordered_json;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw Failure{code, std::move(message)}; }

json count_json(const Count& c) {
  // Counts beyond 64 bits are emitted as decimal strings.
  if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

struct Context {
  const Config& config;
  std::ostream& out;
  std::ostream& err;
  std::string format = "json";
  bool format_given = false;
  int max_order = 64;
  std::optional<int> max_n;

  bool oracle_ok(int n) const { return n <= config.bg_sweep_max_n; }
};

void check_cli_order(const Context& ctx, int n, int min_n) {
  if (n < min_n || n > ctx.max_order) {
    fail(kBadInput, "order " + std::to_string(n) + " outside [" + std::to_string(min_n) + ", " +
                        std::to_string(ctx.max_order) + "]");
  }
}

Permutation parse_element(const Context& ctx, const std::string& text) {
  Permutation p = !text.empty() && text.front() == '('
                      ? from_length_vector(parse_length_vector(text))
                      : parse_permutation(text);
  check_cli_order(ctx, p.order(), 1);
  return p;
}

LengthVector parse_vertex(const Context& ctx, const std::string& text) {
  if (!text.empty() && text.front() == '(') {
    const auto v = parse_length_vector(text);
    check_cli_order(ctx, v.order(), 2);
    return v;
  }
  const auto p = parse_permutation(text);
  check_cli_order(ctx, p.order(), 2);
  if (!is_bigrassmannian(p)) fail(kBadInput, text + " is not bigrassmannian");
  return length_vector(p);
}

json vertex_json(const LengthVector& v) { return v.to_string(); }

json vertices_json(std::span<const LengthVector> vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(vertex_json(v));
  return arr;
}

json element_json(const LengthVector& v) {
  const auto p = from_length_vector(v);
  const auto abc = to_abc(v);
  return json{{"word", format_permutation(p)},
              {"length_vector", v.to_string()},
              {"abc", {{"a", abc.a}, {"b", abc.b}, {"c", abc.c}}},
              {"rank", v.rank()},
              {"beta", count_json(beta_bg(v))},
              {"alpha", count_json(alpha_bg(v))}};
}

json make_record(const std::string& command, json inputs) {
  json rec;
  rec["command"] = command;
  rec["inputs"] = std::move(inputs);
  rec["provenance"] = "formula";
  rec["result"] = json::object();
  return rec;
}

std::string csv_cell(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < value.size(); ++i)
      joined += (i ? ";" : "") + csv_cell(value[i]);
    return joined;
  }
  if (value.is_object()) {
    std::string joined;
    bool first = true;
    for (const auto& [k, v] : value.items()) {
      joined += (first ? "" : ";") + k + "=" + csv_cell(v);
      first = false;
    }
    return joined;
  }
  return value.dump();
}

void write_csv(std::ostream& out, const json& result) {
  if (result.is_array()) {
    if (result.empty() || !result.front().is_object()) {
      for (const auto& v : result) out << csv_cell(v) << '\n';
      return;
    }
    bool first = true;
    for (const auto& [k, v] : result.front().items()) {
      out << (first ? "" : ",") << k;
      first = false;
    }
    out << '\n';
    for (const auto& row : result) {
      first = true;
      for (const auto& [k, v] : row.items()) {
        out << (first ? "" : ",") << csv_cell(v);
        first = false;
      }
      out << '\n';
    }
    return;
  }
  out << "key,value\n";
  for (const auto& [k, v] : result.items()) {
    if (k == "levels" && v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i)
        out << "level_" << i << "," << csv_cell(v[i]) << '\n';
    } else {
      out << k << "," << csv_cell(v) << '\n';
    }
  }
}

// Emits the record and enforces that every oracle value equals its formula value.
int emit(const Context& ctx, json rec, const json& oracle = nullptr) {
  int status = kOk;
  if (!oracle.is_null()) {
    rec["provenance"] = rec["result"].empty() ? "oracle" : "both";
    rec["oracle"] = oracle;
    if (rec["provenance"] == "oracle") rec["result"] = oracle;
    for (const auto& [k, v] : oracle.items()) {
      if (rec["result"].value(k, json()) != v) {
        ctx.err << "formula/oracle mismatch on '" << k << "'\n";
        status = kCheckFailed;
      }
    }
  }
  if (ctx.format == "csv") {
    write_csv(ctx.out, rec["result"]);
  } else {
    ctx.out << rec.dump(2) << '\n';
  }
  return status;
}

// ---------------------------------------------------------------- commands

int cmd_enumerate(const Context& ctx, int n) {
  check_cli_order(ctx, n, 1);
  auto rec = make_record("enumerate", {{"n", n}});
  json rows = json::array();
  for (const auto& v : enumerate_bg(n)) rows.push_back(element_json(v));
  rec["result"] = std::move(rows);
  return emit(ctx, std::move(rec));
}

int cmd_compare(const Context& ctx, const std::string& a, const std::string& b,
                const std::string& method) {
  const auto p = parse_element(ctx, a);
  const auto q = parse_element(ctx, b);
  if (p.order() != q.order()) fail(kBadInput, "arguments have different orders");
  const bool p_bg = p.order() >= 2 && is_bigrassmannian(p);
  const bool q_bg = q.order() >= 2 && is_bigrassmannian(q);

  std::string used = method;
  if (method == "auto") used = p_bg && q_bg ? "vector" : p_bg ? "bb" : "ehresmann";

  bool leq = false;
  if (used == "vector") {
    if (!p_bg || !q_bg) fail(kPrecondition, "vector method needs two bigrassmannian arguments");
    leq = bg_leq(length_vector(p), length_vector(q));
  } else if (used == "bb") {
    if (!p_bg) fail(kPrecondition, "bb method needs a bigrassmannian left argument");
    leq = leq_bb_bigrassmannian(p, q);
  } else if (used == "ehresmann") {
    leq = leq_ehresmann(p, q);
  } else {
    leq = leq_reduction_oracle(p, q, ctx.config.reduction_oracle_max_n);
  }
  auto rec = make_record("compare", {{"p", format_permutation(p)},
                                     {"q", format_permutation(q)},
                                     {"method", method}});
  rec["provenance"] = used == "oracle" ? "oracle" : "formula";
  rec["result"] = {{"leq", leq}, {"method", used}};
  return emit(ctx, std::move(rec));
}

int cmd_beta_alpha(const Context& ctx, const std::string& text, bool beta) {
  const auto s = parse_element(ctx, text);
  const int n = s.order();
  const bool bg = n >= 2 && is_bigrassmannian(s);
  const std::string key = beta ? "beta" : "alpha";
  auto rec = make_record(key, {{"permutation", format_permutation(s)}});
  if (beta) {
    const Count value = beta_general(s);
    if (bg && beta_bg(length_vector(s)) != value) {
      fail(kCheckFailed, "length-vector and general beta formulas disagree");
    }
    rec["result"] = {{key, count_json(value)}};
  } else if (bg) {
    rec["result"] = {{key, count_json(alpha_bg(length_vector(s)))}};
  } else if (!ctx.oracle_ok(n)) {
    fail(kPrecondition, "alpha of a non-bigrassmannian permutation needs the oracle (n <= " +
                            std::to_string(ctx.config.bg_sweep_max_n) + ")");
  }
  if (!ctx.oracle_ok(n)) return emit(ctx, std::move(rec));
  const Count brute = beta ? oracle::downset_size(s) : oracle::upset_size(s);
  return emit(ctx, std::move(rec), json{{key, count_json(brute)}});
}

int cmd_vector(const Context& ctx, const std::string& text) {
  const auto v = parse_vertex(ctx, text);
  const auto p = from_length_vector(v);
  auto rec = make_record("vector", {{"element", text}});
  auto result = element_json(v);
  result["f2143"] = vertex_json(f2143(v));
  result["inverse"] = format_permutation(inverse(p));
  result["conjugate"] = format_permutation(conjugate(p));
  rec["result"] = std::move(result);
  return emit(ctx, std::move(rec));
}

int cmd_stats(const Context& ctx, int n) {
  check_cli_order(ctx, n, 2);
  auto rec = make_record("stats", {{"n", n}});
  json levels = json::array();
  for (int k = 0; k <= n - 2; ++k) levels.push_back(count_json(level_size(n, k)));
  rec["result"] = {{"bg_count", count_json(bg_count(n))},
                   {"edges", count_json(edge_count(n))},
                   {"minimal", minimal_elements(n).size()},
                   {"maximal", maximal_elements(n).size()},
                   {"levels", levels},
                   {"maximal_chains", count_json(count_maximal_chains(n))},
                   {"butterflies", count_json(n >= 3 ? butterfly_count(n) : Count(0))},
                   {"max_antichain", count_json(max_antichain_size(n))}};
  if (!ctx.oracle_ok(n)) return emit(ctx, std::move(rec));

  const auto poset = HassePoset::build(n);
  std::size_t minima = 0;
  std::size_t maxima = 0;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    minima += poset.down(i).empty();
    maxima += poset.up(i).empty();
  }
  json graph_levels = json::array();
  for (int k = 0; k <= n - 2; ++k) graph_levels.push_back(poset.level(k).size());
  const json brute = {
      {"bg_count", poset.size()},
      {"edges", poset.edge_count()},
      {"minimal", minima},
      {"maximal", maxima},
      {"levels", graph_levels},
      {"maximal_chains", count_json(oracle::maximal_chain_count(poset))},
      {"butterflies", n >= 3 ? oracle::butterflies_by_search(poset).size() : 0},
      {"max_antichain", oracle::dilworth_max_antichain(poset.vertices(), bg_leq)}};
  return emit(ctx, std::move(rec), brute);
}

int cmd_chains(const Context& ctx, const std::string& a, const std::string& b) {
  const auto u = parse_vertex(ctx, a);
  const auto v = parse_vertex(ctx, b);
  if (u.order() != v.order()) fail(kBadInput, "arguments have different orders");
  if (!bg_leq(u, v)) fail(kPrecondition, u.to_string() + " is not below " + v.to_string());
  auto rec = make_record("chains", {{"u", u.to_string()}, {"v", v.to_string()}});
  rec["result"] = {{"length", v.rank() - u.rank()},
                   {"saturated_chains", count_json(count_saturated_chains(u, v))}};
  if (!ctx.oracle_ok(u.order())) return emit(ctx, std::move(rec));
  const auto poset = HassePoset::build(u.order());
  const auto paths = oracle::path_counts_from(poset, poset.index_of(u));
  return emit(ctx, std::move(rec),
              json{{"saturated_chains", count_json(paths[poset.index_of(v)])}});
}

int cmd_distance(const Context& ctx, const std::string& a, const std::string& b) {
  const auto u = parse_vertex(ctx, a);
  const auto v = parse_vertex(ctx, b);
  if (u.order() != v.order()) fail(kBadInput, "arguments have different orders");
  auto rec = make_record("distance", {{"u", u.to_string()}, {"v", v.to_string()}});
  rec["result"] = {{"distance", count_json(hasse_distance(u, v))}};
  if (!ctx.oracle_ok(u.order())) return emit(ctx, std::move(rec));
  const auto poset = HassePoset::build(u.order());
  const auto dist = oracle::bfs_distances(poset, poset.index_of(u));
  return emit(ctx, std::move(rec), json{{"distance", dist[poset.index_of(v)]}});
}

int cmd_antichain(const Context& ctx, int n, std::optional<int> map_level) {
  check_cli_order(ctx, n, 2);
  auto rec = make_record("antichain", {{"n", n}});
  json paths = json::array();
  for (const auto& path : sperner_decomposition(n)) paths.push_back(vertices_json(path));
  json result = {{"max_antichain", count_json(max_antichain_size(n))},
                 {"middle_level", middle_level(n)},
                 {"paths", std::move(paths)}};
  if (map_level) {
    if (*map_level < 0 || *map_level > n - 2) fail(kBadInput, "level out of range");
    std::vector<LengthVector> rows;
    for (const auto& v : enumerate_bg(n))
      if (v.rank() == *map_level) rows.push_back(v);
    std::sort(rows.begin(), rows.end(), [](const LengthVector& x, const LengthVector& y) {
      return std::pair(x.l2(), x.l1()) > std::pair(y.l2(), y.l1());
    });
    json table = json::array();
    for (const auto& v : rows) {
      const auto image = sperner_step(v);
      table.push_back({{"from", vertex_json(v)}, {"to", image ? vertex_json(*image) : json()}});
    }
    result["map"] = std::move(table);
  }
  rec["result"] = std::move(result);
  if (!ctx.oracle_ok(n)) return emit(ctx, std::move(rec));
  const auto poset = HassePoset::build(n);
  return emit(ctx, std::move(rec),
              json{{"max_antichain", oracle::dilworth_max_antichain(poset.vertices(), bg_leq)}});
}

int cmd_butterflies(const Context& ctx, int n) {
  check_cli_order(ctx, n, 3);
  auto rec = make_record("butterflies", {{"n", n}});
  json list = json::array();
  for (const auto& b : butterflies(n))
    list.push_back({{"lower", vertices_json(b.lower)}, {"upper", vertices_json(b.upper)}});
  rec["result"] = {{"count", count_json(butterfly_count(n))}, {"butterflies", std::move(list)}};
  if (!ctx.oracle_ok(n)) return emit(ctx, std::move(rec));
  const auto poset = HassePoset::build(n);
  return emit(ctx, std::move(rec),
              json{{"count", oracle::butterflies_by_search(poset).size()}});
}

int cmd_below(const Context& ctx, const std::vector<std::string>& texts, bool above) {
  std::vector<LengthVector> targets;
  for (const auto& t : texts) targets.push_back(parse_vertex(ctx, t));
  for (const auto& t : targets)
    if (t.order() != targets.front().order()) fail(kBadInput, "targets have different orders");
  const auto found = above ? minimal_above(targets) : maximal_below(targets);
  auto rec = make_record(above ? "above" : "below", {{"targets", vertices_json(targets)}});
  rec["command"] = "below";
  rec["inputs"]["direction"] = above ? "above" : "below";
  rec["result"] = {{"count", found.size()}, {"elements", vertices_json(found)}};
  if (!ctx.oracle_ok(targets.front().order())) return emit(ctx, std::move(rec));
  const auto brute = above ? oracle::minimal_above(targets) : oracle::maximal_below(targets);
  return emit(ctx, std::move(rec),
              json{{"count", brute.size()}, {"elements", vertices_json(brute)}});
}

int cmd_hasse(const Context& ctx, int n, const std::string& dot_path,
              const std::string& downset, const std::string& upset) {
  check_cli_order(ctx, n, 2);
  if (n > ctx.config.graph_export_max_n) {
    fail(kBadInput, "graph export limited to n <= " + std::to_string(ctx.config.graph_export_max_n));
  }
  DotHighlight highlight;
  auto vertex_arg = [&](const std::string& text) {
    const auto v = parse_vertex(ctx, text);
    if (v.order() != n) fail(kBadInput, text + " is not an element of order " + std::to_string(n));
    return v;
  };
  if (!downset.empty()) highlight.downset_of = vertex_arg(downset);
  if (!upset.empty()) highlight.upset_of = vertex_arg(upset);

  const auto poset = HassePoset::build(n);
  const std::string dot = hasse_dot(poset, highlight);
  if (dot_path.empty()) {
    ctx.out << dot;
    return kOk;
  }
  std::ofstream file(dot_path, std::ios::binary);
  if (!file || !(file << dot) || !file.flush()) fail(kUnwritable, "cannot write " + dot_path);

  std::size_t down_count = 0;
  std::size_t up_count = 0;
  for (const auto& v : poset.vertices()) {
    if (highlight.downset_of && bg_leq(v, *highlight.downset_of)) ++down_count;
    if (highlight.upset_of && bg_leq(*highlight.upset_of, v)) ++up_count;
  }
  json inputs = {{"n", n}, {"dot", dot_path}};
  if (highlight.downset_of) inputs["downset"] = vertex_json(*highlight.downset_of);
  if (highlight.upset_of) inputs["upset"] = vertex_json(*highlight.upset_of);
  auto rec = make_record("hasse", std::move(inputs));
  json result = {{"nodes", poset.size()}, {"edges", poset.edge_count()}};
  if (highlight.downset_of) result["downset_size"] = down_count;
  if (highlight.upset_of) result["upset_size"] = up_count;
  rec["result"] = std::move(result);
  return emit(ctx, std::move(rec));
}

int cmd_verify(const Context& ctx, const std::string& suite_name) {
  const auto suite = parse_suite(suite_name);
  if (!suite) fail(kBadInput, "unknown suite '" + suite_name + "'");
  const int k = ctx.max_n.value_or(ctx.config.bg_sweep_max_n);
  if (k < 2 || k > ctx.config.bg_sweep_max_n) {
    fail(kBadInput, "--max-n for verify must lie in [2, " +
                        std::to_string(ctx.config.bg_sweep_max_n) + "]");
  }
  VerifyLimits limits;
  limits.max_n = k;
  limits.permutation_max_n = ctx.config.permutation_sweep_max_n;
  limits.reduction_oracle_max_n = ctx.config.reduction_oracle_max_n;
  const auto results = run_verification(*suite, limits);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const CheckResult& r) { return r.passed; });

  if (ctx.format_given && ctx.format != "text") {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"status", r.passed ? "PASS" : "FAIL"},
                      {"suite", r.suite},
                      {"check", r.name},
                      {"n_min", r.n_min},
                      {"n_max", r.n_max},
                      {"instances", r.instances},
                      {"counterexample", r.counterexample}});
    }
    auto rec = make_record("verify", {{"max_n", k}, {"suite", suite_name}});
    rec["provenance"] = "both";
    rec["result"] = std::move(rows);
    if (ctx.format == "csv") {
      write_csv(ctx.out, rec["result"]);
    } else {
      ctx.out << rec.dump(2) << '\n';
    }
  } else {
    ctx.out << format_report(results);
  }
  return ok ? kOk : kCheckFailed;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SizeLimitExceeded:
    case ErrorCode::NotComparable:
    case ErrorCode::OrderTooSmall:
      return kPrecondition;
    default:
      return kBadInput;
  }
}

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace

Config load_config() {
  Config cfg;
  if (const char* path = std::getenv("BGPOSET_CONFIG"); path && *path) {
    std::ifstream in(path);
    if (in) {
      const auto doc = nlohmann::json::parse(in, nullptr, false);
      if (doc.is_object()) {
        cfg.max_order = doc.value("max_order", cfg.max_order);
        cfg.permutation_sweep_max_n = doc.value("permutation_sweep_max_n", cfg.permutation_sweep_max_n);
        cfg.bg_sweep_max_n = doc.value("bg_sweep_max_n", cfg.bg_sweep_max_n);
        cfg.graph_export_max_n = doc.value("graph_export_max_n", cfg.graph_export_max_n);
        cfg.reduction_oracle_max_n = doc.value("reduction_oracle_max_n", cfg.reduction_oracle_max_n);
      }
    }
  }
  cfg.max_order = env_int("BGPOSET_MAX_ORDER", cfg.max_order);
  cfg.permutation_sweep_max_n = env_int("BGPOSET_PERMUTATION_SWEEP_MAX_N", cfg.permutation_sweep_max_n);
  cfg.bg_sweep_max_n = env_int("BGPOSET_BG_SWEEP_MAX_N", cfg.bg_sweep_max_n);
  cfg.graph_export_max_n = env_int("BGPOSET_GRAPH_EXPORT_MAX_N", cfg.graph_export_max_n);
  cfg.reduction_oracle_max_n = env_int("BGPOSET_REDUCTION_ORACLE_MAX_N", cfg.reduction_oracle_max_n);
  cfg.max_order = std::min(cfg.max_order, kMaxOrder);
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Config& config) {
  CLI::App app{"Bruhat order and the bigrassmannian permutation poset", "bgposet"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "json";
  std::optional<int> max_n;
  auto* format_opt = app.add_option("--format", format, "Output format: json, csv (verify: text)")
                         ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--max-n", max_n,
                 "Largest accepted order; for verify, the largest n swept");

  int n = 0;
  std::string a;
  std::string b;
  std::string method = "auto";
  std::vector<std::string> targets;
  bool above = false;
  std::string dot_path;
  std::string downset;
  std::string upset;
  std::string suite = "all";
  std::optional<int> map_level;

  auto* enumerate = app.add_subcommand("enumerate", "List BG_n with vectors and counts");
  enumerate->add_option("n", n)->required();

  auto* compare = app.add_subcommand("compare", "Decide p <= q in Bruhat order");
  compare->add_option("p", a)->required();
  compare->add_option("q", b)->required();
  compare->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "ehresmann", "bb", "vector", "oracle"}));

  auto* beta = app.add_subcommand("beta", "BG elements weakly below a permutation");
  beta->add_option("permutation", a)->required();
  auto* alpha = app.add_subcommand("alpha", "BG elements weakly above a permutation");
  alpha->add_option("permutation", a)->required();

  auto* vector = app.add_subcommand("vector", "Length vector and images of a BG element");
  vector->add_option("element", a)->required();

  auto* stats = app.add_subcommand("stats", "Poset statistics of BG_n");
  stats->add_option("n", n)->required();

  auto* chains = app.add_subcommand("chains", "Saturated chains between u <= v");
  chains->add_option("u", a)->required();
  chains->add_option("v", b)->required();

  auto* distance = app.add_subcommand("distance", "Hasse-diagram distance");
  distance->add_option("u", a)->required();
  distance->add_option("v", b)->required();

  auto* antichain = app.add_subcommand("antichain", "Largest antichain and chain partition");
  antichain->add_option("n", n)->required();
  antichain->add_option("--map-level", map_level, "Tabulate the level-to-level map at a level");

  auto* bflies = app.add_subcommand("butterflies", "Butterflies of the Hasse diagram");
  bflies->add_option("n", n)->required();

  auto* below = app.add_subcommand("below", "Maximal elements below (or minimal above) targets");
  below->add_option("targets", targets)->required();
  below->add_flag("--above", above, "Minimal elements above instead");

  auto* hasse = app.add_subcommand("hasse", "Export the Hasse diagram as DOT");
  hasse->add_option("n", n)->required();
  hasse->add_option("--dot", dot_path, "Output file (stdout when omitted)");
  hasse->add_option("--downset", downset, "Highlight the down-set of this element");
  hasse->add_option("--upset", upset, "Highlight the up-set of this element");

  auto* verify = app.add_subcommand("verify", "Formula-versus-oracle property sweeps");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "order", "counts", "sperner", "butterfly", "below"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  Context ctx{config, out, err, "json", false, config.max_order, std::nullopt};
  ctx.format = format;
  ctx.format_given = format_opt->count() > 0;
  ctx.max_n = max_n;
  ctx.max_order = config.max_order;
  if (max_n && !verify->parsed()) ctx.max_order = std::min(*max_n, kMaxOrder);
  if (format == "text" && !verify->parsed()) ctx.format = "json";

  try {
    if (enumerate->parsed()) return cmd_enumerate(ctx, n);
    if (compare->parsed()) return cmd_compare(ctx, a, b, method);
    if (beta->parsed()) return cmd_beta_alpha(ctx, a, true);
    if (alpha->parsed()) return cmd_beta_alpha(ctx, a, false);
    if (vector->parsed()) return cmd_vector(ctx, a);
    if (stats->parsed()) return cmd_stats(ctx, n);
    if (chains->parsed()) return cmd_chains(ctx, a, b);
    if (distance->parsed()) return cmd_distance(ctx, a, b);
    if (antichain->parsed()) return cmd_antichain(ctx, n, map_level);
    if (bflies->parsed()) return cmd_butterflies(ctx, n);
    if (below->parsed()) return cmd_below(ctx, targets, above);
    if (hasse->parsed()) return cmd_hasse(ctx, n, dot_path, downset, upset);
    if (verify->parsed()) return cmd_verify(ctx, suite);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kBadInput;
}

}  // namespace bgposet::cli
