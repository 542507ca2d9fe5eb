#pragma once

// Command-line front end. `run` is the whole program; main() only forwards
// argv so the tests can drive it in-process.

#include <permpat.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace permpat::cli {

inline constexpr const char* schema = "permpat/1";

using nlohmann::json;

inline json perm_json(const Permutation& p) { return std::vector<int>(p.begin(), p.end()); }

inline json perms_json(const std::vector<Permutation>& ps) {
  json arr = json::array();
  for (const auto& p : ps)
    arr.push_back(perm_json(p));
  return arr;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "@path" reads the argument from a file.
inline std::string resolve_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@')
    return read_file(arg.substr(1));
  return arg;
}

/// One permutation per nonempty line; '#' starts a comment line.
inline std::vector<Permutation> read_permutation_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<Permutation> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    out.push_back(parse_permutation(line));
  }
  return out;
}

inline std::string format_fixed(double x, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

inline std::string counts_text(const std::vector<std::uint64_t>& counts) {
  std::vector<std::string> parts;
  for (auto c : counts)
    parts.push_back(std::to_string(c));
  return join(parts, ", ");
}

inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("PERMPAT_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("PERMPAT_BUDGET is not a number: ") + env);
    }
  }
  return EnumerationOptions{}.budget;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation patterns toolkit: containment, structure, statistics, mesh patterns, "
               "class enumeration, Wilf classification and generating-function fitting.",
               "permpat"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  unsigned threads = 1;
  std::uint64_t budget = 0;
  bool budget_set = false;
  app.add_flag("--json", as_json, "Print results as JSON (schema \"permpat/1\")");
  app.add_option("--threads", threads, "Worker threads for enumeration and distributions (default 1)")
      ->check(CLI::Range(1u, 256u));
  app.add_option_function<std::uint64_t>(
         "--budget", [&](const std::uint64_t& b) { budget = b; budget_set = true; },
         "Maximum stored permutations during enumeration (default 10000000, or $PERMPAT_BUDGET)");

  std::vector<std::pair<CLI::App*, std::function<void()>>> handlers;
  auto emit = [&](json body, const std::string& text) {
    if (as_json) {
      body["schema"] = schema;
      out << body.dump(2) << '\n';
    } else {
      out << text;
    }
  };
  auto enumeration_options = [&] {
    EnumerationOptions o;
    o.budget = budget_set ? budget : default_budget();
    o.threads = threads;
    return o;
  };

  // --- reduce ---------------------------------------------------------------
  std::vector<std::string> reduce_words;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a word of distinct integers to a permutation");
  reduce_cmd->add_option("word", reduce_words, "Distinct integers (delimited, or compact digits)")
      ->required();
  handlers.emplace_back(reduce_cmd, [&] {
    std::vector<long long> word;
    for (const auto& w : reduce_words)
      for (auto v : detail::tokenize_one_line(w))
        word.push_back(v);
    const auto p = reduce(word);
    emit({{"command", "reduce"}, {"result", perm_json(p)}}, to_string(p) + "\n");
  });

  // --- contains / occurrences -----------------------------------------------
  std::string host_text, pattern_text;
  auto* contains_cmd = app.add_subcommand("contains", "Test classical containment; prints the lexicographically least witness");
  contains_cmd->add_option("host", host_text, "Host permutation")->required();
  contains_cmd->add_option("pattern", pattern_text, "Pattern permutation")->required();
  handlers.emplace_back(contains_cmd, [&] {
    const auto host = parse_permutation(host_text);
    const auto pat = parse_permutation(pattern_text);
    const auto w = find_occurrence(host, pat);
    json j{{"command", "contains"}, {"host", perm_json(host)}, {"pattern", perm_json(pat)},
           {"contains", w.has_value()}};
    if (w)
      j["witness"] = w->indices;
    emit(j, w ? "true " + to_string(*w) + "\n" : "false\n");
  });

  auto* occ_cmd = app.add_subcommand("occurrences", "List every occurrence (1-based index tuples, sorted)");
  occ_cmd->add_option("host", host_text, "Host permutation")->required();
  occ_cmd->add_option("pattern", pattern_text, "Pattern permutation")->required();
  handlers.emplace_back(occ_cmd, [&] {
    const auto host = parse_permutation(host_text);
    const auto pat = parse_permutation(pattern_text);
    const auto occs = occurrences(host, pat);
    json list = json::array();
    std::string text;
    for (const auto& o : occs) {
      list.push_back(o.indices);
      text += to_string(o) + "\n";
    }
    emit({{"command", "occurrences"}, {"count", occs.size()}, {"occurrences", list}}, text);
  });

  // --- sums / inflation -------------------------------------------------------
  std::vector<std::string> operands;
  auto* sum_cmd = app.add_subcommand("sum", "Direct sum of one or more permutations");
  sum_cmd->add_option("perms", operands, "Summands")->required();
  auto* skew_cmd = app.add_subcommand("skew", "Skew sum of one or more permutations");
  skew_cmd->add_option("perms", operands, "Summands")->required();
  auto fold = [&](bool skew) {
    std::vector<Permutation> parts;
    for (const auto& s : operands)
      parts.push_back(parse_permutation(s));
    const auto p = skew ? skew_sum(std::span<const Permutation>(parts))
                        : direct_sum(std::span<const Permutation>(parts));
    emit({{"command", skew ? "skew" : "sum"}, {"result", perm_json(p)}}, to_string(p) + "\n");
  };
  handlers.emplace_back(sum_cmd, [&] { fold(false); });
  handlers.emplace_back(skew_cmd, [&] { fold(true); });

  std::string skeleton_text;
  std::vector<std::string> component_texts;
  auto* inflate_cmd = app.add_subcommand("inflate", "Inflate a skeleton by one component per entry");
  inflate_cmd->add_option("skeleton", skeleton_text, "Skeleton permutation")->required();
  inflate_cmd->add_option("components", component_texts, "Nonempty components, one per skeleton entry");
  handlers.emplace_back(inflate_cmd, [&] {
    std::vector<Permutation> comps;
    for (const auto& s : component_texts)
      comps.push_back(parse_permutation(s));
    const auto p = inflate(parse_permutation(skeleton_text), std::span<const Permutation>(comps));
    emit({{"command", "inflate"}, {"result", perm_json(p)}}, to_string(p) + "\n");
  });

  // --- decompose ----------------------------------------------------------------
  std::string decompose_kind, perm_text;
  auto* decompose_cmd = app.add_subcommand("decompose", "Sum, skew or substitution decomposition");
  decompose_cmd->add_option("kind", decompose_kind, "sum | skew | substitution")
      ->required()
      ->check(CLI::IsMember({"sum", "skew", "substitution"}));
  decompose_cmd->add_option("perm", perm_text, "Permutation")->required();
  handlers.emplace_back(decompose_cmd, [&] {
    const auto p = parse_permutation(perm_text);
    if (decompose_kind == "substitution") {
      const auto d = substitution_decompose(p);
      std::string text = "skeleton " + to_string(d.skeleton) + "\n";
      for (const auto& c : d.components)
        text += "component " + to_string(c) + "\n";
      emit({{"command", "decompose"}, {"kind", "substitution"}, {"skeleton", perm_json(d.skeleton)},
            {"components", perms_json(d.components)}},
           text);
      return;
    }
    const auto parts = decompose_kind == "sum" ? sum_decompose(p) : skew_decompose(p);
    std::string text;
    for (const auto& c : parts)
      text += to_string(c) + "\n";
    emit({{"command", "decompose"}, {"kind", decompose_kind}, {"components", perms_json(parts)}}, text);
  });

  // --- intervals / simple / layered / extrema -------------------------------------
  auto* intervals_cmd = app.add_subcommand("intervals", "List intervals of length >= 1 as 'start end'");
  intervals_cmd->add_option("perm", perm_text, "Permutation")->required();
  handlers.emplace_back(intervals_cmd, [&] {
    const auto ivs = intervals(parse_permutation(perm_text));
    json list = json::array();
    std::string text;
    for (const auto& iv : ivs) {
      list.push_back({iv.start, iv.end});
      text += std::to_string(iv.start) + " " + std::to_string(iv.end) + "\n";
    }
    emit({{"command", "intervals"}, {"intervals", list}}, text);
  });

  auto* simple_cmd = app.add_subcommand("simple", "Is the permutation simple? (1, 12, 21 count as simple)");
  simple_cmd->add_option("perm", perm_text, "Permutation")->required();
  handlers.emplace_back(simple_cmd, [&] {
    const bool v = is_simple(parse_permutation(perm_text));
    emit({{"command", "simple"}, {"simple", v}}, v ? "true\n" : "false\n");
  });

  auto* layered_cmd = app.add_subcommand("layered", "Is the permutation a direct sum of decreasing permutations?");
  layered_cmd->add_option("perm", perm_text, "Permutation")->required();
  handlers.emplace_back(layered_cmd, [&] {
    const bool v = is_layered(parse_permutation(perm_text));
    emit({{"command", "layered"}, {"layered", v}}, v ? "true\n" : "false\n");
  });

  std::string extrema_kind = "all";
  auto* extrema_cmd = app.add_subcommand("extrema", "Positions of left-to-right / right-to-left maxima and minima");
  extrema_cmd->add_option("perm", perm_text, "Permutation")->required();
  extrema_cmd->add_option("--kind", extrema_kind, "lr-max | lr-min | rl-max | rl-min | all (default all)");
  handlers.emplace_back(extrema_cmd, [&] {
    const auto p = parse_permutation(perm_text);
    std::vector<ExtremalKind> kinds;
    if (extrema_kind == "all")
      kinds = {ExtremalKind::LeftToRightMaxima, ExtremalKind::LeftToRightMinima,
               ExtremalKind::RightToLeftMaxima, ExtremalKind::RightToLeftMinima};
    else
      kinds = {parse_extremal_kind(extrema_kind)};
    json j{{"command", "extrema"}};
    std::string text;
    for (auto k : kinds) {
      const auto pos = extremal(p, k);
      j["extrema"][std::string(name_of(k))] = pos;
      std::vector<std::string> parts;
      for (auto x : pos)
        parts.push_back(std::to_string(x));
      text += std::string(name_of(k)) + " (" + std::to_string(pos.size()) + "): " + join(parts) + "\n";
    }
    emit(j, text);
  });

  // --- symmetry -------------------------------------------------------------------
  std::string symmetry_name;
  auto* symmetry_cmd = app.add_subcommand("symmetry", "Apply a symmetry of the square, or list all eight images");
  symmetry_cmd->add_option("perm", perm_text, "Permutation")->required();
  symmetry_cmd->add_option("--apply", symmetry_name,
                           "id | reverse | complement | inverse | reverse-complement | any of i,r,c "
                           "(applied inverse, then reverse, then complement); default: all eight");
  handlers.emplace_back(symmetry_cmd, [&] {
    const auto p = parse_permutation(perm_text);
    if (!symmetry_name.empty()) {
      const auto s = parse_symmetry(symmetry_name);
      const auto img = apply_symmetry(p, s);
      emit({{"command", "symmetry"}, {"symmetry", name_of(s)}, {"result", perm_json(img)}},
           to_string(img) + "\n");
      return;
    }
    json images = json::object();
    std::string text;
    for (const auto& s : all_symmetries()) {
      const auto img = apply_symmetry(p, s);
      images[name_of(s)] = perm_json(img);
      text += name_of(s) + " " + to_string(img) + "\n";
    }
    const auto orbit = symmetry_orbit(p);
    std::vector<std::string> parts;
    for (const auto& q : orbit)
      parts.push_back(to_compact_string(q));
    text += "orbit " + join(parts, ",") + "\n";
    emit({{"command", "symmetry"}, {"images", images}, {"orbit", perms_json(orbit)}}, text);
  });

  // --- statistics -------------------------------------------------------------------
  std::string stat_name, stat_name_b;
  std::size_t stat_n = 8;
  auto* stat_cmd = app.add_subcommand("stat", "Evaluate a statistic (des, inv, exc, maj)");
  stat_cmd->add_option("name", stat_name, "Statistic name")->required();
  stat_cmd->add_option("perm", perm_text, "Permutation")->required();
  handlers.emplace_back(stat_cmd, [&] {
    const auto v = statistic(stat_name, parse_permutation(perm_text));
    emit({{"command", "stat"}, {"statistic", stat_name}, {"value", v}}, std::to_string(v) + "\n");
  });

  auto* dist_cmd = app.add_subcommand("dist", "Distribution of a statistic over S_n as 'k count' rows");
  dist_cmd->add_option("name", stat_name, "Statistic name")->required();
  dist_cmd->add_option("--n", stat_n, "Length n (default 8, cap 10)");
  handlers.emplace_back(dist_cmd, [&] {
    DistributionOptions o;
    o.threads = threads;
    const auto d = distribution(stat_name, stat_n, o);
    std::string text;
    for (std::size_t k = 0; k < d.counts.size(); ++k)
      text += std::to_string(k) + " " + std::to_string(d.counts[k]) + "\n";
    emit({{"command", "dist"}, {"statistic", stat_name}, {"n", stat_n}, {"counts", d.counts}}, text);
  });

  auto* equidist_cmd = app.add_subcommand("equidist", "Compare two statistics' distributions for every n <= --n");
  equidist_cmd->add_option("a", stat_name, "First statistic")->required();
  equidist_cmd->add_option("b", stat_name_b, "Second statistic")->required();
  equidist_cmd->add_option("--n", stat_n, "Largest length (default 8, cap 10)");
  handlers.emplace_back(equidist_cmd, [&] {
    DistributionOptions o;
    o.threads = threads;
    const auto rows = equidistributed(stat_name, stat_name_b, stat_n, o);
    json list = json::array();
    std::string text;
    bool all = true;
    for (const auto& r : rows) {
      all = all && r.equal;
      list.push_back({{"n", r.length}, {"equal", r.equal}, {"a", r.first.counts}, {"b", r.second.counts}});
      text += std::to_string(r.length) + " " + (r.equal ? "equal" : "differ") + "\n";
    }
    text += all ? "equidistributed for n <= " + std::to_string(stat_n) + "\n"
                : "not equidistributed\n";
    emit({{"command", "equidist"}, {"a", stat_name}, {"b", stat_name_b}, {"rows", list},
          {"equidistributed", all}},
         text);
  });

  // --- match ------------------------------------------------------------------------
  std::string match_kind, match_pattern, hosts_file;
  std::vector<std::string> match_hosts;
  auto* match_cmd = app.add_subcommand(
      "match", "Match a classical, vincular, mesh or barred pattern against hosts");
  match_cmd->add_option("kind", match_kind, "classical | vincular | mesh | barred")
      ->required()
      ->check(CLI::IsMember({"classical", "vincular", "mesh", "barred"}));
  match_cmd->add_option("pattern", match_pattern,
                        "Pattern text (vincular: '2-31-4'; barred: '53`21`4' or '5~32~14'; "
                        "mesh: JSON) or @file")
      ->required();
  match_cmd->add_option("host", match_hosts, "Host permutations");
  match_cmd->add_option("--hosts", hosts_file, "File with one host permutation per line");
  handlers.emplace_back(match_cmd, [&] {
    std::vector<Permutation> hosts;
    for (const auto& h : match_hosts)
      hosts.push_back(parse_permutation(h));
    if (!hosts_file.empty())
      for (auto& h : read_permutation_file(hosts_file))
        hosts.push_back(std::move(h));
    if (hosts.empty())
      throw std::invalid_argument("match: no host permutations given");
    const auto text_pattern = resolve_argument(match_pattern);

    std::function<json(const Permutation&)> match_one;
    json pattern_json;
    if (match_kind == "classical") {
      const auto pat = parse_permutation(text_pattern);
      pattern_json = perm_json(pat);
      match_one = [pat](const Permutation& h) {
        const auto c = count_occurrences(h, pat);
        return json{{"contains", c > 0}, {"count", c}};
      };
    } else if (match_kind == "vincular") {
      const auto trimmed = text_pattern.substr(0, text_pattern.find_last_not_of(" \t\r\n") + 1);
      const auto parsed = trimmed.find('{') != std::string::npos ? parse_pattern(trimmed)
                                                                 : Pattern(parse_vincular(trimmed));
      MeshPattern mp;
      if (auto* v = std::get_if<VincularPattern>(&parsed))
        mp = compile_vincular(*v);
      else if (auto* b = std::get_if<BivincularPattern>(&parsed))
        mp = compile_bivincular(*b);
      else if (auto* c = std::get_if<Permutation>(&parsed))
        mp = MeshPattern(*c, {});
      else
        throw std::invalid_argument("match vincular: pattern is not vincular or bivincular");
      pattern_json = to_json(mp);
      match_one = [mp](const Permutation& h) {
        const auto c = mesh_occurrences(h, mp).size();
        return json{{"contains", c > 0}, {"count", c}};
      };
    } else if (match_kind == "mesh") {
      const auto mp = parse_mesh_json(text_pattern);
      pattern_json = to_json(mp);
      match_one = [mp](const Permutation& h) {
        const auto occs = mesh_occurrences(h, mp);
        json list = json::array();
        for (const auto& o : occs)
          list.push_back(o.indices);
        return json{{"contains", !occs.empty()}, {"count", occs.size()}, {"occurrences", list}};
      };
    } else {
      const auto parsed = parse_pattern(text_pattern);
      const auto* bp = std::get_if<BarredPattern>(&parsed);
      if (!bp)
        throw std::invalid_argument("match barred: pattern has no barred entries");
      pattern_json = {{"perm", perm_json(bp->pattern())}, {"barred", bp->barred()}};
      match_one = [b = *bp](const Permutation& h) { return json{{"contains", barred_contains(h, b)}}; };
    }

    json results = json::array();
    std::string text;
    for (const auto& h : hosts) {
      auto r = match_one(h);
      text += to_string(h) + ": " + (r["contains"].get<bool>() ? "true" : "false");
      if (r.contains("count"))
        text += " " + std::to_string(r["count"].get<std::size_t>());
      text += "\n";
      r["host"] = perm_json(h);
      results.push_back(r);
    }
    emit({{"command", "match"}, {"kind", match_kind}, {"pattern", pattern_json}, {"results", results}},
         text);
  });

  // --- enumerate / growth / wilf / classify ------------------------------------------
  std::string basis_text, basis_text_b;
  std::size_t class_n = 10;
  bool witnesses = false;
  std::size_t window = 3;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count Av_n(B) for n = 1..--n ('n count' rows)");
  enumerate_cmd->add_option("basis", basis_text, "Comma-separated basis, e.g. 123,132 ('' or {} for none)")
      ->required();
  enumerate_cmd->add_option("--n", class_n, "Largest length (default 10)");
  enumerate_cmd->add_flag("--witnesses", witnesses, "Also list the members of each level");
  handlers.emplace_back(enumerate_cmd, [&] {
    auto opts = enumeration_options();
    opts.mode = witnesses ? EnumerationMode::WithWitnesses : EnumerationMode::CountsOnly;
    const auto e = enumerate(parse_basis(basis_text), class_n, opts);
    json j{{"command", "enumerate"}, {"basis", to_string(e.basis)}, {"n_max", class_n},
           {"counts", e.counts}, {"truncated", e.truncated}};
    std::string text;
    for (std::size_t n = 1; n < e.counts.size(); ++n) {
      text += std::to_string(n) + " " + std::to_string(e.counts[n]) + "\n";
      if (witnesses)
        for (const auto& w : e.witnesses[n])
          text += "  " + to_string(w) + "\n";
    }
    if (witnesses) {
      json levels = json::array();
      for (const auto& level : e.witnesses)
        levels.push_back(perms_json(level));
      j["witnesses"] = levels;
    }
    if (e.truncated)
      text += "truncated: budget exhausted after length " + std::to_string(e.max_length()) + "\n";
    emit(j, text);
  });

  auto* growth_cmd = app.add_subcommand("growth", "Finite-prefix growth-rate proxies |C_n|^(1/n)");
  growth_cmd->add_option("basis", basis_text, "Comma-separated basis")->required();
  growth_cmd->add_option("--n", class_n, "Largest length (default 10)");
  growth_cmd->add_option("--window", window, "Trailing window for upper/lower proxies (default 3)");
  handlers.emplace_back(growth_cmd, [&] {
    const auto e = enumerate(parse_basis(basis_text), class_n, enumeration_options());
    const auto g = growth_estimates(e, window);
    std::string text;
    json proxies = json::array();
    for (std::size_t n = 1; n < g.proxy.size(); ++n) {
      text += std::to_string(n) + " " + std::to_string(e.counts[n]) + " " + format_fixed(g.proxy[n]) + "\n";
      proxies.push_back({{"n", n}, {"count", e.counts[n]}, {"proxy", g.proxy[n]}});
    }
    text += "upper " + format_fixed(g.upper) + " (max over n = " + std::to_string(g.window_first) +
            ".." + std::to_string(g.window_last) + ")\n";
    text += "lower " + format_fixed(g.lower) + " (min over n = " + std::to_string(g.window_first) +
            ".." + std::to_string(g.window_last) + ")\n";
    text += std::string("diverging ") + (g.diverging ? "true" : "false") + "\n";
    text += std::string("finite-class ") + (g.finite_class ? "true" : "false") + "\n";
    if (e.truncated)
      text += "truncated: budget exhausted after length " + std::to_string(e.max_length()) + "\n";
    text += "note: finite-prefix estimates of the upper/lower growth rates, not limits\n";
    emit({{"command", "growth"}, {"basis", to_string(e.basis)}, {"proxies", proxies},
          {"upper", g.upper}, {"lower", g.lower}, {"window", {g.window_first, g.window_last}},
          {"diverging", g.diverging}, {"finite_class", g.finite_class}, {"truncated", e.truncated}},
         text);
  });

  std::size_t wilf_n = 9;
  auto* wilf_cmd = app.add_subcommand("wilf", "Compare two classes' counts up to --n");
  wilf_cmd->add_option("a", basis_text, "First basis")->required();
  wilf_cmd->add_option("b", basis_text_b, "Second basis")->required();
  wilf_cmd->add_option("--n", wilf_n, "Largest length (default 9)");
  handlers.emplace_back(wilf_cmd, [&] {
    const auto v = wilf_equivalent(parse_basis(basis_text), parse_basis(basis_text_b), wilf_n,
                                   enumeration_options());
    json j{{"command", "wilf"}, {"n_max", v.max_length}, {"equinumerous", v.equinumerous},
           {"counts_a", v.counts_a}, {"counts_b", v.counts_b}};
    std::string text;
    if (v.distinguished_at) {
      const auto n = *v.distinguished_at;
      j["distinguished_at"] = n;
      text = "distinguished at n = " + std::to_string(n) + ": " + std::to_string(v.counts_a[n]) +
             " vs " + std::to_string(v.counts_b[n]) + "\n";
    } else {
      text = "equinumerous up to n = " + std::to_string(v.max_length) + " (not a proof)\n";
    }
    emit(j, text);
  });

  std::size_t classify_k = 3;
  std::size_t classify_n = 8;
  auto* classify_cmd = app.add_subcommand("classify", "Wilf classes of all patterns of length k");
  classify_cmd->add_option("k", classify_k, "Pattern length (at most 4)")->required();
  classify_cmd->add_option("--n", classify_n, "Largest length compared (default 8)");
  handlers.emplace_back(classify_cmd, [&] {
    ClassifyOptions o;
    o.enumeration = enumeration_options();
    const auto c = wilf_classify(classify_k, classify_n, o);
    json classes = json::array();
    std::string text = std::to_string(c.classes.size()) + " Wilf classes for k = " +
                       std::to_string(classify_k) + " (counts compared for n <= " +
                       std::to_string(classify_n) + ")\n";
    for (const auto& wc : c.classes) {
      std::vector<std::string> pats, orbits;
      for (const auto& p : wc.patterns)
        pats.push_back(to_compact_string(p));
      json orbit_json = json::array();
      for (const auto& orbit : wc.symmetry_classes) {
        std::vector<std::string> members;
        for (const auto& p : orbit)
          members.push_back(to_compact_string(p));
        orbits.push_back("{" + join(members, ",") + "}");
        orbit_json.push_back(perms_json(orbit));
      }
      text += "class " + join(pats, ",") + "\n  counts " + counts_text(wc.counts) +
              "\n  symmetry classes " + join(orbits) + "\n";
      classes.push_back({{"patterns", perms_json(wc.patterns)}, {"counts", wc.counts},
                         {"symmetry_classes", orbit_json}});
    }
    text += std::string("symmetry classes refine Wilf classes: ") +
            (c.symmetry_refines ? "true" : "false") + "\n";
    emit({{"command", "classify"}, {"k", classify_k}, {"n_max", classify_n}, {"classes", classes},
          {"symmetry_refines", c.symmetry_refines}},
         text);
  });

  // --- gf -----------------------------------------------------------------------------
  auto* gf_cmd = app.add_subcommand("gf", "Generating-function series and fitting");
  gf_cmd->require_subcommand(1);
  std::string seq_text;
  std::size_t gf_n = 12;
  std::size_t deg_num = 2, deg_den = 2, deg_z = 2, deg_y = 2;
  auto add_series_source = [&](CLI::App* c) {
    c->add_option("basis", basis_text, "Comma-separated basis whose counts form the series");
    c->add_option("--seq", seq_text, "Explicit coefficients c_0,c_1,... instead of a basis");
    c->add_option("--n", gf_n, "Series degree when built from a basis (default 12)");
  };
  auto load_series = [&]() {
    if (!seq_text.empty()) {
      SeriesPrefix s;
      std::string tok;
      std::istringstream in(seq_text);
      while (std::getline(in, tok, ',')) {
        const auto first = tok.find_first_not_of(" \t");
        if (first == std::string::npos)
          throw std::invalid_argument("--seq: empty coefficient");
        const auto last = tok.find_last_not_of(" \t");
        const auto digits = tok.substr(first, last - first + 1);
        if (digits.find_first_not_of("0123456789") != std::string::npos)
          throw std::invalid_argument("--seq: '" + digits + "' is not a non-negative integer");
        s.coefficients.emplace_back(digits);
      }
      return s;
    }
    const auto e = enumerate(parse_basis(basis_text), gf_n, enumeration_options());
    if (e.truncated)
      throw std::invalid_argument("gf: enumeration budget exhausted after length " +
                                  std::to_string(e.max_length()));
    return series_from_enumeration(e);
  };
  auto series_text = [](const SeriesPrefix& s) {
    std::vector<std::string> parts;
    for (const auto& c : s.coefficients)
      parts.push_back(c.str());
    return join(parts, ", ");
  };

  auto* series_cmd = gf_cmd->add_subcommand("series", "Print the series prefix c_0..c_N");
  add_series_source(series_cmd);
  handlers.emplace_back(series_cmd, [&] {
    const auto s = load_series();
    emit({{"command", "gf series"}, {"coefficients", to_json(s)}}, series_text(s) + "\n");
  });

  auto* ratfit_cmd = gf_cmd->add_subcommand("ratfit", "Fit a rational function P(z)/Q(z)");
  add_series_source(ratfit_cmd);
  ratfit_cmd->add_option("--deg-num", deg_num, "Numerator degree bound (default 2)");
  ratfit_cmd->add_option("--deg-den", deg_den, "Denominator degree bound (default 2)");
  handlers.emplace_back(ratfit_cmd, [&] {
    const auto s = load_series();
    const auto fit = fit_rational(s, deg_num, deg_den);
    json j{{"command", "gf ratfit"}, {"degree", s.degree()}, {"bounds", {deg_num, deg_den}},
           {"found", fit.has_value()}};
    if (fit)
      j["fit"] = to_json(*fit);
    emit(j, fit ? to_string(*fit) + "\n"
                : "no-fit within degrees (" + std::to_string(deg_num) + "," +
                      std::to_string(deg_den) + ")\n");
  });

  auto* algfit_cmd = gf_cmd->add_subcommand("algfit", "Fit a polynomial equation P(z, y) = 0");
  add_series_source(algfit_cmd);
  algfit_cmd->add_option("--deg-z", deg_z, "z-degree bound (default 2)");
  algfit_cmd->add_option("--deg-y", deg_y, "y-degree bound (default 2)");
  handlers.emplace_back(algfit_cmd, [&] {
    const auto s = load_series();
    const auto fit = fit_algebraic(s, deg_z, deg_y);
    json j{{"command", "gf algfit"}, {"degree", s.degree()}, {"bounds", {deg_z, deg_y}},
           {"found", fit.has_value()}};
    if (fit)
      j["fit"] = to_json(*fit);
    emit(j, fit ? to_string(*fit) + "\n"
                : "no-fit within degrees (" + std::to_string(deg_z) + "," + std::to_string(deg_y) +
                      ")\n");
  });

  // --- plot -----------------------------------------------------------------------------
  std::string highlight_text, highlight_pattern;
  auto* plot_cmd = app.add_subcommand("plot", "ASCII plot, values increasing upward");
  plot_cmd->add_option("perm", perm_text, "Permutation (length <= 99)")->required();
  plot_cmd->add_option("--highlight", highlight_text, "Comma-separated 1-based positions to highlight");
  plot_cmd->add_option("--pattern", highlight_pattern, "Highlight the least occurrence of this pattern");
  handlers.emplace_back(plot_cmd, [&] {
    const auto p = parse_permutation(perm_text);
    PlotOptions o;
    if (!highlight_text.empty())
      for (auto v : detail::tokenize_one_line(highlight_text)) {
        if (v < 1 || static_cast<std::size_t>(v) > p.size())
          throw std::invalid_argument("plot: position " + std::to_string(v) + " out of range");
        o.highlighted.insert(static_cast<std::size_t>(v));
      }
    if (!highlight_pattern.empty())
      if (auto w = find_occurrence(p, parse_permutation(highlight_pattern)))
        o.highlighted.insert(w->indices.begin(), w->indices.end());
    const auto grid = plot(p, o);
    json rows = json::array();
    std::istringstream lines(grid);
    for (std::string line; std::getline(lines, line);)
      rows.push_back(line);
    emit({{"command", "plot"}, {"perm", perm_json(p)},
          {"highlighted", std::vector<std::size_t>(o.highlighted.begin(), o.highlighted.end())},
          {"rows", rows}},
         grid);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto& [cmd, handler] : handlers)
      if (cmd->parsed()) {
        handler();
        return 0;
      }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 2;
}

} // namespace permpat::cli
