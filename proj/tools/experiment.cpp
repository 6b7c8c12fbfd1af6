#include "experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <thread>

#include "oracles/oracles.hpp"
#include "outer/error.hpp"
#include "outer/factor_complex.hpp"
#include "outer/folding.hpp"
#include "outer/lipschitz.hpp"
#include "outer/whitehead.hpp"

namespace outer::experiment {

using outer::to_json;

namespace {

const std::vector<std::pair<Suite, std::string>> kSuites = {
    {Suite::distance_oracle, "distance-oracle"},
    {Suite::fold_additivity, "fold-additivity"},
    {Suite::whitehead_oracle, "whitehead-oracle"},
    {Suite::qg_check, "qg-check"},
};

// Runs work(i) for i in [0, n) on `workers` threads, each with its own worker from make().
// Exceptions become error records.
template <class Make>
std::vector<Json> parallel_map(int n, int workers, Make make) {
  std::vector<Json> out(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto body = [&] {
    auto work = make();
    for (int i = next++; i < n; i = next++) {
      try {
        out[static_cast<std::size_t>(i)] = work(i);
      } catch (const std::exception& e) {
        out[static_cast<std::size_t>(i)] = {{"index", i}, {"error", e.what()}, {"violations", 0}};
      }
    }
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(body);
  body();
  for (auto& t : threads) t.join();
  return out;
}

RandomGraphOptions graph_options(const Config& c) {
  RandomGraphOptions o;
  o.rank = c.rank;
  o.max_denominator = c.max_denominator;
  o.automorphism_moves = c.automorphism_moves;
  return o;
}

Json distance_instance(const Config& c, int i) {
  Rng rng = instance_rng(c.seed, static_cast<std::uint64_t>(i));
  auto g = random_marked_graph(rng, graph_options(c));
  auto h = random_marked_graph(rng, graph_options(c));
  auto s = stretch_factor(g, h);
  auto brute = oracle::max_loop_stretch(g, h);
  auto f = optimal_map(g, h);
  auto tension = tension_graph(f);
  auto tt = gates(f, tension);
  Rational len = path_length(g, s.witness.path.dirs);
  bool in_tension = std::all_of(s.witness.path.dirs.begin(), s.witness.path.dirs.end(),
                                [&](Dir d) { return tension[static_cast<std::size_t>(edge_of(d))]; });
  Json j = {{"index", i},
            {"lambda", to_json(s.lambda)},
            {"log10_lambda", std::log10(to_double(s.lambda))},
            {"oracle_lambda", to_json(brute)},
            {"match", s.lambda == brute},
            {"witness", to_json(s.witness.path)},
            {"witness_shape", to_string(s.witness.shape)},
            {"witness_length", to_json(len)},
            {"witness_below_two", len < 2},
            {"witness_legal", is_legal(tt, s.witness.path)},
            {"witness_in_tension", in_tension},
            {"sigma_is_lambda", f.sigma() == s.lambda}};
  int v = 0;
  for (const char* key : {"match", "witness_below_two", "witness_legal", "witness_in_tension", "sigma_is_lambda"}) v += !j[key].get<bool>();
  j["violations"] = v;
  return j;
}

Json fold_instance(const Config& c, int i) {
  Rng rng = instance_rng(c.seed, static_cast<std::uint64_t>(i));
  auto g = random_marked_graph(rng, graph_options(c));
  auto h = random_marked_graph(rng, graph_options(c));
  auto sg = standard_geodesic(g, h);
  const auto& path = sg.folding;
  const int n = path.size();

  Rational whole = stretch_factor(g, h).lambda;
  Rational first = stretch_factor(g, sg.middle).lambda;
  Rational second = stretch_factor(sg.middle, h).lambda;
  bool multiplicative = whole == first * second;

  std::vector<MarkedMetricGraph> snaps;
  for (int k = 0; k < n; ++k) snaps.push_back(path.normalized(k));
  std::vector<std::vector<Rational>> lambda(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) lambda[a][b] = stretch_factor(snaps[a], snaps[b]).lambda;
  }
  int triples = 0;
  int triple_failures = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      for (int d = b; d < n; ++d) {
        ++triples;
        triple_failures += lambda[a][d] != lambda[a][b] * lambda[b][d];
      }
    }
  }

  PathProbes probes;
  auto witness = stretch_factor(sg.middle, path.target()).witness;
  probes.loops.push_back(CyclicWord::of(path_word(sg.middle, witness.path.dirs)));
  while (static_cast<int>(probes.loops.size()) < c.probe_loops) {
    auto w = CyclicWord::of(random_word(rng, c.rank, uniform_int(rng, 2, 8)));
    if (!w.trivial()) probes.loops.push_back(w);
  }
  auto rows = path_statistics(path, probes);
  int turn_increases = 0;
  int illegal_total = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t k = 0; k < probes.loops.size(); ++k) {
      if (r == 0) illegal_total += rows[r].illegal_turns[k];
      if (r > 0) turn_increases += rows[r].illegal_turns[k] > rows[r - 1].illegal_turns[k];
    }
  }
  Json times = Json::array();
  for (const auto& t : path.times) times.push_back(to_json(t));
  Json j = {{"index", i},
            {"events", n},
            {"times", times},
            {"lambda", to_json(whole)},
            {"log10_lambda", std::log10(to_double(whole))},
            {"simplex_lambda", to_json(first)},
            {"fold_lambda", to_json(second)},
            {"multiplicative", multiplicative},
            {"collapsed_edges", sg.collapsed.size()},
            {"triples", triples},
            {"triple_failures", triple_failures},
            {"initial_illegal_turns", illegal_total},
            {"illegal_turn_increases", turn_increases}};
  j["violations"] = static_cast<int>(!multiplicative) + triple_failures + turn_increases;
  return j;
}

std::vector<CyclicWord> exhaustive_words(const Config& c) {
  std::set<CyclicWord> out;
  for (const auto& w : oracle::all_reduced_words(c.rank, c.max_word_length)) {
    auto cw = CyclicWord::of(w);
    if (!cw.trivial()) out.insert(cw);
  }
  return {out.begin(), out.end()};
}

Json verdict_json(const FreeGroup& group, const SimplicityVerdict& v) {
  return {{"simple", v.simple}, {"determined", v.determined}, {"witness", group.format(v.witness)}, {"reason", v.reason}};
}

Json whitehead_instance(const Config& c, const std::vector<CyclicWord>& words, oracle::WhiteheadProductSearch& search, int i) {
  FreeGroup group(c.rank);
  const int exhaustive = static_cast<int>(words.size());
  Json j = {{"index", i}};
  CyclicWord w;
  std::optional<bool> expected;
  if (i < exhaustive) {
    w = words[static_cast<std::size_t>(i)];
    j["kind"] = "exhaustive";
    expected = search.simple(w);
  } else if (i < exhaustive + c.instances) {
    Rng rng = instance_rng(c.seed, static_cast<std::uint64_t>(i - exhaustive));
    w = CyclicWord::of(random_automorphism(rng, c.rank, c.automorphism_moves).apply(Word::letter(1)));
    j["kind"] = "primitive";
    expected = true;
  } else {
    std::vector<Letter> letters;
    for (int x = 1; x <= c.rank; ++x) letters.insert(letters.end(), {x, x});
    w = CyclicWord::of(letters);
    j["kind"] = "squares";
    expected = false;
  }
  auto v = is_simple(c.rank, w, static_cast<std::size_t>(c.orbit_cap));
  j["word"] = group.format(w);
  j["length"] = w.size();
  j["verdict"] = verdict_json(group, v);
  j["expected"] = *expected;
  j["agree"] = v.determined && v.simple == *expected;
  j["violations"] = j["agree"].get<bool>() ? 0 : 1;
  return j;
}

Json qg_instance(const Config& c, const FactorBall& base, int i) {
  Rng rng = instance_rng(c.seed, static_cast<std::uint64_t>(i));
  auto g = random_marked_graph(rng, graph_options(c));
  auto h = random_marked_graph(rng, graph_options(c));
  auto sg = standard_geodesic(g, h);
  std::vector<std::vector<FactorHandle>> seq;
  std::vector<FactorHandle> seeds;
  for (const auto& snap : sg.folding.snapshots) {
    seq.push_back(project(snap));
    seeds.insert(seeds.end(), seq.back().begin(), seq.back().end());
  }
  auto ball = base.extended(seeds);
  auto cert = check_reparam_quasigeodesic(seq, c.K, ball);

  // Constructed violation: jump straight from the first image to the last with K one below
  // the diameter of their union.
  std::vector<std::vector<FactorHandle>> jump = {seq.front(), seq.back()};
  int span = check_reparam_quasigeodesic(jump, 1 << 20, ball).windows.front().diameter;
  Json teleport = {{"K", span - 1}};
  if (span >= 1) {
    auto t = check_reparam_quasigeodesic(jump, span - 1, ball);
    teleport["flagged"] = !t.windows_ok;
    if (t.offending) teleport["offending"] = {t.offending->begin, t.offending->end, t.offending->diameter};
  } else {
    teleport["flagged"] = nullptr;
  }

  Json windows = Json::array();
  for (const auto& w : cert.windows) windows.push_back({w.begin, w.end, w.diameter});
  Json j = {{"index", i},
            {"events", sg.folding.size()},
            {"distinct_factors", std::set<FactorHandle>(seeds.begin(), seeds.end()).size()},
            {"ball_size", ball.size()},
            {"K", c.K},
            {"certified", cert.windows_ok},
            {"breakpoints", cert.breakpoints},
            {"windows", windows},
            {"progress", cert.progress},
            {"consistent_under_upper_bounds", cert.consistent},
            {"progress_violations", cert.violations.size()},
            {"teleport", teleport}};
  if (cert.offending) j["offending"] = {cert.offending->begin, cert.offending->end, cert.offending->diameter};
  bool missed = teleport["flagged"].is_boolean() && !teleport["flagged"].get<bool>();
  j["violations"] = static_cast<int>(!cert.windows_ok) + static_cast<int>(missed);
  return j;
}

int count_true(const std::vector<Json>& rows, const char* key) {
  int n = 0;
  for (const auto& r : rows) n += r.contains(key) && r[key].is_boolean() && r[key].get<bool>();
  return n;
}

}  // namespace

std::string to_string(Suite s) {
  for (const auto& [suite, name] : kSuites) {
    if (suite == s) return name;
  }
  return "?";
}

Suite suite_from_string(const std::string& name) {
  for (const auto& [suite, n] : kSuites) {
    if (n == name) return suite;
  }
  throw Error("unknown suite \"" + name + "\"");
}

void Config::validate() const {
  if (rank < 2) throw Error("rank must be at least 2");
  if (suite == Suite::qg_check && rank < 3) throw Error("qg-check needs rank at least 3");
  if (instances < 0 || workers < 1 || max_denominator < 1 || automorphism_moves < 0) throw Error("counts must be positive");
  if (bound < 1 || product_length < 0 || K < 0 || orbit_cap < 1 || max_word_length < 1 || oracle_depth < 0 || probe_loops < 1) {
    throw Error("bounds must be positive");
  }
}

Config config_from_json(const Json& j) {
  Config c;
  try {
    if (j.contains("suite")) c.suite = suite_from_string(j["suite"].get<std::string>());
    c.seed = j.value("seed", c.seed);
    c.rank = j.value("rank", c.rank);
    c.instances = j.value("instances", c.instances);
    c.workers = j.value("workers", c.workers);
    c.max_denominator = j.value("max_denominator", c.max_denominator);
    c.automorphism_moves = j.value("automorphism_moves", c.automorphism_moves);
    c.bound = j.value("bound", c.bound);
    c.product_length = j.value("product_length", c.product_length);
    c.K = j.value("K", c.K);
    c.orbit_cap = j.value("orbit_cap", c.orbit_cap);
    c.max_word_length = j.value("max_word_length", c.max_word_length);
    c.oracle_depth = j.value("oracle_depth", c.oracle_depth);
    c.probe_loops = j.value("probe_loops", c.probe_loops);
    c.out_dir = j.value("out_dir", c.out_dir);
  } catch (const Json::exception& e) {
    throw Error(std::string("bad experiment config: ") + e.what());
  }
  c.validate();
  return c;
}

Json to_json(const Config& c) {
  return {{"suite", to_string(c.suite)},
          {"seed", c.seed},
          {"rank", c.rank},
          {"instances", c.instances},
          {"max_denominator", c.max_denominator},
          {"automorphism_moves", c.automorphism_moves},
          {"bound", c.bound},
          {"product_length", c.product_length},
          {"K", c.K},
          {"orbit_cap", c.orbit_cap},
          {"max_word_length", c.max_word_length},
          {"oracle_depth", c.oracle_depth},
          {"probe_loops", c.probe_loops}};
}

Report run(const Config& c) {
  c.validate();
  std::vector<Json> rows;
  switch (c.suite) {
    case Suite::distance_oracle:
      rows = parallel_map(c.instances, c.workers, [&] { return [&](int i) { return distance_instance(c, i); }; });
      break;
    case Suite::fold_additivity:
      rows = parallel_map(c.instances, c.workers, [&] { return [&](int i) { return fold_instance(c, i); }; });
      break;
    case Suite::whitehead_oracle: {
      auto words = exhaustive_words(c);
      const int n = static_cast<int>(words.size()) + c.instances + 1;
      rows = parallel_map(n, c.workers, [&] {
        return [&, search = std::make_shared<oracle::WhiteheadProductSearch>(c.rank, c.oracle_depth)](int i) {
          return whitehead_instance(c, words, *search, i);
        };
      });
      break;
    }
    case Suite::qg_check: {
      BallOptions options;
      options.bound = c.bound;
      options.product_length = c.product_length;
      auto base = build_ball(c.rank, {}, options);
      rows = parallel_map(c.instances, c.workers, [&] { return [&](int i) { return qg_instance(c, base, i); }; });
      break;
    }
  }

  Report report;
  for (const auto& r : rows) {
    report.lines.push_back(r.dump());
    report.violations += r.value("violations", 0);
    report.errors += r.contains("error");
  }
  Json s = to_json(c);
  s["records"] = rows.size();
  s["violations"] = report.violations;
  s["errors"] = report.errors;
  switch (c.suite) {
    case Suite::distance_oracle:
      s["exact_matches"] = count_true(rows, "match");
      s["witness_below_two"] = count_true(rows, "witness_below_two");
      s["sigma_is_lambda"] = count_true(rows, "sigma_is_lambda");
      break;
    case Suite::fold_additivity: {
      int triples = 0;
      int events = 0;
      for (const auto& r : rows) {
        triples += r.value("triples", 0);
        events += r.value("events", 0);
      }
      s["multiplicative"] = count_true(rows, "multiplicative");
      s["triples"] = triples;
      s["events"] = events;
      break;
    }
    case Suite::whitehead_oracle: {
      int simple = 0;
      int undetermined = 0;
      for (const auto& r : rows) {
        if (!r.contains("verdict")) continue;
        simple += r["verdict"]["simple"].get<bool>();
        undetermined += !r["verdict"]["determined"].get<bool>();
      }
      s["agree"] = count_true(rows, "agree");
      s["simple"] = simple;
      s["undetermined"] = undetermined;
      break;
    }
    case Suite::qg_check: {
      int flagged = 0;
      int max_events = 0;
      for (const auto& r : rows) {
        if (r.contains("teleport") && r["teleport"]["flagged"].is_boolean()) flagged += r["teleport"]["flagged"].get<bool>();
        max_events = std::max(max_events, r.value("events", 0));
      }
      s["certified"] = count_true(rows, "certified");
      s["consistent_under_upper_bounds"] = count_true(rows, "consistent_under_upper_bounds");
      s["teleports_flagged"] = flagged;
      s["max_events"] = max_events;
      break;
    }
  }
  report.summary = s;
  return report;
}

void write(const Report& report, const Config& c) {
  if (c.out_dir.empty()) return;
  std::filesystem::create_directories(c.out_dir);
  const auto base = std::filesystem::path(c.out_dir) / to_string(c.suite);
  std::ofstream lines(base.string() + ".jsonl");
  for (const auto& l : report.lines) lines << l << '\n';
  std::ofstream summary(base.string() + "-summary.json");
  summary << report.summary.dump(2) << '\n';
  if (!lines || !summary) throw Error("cannot write reports to " + c.out_dir);
}

}  // namespace outer::experiment
