#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "experiment.hpp"
#include "outer/error.hpp"
#include "outer/factor_complex.hpp"
#include "outer/folding.hpp"
#include "outer/io.hpp"
#include "outer/lipschitz.hpp"
#include "outer/whitehead.hpp"

using namespace outer;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Globals {
  std::uint64_t seed = 1;
  int rank = 3;
  bool json = false;
  bool dot = false;
};

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

Json rational_report(const Rational& lambda) {
  return {{"lambda", to_json(lambda)}, {"log10", std::log10(to_double(lambda))}};
}

// "ab,c" -> the factor generated by ab and c.
FactorHandle parse_factor(const std::string& text, int rank) {
  FreeGroup group(rank);
  std::vector<Word> gens;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) gens.push_back(group.parse(part));
  return FactorHandle::from_generators(rank, gens);
}

std::vector<MarkedMetricGraph> read_events(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<MarkedMetricGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::exception& e) {
      throw Error(path + ": " + e.what());
    }
    out.push_back(graph_from_json(j.contains("graph") ? j["graph"] : j));
  }
  if (out.empty()) throw Error(path + ": no events");
  return out;
}

PathProbes default_probes(const Globals& gl, int rank, const std::vector<std::string>& words) {
  FreeGroup group(rank);
  PathProbes probes;
  for (const auto& w : words) probes.loops.push_back(CyclicWord::of(group.parse(w)));
  if (probes.loops.empty()) {
    Rng rng(gl.seed);
    while (probes.loops.size() < 10) {
      auto w = CyclicWord::of(random_word(rng, rank, uniform_int(rng, 2, 8)));
      if (!w.trivial()) probes.loops.push_back(w);
    }
  }
  return probes;
}

std::string stats_csv(const std::vector<PathRow>& rows, const PathProbes& probes, int rank) {
  FreeGroup group(rank);
  std::ostringstream os;
  os << "time,volume";
  for (const auto& w : probes.loops) os << ",length_" << group.format(w) << ",illegal_" << group.format(w);
  for (std::size_t k = 0; k < probes.subgroups.size(); ++k) os << ",subgroup_volume_" << k << ",legal_segment_" << k;
  os << '\n';
  for (const auto& r : rows) {
    os << to_string(r.time) << ',' << to_string(r.volume);
    for (std::size_t k = 0; k < probes.loops.size(); ++k) os << ',' << to_string(r.loop_lengths[k]) << ',' << r.illegal_turns[k];
    for (std::size_t k = 0; k < probes.subgroups.size(); ++k) {
      os << ',' << to_string(r.subgroup_volumes[k]) << ',' << to_string(r.longest_legal_segment[k]);
    }
    os << '\n';
  }
  return os.str();
}

Json certificate_json(const QgCertificate& c) {
  Json windows = Json::array();
  for (const auto& w : c.windows) windows.push_back({{"begin", w.begin}, {"end", w.end}, {"diameter", w.diameter}});
  Json j = {{"certified", c.windows_ok},
            {"breakpoints", c.breakpoints},
            {"windows", windows},
            {"progress", c.progress},
            {"consistent_under_upper_bounds", c.consistent},
            {"violations", c.violations}};
  if (c.offending) j["offending"] = {{"begin", c.offending->begin}, {"end", c.offending->end}, {"diameter", c.offending->diameter}};
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in Outer space and the free factor graph"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--seed", gl.seed, "Random seed");
  app.add_option("--rank", gl.rank, "Rank of the free group for word arguments")->check(CLI::Range(1, 26));
  app.add_flag("--json", gl.json, "Print JSON");
  app.add_flag("--dot", gl.dot, "Print Graphviz DOT where available");

  std::string g_path, h_path, dot_path, events_path, stats_path, ball_path, out_path, word_text, f1_text, f2_text, config_path;
  std::vector<std::string> loop_words;
  int bound = 6, product_length = 3, K = 6, vertices = 0;
  experiment::Config ex;

  auto* dist = app.add_subcommand("dist", "Lipschitz distance between two marked graphs");
  dist->add_option("source", g_path, "Marked graph JSON")->required();
  dist->add_option("target", h_path, "Marked graph JSON")->required();

  auto* opt = app.add_subcommand("optimal-map", "Optimal map, tension graph and gates");
  opt->add_option("source", g_path, "Marked graph JSON")->required();
  opt->add_option("target", h_path, "Marked graph JSON")->required();
  opt->add_option("--emit-dot", dot_path, "Write the train track structure as DOT");

  auto* simplex = app.add_subcommand("optimize-simplex", "Best lengths on g's graph for the distance to h");
  simplex->add_option("source", g_path, "Marked graph JSON")->required();
  simplex->add_option("target", h_path, "Marked graph JSON")->required();

  auto* fold = app.add_subcommand("fold", "Folding path induced by the optimal map");
  fold->add_option("--from", g_path)->required();
  fold->add_option("--to", h_path)->required();
  fold->add_option("--emit-events", events_path, "JSON lines, one snapshot per event");
  fold->add_option("--stats", stats_path, "CSV of probe statistics");
  fold->add_option("--loop", loop_words, "Probe loop (repeatable); 10 random loops by default");

  auto* geo = app.add_subcommand("standard-geodesic", "Simplex segment followed by a folding path");
  geo->add_option("source", g_path, "Marked graph JSON")->required();
  geo->add_option("target", h_path, "Marked graph JSON")->required();
  geo->add_option("--emit-events", events_path, "JSON lines, one snapshot per event");

  auto* proj = app.add_subcommand("project", "Free factors carried by proper core subgraphs");
  proj->add_option("graph", g_path, "Marked graph JSON")->required();

  auto* ball = app.add_subcommand("ball", "Enumerate a bounded ball of the free factor graph");
  ball->add_option("--bound", bound, "Largest core edge count")->check(CLI::PositiveNumber);
  ball->add_option("--product-length", product_length, "Longest Whitehead product")->check(CLI::NonNegativeNumber);
  ball->add_option("--out", out_path, "Write the ball as JSON")->required();

  auto* ffdist = app.add_subcommand("ffdist", "Upper bound for the free factor distance");
  ffdist->add_option("F1", f1_text, "Generators, comma separated")->required();
  ffdist->add_option("F2", f2_text, "Generators, comma separated")->required();
  ffdist->add_option("--ball", ball_path, "Ball from `ball --out`")->required();

  auto* simple = app.add_subcommand("simple", "Whether a conjugacy class lies in a proper free factor");
  simple->add_option("word", word_text)->required();
  auto* reduce = app.add_subcommand("reduce", "Whitehead reduction to minimal length");
  reduce->add_option("word", word_text)->required();
  auto* wg = app.add_subcommand("whitehead-graph", "Whitehead graph of a cyclic word");
  wg->add_option("word", word_text)->required();

  auto* qg = app.add_subcommand("qg-check", "Check the projection of a folding path against quasi-geodesic windows");
  qg->add_option("--path", events_path, "Events from `fold --emit-events`")->required();
  qg->add_option("--K", K, "Window diameter")->check(CLI::NonNegativeNumber);
  qg->add_option("--ball", ball_path, "Start from this ball instead of enumerating one");
  qg->add_option("--bound", bound, "Ball bound when enumerating")->check(CLI::PositiveNumber);

  auto* random = app.add_subcommand("random-graph", "Random volume-1 marked graph");
  random->add_option("--vertices", vertices, "Vertex count, 0 for random");
  random->add_option("--moves", ex.automorphism_moves, "Random Nielsen moves in the marking");

  auto* exp = app.add_subcommand("experiment", "Run a seeded experiment suite");
  std::string suite_name = "distance-oracle";
  exp->add_option("--suite", suite_name, "distance-oracle, fold-additivity, whitehead-oracle or qg-check");
  exp->add_option("--config", config_path, "JSON config; command-line values override it");
  exp->add_option("--instances", ex.instances);
  exp->add_option("--workers", ex.workers)->check(CLI::PositiveNumber);
  exp->add_option("--moves", ex.automorphism_moves);
  exp->add_option("--bound", ex.bound);
  exp->add_option("--K", ex.K);
  exp->add_option("--max-word-length", ex.max_word_length);
  exp->add_option("--out", ex.out_dir, "Report directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    FreeGroup group(gl.rank);
    if (dist->parsed()) {
      auto g = read_graph(g_path);
      auto h = read_graph(h_path);
      auto s = stretch_factor(normalize(g), normalize(h));
      Json j = rational_report(s.lambda);
      j["witness"] = to_json(s.witness.path);
      j["witness_shape"] = to_string(s.witness.shape);
      if (gl.json) {
        print(j);
      } else {
        std::cout << "lambda " << to_string(s.lambda) << "  log10 " << j["log10"].get<double>() << '\n';
      }
    } else if (opt->parsed()) {
      auto f = optimal_map(read_graph(g_path), read_graph(h_path));
      auto tt = gates(f, tension_graph(f));
      if (!dot_path.empty()) write_text(dot_path, to_dot(tt));
      if (gl.dot) {
        std::cout << to_dot(tt);
      } else {
        Json j = to_json(f);
        j["log10_sigma"] = std::log10(to_double(f.sigma()));
        j["recurrence"] = to_string(classify_recurrence(tt).kind);
        print(j);
      }
    } else if (simplex->parsed()) {
      auto r = optimize_in_simplex(read_graph(g_path), read_graph(h_path));
      Json lengths = Json::array();
      for (const auto& l : r.lengths) lengths.push_back(to_json(l));
      Json j = rational_report(r.lambda);
      j["lengths"] = lengths;
      j["boundary"] = r.boundary;
      print(j);
    } else if (fold->parsed() || geo->parsed()) {
      auto g = read_graph(g_path);
      auto h = read_graph(h_path);
      std::optional<StandardGeodesic> sg;
      FoldingPath path;
      if (geo->parsed()) {
        sg = standard_geodesic(g, h);
        path = sg->folding;
      } else {
        path = folding_path(g, h);
      }
      if (!events_path.empty()) {
        std::ofstream out(events_path);
        for (int i = 0; i < path.size(); ++i) {
          const auto& snap = path.snapshots[static_cast<std::size_t>(i)];
          out << Json{{"index", i}, {"time", to_json(path.times[static_cast<std::size_t>(i)])}, {"volume", to_json(volume(snap))}, {"graph", to_json(snap)}}.dump()
              << '\n';
        }
        if (!out) throw Error("cannot write " + events_path);
      }
      auto probes = default_probes(gl, g.rank, loop_words);
      auto rows = path_statistics(path, probes);
      if (!stats_path.empty()) write_text(stats_path, stats_csv(rows, probes, g.rank));
      Json times = Json::array();
      for (const auto& t : path.times) times.push_back(to_json(t));
      Json j = {{"events", path.size()}, {"times", times}, {"final_volume", to_json(volume(path.snapshots.back()))}};
      if (sg) {
        Json start = Json::array(), end = Json::array();
        for (const auto& l : sg->start_lengths) start.push_back(to_json(l));
        for (const auto& l : sg->end_lengths) end.push_back(to_json(l));
        j["start_lengths"] = start;
        j["end_lengths"] = end;
        j["collapsed_edges"] = sg->collapsed;
        j["middle"] = to_json(sg->middle);
      }
      if (gl.json) {
        j["final"] = to_json(path.snapshots.back());
        print(j);
      } else {
        std::cout << path.size() << " snapshots, folded for time " << to_string(path.times.back()) << '\n';
      }
    } else if (proj->parsed()) {
      auto fs = project(read_graph(g_path));
      if (gl.json) {
        Json arr = Json::array();
        for (const auto& f : fs) arr.push_back(to_json(f));
        print(arr);
      } else {
        for (const auto& f : fs) {
          FreeGroup g(f.ambient_rank());
          std::cout << "rank " << f.rank() << "  <";
          for (std::size_t k = 0; k < f.generators().size(); ++k) std::cout << (k ? ", " : "") << g.format(f.generators()[k]);
          std::cout << ">\n";
        }
      }
    } else if (ball->parsed()) {
      BallOptions o;
      o.bound = bound;
      o.product_length = product_length;
      auto b = build_ball(gl.rank, {}, o);
      write_text(out_path, to_json(b).dump() + "\n");
      std::cout << b.size() << " factors" << (b.capped() ? " (vertex cap reached)" : "") << '\n';
    } else if (ffdist->parsed()) {
      auto b = ball_from_json(Json::parse(read_file(ball_path)));
      auto f1 = parse_factor(f1_text, b.rank());
      auto f2 = parse_factor(f2_text, b.rank());
      b = b.extended({f1, f2});
      auto d = distance_upper(b, f1, f2);
      if (gl.json) {
        print({{"distance_upper", d ? Json(*d) : Json(nullptr)}});
      } else {
        std::cout << (d ? std::to_string(*d) : std::string("unreachable")) << '\n';
      }
    } else if (simple->parsed()) {
      auto v = is_simple(gl.rank, CyclicWord::of(group.parse(word_text)));
      Json j = {{"simple", v.simple}, {"determined", v.determined}, {"witness", group.format(v.witness)}, {"reason", v.reason}};
      if (gl.json) {
        print(j);
      } else {
        std::cout << (!v.determined ? "undetermined" : v.simple ? "simple" : "not simple") << ": " << v.reason << " ("
                  << group.format(v.witness) << ")\n";
      }
    } else if (reduce->parsed()) {
      auto r = reduce_to_minimal(gl.rank, CyclicWord::of(group.parse(word_text)));
      Json steps = Json::array();
      for (const auto& t : r.steps) steps.push_back(t.format());
      Json level = Json::array();
      for (const auto& u : r.level_set) level.push_back(group.format(u));
      Json j = {{"minimal", group.format(r.minimal)}, {"steps", steps}, {"level_set", level}, {"complete", r.complete}};
      if (gl.json) {
        print(j);
      } else {
        std::cout << group.format(r.minimal) << " after " << r.steps.size() << " steps; " << r.level_set.size()
                  << " minimal words up to symmetry\n";
      }
    } else if (wg->parsed()) {
      auto g = whitehead_graph(gl.rank, CyclicWord::of(group.parse(word_text)));
      if (gl.dot) {
        std::cout << to_dot(g);
      } else {
        auto r = connectivity_report(g);
        Json j = {{"edges", g.num_edges()}, {"connectivity", to_string(r.kind)}, {"absent_generators", r.absent_generators}, {"multiplicity", g.multiplicity}};
        if (r.cut) j["cut_vertex"] = group.format(Word::letter(*r.cut));
        print(j);
      }
    } else if (qg->parsed()) {
      auto snaps = read_events(events_path);
      std::vector<std::vector<FactorHandle>> seq;
      std::vector<FactorHandle> seeds;
      for (const auto& s : snaps) {
        seq.push_back(project(s));
        seeds.insert(seeds.end(), seq.back().begin(), seq.back().end());
      }
      std::optional<FactorBall> b;
      if (!ball_path.empty()) {
        b = ball_from_json(Json::parse(read_file(ball_path))).extended(seeds);
      } else {
        BallOptions o;
        o.bound = bound;
        b = build_ball(snaps.front().rank, seeds, o);
      }
      auto c = check_reparam_quasigeodesic(seq, K, *b);
      Json j = certificate_json(c);
      if (gl.json) {
        print(j);
      } else {
        std::cout << (c.windows_ok ? "certified" : "window too wide") << ", " << c.breakpoints.size() << " breakpoints, "
                  << (c.consistent ? "consistent" : "inconsistent") << " under upper bounds\n";
        for (std::size_t i = 0; i < c.progress.size(); ++i) std::cout << "  t" << i << " = " << c.breakpoints[i] << "  d = " << c.progress[i] << '\n';
        if (c.offending) std::cout << "  offending window [" << c.offending->begin << ", " << c.offending->end << "] diameter " << c.offending->diameter << '\n';
      }
      return c.windows_ok ? kOk : kViolation;
    } else if (random->parsed()) {
      Rng rng(gl.seed);
      RandomGraphOptions o;
      o.rank = gl.rank;
      o.vertices = vertices;
      o.automorphism_moves = ex.automorphism_moves;
      auto g = random_marked_graph(rng, o);
      if (gl.dot) {
        std::cout << to_dot(g);
      } else {
        print(to_json(g));
      }
    } else if (exp->parsed()) {
      experiment::Config c;
      if (!config_path.empty()) c = experiment::config_from_json(Json::parse(read_file(config_path)));
      if (exp->count("--suite") || config_path.empty()) c.suite = experiment::suite_from_string(suite_name);
      if (app.count("--seed")) c.seed = gl.seed;
      if (app.count("--rank")) c.rank = gl.rank;
      for (auto [flag, field, value] : {std::tuple{"--instances", &c.instances, ex.instances}, {"--workers", &c.workers, ex.workers},
                                        {"--moves", &c.automorphism_moves, ex.automorphism_moves}, {"--bound", &c.bound, ex.bound},
                                        {"--K", &c.K, ex.K}, {"--max-word-length", &c.max_word_length, ex.max_word_length}}) {
        if (exp->count(flag)) *field = value;
      }
      if (exp->count("--out")) c.out_dir = ex.out_dir;
      auto report = experiment::run(c);
      experiment::write(report, c);
      if (gl.json || c.out_dir.empty()) {
        print(report.summary);
      } else {
        std::cout << experiment::to_string(c.suite) << ": " << report.lines.size() << " records, " << report.violations << " violations, "
                  << report.errors << " errors\n";
      }
      return report.violations > 0 ? kViolation : kOk;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
