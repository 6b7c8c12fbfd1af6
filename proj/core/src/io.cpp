#include "outer/io.hpp"

#include <fstream>
#include <sstream>

#include "outer/error.hpp"

namespace outer {

namespace {

int signed_id(Dir d) { return is_forward(d) ? edge_of(d) + 1 : -(edge_of(d) + 1); }

Dir dir_from_id(int id, int num_edges) {
  if (id == 0 || std::abs(id) > num_edges) throw Error("edge id " + std::to_string(id) + " out of range");
  return id > 0 ? forward_dir(id - 1) : reverse(forward_dir(-id - 1));
}

template <class F>
auto field(const Json& j, const char* key, F&& read) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
  try {
    return read(j.at(key));
  } catch (const Json::exception& e) {
    throw Error(std::string("bad field \"") + key + "\": " + e.what());
  }
}

const char* const kPalette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error("rationals are written as \"p/q\" strings");
}

Json to_json(const MarkedMetricGraph& g) {
  FreeGroup group(g.rank);
  Json j;
  j["rank"] = g.rank;
  Json vertices = Json::array();
  for (int v = 0; v < g.num_vertices; ++v) vertices.push_back(v);
  j["vertices"] = vertices;
  Json edges = Json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges[static_cast<std::size_t>(e)];
    edges.push_back({{"id", e + 1}, {"from", ed.from}, {"to", ed.to}, {"length", to_json(g.lengths[static_cast<std::size_t>(e)])}});
  }
  j["edges"] = edges;
  Json loops = Json::object();
  for (std::size_t i = 0; i < g.loops.size(); ++i) {
    Json ids = Json::array();
    for (Dir d : g.loops[i]) ids.push_back(signed_id(d));
    loops["x" + std::to_string(i + 1)] = ids;
  }
  Json labels = Json::object();
  for (int e = 0; e < g.num_edges(); ++e) labels[std::to_string(e + 1)] = group.format(g.labels[static_cast<std::size_t>(e)]);
  j["marking"] = {{"loops", loops}, {"labels", labels}};
  j["basepoint"] = g.basepoint;
  if (g.subdivided) j["subdivided"] = true;
  return j;
}

MarkedMetricGraph graph_from_json(const Json& j) {
  MarkedMetricGraph g;
  g.rank = field(j, "rank", [](const Json& x) { return x.get<int>(); });
  if (g.rank < 1) throw Error("rank must be positive");
  FreeGroup group(g.rank);
  auto vertices = field(j, "vertices", [](const Json& x) { return x.get<std::vector<int>>(); });
  g.num_vertices = static_cast<int>(vertices.size());
  for (int v = 0; v < g.num_vertices; ++v) {
    if (vertices[static_cast<std::size_t>(v)] != v) throw Error("vertices must be listed as 0, 1, ..., n-1");
  }
  const auto& edges = field(j, "edges", [](const Json& x) -> const Json& { return x; });
  if (!edges.is_array()) throw Error("\"edges\" must be an array");
  g.edges.resize(edges.size());
  g.lengths.resize(edges.size());
  g.labels.resize(edges.size());
  std::vector<bool> filled(edges.size(), false);
  for (const auto& e : edges) {
    int id = field(e, "id", [](const Json& x) { return x.get<int>(); });
    if (id < 1 || id > static_cast<int>(edges.size()) || filled[static_cast<std::size_t>(id - 1)]) {
      throw Error("edge ids must be 1, 2, ..., m without repeats");
    }
    auto k = static_cast<std::size_t>(id - 1);
    filled[k] = true;
    g.edges[k] = {field(e, "from", [](const Json& x) { return x.get<int>(); }), field(e, "to", [](const Json& x) { return x.get<int>(); })};
    g.lengths[k] = field(e, "length", [](const Json& x) { return rational_from_json(x); });
  }
  const auto& marking = field(j, "marking", [](const Json& x) -> const Json& { return x; });
  const auto& loops = field(marking, "loops", [](const Json& x) -> const Json& { return x; });
  for (int i = 1; i <= g.rank; ++i) {
    auto ids = field(loops, ("x" + std::to_string(i)).c_str(), [](const Json& x) { return x.get<std::vector<int>>(); });
    std::vector<Dir> loop;
    for (int id : ids) loop.push_back(dir_from_id(id, g.num_edges()));
    g.loops.push_back(std::move(loop));
  }
  const auto& labels = field(marking, "labels", [](const Json& x) -> const Json& { return x; });
  for (int e = 0; e < g.num_edges(); ++e) {
    auto text = field(labels, std::to_string(e + 1).c_str(), [](const Json& x) { return x.get<std::string>(); });
    g.labels[static_cast<std::size_t>(e)] = group.parse(text);
  }
  g.basepoint = field(j, "basepoint", [](const Json& x) { return x.get<int>(); });
  g.subdivided = j.value("subdivided", false);
  require_valid(g);
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

MarkedMetricGraph read_graph(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw Error(path + ": " + e.what());
  }
  return graph_from_json(j);
}

Json to_json(const SubgroupCoreGraph& h, const FreeGroup& group) {
  Json j;
  Json vertices = Json::array();
  for (int v = 0; v < h.num_vertices(); ++v) vertices.push_back(v);
  j["vertices"] = vertices;
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back({{"from", e.from}, {"to", e.to}, {"label", group.format(Word::letter(e.label))}});
  j["edges"] = edges;
  if (h.basepoint()) j["basepoint"] = *h.basepoint();
  return j;
}

Json to_json(const FactorHandle& f) {
  FreeGroup group(f.ambient_rank());
  Json gens = Json::array();
  for (const auto& w : f.generators()) gens.push_back(group.format(w));
  return {{"rank", f.rank()}, {"code", f.code_hex()}, {"complexity", f.complexity()}, {"generators", gens}};
}

FactorHandle factor_from_json(const Json& j, int ambient_rank) {
  FreeGroup group(ambient_rank);
  auto texts = field(j, "generators", [](const Json& x) { return x.get<std::vector<std::string>>(); });
  std::vector<Word> gens;
  for (const auto& t : texts) gens.push_back(group.parse(t));
  return FactorHandle::from_generators(ambient_rank, gens);
}

Json to_json(const FactorBall& ball) {
  Json vertices = Json::array();
  for (const auto& f : ball.vertices()) vertices.push_back(to_json(f));
  return {{"rank", ball.rank()}, {"bound", ball.bound()}, {"capped", ball.capped()}, {"vertices", vertices}, {"adjacency", ball.adjacency()}};
}

FactorBall ball_from_json(const Json& j) {
  int rank = field(j, "rank", [](const Json& x) { return x.get<int>(); });
  int bound = field(j, "bound", [](const Json& x) { return x.get<int>(); });
  bool capped = j.value("capped", false);
  const auto& vs = field(j, "vertices", [](const Json& x) -> const Json& { return x; });
  std::vector<FactorHandle> vertices;
  for (const auto& v : vs) vertices.push_back(factor_from_json(v, rank));
  return FactorBall(rank, bound, std::move(vertices), capped);
}

Json to_json(const GraphMap& f) {
  auto tension = tension_graph(f);
  Json edges = Json::array();
  for (int e = 0; e < f.source().num_edges(); ++e) {
    Json image = Json::array();
    for (const auto& p : f.image(forward_dir(e))) image.push_back({{"edge", signed_id(p.dir)}, {"from", to_json(p.from)}, {"to", to_json(p.to)}});
    edges.push_back({{"id", e + 1},
                     {"image", image},
                     {"image_length", to_json(f.image_length(e))},
                     {"slope", to_json(f.slope(e))},
                     {"tension", static_cast<bool>(tension[static_cast<std::size_t>(e)])}});
  }
  return {{"sigma", to_json(f.sigma())}, {"edges", edges}};
}

Json to_json(const EdgePath& p) {
  Json ids = Json::array();
  for (Dir d : p.dirs) ids.push_back(signed_id(d));
  return {{"edges", ids}, {"cyclic", p.cyclic}};
}

std::string to_dot(const MarkedMetricGraph& g) {
  FreeGroup group(g.rank);
  std::ostringstream os;
  os << "digraph marked {\n";
  for (int v = 0; v < g.num_vertices; ++v) {
    os << "  v" << v;
    if (v == g.basepoint) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges[static_cast<std::size_t>(e)];
    os << "  v" << ed.from << " -> v" << ed.to << " [label=\"e" << e + 1 << " " << to_string(g.lengths[static_cast<std::size_t>(e)])
       << " " << group.format(g.labels[static_cast<std::size_t>(e)]) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const TrainTrackStructure& tt) {
  std::ostringstream os;
  os << "digraph traintrack {\n";
  for (int v = 0; v < tt.num_vertices; ++v) os << "  v" << v << " [label=\"v" << v << " (" << tt.num_gates(v) << " gates)\"];\n";
  constexpr int kColors = static_cast<int>(sizeof(kPalette) / sizeof(kPalette[0]));
  for (int e = 0; e < tt.num_edges(); ++e) {
    const Edge& ed = tt.edges[static_cast<std::size_t>(e)];
    int tail_gate = tt.gate[static_cast<std::size_t>(2 * e)];
    int head_gate = tt.gate[static_cast<std::size_t>(2 * e + 1)];
    os << "  v" << ed.from << " -> v" << ed.to << " [label=\"e" << e + 1 << "\"";
    if (!tt.supported(e)) {
      os << ", style=dotted";
    } else {
      os << ", color=\"" << kPalette[tail_gate % kColors] << ";0.5:" << kPalette[head_gate % kColors] << "\"";
      os << ", taillabel=\"" << tail_gate << "\", headlabel=\"" << head_gate << "\"";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const WhiteheadGraph& g) {
  FreeGroup group(g.rank);
  std::ostringstream os;
  os << "graph whitehead {\n";
  for (int k = 0; k < g.num_vertices(); ++k) os << "  \"" << group.format(Word::letter(letter_from_key(k))) << "\";\n";
  for (int i = 0; i < g.num_vertices(); ++i) {
    for (int j = i; j < g.num_vertices(); ++j) {
      int m = g.multiplicity[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int c = 0; c < m; ++c) {
        os << "  \"" << group.format(Word::letter(letter_from_key(i))) << "\" -- \"" << group.format(Word::letter(letter_from_key(j)))
           << "\";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace outer
