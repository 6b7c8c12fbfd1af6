#include <gtest/gtest.h>

#include "outer/error.hpp"
#include "outer/io.hpp"
#include "support.hpp"

namespace outer {
namespace {

using testing::q;

void expect_same(const MarkedMetricGraph& a, const MarkedMetricGraph& b) {
  ASSERT_EQ(a.num_edges(), b.num_edges());
  EXPECT_EQ(a.rank, b.rank);
  EXPECT_EQ(a.num_vertices, b.num_vertices);
  EXPECT_EQ(a.basepoint, b.basepoint);
  EXPECT_EQ(a.lengths, b.lengths);
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_EQ(a.loops, b.loops);
  for (int e = 0; e < a.num_edges(); ++e) {
    EXPECT_EQ(a.edges[e].from, b.edges[e].from);
    EXPECT_EQ(a.edges[e].to, b.edges[e].to);
  }
}

TEST(Io, RationalRoundTrip) {
  for (const char* s : {"0", "1", "-3/7", "22/6"}) EXPECT_EQ(rational_from_json(to_json(q(s))), q(s));
  EXPECT_THROW(rational_from_json(Json("1/0")), Error);
  EXPECT_THROW(rational_from_json(Json("x")), Error);
}

TEST(Io, GraphRoundTrip) {
  for (const auto& g : testing::random_graphs(11, 20)) expect_same(graph_from_json(to_json(g)), g);
  auto t = testing::theta4();
  expect_same(graph_from_json(Json::parse(to_json(t).dump())), t);
}

TEST(Io, GraphRejectsBadInput) {
  Json j = to_json(testing::rose3("1/3", "1/3", "1/3"));
  Json zero = j;
  zero["edges"][0]["length"] = "0";
  EXPECT_THROW(graph_from_json(zero), Error);
  Json missing = j;
  missing.erase("marking");
  EXPECT_THROW(graph_from_json(missing), Error);
}

TEST(Io, FactorAndBallRoundTrip) {
  auto ball = build_ball(3, {}, BallOptions{2, 1, 1000});
  for (const auto& f : ball.vertices()) EXPECT_EQ(factor_from_json(to_json(f), 3), f);
  auto back = ball_from_json(to_json(ball));
  ASSERT_EQ(back.size(), ball.size());
  for (int i = 0; i < ball.size(); ++i) {
    EXPECT_EQ(back.vertices()[i], ball.vertices()[i]);
    EXPECT_EQ(back.adjacency()[i], ball.adjacency()[i]);
  }
}

TEST(Io, DotMentionsEveryEdge) {
  auto g = testing::theta4();
  auto dot = to_dot(g);
  EXPECT_EQ(dot.rfind("digraph", 0), 0U);
  for (int e = 1; e <= g.num_edges(); ++e) EXPECT_NE(dot.find("e" + std::to_string(e)), std::string::npos);
}

}  // namespace
}  // namespace outer
