#include <doctest.h>

#include "vtt/errors.hpp"
#include "vtt/graph_io.hpp"
#include "vtt/graphs.hpp"

using namespace vtt;

TEST_CASE("export formats are deterministic and round-trip") {
  const Digraph t = cayley_digraph(ConnectionSet::cyclic(3, {1}));
  CHECK(export_graph(t, GraphFormat::edge_list) == "0 1\n1 2\n2 0\n");
  CHECK(export_graph(t, GraphFormat::json) == "{\"edges\":[[0,1],[1,2],[2,0]],\"n\":3}\n");
  CHECK(export_graph(t, GraphFormat::dot) == "digraph G {\n  0;\n  1;\n  2;\n  0 -> 1;\n  1 -> 2;\n  2 -> 0;\n}\n");
  CHECK(to_graph_file(t) == "digraph 3\n0 1\n1 2\n2 0\n");

  for (const auto& g : {petersen(), t, k_cube(3), cayley_digraph(ConnectionSet::cyclic(11, {1, 3, 4, 5, 9}))}) {
    CHECK(parse_graph(to_graph_file(g)) == g);
    CHECK(parse_graph(export_graph(g, GraphFormat::json)) == g);
    CHECK(parse_graph(export_graph(g, GraphFormat::edge_list)) == g);
  }
}

TEST_CASE("undirected DOT uses edges") {
  const std::string dot = export_graph(cycle(3), GraphFormat::dot);
  CHECK(dot.rfind("graph G {", 0) == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 0;") == std::string::npos);
}

TEST_CASE("graph header symmetrises, comments and blank lines are skipped") {
  const Digraph g = parse_graph("# a triangle\ngraph 3\n\n0 1\n1 2 # tail\n2 0\n");
  CHECK(g == cycle(3));
  const Digraph isolated = parse_graph("digraph 4\n0 1\n");
  CHECK(isolated.order() == 4);
}

TEST_CASE("malformed input is a parse error") {
  CHECK_THROWS_AS(parse_graph("digraph 3\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("digraph 3\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("digraph 3\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("{\"n\":2,\"edges\":[[0]]}"), ParseError);
  CHECK_THROWS_AS(parse_graph("{not json"), ParseError);
  CHECK_THROWS_AS(parse_graph_format("svg"), InvalidArgument);
  CHECK(parse_graph_format("edges") == GraphFormat::edge_list);
}
