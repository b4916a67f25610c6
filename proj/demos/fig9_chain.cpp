// Ass and closure chains of the 9-vertex two-triangle graph, k = 1..5.
#include <iostream>

#include "eil/fixtures.hpp"
#include "eil/report.hpp"

int main(int argc, char** argv) {
  const unsigned K = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 5;
  const eil::Graph g = eil::fixtures::fig9();
  const auto r = eil::analyze_chain(eil::edge_ideal(g), K, {}, eil::stability_bound(g), "two triangles and a path");
  std::cout << eil::report::to_text(r);
}
