// Parallelizations of a small tree: matching number, deficiency, and the
// factorization x^a = delta * (edge monomials) read off a maximum matching.
#include <iostream>

#include "eil/fixtures.hpp"
#include "eil/io.hpp"

int main() {
  using namespace eil;
  const Graph g = fixtures::fig7();
  const MonomialIdeal I = edge_ideal(g);
  for (const auto& a : {std::vector<Exponent>{1, 1, 1, 1, 1, 1}, fixtures::fig8_multiplicity(),
                                        std::vector<Exponent>{2, 1, 3, 2, 1, 2}}) {
    const Monomial x(a);
    const Graph ga = parallelize(g, x).graph();
    const auto f = factor_by_matching(g, x);
    std::cout << io::format_monomial(x, I.variables()) << ": " << ga.num_vertices() << " vertices, nu "
              << matching_number(ga) << ", def " << deficiency(ga) << ", Berge " << berge_deficiency(ga).value
              << ", leftover " << io::format_monomial(f.delta, I.variables()) << '\n';
  }
}
