// Structure of the path 1 - 2, 1 - 3 and two equivariant estimates from a
// random sample.
#include <iostream>

#include "ggm/ggm.hpp"

int main() {
  const ggm::Graph g = ggm::parse_graph("3\n1 2\n1 3\n");
  const ggm::GraphStructure s(g);

  std::cout << "dim G0 = " << ggm::g0_dimension(s.preorder()) << ", |Aut| = " << s.quotient_group().order()
            << ", orbit dimension = " << ggm::orbit_dim_formula(g) << "\n";
  std::cout << "min sample size = " << ggm::min_sample_size(g)
            << ", breakdown bound at n = 10: " << ggm::breakdown_upper_bound(g, 10) << "\n";

  ggm::Rng rng(7);
  const ggm::Matrix x = ggm::standard_normal_matrix(3, 10, rng);
  std::cout << "MLE:\n" << ggm::mle_decomposable(g, x) << "\n";
  std::cout << "averaged slice estimator (T' = I):\n"
            << ggm::equivariant_estimator(s, x, ggm::constant_identity()) << "\n";
}
