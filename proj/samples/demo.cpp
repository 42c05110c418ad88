// Library walk-through for V10: series, matrix, periods, D3 operator.

#include <iostream>

#include "fanogw/pipeline.hpp"

using namespace fanogw;

int main() {
  const CompleteIntersectionSpec v10{{2, 5}, {1, 1, 2}};

  HSeriesPair ambient = ambient_iseries(v10.ambient, 5);
  std::cout << "G(2,5)  c0 = " << ambient.c0 << "\n";
  std::cout << "        c1 = " << ambient.c1 << "\n";

  HSeriesPair y = quantum_lefschetz(ambient, v10, 5);
  Rational alpha = lefschetz_shift(v10, ambient.c0);
  std::cout << "V10     alpha = " << alpha.to_string() << "\n";
  std::cout << "        c0 = " << y.c0 << "\n";
  std::cout << "        c1 = " << y.c1 << "\n";

  CountingMatrix m = recover_matrix(y, ci_geometry(v10).anticanonical_degree);
  std::cout << "counting matrix\n";
  for (const auto& row : m.full()) {
    for (const auto& x : row) std::cout << "  " << x.to_string();
    std::cout << "\n";
  }

  PeriodVector v = forward_periods(m);
  std::cout << "periods d2..d6:";
  for (const auto& x : v.values) std::cout << " " << x.to_string();
  std::cout << "\ndiscriminant " << discriminant(v).to_string() << "\n";
  std::cout << "inverse recovers the matrix: " << (invert_periods(v, m.deg()) == m ? "yes" : "no") << "\n";

  DifferentialOperator L = d3_operator(m, alpha);
  std::cout << "L^alpha = " << L << "\n";
  std::cout << "Phi = " << frobenius_solve(L, 8) << "\n";
  std::cout << "phi_5 = " << eisenstein_weight2(5, 8) << "\n";
}
