// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

// Walks through the library on small inputs: a convolution, the expected
// polynomial of the 3-regular bipartite model, and an exactly certified
// Ramanujan graph found by search.

#include <iostream>

#include "ffc/ffc.hpp"

int main() {
  using namespace ffc;

  RatPoly p = RatPoly::from_roots({-1, 1});
  RatPoly q = RatPoly::from_roots({0, 2});
  std::cout << "p [+]_2 q = " << sym_convolve(p, q, 2) << "\n";

  RatPoly e = expected_poly_for_graph_model(GraphMode::bipartite, 4, 3);
  std::cout << "expected char poly, bipartite d=4 m=3: " << e << "\n";

  RamanujanBound b = ramanujan_bound(3);
  std::cout << "bound 2*sqrt(m-1) = " << b.exact << " = " << b.exact.decimal() << "\n";

  SearchReport r = rejection_search(GraphMode::bipartite, 5, 3, 10000, 2026);
  if (!r.certificate) {
    std::cout << "no graph found in " << r.trials_run << " trials\n";
    return 1;
  }
  const RamanujanCertificate& c = *r.certificate;
  std::cout << "trial " << *r.first_success_trial << ": " << to_string(c.verdict) << ", lambda_2 in ("
            << to_decimal(c.lambda2_lo) << ", " << to_decimal(c.lambda2_hi) << "]\n";
  std::cout << certificate_to_json(c)["graph"].dump() << "\n";
  return reverify(c) ? 0 : 1;
}
