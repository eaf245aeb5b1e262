#pragma once

#include <string>
#include <vector>

#include "kacres/realization.hpp"
#include "kacres/weight.hpp"

namespace kacres {

struct VermaSingularLine {
  SuperWeight weight;
  int depth = 0;            // total lowering degree of the supporting monomials
  std::string description;  // combination of ordered lowering monomials
};

struct VermaGl12Report {
  int depth = 0;            // window bound on the total lowering degree
  long long window_dim = 0;
  // Singular lines found in weight spaces that lie entirely inside the window,
  // highest weight excluded.
  std::vector<VermaSingularLine> proper_lines;
  long long submodule_window_dim = 0;  // window part of the first line's closure
  long long quotient_window_dim = 0;
  bool quotient_dim_is_four = false;
  bool kac_match = false;  // quotient matrices equal the induced module's
  std::vector<SuperWeight> quotient_singular_weights;  // proper lines of the quotient
  long long irreducible_dim = 0;  // simple quotient of the induced module
};

// Window study of the Verma module with highest weight (1|0,0) over the
// (1|2) matrix superalgebra: exhaustive singular vector search on complete
// weight spaces, the submodule generated by the first proper line, the
// four-dimensional quotient matched entrywise against the induced module,
// and the dimension of the simple quotient.  Requires 2 <= depth; refuses
// depth > 8.
VermaGl12Report verma_gl12_study(int depth);

}  // namespace kacres
