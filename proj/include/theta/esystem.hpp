#pragma once

#include <complex>
#include <set>
#include <string>
#include <vector>

namespace theta::esystem {

using Complex = std::complex<double>;

enum class SolutionKind { Singleton, Trivial, Subset };

// x[0..d-1] with x[0] == 1; the unknowns are x_1..x_{d-1}.
struct Candidate {
  int d = 1;
  std::vector<Complex> x;
  SolutionKind kind = SolutionKind::Trivial;
  // Set for subset candidates: their formula is checked, not assumed.
  bool candidate_only = false;

  Complex at(int k) const;  // index mod d, x_0 = 1
};

Candidate singleton(int d, int m);
Candidate trivial(int d);
Candidate subset(int d, const std::set<int>& D);

// Largest |lhs - rhs| over the d-1 equations
//   sum_s x_{k+s} x_{d-s} = x_k sum_s x_s x_{d-s}.
double residual(const Candidate& c);
bool verify(const Candidate& c, double tol = 1e-9);
// (1/d) sum_s x_s x_{d-s}
Complex e_value(const Candidate& c);

std::string to_string(const Candidate& c);

}  // namespace theta::esystem
