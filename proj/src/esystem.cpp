#include "theta/esystem.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace theta::esystem {

namespace {

Complex root_of_unity(int m, int k, int d) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) * k / d;
  return std::polar(1.0, angle);
}

void check_d(int d) {
  if (d < 1) throw std::invalid_argument("E-system needs d >= 1");
}

}  // namespace

Complex Candidate::at(int k) const {
  const int i = ((k % d) + d) % d;
  return x[static_cast<std::size_t>(i)];
}

Candidate singleton(int d, int m) {
  check_d(d);
  if (m < 0 || m >= d) throw std::invalid_argument("singleton index must lie in [0, d)");
  Candidate c;
  c.d = d;
  c.kind = SolutionKind::Singleton;
  for (int k = 0; k < d; ++k) c.x.push_back(root_of_unity(m, k, d));
  return c;
}

Candidate trivial(int d) {
  check_d(d);
  Candidate c;
  c.d = d;
  c.kind = SolutionKind::Trivial;
  c.x.assign(static_cast<std::size_t>(d), Complex(0.0, 0.0));
  c.x[0] = 1.0;
  return c;
}

Candidate subset(int d, const std::set<int>& D) {
  check_d(d);
  if (D.empty()) throw std::invalid_argument("subset must be non-empty");
  for (int m : D)
    if (m < 0 || m >= d) throw std::invalid_argument("subset elements must lie in [0, d)");
  Candidate c;
  c.d = d;
  c.kind = SolutionKind::Subset;
  c.candidate_only = true;
  for (int k = 0; k < d; ++k) {
    Complex sum = 0.0;
    for (int m : D) sum += root_of_unity(m, k, d);
    c.x.push_back(sum / static_cast<double>(D.size()));
  }
  c.x[0] = 1.0;
  return c;
}

double residual(const Candidate& c) {
  Complex base = 0.0;
  for (int s = 0; s < c.d; ++s) base += c.at(s) * c.at(c.d - s);
  double worst = 0.0;
  for (int k = 1; k < c.d; ++k) {
    Complex lhs = 0.0;
    for (int s = 0; s < c.d; ++s) lhs += c.at(k + s) * c.at(c.d - s);
    worst = std::max(worst, std::abs(lhs - c.at(k) * base));
  }
  return worst;
}

bool verify(const Candidate& c, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  return residual(c) < tol;
}

Complex e_value(const Candidate& c) {
  Complex sum = 0.0;
  for (int s = 0; s < c.d; ++s) sum += c.at(s) * c.at(c.d - s);
  return sum / static_cast<double>(c.d);
}

std::string to_string(const Candidate& c) {
  std::ostringstream out;
  out << "d=" << c.d << " x=(";
  for (int k = 1; k < c.d; ++k) {
    if (k > 1) out << ", ";
    const Complex v = c.x[static_cast<std::size_t>(k)];
    out << v.real();
    if (std::abs(v.imag()) > 1e-15) out << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
  }
  out << ")";
  return out.str();
}

}  // namespace theta::esystem
