#pragma once

#include <string>
#include <vector>

namespace theta {

// Reference values in the expression syntax of parse_scalar (L = lambda).
// These are transcriptions, kept apart from the code that checks them.

struct PublishedKnot {
  std::string name;        // catalog name
  std::string homflypt;    // P as printed
};

struct PublishedTheta {
  std::string name;        // catalog name
  std::string theta;       // Theta with symbolic E as printed
  std::string reading;     // empty, or how a malformed printed expression was read
};

struct PublishedDifference {
  std::string first;
  std::string second;
  std::string difference;  // Theta(first) - Theta(second)
};

const std::vector<PublishedKnot>& published_knots();
const std::vector<PublishedTheta>& published_thetas();
const std::vector<PublishedDifference>& published_differences();
/// Lookup by catalog name; throws std::out_of_range.
const PublishedTheta& published_theta(const std::string& name);
/// P values for the extra catalog entries in q and lambda (a^2 = lambda,
/// z = q - q^-1). The knot values are the tabulated Homflypt polynomials; the
/// Hopf link and the (2,4) torus link are worked out by hand from the skein
/// relation, independently of the engines.
const std::vector<PublishedKnot>& external_homflypt();

}  // namespace theta
