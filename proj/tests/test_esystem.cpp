#include "support.hpp"

#include "theta/esystem.hpp"

using namespace theta::esystem;

TEST_CASE("constructions") {
  const Candidate s = singleton(2, 1);
  CHECK(std::abs(s.at(1) - Complex(-1.0, 0.0)) < 1e-12);
  const Candidate t = trivial(3);
  CHECK(std::abs(t.at(1)) == 0.0);
  CHECK(std::abs(t.at(2)) == 0.0);
  const Candidate sub = subset(4, {0, 2});
  CHECK(sub.candidate_only);
  CHECK(std::abs(sub.at(1)) < 1e-12);
  CHECK(std::abs(sub.at(2) - Complex(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(sub.at(3)) < 1e-12);
  CHECK_THROWS(singleton(3, 3));
  CHECK_THROWS(singleton(3, -1));
  CHECK_THROWS(subset(3, {}));
  CHECK_THROWS(subset(3, {4}));
  CHECK_THROWS(trivial(0));
}

TEST_CASE("verification") {
  CHECK(verify(singleton(5, 2)));
  CHECK(verify(trivial(6)));
  Candidate bad;
  bad.d = 3;
  bad.x = {1.0, 0.5, 0.5};
  CHECK_FALSE(verify(bad));
  CHECK_THROWS(verify(trivial(2), 0.0));
}

TEST_CASE("E values") {
  for (int d = 1; d <= 8; ++d) {
    for (int m = 0; m < d; ++m) CHECK(std::abs(e_value(singleton(d, m)) - 1.0) < 1e-9);
    CHECK(std::abs(e_value(trivial(d)) - 1.0 / d) < 1e-9);
  }
  CHECK(std::abs(e_value(subset(4, {0, 2})) - 0.5) < 1e-9);
}
