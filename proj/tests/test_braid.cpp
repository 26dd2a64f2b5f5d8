#include <random>

#include "support.hpp"

#include "theta/braid.hpp"
#include "theta/validate.hpp"

using namespace theta;

TEST_CASE("parse_braid") {
  const BraidWord w = parse_braid("{1, -2, 1, -2}");
  CHECK(w.letters == std::vector<int>{1, -2, 1, -2});
  CHECK(w.strands == 3);
  CHECK(parse_braid("{1,1}").strands == 2);
  const BraidWord e = parse_braid("{}", 3);
  CHECK(e.letters.empty());
  CHECK(e.strands == 3);
  CHECK(parse_braid("1 -2 1") == parse_braid("{1,-2,1}"));
  CHECK(parse_braid("1,-2,1", 5).strands == 5);
  CHECK(to_string(parse_braid("{1,-2}")) == "{1, -2}");
  CHECK(parse_braid(to_string(w), w.strands) == w);

  CHECK_THROWS(parse_braid("{1, 0}"));
  CHECK_THROWS(parse_braid("{1, x}"));
  CHECK_THROWS(parse_braid("{1, 2", std::nullopt));
  CHECK_THROWS(parse_braid("{3}", 2));
  CHECK_THROWS(validate(BraidWord{2, {2}}));
}

TEST_CASE("components and linking") {
  const auto hopf = components(parse_braid("{1,1}"));
  CHECK(hopf.count == 2);
  CHECK(hopf.lk(1, 2) == 1);
  CHECK(components(parse_braid("{1,1,1}")).count == 1);
  const auto unlink = components(parse_braid("{}", 3));
  CHECK(unlink.count == 3);
  CHECK(unlink.total_linking() == 0);
  const auto sol = components(parse_braid("{1,1,1,1}"));
  CHECK(sol.lk(1, 2) == 2);
  CHECK(components(parse_braid("{-1,-1}")).lk(1, 2) == -1);
}

TEST_CASE("exponent sum") {
  CHECK(exponent_sum(parse_braid("{1,1}")) == 2);
  CHECK(exponent_sum(parse_braid("{1,-2,1,-2}")) == 0);
  CHECK(exponent_sum(parse_braid("{}", 1)) == 0);
}

TEST_CASE("crossing components") {
  auto c = crossing_components(parse_braid("{1,1}"), 0);
  CHECK(c.first == 1);
  CHECK(c.second == 2);
  CHECK(c.sign == 1);
  CHECK(c.mixed());
  c = crossing_components(parse_braid("{1,1,1}"), 1);
  CHECK(c.first == 1);
  CHECK(c.second == 1);
  CHECK(c.sign == 1);
  CHECK_FALSE(c.mixed());
  c = crossing_components(parse_braid("{1,-1}"), 1);
  CHECK(c.first == 1);
  CHECK(c.second == 2);
  CHECK(c.sign == -1);
  CHECK_THROWS(crossing_components(parse_braid("{1}"), 1));
}

TEST_CASE("sublinks") {
  // sigma_2^2 is pure: three components, the last two forming a Hopf link.
  const BraidWord w = parse_braid("{2,2}", 3);
  const auto cs = components(w);
  CHECK(cs.count == 3);
  CHECK(extract_sublink(w, {cs.component_of[1], cs.component_of[2]}) == parse_braid("{1,1}"));
  CHECK(extract_sublink(w, {cs.component_of[0]}) == parse_braid("{}", 1));
  CHECK(extract_sublink(parse_braid("{1,1}"), {1, 2}) == parse_braid("{1,1}"));
  CHECK(extract_sublink(parse_braid("{1,1}"), {1}) == parse_braid("{}", 1));
  CHECK_THROWS(extract_sublink(parse_braid("{1,1}"), {}));
}

TEST_CASE("moves and composition") {
  CHECK(smooth_crossing(parse_braid("{1,1}"), 0) == parse_braid("{1}"));
  CHECK(switch_crossing(parse_braid("{1,1}"), 1) == parse_braid("{1,-1}"));
  CHECK(mirror(parse_braid("{1,-2}")) == parse_braid("{-1,2}"));
  CHECK(stabilize(parse_braid("{1,1}"), 1) == parse_braid("{1,1,2}"));
  CHECK(stabilize(parse_braid("{1,1}"), -1) == parse_braid("{1,1,-2}"));
  CHECK(cycle(parse_braid("{1,-2,2}")) == parse_braid("{-2,2,1}"));
  CHECK(conjugate(parse_braid("{1}", 3), 2) == parse_braid("{2,1,-2}"));
  CHECK(disjoint_union(parse_braid("{1,1}"), parse_braid("{1,1}")) == parse_braid("{1,1,3,3}"));
  CHECK(connected_sum(parse_braid("{1,1,1}"), parse_braid("{1,1,1}")) == parse_braid("{1,1,1,2,2,2}"));
  CHECK(disjoint_union(parse_braid("{}", 1), parse_braid("{}", 1)) == parse_braid("{}", 2));
  CHECK_THROWS(connected_sum(parse_braid("{1,1}"), parse_braid("{1,1,1}")));
  CHECK_THROWS(conjugate(parse_braid("{1}"), 2));
}

TEST_CASE("randomized braid properties") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const BraidWord w = random_braid(rng, 5, 12);
    const auto cs = components(w);
    // Markov moves preserve the total linking.
    CHECK(components(cycle(w)).total_linking() == cs.total_linking());
    CHECK(components(stabilize(w, 1)).total_linking() == cs.total_linking());
    CHECK(components(stabilize(w, -1)).total_linking() == cs.total_linking());
    CHECK(components(conjugate(w, 1)).total_linking() == cs.total_linking());

    const auto mc = components(mirror(w));
    CHECK(exponent_sum(mirror(w)) == -exponent_sum(w));
    for (int a = 1; a <= cs.count; ++a)
      for (int b = 1; b <= cs.count; ++b) CHECK(mc.lk(a, b) == -cs.lk(a, b));

    for (std::size_t p = 0; p < w.letters.size(); ++p) {
      const CrossingInfo c = crossing_components(w, p);
      const auto sw = components(switch_crossing(w, p));
      CHECK(sw.count == cs.count);
      if (c.mixed()) {
        CHECK(components(smooth_crossing(w, p)).count == cs.count - 1);
        CHECK(sw.lk(c.first, c.second) == cs.lk(c.first, c.second) - c.sign);
      }
    }

    // Sublinks keep their linking numbers.
    if (cs.count >= 2) {
      const BraidWord sub = extract_sublink(w, {1, cs.count});
      const auto ss = components(sub);
      CHECK(ss.count == 2);
      CHECK(ss.lk(1, 2) == cs.lk(1, cs.count));
    }
  }
}
