#include "dplane/orientation.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace dplane;
using fixture::pt;

TEST_CASE("triangle chamber sign") {
  const auto cc = ChamberComplex::build(fixture::triangle());
  const int id = oracle::chamber_containing(cc, pt(1, 4, 1, 4));
  CHECK(chamber_sign(cc.arrangement(), cc.chamber(id)) == -1);
}

TEST_CASE("negating one form flips the product") {
  const auto cc = ChamberComplex::build(fixture::generated(5, 1, 9));
  const auto& lines = cc.arrangement().lines();
  for (int id : cc.bounded_chamber_ids()) {
    const Chamber& c = cc.chamber(id);
    const int s = chamber_sign(cc.arrangement(), c);
    for (std::size_t flip = 0; flip < lines.size(); ++flip) {
      int product = 1;
      for (std::size_t l = 0; l < lines.size(); ++l) {
        const int v = sign_of(lines[l].evaluate(c.interior_point));
        product *= (l == flip) ? -v : v;
      }
      CHECK(product == -s);
    }
  }
}

TEST_CASE("adjacent chambers have opposite signs") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto cc = ChamberComplex::build(fixture::generated(7, 2, seed));
    for (const auto& e : cc.edges())
      if (cc.chamber(e.left).bounded && cc.chamber(e.right).bounded)
        CHECK(chamber_sign(cc.arrangement(), cc.chamber(e.left)) == -chamber_sign(cc.arrangement(), cc.chamber(e.right)));
    for (int i : cc.bounded_chamber_ids())
      for (int j : cc.bounded_chamber_ids())
        if (i < j && std::holds_alternative<MeetAtPoint>(cc.classify_pair(i, j)))
          CHECK(chamber_sign(cc.arrangement(), cc.chamber(i)) == chamber_sign(cc.arrangement(), cc.chamber(j)));
  }
}

TEST_CASE("coherence") {
  const PairClass meet = MeetAtPoint{0};
  CHECK(coherent(meet, 1, 1));
  CHECK_FALSE(coherent(meet, 1, -1));
  CHECK_FALSE(coherent(meet, -1, 1));
  CHECK(coherent(meet, -1, -1));
  CHECK_THROWS_WITH(coherent(PairClass{SharedEdge{0}}, 1, 1), "coherence undefined");
  CHECK_THROWS_WITH(coherent(PairClass{Disjoint{}}, 1, -1), "coherence undefined");
}

TEST_CASE("orientation assignments") {
  const auto s = OrientationAssignment::standard(4);
  CHECK(s.is_standard());
  CHECK_THROWS(chamber_sign(fixture::triangle(), ChamberComplex::build(fixture::triangle()).chamber(1)));
  CHECK(s.signs() == std::vector<int>{1, 1, 1, 1});
  const auto m = OrientationAssignment::from_mask(4, 0b0101);
  CHECK(m.signs() == std::vector<int>{-1, 1, -1, 1});
  CHECK_FALSE(m.is_standard());
  CHECK(OrientationAssignment::from_mask(4, 0) == s);
  CHECK_THROWS(OrientationAssignment(std::vector<int>{1, 0}));

  std::mt19937_64 a(3), b(3);
  CHECK(OrientationAssignment::random(20, a) == OrientationAssignment::random(20, b));
}
