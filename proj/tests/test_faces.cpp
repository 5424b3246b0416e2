#include "fixtures.hpp"
#include "oracles.hpp"

#include "micc/error.hpp"
#include "micc/faces.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace micc;

namespace {

std::vector<std::vector<int>> canonical_tuples(const std::vector<Face>& faces) {
  std::vector<std::vector<int>> out;
  for (const auto& f : faces) out.push_back(fixtures::rotate_to_min(f.truncated()));
  std::sort(out.begin(), out.end());
  return out;
}

void check_partition(const Ladder& l, const std::vector<Face>& faces) {
  const int k = l.k();
  std::set<std::pair<int, int>> alpha;
  std::set<std::pair<int, int>> beta;
  for (const auto& f : faces) {
    REQUIRE(f.alpha.size() == f.beta.size());
    for (std::size_t j = 0; j < f.alpha.size(); ++j) {
      CHECK(alpha.insert({f.alpha[j].label, static_cast<int>(f.alpha[j].side)}).second);
      const BetaEdge& e = f.beta[j];
      CHECK(beta.insert({e.source, static_cast<int>(e.exit)}).second);
      CHECK(e.terminus == (e.exit == Row::top ? l.up(e.source) : l.down(e.source)));
      // The next alpha step starts where this beta edge ends.
      const AlphaEdge& next = f.alpha[(j + 1) % f.alpha.size()];
      const int start = next.side == Side::right ? (next.label - 1 + k) % k : next.label;
      CHECK(start == e.terminus);
    }
  }
  CHECK(static_cast<int>(alpha.size()) == 2 * k);
  CHECK(static_cast<int>(beta.size()) == 2 * k);
}

}  // namespace

TEST_CASE("faces of the twelve-crossing example") {
  const auto f = faces(fixtures::f8());
  CHECK(f.size() == 10);
  CHECK(format_face_vector(face_vector(f)) == "{4: 6, 6: 4}");
  std::vector<std::vector<int>> expected;
  for (const auto& t : fixtures::f8_faces) expected.push_back(fixtures::cyclic_canonical(t));
  std::sort(expected.begin(), expected.end());
  std::vector<std::vector<int>> ours;
  for (const auto& face : f) ours.push_back(fixtures::cyclic_canonical(face.truncated()));
  std::sort(ours.begin(), ours.end());
  CHECK(ours == expected);
  check_partition(fixtures::f8(), f);
}

TEST_CASE("every face keeps its region on the left") {
  // Following the transition rules by hand from vertex 3 towards 2 meets the
  // alpha edges 3, 9, 4 in that order; the published list prints (9, 3, 4).
  const auto tuples = canonical_tuples(faces(fixtures::f8()));
  CHECK(std::find(tuples.begin(), tuples.end(), std::vector<int>{3, 9, 4}) != tuples.end());
  CHECK(std::find(tuples.begin(), tuples.end(), std::vector<int>{0, 5, 6}) != tuples.end());
  CHECK(std::find(tuples.begin(), tuples.end(), std::vector<int>{2, 9, 10}) != tuples.end());
  CHECK(std::find(tuples.begin(), tuples.end(), std::vector<int>{0, 11, 7}) != tuples.end());
}

TEST_CASE("face seeded at the right edge into 0") {
  const auto f = faces(fixtures::f8());
  const auto it = std::find_if(f.begin(), f.end(), [](const Face& face) {
    return std::find(face.alpha.begin(), face.alpha.end(), AlphaEdge{0, Side::right}) != face.alpha.end();
  });
  REQUIRE(it != f.end());
  CHECK(fixtures::rotate_to_min(it->truncated()) == std::vector<int>{0, 5, 6});
  Face face = *it;
  const auto start = std::find(face.alpha.begin(), face.alpha.end(), AlphaEdge{0, Side::right}) - face.alpha.begin();
  std::rotate(face.alpha.begin(), face.alpha.begin() + start, face.alpha.end());
  std::rotate(face.beta.begin(), face.beta.begin() + start, face.beta.end());
  const std::vector<AlphaEdge> walk{{0, Side::right}, {5, Side::left}, {6, Side::right}};
  CHECK(face.alpha == walk);
  CHECK(face.beta[0] == BetaEdge{0, 5, Row::top});
  CHECK(face.beta[1] == BetaEdge{4, 5, Row::bottom});
  CHECK(face.beta[2] == BetaEdge{6, 11, Row::top});
}

TEST_CASE("faces output block") {
  const auto text = format_faces(faces(fixtures::f8()));
  CHECK(text.starts_with("Vector solution:  {4: 6, 6: 4}\n("));
  CHECK(std::count(text.begin(), text.end(), '\n') == 11);
}

TEST_CASE("genus") {
  CHECK(genus(fixtures::f8()) == 2);
  CHECK(genus(fixtures::g3()) == 3);
  CHECK(fixtures::g3().k() == 29);
  CHECK(faces(fixtures::g3()).size() == 25);
  CHECK(genus(parse_ladder("0,1", "1,0")) == 1);
  CHECK(faces(parse_ladder("0,1", "1,0")).size() == 2);
}

TEST_CASE("single intersection") {
  const Ladder one = parse_ladder("0", "0");
  const auto f = faces(one);
  REQUIRE(f.size() == 1);
  // One face carries both sides of the only alpha segment and both beta sides.
  CHECK(f[0].alpha.size() == 2);
  CHECK(format_face_vector(face_vector(f)) == "{4: 1}");
  CHECK(genus(one) == 1);
  check_partition(one, f);
  const auto r = reduce_bigons(one);
  REQUIRE(r.reduced);
  CHECK(r.removed == 0);
  CHECK(*r.reduced == one);
}

TEST_CASE("faces reject multi-curves") {
  CHECK_THROWS_AS(faces(parse_ladder("0,1", "0,1")), Error);
  CHECK_NOTHROW(trace_faces(parse_ladder("0,1", "0,1")));
}

TEST_CASE("parity guard") {
  CHECK_THROWS_AS(genus_from_counts(12, 9), Error);
  CHECK(genus_from_counts(12, 10) == 2);
}

TEST_CASE("bigon reduction") {
  SUBCASE("minimal ladder is unchanged") {
    const auto r = reduce_bigons(fixtures::f8());
    CHECK(r.removed == 0);
    CHECK(*r.reduced == fixtures::f8());
  }
  SUBCASE("an inserted bigon is removed") {
    // Push a finger of the bottom arc at 0 of "0,1 / 1,0" up across alpha.
    const Ladder doubled({0, 2, 2, 1}, {3, 3, 1, 0});
    CHECK(genus(doubled) == 1);
    const auto r = reduce_bigons(doubled);
    CHECK(r.removed == 1);
    REQUIRE(r.reduced);
    CHECK(same_up_to_relabeling(*r.reduced, parse_ladder("0,1", "1,0")));
  }
  SUBCASE("removing a bigon can lower the capped genus") {
    // The bigon's base has the same face on both sides, so pushing beta across
    // leaves an annulus and the pair fills only a torus.
    const Ladder l({3, 2, 2, 1}, {0, 1, 0, 3});
    CHECK(genus(l) == 2);
    const auto r = reduce_bigons(l);
    CHECK(r.removed == 1);
    REQUIRE(r.reduced);
    CHECK(*r.reduced == parse_ladder("1,0", "0,1"));
    CHECK(genus(*r.reduced) == 1);
  }
  SUBCASE("a curve crossing twice on one side becomes disjoint") {
    const auto r = reduce_bigons(Ladder({0, 0}, {1, 1}));
    CHECK(r.disjoint());
    CHECK(r.removed == 1);
  }
}

TEST_CASE("bigon reduction never raises genus on random ladders") {
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 300) {
    const Ladder l = oracle::random_ladder(rng, 2 + static_cast<int>(rng() % 13));
    if (!beta_components(l).single_curve()) continue;
    ++checked;
    const int g = genus(l);
    CHECK(g == oracle::genus(l));
    const auto r = reduce_bigons(l);
    CHECK(r.removed <= l.k() / 2);
    if (r.reduced) {
      CHECK(r.reduced->k() == l.k() - 2 * r.removed);
      CHECK(genus(*r.reduced) == oracle::genus(*r.reduced));
      CHECK(genus(*r.reduced) <= g);
      if (r.reduced->k() > 1) {
        for (const auto& f : faces(*r.reduced)) CHECK(f.alpha.size() != 1);
      }
    }
  }
}
