#include "fixtures.hpp"

#include "micc/dwh_template.hpp"
#include "micc/error.hpp"
#include "micc/gluing.hpp"

#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

using namespace micc;

namespace {

ErrorCode expand_error(const ArcTemplate& t, std::vector<int> w) {
  try {
    expand(t, w);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::cancelled;
}

ErrorCode parse_error(const std::string& text) {
  try {
    parse_template(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::cancelled;
}

std::string with_line_replaced(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("shipped templates load") {
  const ArcTemplate n = fixtures::nonseparating();
  CHECK(n.name == "nonseparating_genus2");
  CHECK(n.genus == 2);
  CHECK_FALSE(n.separating);
  CHECK(n.classes.size() == 6);
  CHECK(n.graph.vertex_count == 4);
  CHECK(n.graph.betti_number() == 3);
  const ArcTemplate s = fixtures::separating();
  CHECK(s.separating);
  CHECK(s.graph.betti_number() == 4);
}

TEST_CASE("format and parse round trip") {
  for (const auto& t : {fixtures::nonseparating(), fixtures::separating()}) {
    const std::string text = format_template(t);
    const ArcTemplate back = parse_template(text);
    CHECK(format_template(back) == text);
    CHECK(back.name == t.name);
    CHECK(back.top == t.top);
    CHECK(back.bottom == t.bottom);
  }
}

TEST_CASE("malformed templates") {
  const std::string good = format_template(fixtures::nonseparating());
  CHECK(parse_error(with_line_replaced(good, "class 4 pp", "class 4 mm")) == ErrorCode::bad_template);
  CHECK(parse_error(with_line_replaced(good, "edge 6 0 3", "edge 7 0 3")) == ErrorCode::bad_template);
  CHECK(parse_error(with_line_replaced(good, "separating no", "separating yes")) == ErrorCode::bad_template);
  CHECK(parse_error(with_line_replaced(good, "class 5 pm", "class 9 pm")) == ErrorCode::bad_template);
  CHECK(parse_error(good + "\nfrobnicate 1\n") != ErrorCode::cancelled);
}

TEST_CASE("expansion size and shape") {
  const ArcTemplate t = fixtures::nonseparating();
  const std::vector<int> w{4, 2, 2, 1, 2, 1};
  const auto e = expand(t, w);
  CHECK(e.k() == 12);
  CHECK(e.bottom.size() == 12);
  std::vector<int> all = e.top;
  all.insert(all.end(), e.bottom.begin(), e.bottom.end());
  for (int label = 0; label < e.k(); ++label) CHECK(std::count(all.begin(), all.end(), label) == 2);
}

TEST_CASE("expansion sizes equal the objective") {
  const ArcTemplate t = fixtures::nonseparating();
  for (const auto& w : enumerate_solutions(t.constraints(), 10)) {
    CHECK(expand(t, w).k() == std::accumulate(w.begin(), w.end(), 0));
  }
}

TEST_CASE("expansion errors") {
  const ArcTemplate t = fixtures::nonseparating();
  CHECK(expand_error(t, {1, 1, 1, -1, 1, -1}) == ErrorCode::negative_weight);
  CHECK(expand_error(t, {1, 1, 1, 2, 1, 0}) == ErrorCode::unbalanced);
  CHECK(expand_error(t, {0, 0, 0, 0, 0, 0}) == ErrorCode::empty_configuration);
  CHECK(expand_error(t, {1, 1}) == ErrorCode::parse_error);
}

TEST_CASE("minimal configuration of the non-separating template") {
  const ArcTemplate t = fixtures::nonseparating();
  const std::vector<int> w{2, 2, 2, 0, 2, 0};
  const auto records = classify_expansion(t, w);
  CHECK(records.size() == 4);
  for (const auto& r : records) {
    CHECK(r.k == 8);
    CHECK(r.verdict == Verdict::distance_3);
  }
}

TEST_CASE("the twelve-crossing example sits in the catalog") {
  const ArcTemplate t = fixtures::nonseparating();
  const std::vector<int> w{4, 2, 2, 1, 2, 1};
  const auto e = expand(t, w);
  bool found = false;
  for (int r = 0; r < e.k(); ++r) {
    if (same_up_to_shift(e.ladder(r), fixtures::f8())) found = true;
  }
  CHECK(found);
}

TEST_CASE("minimal configuration of the separating template") {
  const ArcTemplate t = fixtures::separating();
  const Optimum best = minimize(t.constraints());
  REQUIRE(best.objective == 12);
  const auto records = classify_expansion(t, best.solutions[0]);
  CHECK(records.size() == 6);
}

TEST_CASE("pipeline is deterministic across thread counts") {
  const ArcTemplate t = fixtures::nonseparating();
  PipelineOptions one{.p_min = 8, .p_max = 10, .threads = 1};
  PipelineOptions many{.p_min = 8, .p_max = 10, .threads = 4};
  const auto a = pipeline(t, one);
  const auto b = pipeline(t, many);
  CHECK(a == b);
  CHECK(std::is_sorted(a.begin(), a.end(), [](const CatalogRecord& x, const CatalogRecord& y) {
    return std::tie(x.objective, x.weights, x.offset) < std::tie(y.objective, y.weights, y.offset);
  }));
  for (const auto& r : a) CHECK(r.verdict != Verdict::distance_4_plus);
}

TEST_CASE("pipeline cancellation") {
  std::stop_source source;
  source.request_stop();
  PipelineOptions o{.p_min = 8, .p_max = 12, .threads = 2, .stop = source.get_token()};
  CHECK_THROWS_AS(pipeline(fixtures::nonseparating(), o), Error);
}

TEST_CASE("verdicts are invariant under the reflection of the non-separating template") {
  // (w1 w2)(w3 w5) reverses both rows of the diagram.
  const auto sigma = [](WeightVector w) {
    std::swap(w[0], w[1]);
    std::swap(w[2], w[4]);
    return w;
  };
  const auto records = pipeline(fixtures::nonseparating(), PipelineOptions{.p_min = 8, .p_max = 12});
  std::map<WeightVector, std::multiset<Verdict>> by_weights;
  for (const auto& r : records) by_weights[r.weights].insert(r.verdict);
  REQUIRE(by_weights.size() > 20);
  for (const auto& [w, verdicts] : by_weights) {
    CAPTURE(format_row(w));
    REQUIRE(by_weights.contains(sigma(w)));
    CHECK(by_weights.at(sigma(w)) == verdicts);
  }
}
