#include "tokuyama/core.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace tokuyama;

TEST_CASE("shape_from_weight") {
  CHECK(shape_from_weight(DominantWeight({0, 0}), Rank(2)).parts() == std::vector<int>{2, 1});
  CHECK(shape_from_weight(DominantWeight({0, 0, 2, 0}), Rank(4)).parts() ==
        std::vector<int>{6, 5, 4, 1});
  CHECK(shape_from_weight(DominantWeight({0, 1, 1}), Rank(3)).parts() ==
        std::vector<int>{5, 4, 2});
  CHECK(shape_from_weight(DominantWeight({1, 2, 2}), Rank(3)).parts() ==
        std::vector<int>{8, 6, 3});

  // lambda = 0 gives the staircase (r, r-1, ..., 1)
  for (int r = 1; r <= 5; ++r) {
    std::vector<int> expect;
    for (int i = r; i >= 1; --i) expect.push_back(i);
    CHECK(shape_from_weight(DominantWeight(std::vector<int>(r, 0)), Rank(r)).parts() == expect);
  }

  CHECK_THROWS_AS(DominantWeight({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(shape_from_weight(DominantWeight({1, 1}), Rank(3)), std::invalid_argument);
}

TEST_CASE("theta") {
  CHECK(theta(Shape::strict({2, 1})) == std::vector<int>{1, 1});
  CHECK(theta(Shape::strict({6, 5, 4, 1})) == std::vector<int>{1, 1, 3, 1});
  CHECK(theta(Shape::strict({8, 6, 3})) == std::vector<int>{2, 3, 3});
  CHECK_THROWS_AS(theta(Shape::partition({2, 2})), std::invalid_argument);
}

TEST_CASE("shape constructors") {
  CHECK_THROWS_AS(Shape::strict({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Shape::strict({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Shape::strict({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Shape::strict({}), std::invalid_argument);
  CHECK_THROWS_AS(Shape::partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Shape::partition({2, -1}), std::invalid_argument);
  CHECK(Shape::partition({3, 3, 0, 0}).parts() == std::vector<int>{3, 3});
  CHECK(Shape::partition({}).row_count() == 0);
  CHECK(Shape::strict({3, 1}).is_strict());
  CHECK_FALSE(Shape::partition({3, 3}).is_strict());
}

TEST_CASE("is_semistandard") {
  CHECK(is_semistandard({{1, 1}, {2}}));
  CHECK_FALSE(is_semistandard({{1, 1}, {1}}));  // column not strict
  CHECK_FALSE(is_semistandard({{2, 1}, {3}}));  // row decreases
  CHECK_FALSE(is_semistandard({{1}, {2, 2}}));  // row lengths increase
  CHECK_FALSE(is_semistandard({{0, 1}}));       // colors start at 1
  CHECK(is_semistandard({}));

  CHECK(is_semistandard({{1, 1}, {2}}, Shape::strict({2, 1})));
  CHECK_FALSE(is_semistandard({{1, 1}, {2}}, Shape::strict({3, 1})));

  const auto why = semistandard_violation({{1, 1}, {1}});
  REQUIRE(why.has_value());
  CHECK(why->find("(2,1)") != std::string::npos);
}

TEST_CASE("tableau construction and accessors") {
  const Tableau t = Tableau::from_rows({{1, 1, 2}, {2, 3}});
  CHECK(t.row_count() == 2);
  CHECK(t.entry(1, 3) == 2);
  CHECK(t.shape().parts() == std::vector<int>{3, 2});
  CHECK(t.max_entry() == 3);
  CHECK_THROWS_AS(Tableau::from_rows({{2, 1}}), std::invalid_argument);
}

TEST_CASE("content") {
  CHECK(content(Tableau::from_rows({{1, 1}, {2}}), 3) == std::vector<int>{2, 1, 0});
  CHECK(content(Tableau::from_rows({{1, 1, 1, 3, 4}, {2, 2, 2, 4}, {3, 4}}), 4) ==
        std::vector<int>{3, 3, 2, 3});
  CHECK(content(Tableau::from_rows({{1, 1, 2, 2, 2, 3, 3, 4}, {2, 2, 3, 3, 3, 4}, {4, 4, 4}}),
                4) == std::vector<int>{2, 5, 5, 5});
  CHECK_THROWS_AS(content(Tableau::from_rows({{1, 3}}), 2), std::invalid_argument);
}

TEST_CASE("dimension by hook-content") {
  CHECK(dimension(Shape::partition({1}), 2) == 2);
  CHECK(dimension(Shape::partition({2, 1}), 3) == 8);
  CHECK(dimension(Shape::partition({2, 1}), 2) == 2);
  CHECK(dimension(Shape::strict({6, 5, 4, 1}), 5) == 10240);
  CHECK(dimension(Shape::strict({4, 3, 2, 1}), 5) == 1024);
  CHECK(dimension(Shape::strict({8, 6, 3}), 4) == 2464);
  CHECK(dimension(Shape::partition({2, 1}), 1) == 0);  // more rows than entries
  CHECK(dimension(Shape::partition({}), 3) == 1);      // the empty tableau
}

TEST_CASE("enumeration basics") {
  CHECK(enumerate_ssyt(Shape::partition({1}), 2) ==
        std::vector<Tableau>{Tableau::from_rows({{1}}), Tableau::from_rows({{2}})});

  // golden list: row-major lexicographic order on the filling
  const std::vector<std::vector<std::vector<int>>> golden = {
      {{1, 1}, {2}}, {{1, 1}, {3}}, {{1, 2}, {2}}, {{1, 2}, {3}},
      {{1, 3}, {2}}, {{1, 3}, {3}}, {{2, 2}, {3}}, {{2, 3}, {3}}};
  const auto got = enumerate_ssyt(Shape::partition({2, 1}), 3);
  REQUIRE(got.size() == golden.size());
  for (std::size_t k = 0; k < golden.size(); ++k) CHECK(got[k].rows() == golden[k]);

  // the explicit (2,1) listing with entries <= 2
  const auto small = enumerate_ssyt(Shape::partition({2, 1}), 2);
  REQUIRE(small.size() == 2);
  CHECK(small[0].rows() == std::vector<std::vector<int>>{{1, 1}, {2}});
  CHECK(small[1].rows() == std::vector<std::vector<int>>{{1, 2}, {2}});

  CHECK_THROWS_AS(enumerate_ssyt(Shape::partition({2, 1}), 1), std::invalid_argument);

  // the empty shape has exactly one (empty) filling
  CHECK(enumerate_ssyt(Shape::partition({}), 3).size() == 1);
}

TEST_CASE("enumeration contains the first worked example") {
  const Tableau fixture =
      Tableau::from_rows({{1, 1, 2, 3, 3, 5}, {2, 3, 3, 4, 4}, {3, 5, 5, 5}, {5}});
  bool found = false;
  for_each_ssyt(Shape::strict({6, 5, 4, 1}), 5, [&](const Tableau& t) {
    if (t == fixture) found = true;
  });
  CHECK(found);
}

// Exhaustive cross-check of the enumerator against the hook-content count
// over every partition with at most 4 rows and at most 10 boxes.
TEST_CASE("enumeration count matches hook-content") {
  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int maxpart, int budget) -> void {
    if (!cur.empty()) shapes.push_back(cur);
    if (cur.size() == 4) return;
    for (int p = std::min(maxpart, budget); p >= 1; --p) {
      cur.push_back(p);
      self(self, p, budget - p);
      cur.pop_back();
    }
  };
  rec(rec, 10, 10);

  for (const auto& parts : shapes) {
    const Shape shape = Shape::partition(parts);
    for (int n = shape.row_count(); n <= 5; ++n) {
      Int count = 0;
      std::set<Tableau> seen;
      for_each_ssyt(shape, n, [&](const Tableau& t) {
        ++count;
        CHECK(is_semistandard(t.rows(), shape));
        CHECK(content(t, n).size() == static_cast<std::size_t>(n));
        int boxes = 0;
        for (int m : content(t, n)) boxes += m;
        CHECK(boxes == shape.box_count());
        seen.insert(t);
      });
      INFO("shape " << Catch::Stringify(parts) << " n=" << n);
      CHECK(count == dimension(shape, n));
      CHECK(Int(seen.size()) == count);  // no duplicates
    }
  }
}
