#include <doctest.h>

#include "oracles.hpp"
#include "springer/error.hpp"
#include "springer/matching.hpp"

using namespace springer;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::DomainError;
}

Matching M(const char* text) { return parse_matching(text).base(); }

}  // namespace

TEST_CASE("validate rejects broken arrangements") {
  CHECK(validate({4, {{1, 2}, {3, 4}}, {}, {}}).k() == 2);
  CHECK(code_of([] { validate({4, {{1, 3}}, {}, {2, 4}}); }) == ErrorCode::RayUnderArc);
  CHECK(code_of([] { validate({4, {{1, 3}, {2, 4}}, {}, {}}); }) == ErrorCode::CrossingArcs);
  CHECK(code_of([] { validate({4, {{1, 2}, {2, 3}}, {}, {4}}); }) == ErrorCode::VertexReuse);
  CHECK(code_of([] { validate({4, {{1, 2}}, {}, {3}}); }) == ErrorCode::BadCounts);
  CHECK(code_of([] { DottedMatching(M("3: u1-2 r3"), {3}); }) == ErrorCode::DotOnNonArc);
}

TEST_CASE("enumerate against brute force") {
  CHECK(enumerate(4, 1).size() == 3);
  CHECK(enumerate(4, 1)[0] == M("4: u1-2 r3 r4"));
  CHECK(enumerate(4, 1)[1] == M("4: r1 u2-3 r4"));
  CHECK(enumerate(4, 1)[2] == M("4: r1 r2 u3-4"));
  CHECK(enumerate(5, 0).size() == 1);
  CHECK(enumerate(6, 3).size() == 5);
  CHECK(code_of([] { enumerate(4, 3); }) == ErrorCode::DomainError);
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      auto got = enumerate(n, k);
      CHECK(static_cast<long long>(got.size()) == syt_count(n, k));
      auto want = oracle::brute_matchings(n, k);
      std::set<std::vector<Arc>> have;
      for (const auto& a : got) {
        have.insert(a.arcs());
        for (const auto& arc : a.arcs()) CHECK((arc.right - arc.left) % 2 == 1);
      }
      CHECK(have == want);
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
}

TEST_CASE("completion and restriction") {
  CHECK(complete(M("6: u1-2 r3 u4-5 r6")) == M("8: u1-8 u2-5 u3-4 u6-7"));
  CHECK(complete(M("2: r1 r2")) == M("4: u1-4 u2-3"));
  CHECK(complete(M("4: u1-2 u3-4")) == M("4: u1-2 u3-4"));
  CHECK(restrict_to(M("8: u1-8 u2-5 u3-4 u6-7"), 2) == M("6: u1-2 r3 u4-5 r6"));
  CHECK(code_of([] { restrict_to(M("4: u1-2 u3-4"), 0); }) == ErrorCode::NotInRestrictableSet);
  for (int n = 1; n <= 9; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      std::set<Matching> images;
      for (const auto& a : enumerate(n, k)) {
        auto c = complete(a);
        CHECK(c.ray_count() == 0);
        CHECK(restrict_to(c, k) == a);
        CHECK(complete(restrict_to(c, k)) == c);
        images.insert(c);
      }
      CHECK(images.size() == enumerate(n, k).size());
    }
}

TEST_CASE("tableaux bijection") {
  auto fig = parse_matching("7: r1 u2-3 d4-7 u5-6");
  CHECK(fig.is_standard());
  auto t = tableau_of(fig);
  CHECK(t.top == std::vector<int>{1, 2, 4, 5, 7});
  CHECK(t.bottom == std::vector<int>{3, 6});
  CHECK(matching_of(t, 3) == fig);
  CHECK(standard_layout({{2, 3}, {5, 6}}, 7, 3) == fig);
  CHECK(format(standard_layout({}, 4, 1)) == "4: r1 r2 d3-4");
  CHECK(format(matching_of({{1, 2, 3, 4}, {}}, 1)) == "4: r1 r2 d3-4");
  CHECK(format(standard_layout({{1, 2}}, 2, 1)) == "2: u1-2");
  auto uu = parse_matching("4: u1-2 u3-4");
  CHECK(tableau_of(uu).top == std::vector<int>{1, 3});
  CHECK(matching_of(tableau_of(uu), 2) == uu);
  CHECK(code_of([] { tableau_of(parse_matching("4: u1-4 d2-3")); }) == ErrorCode::NotStandard);
  CHECK(code_of([] { standard_layout({{1, 4}}, 4, 2); }) == ErrorCode::NoStandardCompletion);
  CHECK(code_of([] { matching_of({{1, 3}, {2, 4}}, 1); }) == ErrorCode::ShapeMismatch);

  for (int n = 0; n <= 9; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (int m = 0; m <= k; ++m) {
        std::vector<DottedMatching> standard;
        for (const auto& d : all_dotted_matchings(n, k, m))
          if (d.is_standard()) standard.push_back(d);
        auto tabs = standard_tableaux(n, m);
        CHECK(static_cast<long long>(tabs.size()) == syt_count(n, m));
        CHECK(standard.size() == tabs.size());
        for (const auto& d : standard) {
          auto tt = tableau_of(d);
          CHECK(tt.is_valid());
          CHECK(matching_of(tt, k) == d);
          CHECK(standard_layout(d.undotted_arcs(), n, k) == d);
        }
        for (const auto& tt : tabs) CHECK(tableau_of(matching_of(tt, k)) == tt);
      }
}

TEST_CASE("codec") {
  auto fig = parse_matching("7: r1 u2-3 d4-7 u5-6");
  CHECK(format(fig) == "7: r1 u2-3 d4-7 u5-6");
  CHECK(fig.grading() == 2);
  CHECK(format(parse_matching("  2:u1-2 ")) == "2: u1-2");
  CHECK(code_of([] { parse_matching("4: u1-3 r2 r4"); }) == ErrorCode::RayUnderArc);
  CHECK(code_of([] { parse_matching("4 u1-2"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_matching("4: x1-2"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_matching("4: u3-1 r2 r4"); }) == ErrorCode::SyntaxError);
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (int m = 0; m <= k; ++m)
        for (const auto& d : all_dotted_matchings(n, k, m)) CHECK(parse_matching(format(d)) == d);
}
