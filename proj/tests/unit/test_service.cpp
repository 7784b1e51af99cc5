#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "springer/action.hpp"
#include "springer/cache.hpp"
#include "springer/homology.hpp"
#include "springer/render.hpp"
#include "springer/verify.hpp"

using namespace springer;
namespace fs = std::filesystem;

namespace {
long long count(const std::string& s, const std::string& needle) {
  long long c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}
}  // namespace

TEST_CASE("ascii rendering") {
  auto cap = render_ascii(parse_matching("2: u1-2"));
  CHECK(cap == ".---.\n1   2\n");

  auto fig = render_ascii(parse_matching("7: r1 u2-3 d4-7 u5-6"));
  CHECK(count(fig, "*") == 1);
  CHECK(count(fig, ".") == 6);
  // The ray runs the full height above its label.
  CHECK(fig.rfind("|", 0) == 0);

  auto two = parse_class("1·(4: u1-2 u3-4) - 1·(4: u1-4 u2-3)");
  auto text = render_ascii(two);
  CHECK(count(text, "  -  ") == 1);
  auto sum = render_ascii(parse_class("(4: u1-2 u3-4) + (4: u1-4 u2-3)"));
  CHECK(count(sum, "  +  ") == 1);
  CHECK(render_ascii(HomClass{}) == "0\n");
}

TEST_CASE("svg rendering") {
  auto d = parse_matching("7: r1 u2-3 d4-7 u5-6");
  auto svg = render_svg(d);
  CHECK(svg == render_svg(d));
  CHECK(count(svg, "<path") == 3);
  CHECK(count(svg, "<circle") == 1);
  CHECK(count(svg, "<line") == 1);
  auto x = parse_class("(4: u1-2 u3-4) + 2·(4: u1-4 u2-3)");
  CHECK(count(render_svg(x), "<path") == 4);
  CHECK(count(render_svg(x), ">+2<") == 1);
}

TEST_CASE("representation cache") {
  auto dir = fs::temp_directory_path() / "springer_cache_test";
  fs::remove_all(dir);
  auto sigma = parse_permutation("(1 2 3)", 4);
  CHECK_FALSE(load_rep(dir, sigma, 2, 1).has_value());
  auto fresh = cached_rep_matrix(dir, sigma, 2, 1);
  CHECK(fresh == rep_matrix(sigma, 4, 2, 1));
  auto path = cache_path(dir, sigma, 2, 1);
  REQUIRE(fs::exists(path));
  CHECK(path.parent_path().filename() == "rep_4_2_1");
  auto hit = load_rep(dir, sigma, 2, 1);
  REQUIRE(hit.has_value());
  CHECK(*hit == fresh);

  // A different generator tag is never trusted.
  std::string body;
  {
    std::ifstream in(path);
    body.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto forged = body;
  forged.replace(forged.find("zeta-oracle"), 11, "hand-edited");
  std::ofstream(path) << forged;
  CHECK_FALSE(load_rep(dir, sigma, 2, 1).has_value());

  std::ofstream(path) << "{ not json";
  CHECK_FALSE(load_rep(dir, sigma, 2, 1).has_value());
  CHECK(cached_rep_matrix(dir, sigma, 2, 1) == fresh);
  CHECK(load_rep(dir, sigma, 2, 1).has_value());
  fs::remove_all(dir);
}

TEST_CASE("verify suites") {
  auto results = verify_all(4, 7);
  CHECK(results.size() == suite_names().size());
  for (const auto& r : results) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.ok);
    CHECK(r.checks > 0);
  }
  CHECK_THROWS(run_suite("nonsense", 3, 0));
}
