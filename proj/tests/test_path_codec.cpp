#include <doctest.h>

#include "braidwp/braid.hpp"
#include "braidwp/error.hpp"
#include "braidwp/path_codec.hpp"
#include "braidwp/workload.hpp"

using namespace braidwp;

namespace {

PathList path(int n, std::vector<Link> links) { return PathList(n, std::move(links)); }

bool has_violation(const PathList& p, const std::string& fragment) {
  for (const auto& v : validate_path(p)) {
    if (v.what.find(fragment) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("standard_gbase") {
  const GBase g1 = standard_gbase(1);
  REQUIRE(g1.punctures() == 1);
  CHECK(g1[0] == path(1, {{-1, 0}, {1, 0}}));

  const GBase g4 = standard_gbase(4);
  for (int i = 1; i <= 4; ++i) CHECK(g4[i - 1] == path(4, {{-1, 0}, {i, 0}}));
  CHECK(format_gbase(g4) == "(-1,0),(1,0),(-1,0),(2,0),(-1,0),(3,0),(-1,0),(4,0),(-1,0)");

  CHECK_THROWS_AS(standard_gbase(0), AmbientMismatch);
}

TEST_CASE("validate_path") {
  CHECK(validate_path(path(3, {{-1, 0}, {3, 1}, {2, 0}})).empty());

  const auto below = path(3, {{-1, 0}, {2, -1}, {2, 0}});
  CHECK(has_violation(below, "below-link"));
  CHECK(validate_path(below).front().index == 1);

  const auto jump = path(5, {{-1, 0}, {2, 1}, {5, 1}, {5, 0}});
  REQUIRE(validate_path(jump).size() == 1);
  CHECK(validate_path(jump).front().index == 2);
  CHECK(has_violation(jump, "jump"));

  CHECK(has_violation(path(3, {}), "empty"));
  CHECK(has_violation(path(3, {{1, 0}, {2, 0}}), "start"));
  CHECK(has_violation(path(3, {{-1, 0}, {2, 1}}), "end at a puncture"));
  CHECK(has_violation(path(3, {{-1, 0}, {2, 0}, {3, 0}}), "terminal link before"));
  CHECK(has_violation(path(3, {{-1, 0}, {2, 1}, {-1, 0}, {2, 0}}), "base point inside"));
  CHECK(has_violation(path(3, {{-1, 0}, {4, 0}}), "outside"));
  CHECK(has_violation(path(3, {{-1, 0}, {2, 2}, {2, 0}}), "position"));
}

TEST_CASE("path_to_syntactic examples") {
  for (int i = 1; i <= 4; ++i) {
    CHECK(path_to_syntactic(path(4, {{-1, 0}, {i, 0}})) == FGWord::generator(4, i));
  }
  // above 3 then left: g3 is crossed leftwards
  CHECK(path_to_syntactic(path(3, {{-1, 0}, {3, 1}, {2, 0}})) == FGWord(3, {3, 2, -3}));
  // (2,1)->(3,*) right: g2^-1; (3,1)->(3,-1)->(2,*): around 3 then left: g3^-1;
  // terminal g2; then the mirror half
  CHECK(path_to_syntactic(path(3, {{-1, 0}, {2, 1}, {3, 1}, {3, -1}, {2, 0}})) ==
        FGWord(3, {-2, -3, 2, 3, 2}));

  CHECK_THROWS_AS(path_to_syntactic(path(3, {{-1, 0}, {2, -1}, {2, 0}})), ValidationError);
}

TEST_CASE("syntactic_to_path examples") {
  CHECK(format_path(syntactic_to_path(FGWord(4, {3})), true) == "(-1,0),(3,0),(-1,0)");
  CHECK(format_path(syntactic_to_path(FGWord(3, {3, 2, -3})), true) ==
        "(-1,0),(3,1),(2,0),(-1,0)");
  CHECK(format_path(syntactic_to_path(FGWord(3, {-2, -3, 2, 3, 2})), true) ==
        "(-1,0),(2,1),(3,1),(3,-1),(2,0),(-1,0)");

  CHECK_THROWS_AS(syntactic_to_path(FGWord(3, {1, 2})), ShapeError);
  CHECK_THROWS_AS(syntactic_to_path(FGWord(3)), ShapeError);
  CHECK_THROWS_AS(syntactic_to_path(FGWord(3, {2, -2, 1, 2, -2})), ShapeError);
}

TEST_CASE("four-case link tables, both directions") {
  // a table run that ends below the end point is trimmed to arrive at it directly
  CHECK(format_path(syntactic_to_path(FGWord(3, {-1, 2, 1}))) == "(-1,0),(1,1),(2,0)");
  CHECK(format_path(syntactic_to_path(FGWord(3, {-1, -2, 3, 2, 1}))) ==
        "(-1,0),(1,1),(2,1),(3,0)");
  // i < j
  CHECK(syntactic_to_path(FGWord(5, {-1, 4, 2, -4, 1})).links()[2] == Link{2, -1});
  CHECK(format_path(syntactic_to_path(FGWord(5, {-1, 4, 2, -4, 1}))) ==
        "(-1,0),(1,1),(2,-1),(3,-1),(4,-1),(4,1),(3,-1),(2,0)");
  CHECK(format_path(syntactic_to_path(FGWord(5, {-1, -4, 5, 4, 1}))) ==
        "(-1,0),(1,1),(2,-1),(3,-1),(4,1),(5,0)");
  CHECK(format_path(syntactic_to_path(FGWord(5, {1, -4, 5, 4, -1}))) ==
        "(-1,0),(1,1),(1,-1),(2,-1),(3,-1),(4,1),(5,0)");
  CHECK(format_path(syntactic_to_path(FGWord(5, {1, 4, 3, -4, -1}))) ==
        "(-1,0),(1,1),(1,-1),(2,-1),(3,-1),(4,-1),(4,1),(3,0)");
  // j < i
  CHECK(format_path(syntactic_to_path(FGWord(5, {-4, 1, 2, -1, 4}))) ==
        "(-1,0),(4,1),(4,-1),(3,-1),(2,-1),(1,1),(1,-1),(2,0)");
  CHECK(format_path(syntactic_to_path(FGWord(5, {-4, -1, 2, 1, 4}))) ==
        "(-1,0),(4,1),(4,-1),(3,-1),(2,-1),(1,-1),(1,1),(2,0)");
  CHECK(format_path(syntactic_to_path(FGWord(5, {4, -1, 2, 1, -4}))) ==
        "(-1,0),(4,1),(3,-1),(2,-1),(1,-1),(1,1),(2,0)");
  CHECK(format_path(syntactic_to_path(FGWord(5, {4, 1, 2, -1, -4}))) ==
        "(-1,0),(4,1),(3,-1),(2,-1),(1,1),(1,-1),(2,0)");
}

TEST_CASE("reduce_path") {
  for (int i = 1; i <= 3; ++i) {
    const auto p = path(3, {{-1, 0}, {i, 0}});
    CHECK(reduce_path(p) == p);
  }
  // raw link emission for the unreduced g2^-1 g2 g1 g2^-1 g2 duplicates (2,1)
  const auto dup = path(3, {{-1, 0}, {2, 1}, {2, 1}, {1, 0}});
  CHECK(validate_path(dup).empty());
  CHECK(path_to_syntactic(dup) == FGWord(3, {-2, 2, 1, -2, 2}));
  CHECK(format_path(reduce_path(dup), true) == "(-1,0),(1,0),(-1,0)");
}

TEST_CASE("reduce_path is idempotent on braid-image paths") {
  auto rng = make_rng(21, 0);
  int checked = 0;
  while (checked < 1000) {
    std::uniform_int_distribution<int> nd(2, 5);
    const int n = nd(rng);
    const auto g = process_word_geometric(random_braid_word(rng, n, 10));
    for (const auto& p : g.paths()) {
      const auto once = reduce_path(p);
      CHECK(once == p);
      CHECK(reduce_path(once) == once);
      ++checked;
    }
  }
}

TEST_CASE("codec invariants on random conjugate words") {
  auto rng = make_rng(22, 0);
  for (int t = 0; t < 3000; ++t) {
    const int n = 1 + t % 7;
    const FGWord w = random_conjugate_word(rng, n, static_cast<std::size_t>(t % 25));
    const PathList p = syntactic_to_path(w);
    CHECK(validate_path(p).empty());
    // round trip B and A
    const FGWord back = path_to_syntactic(p);
    CHECK(back == w);
    CHECK(syntactic_to_path(back) == p);
    // emitted letters are bounded by the link count
    CHECK(back.size() <= 2 * p.size() - 1);
    auto shape = conjugate_shape(back);
    REQUIRE(shape);
    CHECK(shape->core.index() == p.terminal_point());
  }
}

TEST_CASE("same-generator runs in the prefix round-trip") {
  // g2 g2 winds twice around 2; the circle links take the later letter's sign
  const FGWord w(4, {2, 2, 3, -2, -2});
  const PathList p = syntactic_to_path(w);
  CHECK(format_path(p) == "(-1,0),(2,1),(2,-1),(2,1),(2,-1),(3,0)");
  CHECK(path_to_syntactic(p) == w);
  const FGWord v(4, {-2, -2, 1, 2, 2});
  CHECK(path_to_syntactic(syntactic_to_path(v)) == v);
}

TEST_CASE("negative cores are not rejected") {
  // the writer accepts them; the reader always yields a positive core
  const PathList p = syntactic_to_path(FGWord(3, {-2}));
  CHECK(format_path(p) == "(-1,0),(2,0)");
  CHECK(path_to_syntactic(p) == FGWord(3, {2}));
}

TEST_CASE("split and join") {
  const auto links2 = join_gbase(standard_gbase(2).paths());
  const auto parts = split_gbase(links2, 2);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == path(2, {{-1, 0}, {1, 0}}));
  CHECK(parts[1] == path(2, {{-1, 0}, {2, 0}}));

  const std::string example =
      "(-1,0),(1,1),(2,0),(-1,0),(1,0),(-1,0),(4,0),(-1,0),(4,1),(3,0),(-1,0)";
  const auto links = parse_links(example);
  CHECK(join_gbase(split_gbase(links, 4)) == links);
  CHECK(format_gbase(parse_gbase(example, 4)) == example);

  CHECK_THROWS_AS(split_gbase(links, 5), ParseError);
  CHECK_THROWS_AS(split_gbase(parse_links("(-1,0),(1,0),(-1,0),(2,0)"), 2), ParseError);
  CHECK_THROWS_AS(split_gbase(parse_links("(-1,0),(-1,0),(1,0),(-1,0)"), 1), ParseError);
  CHECK_THROWS_AS(parse_gbase("(-1,0),(1,0),(-1,0),(1,0),(-1,0)", 2), ValidationError);
}

TEST_CASE("link text format") {
  const auto links = parse_links(" ( -1 , 0 ) ,(2,1)\n(3, 1),(3,-1),(2,0),(-1,0)");
  CHECK(format_links(links) == "(-1,0),(2,1),(3,1),(3,-1),(2,0),(-1,0)");
  CHECK(parse_links("").empty());
  CHECK_THROWS_AS(parse_links("(1,2)"), ParseError);
  CHECK_THROWS_AS(parse_links("(-1,1)"), ParseError);
  CHECK_THROWS_AS(parse_links("(0,0)"), ParseError);
  CHECK_THROWS_AS(parse_links("(1,0"), ParseError);
  CHECK_THROWS_AS(parse_links("(1,0),"), ParseError);

  const PathList p = parse_path("(-1,0),(3,1),(2,0),(-1,0)", 3);
  CHECK(format_path(p) == "(-1,0),(3,1),(2,0)");
  CHECK(format_path(p, true) == "(-1,0),(3,1),(2,0),(-1,0)");
  CHECK(parse_path(format_path(p), 3) == p);
}

TEST_CASE("render_svg") {
  const auto std4 = standard_gbase(4);
  const std::string svg = render_svg(std4.paths());
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t polylines = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos;
       pos = svg.find("<polyline", pos + 1)) {
    ++polylines;
  }
  CHECK(polylines == 4);

  const std::vector<PathList> one{path(3, {{-1, 0}, {3, 1}, {2, 0}})};
  CHECK(render_svg(one).find("class=\"terminal\"") != std::string::npos);
  CHECK_THROWS_AS(render_svg(std::vector<PathList>{}), ValidationError);
}
