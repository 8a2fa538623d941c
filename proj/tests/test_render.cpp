#include <doctest.h>

#include <regex>
#include <string>

#include "dessinum/errors.hpp"
#include "dessinum/render.hpp"
#include "dessinum/unitrees.hpp"

using namespace dessinum;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("single edge") {
  const std::string dot = render_dot(make_path(Color::Black, std::vector<Weight>{3}));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(count(dot, "fillcolor=black") == 1);
  CHECK(count(dot, "fillcolor=white") == 1);
  CHECK(count(dot, " -> ") == 1);
  CHECK(count(dot, "label=\"3\"") == 1);
}

TEST_CASE("tree O") {
  const WeightedTree o = family_member(Family::O);
  const std::string dot = render_dot(o);
  CHECK(count(dot, "fillcolor=black") == 4);
  CHECK(count(dot, "fillcolor=white") == 10);
  CHECK(count(dot, "label=\"2\"") == 7);

  const std::string implicit = render_dot(o, {true, 0});
  CHECK(count(implicit, "fillcolor=black") == 4);
  CHECK(count(implicit, "fillcolor=white") == 0);
  CHECK(count(implicit, "black:invis:black") == 10);

  const std::string svg = render_svg(o);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(count(svg, "fill=\"black\"") == 4);
  CHECK(count(svg, "fill=\"white\"") == 10);
  CHECK(count(svg, ">2</text>") == 7);
}

TEST_CASE("implicit white needs white degree 2") {
  CHECK_THROWS_AS(render_dot(make_star(Color::White, std::vector<Weight>{1, 1, 1}), {true, 0}), InvalidInput);
}

TEST_CASE("renders are stable") {
  const WeightedTree t = family_member(Family::T);
  CHECK(render_svg(t, {false, 5}) == render_svg(t, {false, 5}));
  CHECK(render_dot(t, {false, 0}) == render_dot(t, {false, 0}));
  CHECK(render_dot(t, {false, 5}) != render_dot(t, {false, 6}));
}
