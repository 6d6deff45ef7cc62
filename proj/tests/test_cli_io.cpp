#include <set>
#include <string>

#include <json.hpp>

#include "doctest.h"
#include "honey/breaking.hpp"
#include "honey/honeycomb.hpp"
#include "honey/json_io.hpp"
#include "honey/lift.hpp"
#include "honey/moebius.hpp"
#include "honey/render.hpp"

using namespace honey;

namespace {

GLHoneycomb first_gl(const Partition& la, const Partition& mu, const Partition& nu, int n) {
  GLFiber fiber(la, mu, nu, n);
  GLHoneycomb out;
  bool got = false;
  fiber.enumerate([&](const GLHoneycomb& h) {
    out = h;
    got = true;
    return false;
  });
  REQUIRE(got);
  return out;
}

MoebiusHoneycomb fractional_lift() {
  return largest_lift(xi_from_partitions({3, 3, 1}, {3, 3, 0}, {3, 2, 2}, 3, 3), Rat(3), 3)
      .honeycomb;
}

size_t count_occurrences(const std::string& hay, const std::string& needle) {
  size_t count = 0;
  for (size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("triangular honeycombs round trip through json") {
  const GLHoneycomb h = first_gl({2, 1}, {1, 1}, {1}, 3);
  const std::string text = gl_to_json(h);
  CHECK(gl_from_json(text) == h);

  // Fractional coordinates survive exactly.
  GLHoneycomb half = h;
  for (auto& [vid, p] : half.pos) {
    (void)vid;
    p = Rat(1, 2) * p;
  }
  validate_gl(half);
  CHECK(gl_from_json(gl_to_json(half)) == half);

  // Writing is deterministic.
  CHECK(gl_to_json(h) == text);
  CHECK_FALSE(json_is_moebius(text));
}

TEST_CASE("moebius honeycombs round trip through json") {
  const MoebiusHoneycomb lift = fractional_lift();
  const std::string text = mh_to_json(lift);
  CHECK(mh_from_json(text) == lift);
  CHECK(json_is_moebius(text));

  // Integer delta appears as a plain number.
  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc.at("delta").is_number_integer());
  CHECK(doc.at("delta").get<long long>() == 3);

  // A rational delta falls back to a string and still round trips.
  const MoebiusHoneycomb half = combine(Rat(1, 2), lift, Rat(0), lift);
  REQUIRE(half.delta == Rat(3, 2));
  const std::string halfText = mh_to_json(half);
  CHECK(nlohmann::json::parse(halfText).at("delta").is_string());
  CHECK(mh_from_json(halfText) == half);
}

TEST_CASE("json readers reject malformed documents") {
  const MoebiusHoneycomb lift = fractional_lift();
  const std::string good = mh_to_json(lift);

  CHECK_THROWS_AS(mh_from_json("not json at all"), InputError);
  CHECK_THROWS_AS(mh_from_json("[1,2,3]"), InputError);
  CHECK_THROWS_AS(mh_from_json("{\"n\": 2}"), InputError);
  CHECK_THROWS_AS(gl_from_json(good), InputError);  // delta on a triangular honeycomb

  nlohmann::json doc = nlohmann::json::parse(good);
  doc.erase("delta");
  CHECK_THROWS_AS(mh_from_json(doc.dump()), InputError);

  doc = nlohmann::json::parse(good);
  doc["a"].erase(doc["a"].begin());  // missing vertex fails validation
  CHECK_THROWS_AS(mh_from_json(doc.dump()), InputError);

  doc = nlohmann::json::parse(good);
  doc["a"]["1:1"] = {"1", "2"};
  CHECK_THROWS_AS(mh_from_json(doc.dump()), InputError);

  doc = nlohmann::json::parse(good);
  doc["a"]["1:1"] = {1, 2, 3};  // numbers instead of rational strings
  CHECK_THROWS_AS(mh_from_json(doc.dump()), InputError);

  doc = nlohmann::json::parse(good);
  doc["a"]["bogus"] = {"0", "0", "0"};
  CHECK_THROWS_AS(mh_from_json(doc.dump()), InputError);

  const GLHoneycomb g = first_gl({2, 1}, {1, 1}, {1}, 3);
  doc = nlohmann::json::parse(gl_to_json(g));
  doc["b"]["0:1"] = {"1", "1", "1"};  // off the plane
  CHECK_THROWS_AS(gl_from_json(doc.dump()), InputError);
}

TEST_CASE("pipeline reports carry the documented fields") {
  const LargestLift lift =
      largest_lift(xi_from_partitions({3, 3, 1}, {3, 3, 0}, {3, 2, 2}, 3, 3), Rat(3), 3);
  const nlohmann::json liftDoc = nlohmann::json::parse(lift_report_json(lift));
  CHECK(liftDoc.at("integral") == false);
  CHECK(liftDoc.at("weighted_perimeter") == rat_to_string(lift.weightedPerimeter));
  CHECK(liftDoc.at("stages").size() == lift.stages.size());
  CHECK(liftDoc.at("iota").at("perimeters").size() == lift.image.perimeters.size());
  CHECK(liftDoc.at("iota").at("xi").size() == lift.image.xi.size());
  CHECK(mh_from_json(liftDoc.at("honeycomb").dump()) == lift.honeycomb);

  const IntegralizeResult broken = integralize(lift.honeycomb);
  const nlohmann::json intDoc = nlohmann::json::parse(integralize_report_json(broken));
  CHECK(mh_from_json(intDoc.at("honeycomb").dump()) == broken.honeycomb);
  CHECK(intDoc.at("phi").size() == broken.phi.phi.size());
  REQUIRE(intDoc.at("loops").size() == 2);
  CHECK(intDoc.at("loops")[0].at("orientable") == false);
  CHECK(intDoc.at("loops")[0].at("vertices").size() == broken.loops[0].vertices.size());
  CHECK(intDoc.at("loops")[0].at("crossings")[0].at("edge") == "SW:2:4");
  REQUIRE(intDoc.at("pairings").size() == 1);
  CHECK(intDoc.at("pairings")[0].at("shared_edge") == "SW:2:4");

  const auto sat = saturation_witness({3, 2, 1}, {3, 2, 1}, {3, 2, 1}, 2);
  REQUIRE(sat.has_value());
  const nlohmann::json satDoc = nlohmann::json::parse(saturation_report_json(*sat));
  CHECK(satDoc.at("k") == 2);
  CHECK(satDoc.at("n") == 3);
  CHECK(satDoc.at("delta") == 3);
  CHECK(mh_from_json(satDoc.at("witness").dump()) == sat->witness);
  CHECK(satDoc.at("breaking").contains("loops"));
}

TEST_CASE("svg rendering is deterministic and structurally sound") {
  const GLHoneycomb g = first_gl({2, 1}, {1, 1}, {1}, 3);
  const std::string svg = render_gl_svg(g);
  CHECK(render_gl_svg(g) == svg);
  CHECK(svg.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(svg, "<") == count_occurrences(svg, ">"));
  CHECK(count_occurrences(svg, "<circle ") == g.pos.size());
  CHECK(count_occurrences(svg, "<line class=\"edge\"") == gl_edges(g.n).size());
  // One dotted boundary ray with a label per boundary constant.
  CHECK(count_occurrences(svg, "<line class=\"bdry\"") == 3 * (size_t)g.n);
  CHECK(count_occurrences(svg, "lambda_1=2") == 1);
  CHECK(count_occurrences(svg, "mu_2=1") == 1);
  CHECK(count_occurrences(svg, "nu_1=1") == 1);
}

TEST_CASE("an all degenerate honeycomb renders as a single dot") {
  const GLHoneycomb g = first_gl({}, {}, {}, 2);
  const std::string svg = render_gl_svg(g);
  std::set<std::string> centers;
  for (size_t at = svg.find("<circle "); at != std::string::npos;
       at = svg.find("<circle ", at + 1))
    centers.insert(svg.substr(at, svg.find("/>", at) - at));
  CHECK(centers.size() == 1);
}

TEST_CASE("moebius rendering covers the window and marks the fractional part") {
  const MoebiusHoneycomb h = fractional_lift();
  const std::string plain = render_mh_svg(h);
  CHECK(render_mh_svg(h) == plain);
  CHECK(count_occurrences(plain, "<circle ") == h.pos.size());
  CHECK(count_occurrences(plain, ">xi_") == 3 * (size_t)h.n);
  CHECK(count_occurrences(plain, "class=\"wv\"") == 0);

  const Coloring c = color(h);
  const std::string colored = render_mh_svg(h, &c);
  CHECK(count_occurrences(colored, "class=\"wv\"") == c.whiteVertices.size());
  CHECK(count_occurrences(colored, "<line class=\"wedge\"") == c.whiteEdges.size());

  // Edge segments: one per quotient edge class.
  const size_t lines = count_occurrences(plain, "<line ");
  CHECK(lines == moebius_edges(h.n).size());
}
