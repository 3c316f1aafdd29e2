#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "test_support.hpp"

using namespace bottloc;
using bottloc_test::cp1_profile;
using bottloc_test::random_profile;

TEST_CASE("profile serialization is canonical") {
  std::string text = serialize_profile(cp1_profile());
  CHECK(text ==
        R"({"dimension":1,"flavor":"almost-complex","points":[)"
        R"({"line_weight":0,"tangent_weights":[1]},)"
        R"({"line_weight":1,"tangent_weights":[-1]}]})");
  // Equal profiles serialize to equal bytes.
  CHECK(serialize_profile(cp1_profile()) == text);
}

TEST_CASE("parse inverts serialize") {
  std::mt19937 rng(11001);
  for (int i = 0; i < 80; ++i) {
    FixedPointProfile p = random_profile(rng);
    if (i % 3 == 0) p.flavor = Flavor::oriented;
    CHECK(parse_profile(serialize_profile(p)) == p);
  }
}

TEST_CASE("parser accepts any key order and ignores formatting") {
  std::string text = R"({
    "points": [ {"tangent_weights": [2, -1], "line_weight": -3},
                {"tangent_weights": [1, 1], "line_weight": 4} ],
    "flavor": "oriented",
    "dimension": 2
  })";
  FixedPointProfile p = parse_profile(text);
  CHECK(p.dimension == 2);
  CHECK(p.flavor == Flavor::oriented);
  REQUIRE(p.point_count() == 2);
  CHECK(p.points[0].tangent_weights == std::vector<int>{2, -1});
  CHECK(p.points[0].line_weight == -3);
}

TEST_CASE("parse errors carry the failing location") {
  auto message = [](const std::string& text) {
    try {
      parse_profile(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };

  CHECK(message("{oops").find("parse error") != std::string::npos);
  CHECK(message(R"({"dimension":1,"points":[]})").find("flavor") != std::string::npos);
  CHECK(message(R"({"dimension":"x","flavor":"oriented","points":[]})").find("dimension") !=
        std::string::npos);
  CHECK(message(R"({"dimension":1,"flavor":"spinor","points":[]})").find("spinor") !=
        std::string::npos);
  CHECK(message(R"({"dimension":1,"flavor":"oriented","points":[{"line_weight":0}]})")
            .find("points[0].tangent_weights") != std::string::npos);
  CHECK(message(
            R"({"dimension":1,"flavor":"oriented","points":[{"line_weight":0,"tangent_weights":[1,"y"]}]})")
            .find("tangent_weights[1]") != std::string::npos);
  // Structurally invalid data is a parse failure too.
  CHECK(message(R"({"dimension":1,"flavor":"oriented","points":[{"line_weight":0,"tangent_weights":[0]}]})")
            .find("zero tangent weight") != std::string::npos);
  CHECK(message(R"({"dimension":0,"flavor":"oriented","points":[]})").find("dimension") !=
        std::string::npos);
}

TEST_CASE("rationals serialize as exact decimal strings") {
  nlohmann::json j = rational_to_json(Rational(-7, 2));
  CHECK(j["num"] == "-7");
  CHECK(j["den"] == "2");
  Rational big(pow_integer(Integer(10), 40) + 1, Integer(3));
  nlohmann::json jb = rational_to_json(big);
  CHECK(jb["num"] == "10000000000000000000000000000000000000001");
  CHECK(jb["den"] == "3");
}

TEST_CASE("consistency report serialization") {
  FixedPointProfile p{1, Flavor::almost_complex, {{{2}, 0}, {{-2}, 1}}};
  nlohmann::json j = consistency_to_json(consistency_check(p));
  CHECK(j["consistent"] == true);
  CHECK(j["chern_integral"] == false);
  CHECK(j["chern_top"]["num"] == "-1");
  CHECK(j["chern_top"]["den"] == "2");
  REQUIRE(j["moments"].size() == 1);
  CHECK(j["moments"][0]["t"] == 0);
  CHECK(j["moments"][0]["pass"] == true);
}

TEST_CASE("theorem report serialization") {
  FixedPointProfile plane = cpn({0, 1, 2}, 1);
  nlohmann::json j = theorem_to_json(theorem_report(plane));
  CHECK(j["classification"] == "everywhere-injective");
  CHECK(j["vacuous"] == false);
  REQUIRE(j["verdicts"].size() == 3);
  CHECK(j["verdicts"][0]["statement"] == 1);
  CHECK(j["verdicts"][0]["status"] == "verified");
  CHECK(j["verdicts"][2]["status"] == "verified");
  CHECK(j["dichotomy_case"] == "nonzero-everywhere-injective");
  REQUIRE(j["levels"].size() == 3);
  CHECK(j["levels"][0]["line_weight"] == -2);
  CHECK(j["levels"][0]["multiplicity"] == 1);
  CHECK(j["levels"][0]["sum"]["num"] == "1");
  CHECK(j["levels"][0]["sum"]["den"] == "2");

  // No dichotomy key when statement three does not apply.
  FixedPointProfile big = product(cpn({0, 1}, 1), cpn({0, 1}, 1));
  nlohmann::json jb = theorem_to_json(theorem_report(big));
  CHECK_FALSE(jb.contains("dichotomy_case"));
}

TEST_CASE("audit serialization") {
  FixedPointProfile lonely{1, Flavor::almost_complex, {{{1}, 1}}};
  nlohmann::json j = audit_to_json(catalog_audit({cpn({0, 1, 2}, 1), lonely}));
  CHECK(j["profiles"] == 2);
  CHECK(j["clean"] == false);
  CHECK(j["inconsistent"] == 1);
  REQUIRE(j.contains("first_violation"));
  CHECK(j["first_violation"]["statement"] == 1);
  CHECK(j["first_violation"]["profile"]["dimension"] == 1);
  REQUIRE(j["statements"].size() == 3);
  CHECK(j["statements"][0]["verified"] == 1);
  CHECK(j["statements"][0]["violated"] == 1);

  nlohmann::json clean = audit_to_json(catalog_audit({}));
  CHECK(clean["clean"] == true);
  CHECK_FALSE(clean.contains("first_violation"));
}

TEST_CASE("catalog round-trip") {
  SearchSpec spec{1, 2, 2, 1};
  std::vector<FixedPointProfile> profiles = enumerate_consistent(spec);
  std::ostringstream out;
  write_catalog(out, profiles, spec);

  std::istringstream in(out.str());
  Catalog catalog = read_catalog(in);
  CHECK(catalog.profiles == profiles);
  REQUIRE_FALSE(catalog.summary.is_null());
  CHECK(catalog.summary["profile_count"] == profiles.size());
  CHECK(catalog.summary["spec"]["dimension"] == 1);
  CHECK(catalog.summary["spec"]["tangent_bound"] == 2);
  CHECK(catalog.summary["spec"]["flavor"] == "almost-complex");

  // One line per profile plus the summary line.
  std::size_t lines = 0;
  for (char c : out.str())
    if (c == '\n') ++lines;
  CHECK(lines == profiles.size() + 1);
}

TEST_CASE("catalog reader reports the offending line") {
  std::istringstream bad("{\"dimension\":1,\"flavor\":\"oriented\",\"points\":[{\"line_weight\":0,\"tangent_weights\":[1]}]}\nnot json\n");
  try {
    read_catalog(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  std::istringstream empty("");
  Catalog catalog = read_catalog(empty);
  CHECK(catalog.profiles.empty());
  CHECK(catalog.summary.is_null());

  // Blank lines are tolerated; a catalog may also lack a summary.
  std::istringstream sparse("\n{\"dimension\":1,\"flavor\":\"oriented\",\"points\":[{\"line_weight\":0,\"tangent_weights\":[1]}]}\n\n");
  Catalog c2 = read_catalog(sparse);
  CHECK(c2.profiles.size() == 1);
  CHECK(c2.summary.is_null());
}
