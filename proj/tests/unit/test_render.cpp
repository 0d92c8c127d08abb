#include "psi0/render.hpp"

#include "psi0/gamma.hpp"

#include <doctest.h>
#include <json.hpp>

#include <stdexcept>

using namespace psi0;

TEST_CASE("text rendering") {
  CHECK(render_text(gamma(3)) == "1");
  CHECK(render_text(gamma(4)) == "1 + σ1");
  CHECK(render_text(gamma(5)) == "1 + 3/2 σ1 + 1/2 σ1^2 + σ2");
  CHECK(render_text(gamma(5), /*ascii=*/true) == "1 + 3/2 s1 + 1/2 s1^2 + s2");
  CHECK(render_text(gamma(6), true) == "1 + 11/6 s1 + s1^2 + s2 + 1/6 s1^3 + s1 s2 + 2 s3");
  CHECK(render_text(gamma(7)).find(" - 1/4 σ3") != std::string::npos);
  CHECK(render_text(SigmaPoly{}) == "0");

  SigmaPoly negative_lead;
  negative_lead.add_term(SigmaMonomial::sigma(1), -1);
  negative_lead.add_term(SigmaMonomial::sigma(2), Rational(-1, 3));
  CHECK(render_text(negative_lead, true) == "-s1 - 1/3 s2");
}

TEST_CASE("latex rendering") {
  CHECK(render_latex(gamma(4)) == "1 + \\sigma_1");
  CHECK(render_latex(gamma(6)) ==
        "1 + \\frac{11}{6}\\sigma_1 + \\sigma_1^2 + \\sigma_2 + "
        "\\frac{1}{6}\\sigma_1^3 + \\sigma_1\\sigma_2 + 2\\sigma_3");
  CHECK(render_latex(gamma(8)).find("\\frac{137}{60}\\sigma_1") != std::string::npos);
  CHECK(render_latex(gamma(8)).find("- \\frac{21}{2}\\sigma_4") != std::string::npos);
  CHECK(render_latex(gamma(8)).find("19\\sigma_5") != std::string::npos);
}

TEST_CASE("json rendering follows the schema in canonical order") {
  const std::string text = render_json(5, gamma(5));
  const auto doc = nlohmann::ordered_json::parse(text);
  CHECK(doc["n"] == 5);
  CHECK(doc["degree"] == 2);
  REQUIRE(doc["terms"].size() == 4);
  CHECK(doc["terms"][0]["sigma"].empty());
  CHECK(doc["terms"][0]["coeff"] == "1/1");
  CHECK(doc["terms"][1]["sigma"] == nlohmann::ordered_json({{"1", 1}}));
  CHECK(doc["terms"][1]["coeff"] == "3/2");
  CHECK(doc["terms"][2]["sigma"] == nlohmann::ordered_json({{"1", 2}}));
  CHECK(doc["terms"][3]["sigma"] == nlohmann::ordered_json({{"2", 1}}));

  // round trip: parse and re-serialize reproduces the bytes
  CHECK(doc.dump(2) == text);
  // determinism: rendering twice is byte-identical
  CHECK(render_json(5, gamma(5)) == text);
}

TEST_CASE("json records array") {
  std::vector<std::pair<int, SigmaPoly>> records;
  for (int n = 3; n <= 8; ++n) records.emplace_back(n, gamma(n));
  const auto doc = nlohmann::ordered_json::parse(render_json_records(records));
  REQUIRE(doc.size() == 6);
  CHECK(doc[5]["n"] == 8);
  CHECK(doc[5]["terms"][1]["coeff"] == "137/60");
  CHECK(doc[5]["terms"].back()["coeff"] == "19/1");
}

TEST_CASE("monomial strings") {
  CHECK(to_string(SigmaMonomial::one()) == "1");
  CHECK(to_string(SigmaMonomial::sigma(3)) == "s3");
  CHECK(to_string(SigmaMonomial::sigma(1, 2) * SigmaMonomial::sigma(2)) == "s1^2 s2");
  CHECK(to_string(SigmaMonomial::sigma(2), "σ") == "σ2");

  CHECK(parse_sigma_monomial("1") == SigmaMonomial::one());
  CHECK(parse_sigma_monomial("s1^2 s2") ==
        SigmaMonomial::sigma(1, 2) * SigmaMonomial::sigma(2));
  CHECK(parse_sigma_monomial(" s5 ") == SigmaMonomial::sigma(5));
  CHECK_THROWS_AS(parse_sigma_monomial(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_sigma_monomial("t2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sigma_monomial("s0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sigma_monomial("s2^0"), std::invalid_argument);

  // to_string / parse round trip
  for (const auto& m : {SigmaMonomial::one(), SigmaMonomial::sigma(4),
                        SigmaMonomial::sigma(1, 5) * SigmaMonomial::sigma(3, 2)})
    CHECK(parse_sigma_monomial(to_string(m)) == m);
}

TEST_CASE("format names") {
  CHECK(parse_format("text") == OutputFormat::text);
  CHECK(parse_format("latex") == OutputFormat::latex);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK_FALSE(parse_format("yaml").has_value());
}
