#include <gtest/gtest.h>

#include <filesystem>

#include "lts/catalog.hpp"
#include "lts/error.hpp"
#include "lts/json_io.hpp"

using namespace lts;

namespace {

const std::string kData = LTS_DATA_DIR;

Error error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  return Error(Errc::NoMatch, "no error raised");
}

}  // namespace

TEST(Json, SystemsRoundTrip) {
  for (const auto& e : catalog()) {
    std::vector<std::optional<Scalar>> lambdas{std::nullopt};
    if (e.family) lambdas = {Scalar(2), Scalar::i(), Scalar(0)};
    for (const auto& l : lambdas) {
      Lts T = instantiate(e.name, l);
      Json j = lts_to_json(T);
      EXPECT_EQ(lts_from_json(j), T);
      EXPECT_EQ(dump(lts_to_json(lts_from_json(j))), dump(j));
    }
  }
  Json j = lts_to_json(instantiate("T4,6", Scalar::i()));
  EXPECT_EQ(j["field"], "Q(i)");
  EXPECT_EQ(lts_to_json(instantiate("T4,7"))["field"], "Q");
}

TEST(Json, ShippedFilesMatchCatalog) {
  std::vector<std::pair<std::string, Lts>> files{{"t32", instantiate("T3,2")},
                                                  {"t45", instantiate("T4,5")},
                                                  {"t46_2", instantiate("T4,6", Scalar(2))},
                                                  {"t46_i", instantiate("T4,6", Scalar::i())},
                                                  {"t47", instantiate("T4,7")}};
  for (const auto& [stem, T] : files) {
    Json j = read_json_file(kData + "/systems/" + stem + ".json");
    EXPECT_EQ(lts_from_json(j), T) << stem;
    EXPECT_EQ(dump(lts_to_json(T)), dump(j)) << stem;
  }
}

TEST(Json, CatalogReferences) {
  EXPECT_EQ(lts_from_json(Json::parse(R"({"name": "T4,8"})")), instantiate("T4,8"));
  EXPECT_EQ(lts_from_json(Json::parse(R"({"name": "T4,6", "lambda": "1/2"})")),
            instantiate("T4,6", Scalar(Rational(1, 2))));
  Error e = error_of([] { lts_from_json(Json::parse(R"({"name": "T4,6"})")); });
  EXPECT_EQ(e.kind(), Errc::Parse);
  EXPECT_NE(std::string(e.what()).find("'lambda'"), std::string::npos);
}

TEST(Json, MalformedFieldsAreNamed) {
  auto msg = [](const char* doc) { return std::string(error_of([&] { lts_from_json(Json::parse(doc)); }).what()); };
  EXPECT_NE(msg(R"({"field": "Q", "products": []})").find("'dim'"), std::string::npos);
  EXPECT_NE(msg(R"({"dim": 2, "products": [{"args": [1, 2], "value": {}}]})").find("products[0].args"),
            std::string::npos);
  EXPECT_NE(msg(R"({"dim": 2, "products": [{"args": [1, 2, 1], "value": {"1": "x"}}]})").find("products[0].value"),
            std::string::npos);
  EXPECT_EQ(error_of([] { lts_from_json(Json::parse(R"({"dim": "four", "products": []})")); }).kind(), Errc::Parse);
  EXPECT_EQ(error_of([] { read_json_file("/nonexistent/file.json"); }).kind(), Errc::Parse);
}

TEST(Json, AxiomCheckOnLoad) {
  const char* doc = R"({"dim": 4, "products": [{"args": [1, 2, 3], "value": {"4": "1"}}]})";
  EXPECT_EQ(error_of([&] { lts_from_json(Json::parse(doc)); }).kind(), Errc::AxiomViolation);
  Lts raw = lts_from_json(Json::parse(doc), Field::Qi, false);
  EXPECT_FALSE(check_axioms(raw).pass);
}

TEST(Json, FieldRestriction) {
  Json j = read_json_file(kData + "/systems/t46_i.json");
  EXPECT_EQ(error_of([&] { lts_from_json(j, Field::Q); }).kind(), Errc::FieldRestriction);
  EXPECT_NO_THROW(lts_from_json(j, Field::Qi));
  EXPECT_NO_THROW(lts_from_json(read_json_file(kData + "/systems/t47.json"), Field::Q));
  EXPECT_EQ(parse_field("Q(i)"), Field::Qi);
  EXPECT_EQ(parse_field("Qi"), Field::Qi);
  EXPECT_EQ(parse_field("Q"), Field::Q);
  EXPECT_EQ(error_of([] { parse_field("R"); }).kind(), Errc::Parse);
}

TEST(Json, Cocycles) {
  Lts t32 = instantiate("T3,2");
  Cocycle th = Cocycle::delta(3, 1, 2, 3) + Scalar(Rational(-1, 3)) * Cocycle::delta(3, 1, 3, 2);
  Json j = cocycle_to_json(t32, th);
  CocycleDoc d = cocycle_from_json(j);
  EXPECT_EQ(d.theta, th);
  EXPECT_EQ(d.system, t32);
  Json bad = Json::parse(R"({"coeffs": [{"ijk": [2, 1, 1], "value": "1"}]})");
  Error e = error_of([&] { cocycle_from_json(bad, Field::Qi, &t32); });
  EXPECT_EQ(e.kind(), Errc::Parse);
  EXPECT_NE(std::string(e.what()).find("coeffs[0].ijk"), std::string::npos);
}

TEST(Json, ExtensionsRoundTrip) {
  for (const auto& entry : std::filesystem::directory_iterator(kData + "/extensions")) {
    Json j = read_json_file(entry.path().string());
    ExtensionSpec spec = extension_from_json(j);
    EXPECT_EQ(dump(extension_to_json(spec)), dump(j)) << entry.path();
    EXPECT_TRUE(check_axioms(extend(spec)).pass);
  }
}

TEST(Json, WitnessesRoundTrip) {
  for (const auto& w : known_degenerations()) {
    Json j = witness_to_json(w);
    DegenerationWitness back = witness_from_json(j);
    EXPECT_EQ(back.basis, w.basis);
    EXPECT_EQ(back.label(), w.label());
    EXPECT_EQ(dump(witness_to_json(back)), dump(j));
  }
  DegenerationWitness f = witness_from_json(read_json_file(kData + "/witnesses/family_to_t45.json"));
  EXPECT_TRUE(f.source.indexFn);
  EXPECT_TRUE(verify_degeneration(f).pass);
  Json arr = read_json_file(kData + "/witnesses/all_witnesses.json");
  ASSERT_TRUE(arr.is_array());
  EXPECT_EQ(arr.size(), 14u);
}

TEST(Json, SeparatingSetsRoundTrip) {
  for (const auto& R : {separating_r1(), separating_r2(Scalar(2)), separating_r3(), separating_r5(),
                        separating_r5_as_printed()}) {
    Json j = separating_to_json(R);
    SeparatingSet back = separating_from_json(j);
    EXPECT_EQ(back.relation_matrix(), R.relation_matrix());
    EXPECT_EQ(dump(separating_to_json(back)), dump(j));
  }
  EXPECT_EQ(dump(separating_to_json(separating_from_json(read_json_file(kData + "/separating/r5.json")))),
            dump(separating_to_json(separating_r5())));
}

TEST(Json, DumpIsSortedAndStable) {
  Json j = Json::parse(R"({"b": 1, "a": {"d": 2, "c": 3}})");
  EXPECT_EQ(dump(j), "{\n  \"a\": {\n    \"c\": 3,\n    \"d\": 2\n  },\n  \"b\": 1\n}\n");
}
