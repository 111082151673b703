#include <gtest/gtest.h>

#include "json.hpp"
#include <random>

#include "monomap/documents.hpp"
#include "monomap/error.hpp"
#include "monomap/planning.hpp"
#include "monomap/reduction.hpp"
#include "monomap/render.hpp"
#include "test_support.hpp"

namespace monomap {
namespace {

std::size_t count(std::string_view text, std::string_view needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string_view::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

TEST(InstanceDocument, FixedPoint) {
  std::mt19937 rng(43);
  for (int i = 0; i < 100; ++i) {
    const auto [inst, layout] = build_instance(testing::random_formula(rng, 5, 6));
    const std::string text = encode_instance(inst, &layout);
    const InstanceDocument doc = decode_instance(text);
    EXPECT_EQ(doc.instance, inst);
    ASSERT_TRUE(doc.layout);
    EXPECT_EQ(*doc.layout, layout);
    EXPECT_EQ(encode_instance(doc.instance, &*doc.layout), text);
    EXPECT_EQ(text.back(), '\n');
  }
  const Instance plain = testing::random_instance(rng, 4, 3);
  const InstanceDocument doc = decode_instance(encode_instance(plain));
  EXPECT_FALSE(doc.layout);
  EXPECT_EQ(doc.instance, plain);
}

TEST(InstanceDocument, RejectsMalformed) {
  EXPECT_THROW(decode_instance("{"), ParseError);
  EXPECT_THROW(decode_instance("[]"), ParseError);
  EXPECT_THROW(decode_instance(R"({"format": "monomap.plan", "version": 1})"), ParseError);

  const auto [inst, layout] = build_instance(testing::fig1_formula());
  auto j = nlohmann::json::parse(encode_instance(inst, &layout));
  j["version"] = 2;
  EXPECT_THROW(decode_instance(j.dump()), ParseError);
  j["version"] = 1;
  j["layout"]["verifier"] = 0;
  EXPECT_THROW(decode_instance(j.dump()), ParseError);
  j = nlohmann::json::parse(encode_instance(inst));
  j["robots"][0]["start"] = nlohmann::json::array({99, 0});
  EXPECT_THROW(decode_instance(j.dump()), ParseError);
}

TEST(InstanceHash, StableAndSensitive) {
  const auto [inst, layout] = build_instance(testing::fig1_formula());
  const std::string h = instance_hash(inst);
  EXPECT_EQ(h.size(), 16U);
  EXPECT_EQ(instance_hash(decode_instance(encode_instance(inst, &layout)).instance), h);
  const auto [other, other_layout] = build_instance(testing::complete_formula());
  EXPECT_NE(instance_hash(other), h);
}

TEST(PlanDocument, RoundTripAndHashCheck) {
  const auto [inst, layout] = build_instance(testing::fig1_formula());
  const auto [plan, trace] = synthesize_plan(inst, layout, {{true, false, true}});
  const std::string text = encode_plan(inst, plan);
  EXPECT_EQ(decode_plan(text, inst), plan);
  EXPECT_EQ(encode_plan(inst, decode_plan(text, inst)), text);
  const auto [other, other_layout] = build_instance(CnfFormula(1, {}));
  EXPECT_THROW(decode_plan(text, other), InvalidArgument);
  EXPECT_THROW(decode_plan("{\"format\": 3}", inst), ParseError);
}

TEST(SequenceDocument, RoundTrip) {
  const Instance inst(Workspace(2, 2, {}), {{0, "A", {0, 0}, {1, 1}, RobotRole::kLiteral},
                                            {1, "B", {1, 1}, {0, 0}, RobotRole::kLiteral}});
  const SolutionSequence seq{{{0, 1}}};
  const std::string text = encode_sequence(inst, seq);
  EXPECT_EQ(decode_sequence(text, inst), seq);
  EXPECT_EQ(nlohmann::json::parse(text)["dimension"], 2);
}

TEST(DiscDocument, RoundTrip) {
  const auto [inst, layout] = build_instance(testing::fig1_formula());
  const auto [plan, trace] = synthesize_plan(inst, layout, {{true, false, true}});
  DiscDocument doc{to_disc_instance(inst), grid_plan_to_slide_plan(inst, plan), std::nullopt};
  doc.report = validate_slide_plan(doc.discs, *doc.slides);
  const std::string text = encode_discs(doc);
  const DiscDocument back = decode_discs(text);
  EXPECT_EQ(back.discs.discs(), doc.discs.discs());
  EXPECT_EQ(back.slides, doc.slides);
  ASSERT_TRUE(back.report);
  EXPECT_TRUE(back.report->ok());
  EXPECT_EQ(encode_discs(back), text);

  auto j = nlohmann::json::parse(text);
  j["report"]["ok"] = false;
  EXPECT_THROW(decode_discs(j.dump()), ParseError);
  j.erase("slides");
  EXPECT_THROW(decode_discs(j.dump()), ParseError);
}

TEST(Render, AsciiEmptyFormula) {
  const auto [inst, layout] = build_instance(CnfFormula(1, {}));
  EXPECT_EQ(render_ascii(inst), "..\n**\n..\n");
  const auto [plan, trace] = synthesize_plan(inst, layout, {{false}});
  EXPECT_EQ(render_ascii(inst, &plan), "..\n**\n..\n");
}

TEST(Render, AsciiFigure1) {
  const auto [inst, layout] = build_instance(testing::fig1_formula());
  const std::string text = render_ascii(inst);
  EXPECT_EQ(count(text, "\n"), 3U);
  EXPECT_EQ(count(text, "s"), 9U);
  EXPECT_EQ(count(text, "t"), 9U);
  EXPECT_EQ(count(text, "#"), inst.workspace().obstacles().size());
}

TEST(Render, SvgFigure1) {
  const auto [inst, layout] = build_instance(testing::fig1_formula());
  const auto [plan, trace] = synthesize_plan(inst, layout, {{true, false, true}});
  const std::string svg = render_svg(inst, &plan);
  EXPECT_EQ(svg.rfind("<svg", 0) == 0 || svg.rfind("<?xml", 0) == 0, true);
  EXPECT_EQ(count(svg, "class=\"start\""), 9U);
  EXPECT_EQ(count(svg, "class=\"target\""), 9U);
  EXPECT_EQ(count(svg, "class=\"verifier-start\""), 1U);
  EXPECT_EQ(count(svg, "class=\"verifier-target\""), 1U);
  EXPECT_EQ(count(svg, "class=\"verifier-path\""), 1U);
  EXPECT_EQ(count(render_svg(inst), "class=\"verifier-path\""), 0U);
  EXPECT_EQ(count(svg, ">c1<"), 2U);
}

}  // namespace
}  // namespace monomap
