#include <gtest/gtest.h>

#include <string>

#include "monomap/monomap.h"

namespace {

constexpr const char* kFig1 = "p cnf 3 3\n-1 -2 3 0\n1 -2 3 0\n1 2 -3 0\n";

std::string take(char* s) {
  std::string out = s ? s : "";
  mm_string_free(s);
  return out;
}

TEST(CApi, ReduceSolveValidateExtract) {
  mm_instance* inst = nullptr;
  ASSERT_EQ(mm_instance_from_dimacs(kFig1, &inst), MM_OK);
  EXPECT_EQ(mm_instance_robot_count(inst), 10);
  EXPECT_EQ(mm_instance_has_layout(inst), 1);

  mm_plan* plan = nullptr;
  std::uint64_t states = 0;
  ASSERT_EQ(mm_solve(inst, 0, &plan, &states), MM_OK);
  EXPECT_GT(states, 0U);
  EXPECT_EQ(mm_plan_move_count(plan), 10);

  char* report = nullptr;
  EXPECT_EQ(mm_validate(inst, plan, &report), MM_OK);
  take(report);

  char* assignment = nullptr;
  ASSERT_EQ(mm_extract(inst, plan, &assignment), MM_OK);
  char* sat = nullptr;
  ASSERT_EQ(mm_sat_dimacs(kFig1, &sat), MM_OK);
  EXPECT_FALSE(take(assignment).empty());
  EXPECT_EQ(take(sat), "a=F,b=F,c=F");

  char* json = nullptr;
  ASSERT_EQ(mm_plan_to_json(inst, plan, &json), MM_OK);
  mm_plan* again = nullptr;
  ASSERT_EQ(mm_plan_from_json(inst, json, &again), MM_OK);
  take(json);
  EXPECT_EQ(mm_plan_move_count(again), 10);

  mm_plan_free(again);
  mm_plan_free(plan);
  mm_instance_free(inst);
}

TEST(CApi, SynthesizeRenderDiscs) {
  mm_instance* inst = nullptr;
  ASSERT_EQ(mm_instance_from_dimacs(kFig1, &inst), MM_OK);
  mm_plan* plan = nullptr;
  ASSERT_EQ(mm_synthesize(inst, "a=T,b=F,c=T", &plan), MM_OK);
  char* ascii = nullptr;
  ASSERT_EQ(mm_render(inst, plan, MM_RENDER_ASCII, &ascii), MM_OK);
  EXPECT_EQ(take(ascii).size(), 3U * 18U);
  char* svg = nullptr;
  ASSERT_EQ(mm_render(inst, nullptr, MM_RENDER_SVG, &svg), MM_OK);
  EXPECT_NE(take(svg).find("<svg"), std::string::npos);
  char* discs = nullptr;
  ASSERT_EQ(mm_to_discs(inst, plan, &discs), MM_OK);
  EXPECT_NE(take(discs).find("\"slides\""), std::string::npos);

  mm_plan* none = nullptr;
  EXPECT_EQ(mm_synthesize(inst, "a=F,b=T,c=F", &none), MM_INPUT_ERROR);
  EXPECT_EQ(none, nullptr);
  EXPECT_STRNE(mm_last_error(), "");
  mm_plan_free(plan);
  mm_instance_free(inst);
}

TEST(CApi, ErrorStatuses) {
  mm_instance* inst = nullptr;
  EXPECT_EQ(mm_instance_from_dimacs("p cnf 2 1\n1 2 0\n", &inst), MM_INPUT_ERROR);
  EXPECT_EQ(inst, nullptr);
  EXPECT_NE(std::string(mm_last_error()).find("line 2"), std::string::npos);
  EXPECT_EQ(mm_instance_from_json("{}", &inst), MM_INPUT_ERROR);
  EXPECT_EQ(mm_instance_from_dimacs(nullptr, &inst), MM_INPUT_ERROR);

  ASSERT_EQ(mm_instance_from_dimacs(
                "p cnf 3 8\n1 2 3 0\n-1 2 3 0\n1 -2 3 0\n-1 -2 3 0\n"
                "1 2 -3 0\n-1 2 -3 0\n1 -2 -3 0\n-1 -2 -3 0\n",
                &inst),
            MM_OK);
  mm_plan* plan = nullptr;
  EXPECT_EQ(mm_solve(inst, 0, &plan, nullptr), MM_CAPACITY_ERROR);
  EXPECT_EQ(mm_solve(inst, 25, &plan, nullptr), MM_NEGATIVE);
  EXPECT_EQ(plan, nullptr);
  char* seq = nullptr;
  EXPECT_EQ(mm_decouple(inst, 2, 0, &seq), MM_CAPACITY_ERROR);
  mm_instance_free(inst);
  EXPECT_STRNE(mm_version(), "");
}

TEST(CApi, Decouple) {
  const char* swap = R"({"format": "monomap.instance", "version": 1,
    "workspace": {"width": 2, "height": 2, "obstacles": []},
    "robots": [{"id": 0, "label": "A", "role": "literal", "start": [0, 0], "target": [1, 1]},
               {"id": 1, "label": "B", "role": "literal", "start": [1, 1], "target": [0, 0]}]})";
  mm_instance* inst = nullptr;
  ASSERT_EQ(mm_instance_from_json(swap, &inst), MM_OK) << mm_last_error();
  char* seq = nullptr;
  EXPECT_EQ(mm_decouple(inst, 1, 0, &seq), MM_NEGATIVE);
  ASSERT_EQ(mm_decouple(inst, 2, 0, &seq), MM_OK);
  EXPECT_NE(take(seq).find("\"dimension\": 2"), std::string::npos);
  mm_instance_free(inst);
}

}  // namespace
