#include "monomap/monomap.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "monomap/decoupling.hpp"
#include "monomap/documents.hpp"
#include "monomap/error.hpp"
#include "monomap/planning.hpp"
#include "monomap/reconfig.hpp"
#include "monomap/reduction.hpp"
#include "monomap/render.hpp"
#include "monomap/sat.hpp"

struct mm_instance {
  monomap::Instance instance;
  std::optional<monomap::ReductionLayout> layout;
};

struct mm_plan {
  monomap::MonotonePlan plan;
};

namespace {

thread_local std::string last_error;

mm_status fail(mm_status status, const std::string& what) {
  last_error = what;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
mm_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const monomap::CapacityError& e) {
    return fail(MM_CAPACITY_ERROR, e.what());
  } catch (const monomap::InconsistencyError& e) {
    return fail(MM_NEGATIVE, e.what());
  } catch (const monomap::ParseError& e) {
    return fail(MM_INPUT_ERROR, e.what());
  } catch (const monomap::InvalidArgument& e) {
    return fail(MM_INPUT_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MM_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(MM_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(MM_INTERNAL_ERROR, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mm_status require(bool condition, const char* what) {
  return condition ? MM_OK : fail(MM_INPUT_ERROR, what);
}

const monomap::ReductionLayout& layout_of(const mm_instance* instance) {
  if (!instance->layout) {
    throw monomap::InvalidArgument("instance has no reduction layout");
  }
  return *instance->layout;
}

}  // namespace

extern "C" {

const char* mm_version(void) { return "0.1.0"; }

const char* mm_last_error(void) { return last_error.c_str(); }

void mm_string_free(char* str) { std::free(str); }

mm_status mm_instance_from_dimacs(const char* dimacs, mm_instance** out) {
  if (!dimacs || !out) return require(false, "null argument");
  return guarded([&] {
    auto [instance, layout] = monomap::build_instance(monomap::parse_dimacs(dimacs));
    *out = new mm_instance{std::move(instance), std::move(layout)};
    return MM_OK;
  });
}

mm_status mm_instance_from_json(const char* json, mm_instance** out) {
  if (!json || !out) return require(false, "null argument");
  return guarded([&] {
    auto doc = monomap::decode_instance(json);
    *out = new mm_instance{std::move(doc.instance), std::move(doc.layout)};
    return MM_OK;
  });
}

mm_status mm_instance_to_json(const mm_instance* instance, char** out) {
  if (!instance || !out) return require(false, "null argument");
  return guarded([&] {
    *out = copy_string(monomap::encode_instance(
        instance->instance, instance->layout ? &*instance->layout : nullptr));
    return MM_OK;
  });
}

int mm_instance_robot_count(const mm_instance* instance) {
  return instance ? instance->instance.size() : 0;
}

int mm_instance_has_layout(const mm_instance* instance) {
  return instance && instance->layout ? 1 : 0;
}

void mm_instance_free(mm_instance* instance) { delete instance; }

mm_status mm_plan_from_json(const mm_instance* instance, const char* json, mm_plan** out) {
  if (!instance || !json || !out) return require(false, "null argument");
  return guarded([&] {
    *out = new mm_plan{monomap::decode_plan(json, instance->instance)};
    return MM_OK;
  });
}

mm_status mm_plan_to_json(const mm_instance* instance, const mm_plan* plan, char** out) {
  if (!instance || !plan || !out) return require(false, "null argument");
  return guarded([&] {
    *out = copy_string(monomap::encode_plan(instance->instance, plan->plan));
    return MM_OK;
  });
}

int mm_plan_move_count(const mm_plan* plan) {
  return plan ? static_cast<int>(plan->plan.moves.size()) : 0;
}

void mm_plan_free(mm_plan* plan) { delete plan; }

mm_status mm_solve(const mm_instance* instance, int max_robots, mm_plan** out,
                   uint64_t* states_visited) {
  if (!instance || !out) return require(false, "null argument");
  *out = nullptr;
  return guarded([&] {
    monomap::SolverOptions options;
    if (max_robots > 0) options.max_robots = max_robots;
    monomap::SolverStats stats;
    auto plan = monomap::solve_monotone(instance->instance, options, &stats);
    if (states_visited) *states_visited = stats.states_visited;
    if (!plan) return MM_NEGATIVE;
    *out = new mm_plan{std::move(*plan)};
    return MM_OK;
  });
}

mm_status mm_validate(const mm_instance* instance, const mm_plan* plan, char** report) {
  if (!instance || !plan || !report) return require(false, "null argument");
  *report = nullptr;
  return guarded([&] {
    const auto violation = monomap::validate_monotone_plan(instance->instance, plan->plan);
    if (!violation) {
      *report = copy_string("ok\n");
      return MM_OK;
    }
    *report = copy_string(monomap::to_string(*violation) + "\n");
    return MM_NEGATIVE;
  });
}

mm_status mm_synthesize(const mm_instance* instance, const char* assignment, mm_plan** out) {
  if (!instance || !assignment || !out) return require(false, "null argument");
  return guarded([&] {
    const auto& layout = layout_of(instance);
    const auto a = monomap::parse_assignment(assignment, layout.formula.num_vars());
    auto [plan, trace] = monomap::synthesize_plan(instance->instance, layout, a);
    *out = new mm_plan{std::move(plan)};
    return MM_OK;
  });
}

mm_status mm_extract(const mm_instance* instance, const mm_plan* plan, char** assignment) {
  if (!instance || !plan || !assignment) return require(false, "null argument");
  return guarded([&] {
    const auto& layout = layout_of(instance);
    if (auto violation = monomap::validate_monotone_plan(instance->instance, plan->plan)) {
      return fail(MM_NEGATIVE, "plan does not validate: " + monomap::to_string(*violation));
    }
    const auto a = monomap::extract_assignment(instance->instance, layout, plan->plan);
    *assignment = copy_string(monomap::format_assignment(a));
    return MM_OK;
  });
}

mm_status mm_sat_dimacs(const char* dimacs, char** assignment) {
  if (!dimacs || !assignment) return require(false, "null argument");
  *assignment = nullptr;
  return guarded([&] {
    const auto a = monomap::brute_force_sat(monomap::parse_dimacs(dimacs));
    if (!a) return MM_NEGATIVE;
    *assignment = copy_string(monomap::format_assignment(*a));
    return MM_OK;
  });
}

mm_status mm_decouple(const mm_instance* instance, int max_dim, int max_robots,
                      char** sequence_json) {
  if (!instance || !sequence_json) return require(false, "null argument");
  *sequence_json = nullptr;
  return guarded([&] {
    monomap::DecouplingOptions options;
    if (max_robots > 0) options.solver.max_robots = max_robots;
    auto sequence = monomap::optimal_decoupling(instance->instance, max_dim, options);
    if (!sequence) return MM_NEGATIVE;
    *sequence_json = copy_string(monomap::encode_sequence(instance->instance, *sequence));
    return MM_OK;
  });
}

mm_status mm_to_discs(const mm_instance* instance, const mm_plan* plan, char** discs_json) {
  if (!instance || !discs_json) return require(false, "null argument");
  *discs_json = nullptr;
  return guarded([&] {
    monomap::DiscDocument doc{monomap::to_disc_instance(instance->instance), std::nullopt,
                              std::nullopt};
    if (plan) {
      doc.slides = monomap::grid_plan_to_slide_plan(instance->instance, plan->plan);
      doc.report = monomap::validate_slide_plan(doc.discs, *doc.slides);
    }
    *discs_json = copy_string(monomap::encode_discs(doc));
    return doc.report && !doc.report->ok() ? MM_NEGATIVE : MM_OK;
  });
}

mm_status mm_render(const mm_instance* instance, const mm_plan* plan, mm_render_format format,
                    char** out) {
  if (!instance || !out) return require(false, "null argument");
  return guarded([&] {
    const monomap::MonotonePlan* p = plan ? &plan->plan : nullptr;
    switch (format) {
      case MM_RENDER_ASCII: *out = copy_string(monomap::render_ascii(instance->instance, p)); break;
      case MM_RENDER_SVG: *out = copy_string(monomap::render_svg(instance->instance, p)); break;
      default: return fail(MM_INPUT_ERROR, "unknown render format");
    }
    return MM_OK;
  });
}

}  // extern "C"
