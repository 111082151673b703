#include "monomap/documents.hpp"

#include <cinttypes>
#include <cstdio>

#include "json.hpp"
#include "monomap/error.hpp"

namespace monomap {

using nlohmann::json;

namespace {

constexpr const char* kInstanceFormat = "monomap.instance";
constexpr const char* kPlanFormat = "monomap.plan";
constexpr const char* kDiscFormat = "monomap.discs";
constexpr const char* kSequenceFormat = "monomap.sequence";

[[noreturn]] void schema_error(const std::string& what) {
  throw ParseError(ParseError::Kind::kSchema, 0, what);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json parse_json(std::string_view text, const char* format) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("format") || doc["format"] != format) {
    schema_error(std::string("expected a ") + format + " document");
  }
  if (!doc.contains("version") || doc["version"] != kDocumentVersion) {
    schema_error("unsupported document version");
  }
  return doc;
}

// Wraps nlohmann type errors as schema errors.
template <typename F>
auto schema_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    schema_error(e.what());
  } catch (const InvalidArgument& e) {
    schema_error(e.what());
  }
}

json cell_json(GridPos p) { return json::array({p.col, p.row}); }

GridPos cell_from(const json& j) {
  if (!j.is_array() || j.size() != 2) schema_error("cell must be [col, row]");
  return {j.at(0).get<int>(), j.at(1).get<int>()};
}

json lattice_json(LatticePoint p) { return json::array({p.x, p.y}); }

LatticePoint lattice_from(const json& j) {
  if (!j.is_array() || j.size() != 2) schema_error("point must be [x, y]");
  return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
}

json point_json(Point2 p) {
  auto coord = [](double v) -> json {
    if (v == static_cast<double>(static_cast<std::int64_t>(v))) return static_cast<std::int64_t>(v);
    return v;
  };
  return json::array({coord(p.x), coord(p.y)});
}

Point2 point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) schema_error("point must be [x, y]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json instance_body(const Instance& instance) {
  json obstacles = json::array();
  for (GridPos p : instance.workspace().obstacles()) obstacles.push_back(cell_json(p));
  json robots = json::array();
  for (const Robot& r : instance.robots()) {
    robots.push_back({{"id", r.id},
                      {"label", r.label},
                      {"role", std::string(to_string(r.role))},
                      {"start", cell_json(r.start)},
                      {"target", cell_json(r.target)}});
  }
  return {{"format", kInstanceFormat},
          {"version", kDocumentVersion},
          {"workspace",
           {{"width", instance.workspace().width()},
            {"height", instance.workspace().height()},
            {"obstacles", obstacles}}},
          {"robots", robots}};
}

int signed_literal(Literal lit) { return lit.positive ? lit.var : -lit.var; }

Literal literal_from(int value) { return {value < 0 ? -value : value, value > 0}; }

json layout_json(const ReductionLayout& layout) {
  json clauses = json::array();
  for (const Clause& c : layout.formula.clauses()) {
    clauses.push_back({signed_literal(c[0]), signed_literal(c[1]), signed_literal(c[2])});
  }
  json variables = json::array();
  for (const VariableGadget& g : layout.variables) {
    variables.push_back({{"var", g.var},
                         {"first_col", g.first_col},
                         {"width", g.width},
                         {"top", g.top_robots},
                         {"bottom", g.bottom_robots}});
  }
  json gadgets = json::array();
  for (const ClauseGadget& g : layout.clauses) {
    gadgets.push_back({{"col", g.col}, {"robots", g.robots}});
  }
  json occurrences = json::array();
  for (std::size_t id = 0; id < layout.occurrences.size(); ++id) {
    const Occurrence& o = layout.occurrences[id];
    occurrences.push_back({{"robot", id},
                           {"clause", o.clause},
                           {"pos", o.pos},
                           {"literal", signed_literal(o.literal)}});
  }
  json columns = json::array();
  for (ColumnKind k : layout.columns) columns.push_back(std::string(to_string(k)));
  return {{"num_vars", layout.formula.num_vars()},
          {"clauses", clauses},
          {"variables", variables},
          {"clause_gadgets", gadgets},
          {"occurrences", occurrences},
          {"verifier", layout.verifier},
          {"empty_columns", layout.empty_columns},
          {"columns", columns}};
}

ReductionLayout layout_from(const json& j) {
  ReductionLayout layout;
  std::vector<Clause> clauses;
  for (const json& c : j.at("clauses")) {
    if (!c.is_array() || c.size() != 3) schema_error("layout clause must have 3 literals");
    clauses.push_back({literal_from(c[0].get<int>()), literal_from(c[1].get<int>()),
                       literal_from(c[2].get<int>())});
  }
  layout.formula = CnfFormula(j.at("num_vars").get<int>(), std::move(clauses));
  for (const json& g : j.at("variables")) {
    layout.variables.push_back({g.at("var").get<int>(), g.at("first_col").get<int>(),
                                g.at("width").get<int>(), g.at("top").get<std::vector<int>>(),
                                g.at("bottom").get<std::vector<int>>()});
  }
  for (const json& g : j.at("clause_gadgets")) {
    layout.clauses.push_back({g.at("col").get<int>(), g.at("robots").get<std::array<int, 3>>()});
  }
  const json& occs = j.at("occurrences");
  for (std::size_t id = 0; id < occs.size(); ++id) {
    const json& o = occs[id];
    if (o.at("robot").get<std::size_t>() != id) schema_error("occurrences must be ordered by robot");
    layout.occurrences.push_back(
        {o.at("clause").get<int>(), o.at("pos").get<int>(), literal_from(o.at("literal").get<int>())});
  }
  layout.verifier = j.at("verifier").get<int>();
  layout.empty_columns = j.at("empty_columns").get<std::vector<int>>();
  for (const json& k : j.at("columns")) {
    const std::string name = k.get<std::string>();
    if (name == "boundary") layout.columns.push_back(ColumnKind::kBoundary);
    else if (name == "empty") layout.columns.push_back(ColumnKind::kEmpty);
    else if (name == "variable") layout.columns.push_back(ColumnKind::kVariable);
    else if (name == "clause") layout.columns.push_back(ColumnKind::kClause);
    else schema_error("unknown column kind '" + name + "'");
  }
  return layout;
}

}  // namespace

std::string encode_instance(const Instance& instance, const ReductionLayout* layout) {
  json doc = instance_body(instance);
  if (layout) doc["layout"] = layout_json(*layout);
  return dump(doc);
}

InstanceDocument decode_instance(std::string_view text) {
  const json doc = parse_json(text, kInstanceFormat);
  return schema_guard([&] {
    const json& ws = doc.at("workspace");
    std::vector<GridPos> obstacles;
    for (const json& c : ws.at("obstacles")) obstacles.push_back(cell_from(c));
    Workspace workspace(ws.at("width").get<int>(), ws.at("height").get<int>(), std::move(obstacles));
    std::vector<Robot> robots;
    for (const json& r : doc.at("robots")) {
      const std::string role = r.at("role").get<std::string>();
      if (role != "literal" && role != "verifier") schema_error("unknown robot role '" + role + "'");
      robots.push_back({r.at("id").get<int>(), r.at("label").get<std::string>(),
                        cell_from(r.at("start")), cell_from(r.at("target")),
                        role == "verifier" ? RobotRole::kVerifier : RobotRole::kLiteral});
    }
    InstanceDocument result{Instance(std::move(workspace), std::move(robots)), std::nullopt};
    if (doc.contains("layout")) {
      ReductionLayout layout = layout_from(doc.at("layout"));
      if (auto problem = audit_layout(result.instance, layout)) {
        schema_error("layout annotation does not match instance: " + *problem);
      }
      result.layout = std::move(layout);
    }
    return result;
  });
}

std::string instance_hash(const Instance& instance) {
  const std::string canonical = encode_instance(instance);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string encode_plan(const Instance& instance, const MonotonePlan& plan) {
  json moves = json::array();
  for (const Move& m : plan.moves) {
    json path = json::array();
    for (GridPos p : m.path) path.push_back(cell_json(p));
    moves.push_back({{"robot", m.robot}, {"path", path}});
  }
  return dump({{"format", kPlanFormat},
               {"version", kDocumentVersion},
               {"instance", instance_hash(instance)},
               {"moves", moves}});
}

MonotonePlan decode_plan(std::string_view text, const Instance& instance) {
  const json doc = parse_json(text, kPlanFormat);
  const std::string hash = schema_guard([&] { return doc.at("instance").get<std::string>(); });
  if (hash != instance_hash(instance)) {
    throw InvalidArgument("plan was written for instance " + hash + ", not " +
                          instance_hash(instance));
  }
  return schema_guard([&] {
    MonotonePlan plan;
    for (const json& m : doc.at("moves")) {
      Move move{m.at("robot").get<int>(), {}};
      for (const json& c : m.at("path")) move.path.push_back(cell_from(c));
      plan.moves.push_back(std::move(move));
    }
    return plan;
  });
}

std::string encode_discs(const DiscDocument& document) {
  json discs = json::array();
  for (const Disc& d : document.discs.discs()) {
    discs.push_back({{"id", d.id},
                     {"mobile", d.mobile},
                     {"start", lattice_json(d.start)},
                     {"target", lattice_json(d.target)}});
  }
  json doc = {{"format", kDiscFormat},
              {"version", kDocumentVersion},
              {"radius", "1/2"},
              {"discs", discs}};
  if (document.slides) {
    json slides = json::array();
    for (const Slide& s : document.slides->moves) {
      json line = json::array();
      for (const Point2& p : s.polyline) line.push_back(point_json(p));
      slides.push_back({{"disc", s.disc}, {"polyline", line}});
    }
    doc["slides"] = slides;
  }
  if (document.report) {
    doc["report"] = {{"ok", document.report->ok()},
                     {"moves", document.report->move_count},
                     {"violation", document.report->violation
                                       ? json(to_string(*document.report->violation))
                                       : json(nullptr)}};
  }
  return dump(doc);
}

DiscDocument decode_discs(std::string_view text) {
  const json doc = parse_json(text, kDiscFormat);
  return schema_guard([&] {
    std::vector<Disc> discs;
    for (const json& d : doc.at("discs")) {
      discs.push_back({d.at("id").get<int>(), lattice_from(d.at("start")),
                       lattice_from(d.at("target")), d.at("mobile").get<bool>()});
    }
    DiscDocument result{DiscInstance(std::move(discs)), std::nullopt, std::nullopt};
    if (doc.contains("slides")) {
      SlidePlan plan;
      for (const json& s : doc.at("slides")) {
        Slide slide{s.at("disc").get<int>(), {}};
        for (const json& p : s.at("polyline")) slide.polyline.push_back(point_from(p));
        plan.moves.push_back(std::move(slide));
      }
      result.slides = std::move(plan);
    }
    if (doc.contains("report")) {
      // The report is derived data: recompute it and insist it agrees.
      if (!result.slides) schema_error("report without slides");
      result.report = validate_slide_plan(result.discs, *result.slides);
      if (doc.at("report").at("ok").get<bool>() != result.report->ok()) {
        schema_error("stored report disagrees with the slides");
      }
    }
    return result;
  });
}

std::string encode_sequence(const Instance& instance, const SolutionSequence& sequence) {
  return dump({{"format", kSequenceFormat},
               {"version", kDocumentVersion},
               {"instance", instance_hash(instance)},
               {"dimension", dimension(sequence, instance.size())},
               {"groups", sequence.groups}});
}

SolutionSequence decode_sequence(std::string_view text, const Instance& instance) {
  const json doc = parse_json(text, kSequenceFormat);
  return schema_guard([&] {
    if (doc.at("instance").get<std::string>() != instance_hash(instance)) {
      throw InvalidArgument("sequence was written for a different instance");
    }
    SolutionSequence sequence{doc.at("groups").get<std::vector<std::vector<int>>>()};
    check_partition(sequence, instance.size());
    return sequence;
  });
}

}  // namespace monomap
