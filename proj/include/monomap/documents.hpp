#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "monomap/decoupling.hpp"
#include "monomap/grid.hpp"
#include "monomap/reconfig.hpp"
#include "monomap/reduction.hpp"

// Text interchange formats. All documents are JSON objects with sorted keys
// and two-space indentation, terminated by a newline, so encoding the same
// value always yields the same bytes.
//
// instance:  {"format": "monomap.instance", "version": 1,
//             "workspace": {"width", "height", "obstacles": [[c, r], ...]},
//             "robots": [{"id", "label", "role", "start": [c, r], "target": [c, r]}],
//             "layout": {...}}            // optional reduction annotation
// plan:      {"format": "monomap.plan", "version": 1, "instance": "<hash>",
//             "moves": [{"robot", "path": [[c, r], ...]}]}
// discs:     {"format": "monomap.discs", "version": 1, "radius": "1/2",
//             "discs": [{"id", "mobile", "start": [x, y], "target": [x, y]}],
//             "slides": [{"disc", "polyline": [[x, y], ...]}],   // optional
//             "report": {"ok", "moves", "violation"}}             // optional
// sequence:  {"format": "monomap.sequence", "version": 1, "instance": "<hash>",
//             "dimension", "groups": [[id, ...], ...]}

namespace monomap {

inline constexpr int kDocumentVersion = 1;

struct InstanceDocument {
  Instance instance;
  std::optional<ReductionLayout> layout;
};

std::string encode_instance(const Instance& instance, const ReductionLayout* layout = nullptr);
// Throws ParseError (kSchema) for malformed documents, including a layout
// block that fails audit_layout.
InstanceDocument decode_instance(std::string_view text);

// 16 hex digits: FNV-1a over the canonical encoding without layout.
std::string instance_hash(const Instance& instance);

std::string encode_plan(const Instance& instance, const MonotonePlan& plan);
// Throws ParseError for malformed documents and InvalidArgument when the
// plan was written for a different instance.
MonotonePlan decode_plan(std::string_view text, const Instance& instance);

struct DiscDocument {
  DiscInstance discs;
  std::optional<SlidePlan> slides;
  std::optional<SlideReport> report;
};

std::string encode_discs(const DiscDocument& document);
DiscDocument decode_discs(std::string_view text);

std::string encode_sequence(const Instance& instance, const SolutionSequence& sequence);
SolutionSequence decode_sequence(std::string_view text, const Instance& instance);

}  // namespace monomap
