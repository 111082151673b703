#pragma once

#include <string>

#include "monomap/grid.hpp"

namespace monomap {

// One line per row, top row first:
//   #  obstacle          .  empty
//   s  robot start       t  robot target
//   x  start of one robot and target of another
//   *  verifier start, target, and (with a plan) the verifier's path
std::string render_ascii(const Instance& instance, const MonotonePlan* plan = nullptr);

// SVG 1.1 drawing: literal starts green, targets red, both labeled; the
// verifier's endpoints outlined; with a plan, the verifier's path as a blue
// polyline.
std::string render_svg(const Instance& instance, const MonotonePlan* plan = nullptr);

}  // namespace monomap
