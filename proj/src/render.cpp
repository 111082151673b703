#include "monomap/render.hpp"

#include <sstream>

namespace monomap {

namespace {

constexpr int kCell = 40;
constexpr int kMargin = 10;

const Path* verifier_path(const Instance& instance, const MonotonePlan* plan) {
  const auto verifier = instance.verifier();
  if (!plan || !verifier) return nullptr;
  for (const Move& m : plan->moves) {
    if (m.robot == *verifier) return &m.path;
  }
  return nullptr;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_ascii(const Instance& instance, const MonotonePlan* plan) {
  const Workspace& ws = instance.workspace();
  std::vector<std::string> rows(static_cast<std::size_t>(ws.height()),
                                std::string(static_cast<std::size_t>(ws.width()), '.'));
  auto at = [&](GridPos p) -> char& {
    return rows[static_cast<std::size_t>(p.row)][static_cast<std::size_t>(p.col)];
  };
  for (GridPos p : ws.obstacles()) at(p) = '#';
  if (const Path* path = verifier_path(instance, plan)) {
    for (GridPos p : *path) at(p) = '*';
  }
  for (const Robot& r : instance.robots()) {
    if (r.role == RobotRole::kVerifier) continue;
    char& s = at(r.start);
    s = s == 't' ? 'x' : 's';
    char& t = at(r.target);
    t = t == 's' ? 'x' : 't';
  }
  if (const auto v = instance.verifier()) {
    at(instance.robot(*v).start) = '*';
    at(instance.robot(*v).target) = '*';
  }
  std::string out;
  for (const std::string& row : rows) out += row + "\n";
  return out;
}

std::string render_svg(const Instance& instance, const MonotonePlan* plan) {
  const Workspace& ws = instance.workspace();
  const int width = ws.width() * kCell + 2 * kMargin;
  const int height = ws.height() * kCell + 2 * kMargin;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  auto cell_rect = [&](GridPos p, const char* cls, const char* fill, const char* stroke) {
    out << "<rect class=\"" << cls << "\" x=\"" << kMargin + p.col * kCell << "\" y=\""
        << kMargin + p.row * kCell << "\" width=\"" << kCell << "\" height=\"" << kCell
        << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"1\"/>\n";
  };
  auto label = [&](GridPos p, const std::string& text) {
    out << "<text x=\"" << kMargin + p.col * kCell + kCell / 2 << "\" y=\""
        << kMargin + p.row * kCell + kCell / 2 + 5
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
        << escape(text) << "</text>\n";
  };
  for (int r = 0; r < ws.height(); ++r) {
    for (int c = 0; c < ws.width(); ++c) {
      const GridPos p{c, r};
      if (ws.is_obstacle(p)) {
        cell_rect(p, "obstacle", "#555555", "#333333");
      } else {
        cell_rect(p, "cell", "none", "#cccccc");
      }
    }
  }
  for (const Robot& r : instance.robots()) {
    const bool verifier = r.role == RobotRole::kVerifier;
    cell_rect(r.start, verifier ? "verifier-start" : "start", "#7bc86c", verifier ? "#1f4fd8" : "#2e7d32");
    cell_rect(r.target, verifier ? "verifier-target" : "target", "#e57373", verifier ? "#1f4fd8" : "#b71c1c");
  }
  if (const Path* path = verifier_path(instance, plan)) {
    out << "<polyline class=\"verifier-path\" fill=\"none\" stroke=\"#1f4fd8\" "
           "stroke-width=\"4\" points=\"";
    for (std::size_t i = 0; i < path->size(); ++i) {
      const GridPos p = (*path)[i];
      out << (i ? " " : "") << kMargin + p.col * kCell + kCell / 2 << ','
          << kMargin + p.row * kCell + kCell / 2;
    }
    out << "\"/>\n";
  }
  for (const Robot& r : instance.robots()) {
    label(r.start, r.label);
    label(r.target, r.label);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace monomap
