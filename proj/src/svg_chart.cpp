#include "seatcfn/svg_chart.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "seatcfn/format.hpp"

namespace seatcfn {

std::map<int, int> resolve_seating(const SeatingProblem& problem, const NodeChoiceMap& map,
                                   const Assignment& a) {
  std::map<int, int> seating;
  for (int g = 0; g < problem.guest_count(); ++g)
    if (map.fixed_seat[g] >= 0) seating[g] = map.fixed_seat[g];
  for (int node = 0; node < map.node_count(); ++node) {
    const int guest = map.node_to_guest[node];
    seating[guest] = problem.allowed_seats(guest)[a[node]];
  }
  return seating;
}

namespace {

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) { return format_double(v); }

}  // namespace

std::string render_chart(const SeatingProblem& problem, const std::map<int, int>* seating) {
  // guests per seat
  std::vector<std::vector<int>> occupants(problem.seat_count());
  if (seating != nullptr)
    for (const auto& [guest, seat] : *seating) occupants[seat].push_back(guest);

  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool first = true;
  auto include = [&](double x, double y, double pad) {
    if (first) {
      min_x = x - pad;
      max_x = x + pad;
      min_y = y - pad;
      max_y = y + pad;
      first = false;
      return;
    }
    min_x = std::min(min_x, x - pad);
    max_x = std::max(max_x, x + pad);
    min_y = std::min(min_y, y - pad);
    max_y = std::max(max_y, y + pad);
  };
  for (const Table& t : problem.tables) {
    if (t.kind == TableKind::kRound) include(t.origin.x, t.origin.y, t.radius + 1.2);
  }
  for (const Seat& s : problem.seats) include(s.position.x, s.position.y, 1.2);
  if (first) include(0, 0, 2);

  std::ostringstream svg;
  // y is flipped so larger world-y is drawn upward
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << num(min_x) << " " << num(-max_y) << " " << num(max_x - min_x) << " "
      << num(max_y - min_y) << "\" width=\"640\" height=\""
      << num(640.0 * (max_y - min_y) / (max_x - min_x)) << "\">\n";
  svg << "<rect x=\"" << num(min_x) << "\" y=\"" << num(-max_y) << "\" width=\""
      << num(max_x - min_x) << "\" height=\"" << num(max_y - min_y)
      << "\" fill=\"#fdfcf8\"/>\n";

  for (const Table& t : problem.tables) {
    if (t.kind == TableKind::kRound) {
      svg << "<circle cx=\"" << num(t.origin.x) << "\" cy=\"" << num(-t.origin.y)
          << "\" r=\"" << num(t.radius) << "\" fill=\"#efe7d3\" stroke=\"#8a7a5c\" stroke-width=\"0.06\"/>\n";
    } else {
      const auto coords = layout_coordinates(t);
      svg << "<line x1=\"" << num(coords.front().x) << "\" y1=\"" << num(-coords.front().y)
          << "\" x2=\"" << num(coords.back().x) << "\" y2=\"" << num(-coords.back().y)
          << "\" stroke=\"#8a7a5c\" stroke-width=\"0.3\" stroke-linecap=\"round\"/>\n";
    }
    svg << "<text x=\"" << num(t.origin.x) << "\" y=\"" << num(-t.origin.y)
        << "\" font-size=\"0.32\" text-anchor=\"middle\" fill=\"#8a7a5c\">"
        << escape_xml(t.id) << "</text>\n";
  }

  for (const Seat& s : problem.seats) {
    const auto& guests = occupants[s.global_index];
    const bool overlap = guests.size() > 1;
    const char* fill = guests.empty() ? "#ffffff" : (overlap ? "#f6c1c1" : "#d7e4c9");
    const char* stroke = overlap ? "#c0392b" : "#5d6d50";
    svg << "<circle cx=\"" << num(s.position.x) << "\" cy=\"" << num(-s.position.y)
        << "\" r=\"0.28\" fill=\"" << fill << "\" stroke=\"" << stroke
        << "\" stroke-width=\"0.05\"/>\n";
    if (overlap) {
      svg << "<text x=\"" << num(s.position.x) << "\" y=\"" << num(-s.position.y + 0.11)
          << "\" font-size=\"0.34\" font-weight=\"bold\" text-anchor=\"middle\" "
             "fill=\"#c0392b\">!</text>\n";
    }
    double line = 0.42;
    for (int guest : guests) {
      svg << "<text x=\"" << num(s.position.x) << "\" y=\"" << num(-(s.position.y + line))
          << "\" font-size=\"0.3\" text-anchor=\"middle\" fill=\"#333333\">"
          << escape_xml(problem.guests[guest].id) << "</text>\n";
      line += 0.34;
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace seatcfn
