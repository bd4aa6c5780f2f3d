#include "seatcfn/problem_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "seatcfn/format.hpp"

namespace seatcfn {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

struct Sections {
  std::vector<Line> tables, guests, assignments, restraints, constraints;
  int guests_header_line = 0;
};

Sections split_sections(std::string_view text) {
  Sections out;
  std::vector<Line>* current = nullptr;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++number;

    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);

    std::vector<std::string> tokens;
    std::istringstream iss{std::string(raw)};
    for (std::string tok; iss >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) continue;

    if (tokens.front().front() == '[') {
      if (tokens.size() != 1) throw ParseError(number, "unexpected tokens after section header");
      const std::string& header = tokens.front();
      if (header == "[tables]") current = &out.tables;
      else if (header == "[guests]") { current = &out.guests; out.guests_header_line = number; }
      else if (header == "[assignments]") current = &out.assignments;
      else if (header == "[restraints]") current = &out.restraints;
      else if (header == "[constraints]") current = &out.constraints;
      else throw ParseError(number, "unknown section " + header);
      continue;
    }
    if (current == nullptr) throw ParseError(number, "content before any section header");
    current->push_back({number, std::move(tokens)});
  }
  return out;
}

// key=value fields, each required key exactly once, no extras.
std::map<std::string, std::string> parse_kv(const Line& line, std::size_t first_token,
                                            const std::vector<std::string>& keys) {
  std::map<std::string, std::string> out;
  for (std::size_t i = first_token; i < line.tokens.size(); ++i) {
    const std::string& tok = line.tokens[i];
    const std::size_t eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= tok.size())
      throw ParseError(line.number, "expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ParseError(line.number, "unknown parameter '" + key + "'");
    if (!out.emplace(key, tok.substr(eq + 1)).second)
      throw ParseError(line.number, "duplicate parameter '" + key + "'");
  }
  for (const std::string& key : keys)
    if (!out.count(key)) throw ParseError(line.number, "missing parameter '" + key + "'");
  return out;
}

double kv_double(const Line& line, const std::map<std::string, std::string>& kv,
                 const std::string& key) {
  const auto v = parse_double(kv.at(key));
  if (!v) throw ParseError(line.number, "bad number for '" + key + "'");
  return *v;
}

int kv_int(const Line& line, const std::map<std::string, std::string>& kv,
           const std::string& key) {
  const auto v = parse_int(kv.at(key));
  if (!v) throw ParseError(line.number, "bad integer for '" + key + "'");
  return *v;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    out.push_back(s.substr(pos, comma == std::string::npos ? s.size() - pos : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

SeatingProblem parse_problem(std::string_view text) {
  const Sections sec = split_sections(text);

  std::vector<Table> tables;
  std::unordered_map<std::string, int> table_of;      // id -> table index
  std::unordered_map<std::string, int> table_base;    // id -> first global seat
  int seat_total = 0;
  for (const Line& line : sec.tables) {
    const std::string& kind = line.tokens[0];
    if (kind != "round" && kind != "row")
      throw ParseError(line.number, "expected 'round' or 'row', got '" + kind + "'");
    if (line.tokens.size() < 2) throw ParseError(line.number, "missing table id");
    const std::string& id = line.tokens[1];
    if (table_of.count(id)) throw ParseError(line.number, "duplicate table id '" + id + "'");
    try {
      if (kind == "round") {
        const auto kv = parse_kv(line, 2, {"cx", "cy", "radius", "seats"});
        tables.push_back(Table::round(id, {kv_double(line, kv, "cx"), kv_double(line, kv, "cy")},
                                      kv_double(line, kv, "radius"), kv_int(line, kv, "seats")));
      } else {
        const auto kv = parse_kv(line, 2, {"cx", "cy", "spacing", "angle_deg", "seats"});
        tables.push_back(Table::row(id, {kv_double(line, kv, "cx"), kv_double(line, kv, "cy")},
                                    kv_double(line, kv, "spacing"),
                                    kv_double(line, kv, "angle_deg"), kv_int(line, kv, "seats")));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
    table_of[id] = static_cast<int>(tables.size()) - 1;
    table_base[id] = seat_total;
    seat_total += tables.back().seat_count;
  }

  std::vector<std::string> guest_ids;
  std::unordered_map<std::string, int> guest_of;
  for (const Line& line : sec.guests) {
    if (line.tokens[0] != "guest" || line.tokens.size() != 2)
      throw ParseError(line.number, "expected 'guest <id>'");
    const std::string& id = line.tokens[1];
    if (!guest_of.emplace(id, static_cast<int>(guest_ids.size())).second)
      throw ParseError(line.number, "duplicate guest id '" + id + "'");
    guest_ids.push_back(id);
  }
  if (static_cast<int>(guest_ids.size()) > seat_total)
    throw ParseError(sec.guests_header_line,
                     "more guests (" + std::to_string(guest_ids.size()) + ") than seats (" +
                         std::to_string(seat_total) + ")");

  auto lookup_guest = [&](const Line& line, const std::string& id) {
    const auto it = guest_of.find(id);
    if (it == guest_of.end()) throw ParseError(line.number, "unknown guest '" + id + "'");
    return it->second;
  };
  auto lookup_seat = [&](const Line& line, const std::string& ref) {
    const std::size_t colon = ref.find(':');
    if (colon == std::string::npos)
      throw ParseError(line.number, "expected <table>:<seat>, got '" + ref + "'");
    const std::string tid = ref.substr(0, colon);
    const auto tit = table_of.find(tid);
    if (tit == table_of.end()) throw ParseError(line.number, "unknown table '" + tid + "'");
    const auto idx = parse_int(ref.substr(colon + 1));
    if (!idx) throw ParseError(line.number, "bad seat index in '" + ref + "'");
    if (*idx < 0 || *idx >= tables[tit->second].seat_count)
      throw ParseError(line.number, "seat index out of range in '" + ref + "'");
    return table_base.at(tid) + *idx;
  };

  std::map<int, int> fixed;
  std::set<int> fixed_seats;
  for (const Line& line : sec.assignments) {
    if (line.tokens[0] != "assign" || line.tokens.size() != 3)
      throw ParseError(line.number, "expected 'assign <guest> <table>:<seat>'");
    const int g = lookup_guest(line, line.tokens[1]);
    const int s = lookup_seat(line, line.tokens[2]);
    if (fixed.count(g))
      throw ParseError(line.number, "guest '" + line.tokens[1] + "' assigned twice");
    if (!fixed_seats.insert(s).second)
      throw ParseError(line.number, "seat '" + line.tokens[2] + "' assigned twice");
    fixed[g] = s;
  }

  // Repeated restrict lines for one guest intersect.
  std::map<int, std::set<int>> restraints;
  for (const Line& line : sec.restraints) {
    if (line.tokens[0] != "restrict" || line.tokens.size() != 4)
      throw ParseError(line.number, "expected 'restrict <guest> tables|seats <list>'");
    const int g = lookup_guest(line, line.tokens[1]);
    std::set<int> allowed;
    if (line.tokens[2] == "tables") {
      for (const std::string& tid : split_commas(line.tokens[3])) {
        const auto tit = table_of.find(tid);
        if (tit == table_of.end()) throw ParseError(line.number, "unknown table '" + tid + "'");
        const int base = table_base.at(tid);
        for (int k = 0; k < tables[tit->second].seat_count; ++k) allowed.insert(base + k);
      }
    } else if (line.tokens[2] == "seats") {
      for (const std::string& ref : split_commas(line.tokens[3])) allowed.insert(lookup_seat(line, ref));
    } else {
      throw ParseError(line.number, "expected 'tables' or 'seats', got '" + line.tokens[2] + "'");
    }
    const auto it = restraints.find(g);
    if (it == restraints.end()) {
      restraints.emplace(g, std::move(allowed));
    } else {
      std::set<int> inter;
      std::set_intersection(it->second.begin(), it->second.end(), allowed.begin(), allowed.end(),
                            std::inserter(inter, inter.begin()));
      it->second = std::move(inter);
    }
  }

  std::vector<PairConstraint> constraints;
  double overlap_penalty = kDefaultOverlapPenalty;
  bool overlap_seen = false;
  for (const Line& line : sec.constraints) {
    const std::string& kind = line.tokens[0];
    if (kind == "overlap_penalty") {
      if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'overlap_penalty <value>'");
      if (overlap_seen) throw ParseError(line.number, "overlap_penalty given twice");
      const auto v = parse_double(line.tokens[1]);
      if (!v) throw ParseError(line.number, "bad number '" + line.tokens[1] + "'");
      if (!(*v > 0.0)) throw ParseError(line.number, "overlap_penalty must be > 0");
      overlap_penalty = *v;
      overlap_seen = true;
      continue;
    }
    if (kind == "adjacent" || kind == "same_table") {
      if (line.tokens.size() != 4)
        throw ParseError(line.number, "expected '" + kind + " <g1> <g2> <value>'");
      const int g0 = lookup_guest(line, line.tokens[1]);
      const int g1 = lookup_guest(line, line.tokens[2]);
      if (g0 == g1) throw ParseError(line.number, "constraint needs two distinct guests");
      const auto v = parse_double(line.tokens[3]);
      if (!v) throw ParseError(line.number, "bad number '" + line.tokens[3] + "'");
      constraints.push_back({kind == "adjacent" ? ConstraintKind::kAdjacent
                                                : ConstraintKind::kSameTable,
                             g0, g1, *v, 0.0});
      continue;
    }
    if (kind == "proximity") {
      if (line.tokens.size() != 5)
        throw ParseError(line.number, "expected 'proximity <g1> <g2> p=<value> lambda=<value>'");
      const int g0 = lookup_guest(line, line.tokens[1]);
      const int g1 = lookup_guest(line, line.tokens[2]);
      if (g0 == g1) throw ParseError(line.number, "constraint needs two distinct guests");
      const auto kv = parse_kv(line, 3, {"p", "lambda"});
      const double lambda = kv_double(line, kv, "lambda");
      if (!(lambda > 0.0)) throw ParseError(line.number, "lambda must be > 0");
      constraints.push_back({ConstraintKind::kProximity, g0, g1, kv_double(line, kv, "p"), lambda});
      continue;
    }
    throw ParseError(line.number, "unknown constraint '" + kind + "'");
  }

  try {
    return SeatingProblem::build(std::move(tables), std::move(guest_ids), std::move(fixed),
                                 std::move(restraints), std::move(constraints), overlap_penalty);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

SeatingProblem load_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open problem file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string serialize_problem(const SeatingProblem& p) {
  std::ostringstream out;
  out << "[tables]\n";
  for (const Table& t : p.tables) {
    if (t.kind == TableKind::kRound) {
      out << "round " << t.id << " cx=" << format_double(t.origin.x)
          << " cy=" << format_double(t.origin.y) << " radius=" << format_double(t.radius)
          << " seats=" << t.seat_count << "\n";
    } else {
      out << "row " << t.id << " cx=" << format_double(t.origin.x)
          << " cy=" << format_double(t.origin.y) << " spacing=" << format_double(t.spacing)
          << " angle_deg=" << format_double(t.angle_deg) << " seats=" << t.seat_count << "\n";
    }
  }

  out << "\n[guests]\n";
  for (const Guest& g : p.guests) out << "guest " << g.id << "\n";

  auto seat_ref = [&](int s) {
    return p.seats[s].table_id + ":" + std::to_string(p.seats[s].index_in_table);
  };

  if (!p.fixed_assignments.empty()) {
    out << "\n[assignments]\n";
    for (const auto& [g, s] : p.fixed_assignments)
      out << "assign " << p.guests[g].id << " " << seat_ref(s) << "\n";
  }

  if (!p.restraints.empty()) {
    out << "\n[restraints]\n";
    for (const auto& [g, seats] : p.restraints) {
      out << "restrict " << p.guests[g].id << " seats ";
      bool first = true;
      for (int s : seats) {
        if (!first) out << ",";
        out << seat_ref(s);
        first = false;
      }
      out << "\n";
    }
  }

  out << "\n[constraints]\n";
  out << "overlap_penalty " << format_double(p.overlap_penalty) << "\n";
  for (const PairConstraint& c : p.constraints) {
    const std::string& id0 = p.guests[c.guest0].id;
    const std::string& id1 = p.guests[c.guest1].id;
    switch (c.kind) {
      case ConstraintKind::kAdjacent:
        out << "adjacent " << id0 << " " << id1 << " " << format_double(c.penalty) << "\n";
        break;
      case ConstraintKind::kSameTable:
        out << "same_table " << id0 << " " << id1 << " " << format_double(c.penalty) << "\n";
        break;
      case ConstraintKind::kProximity:
        out << "proximity " << id0 << " " << id1 << " p=" << format_double(c.penalty)
            << " lambda=" << format_double(c.lambda) << "\n";
        break;
    }
  }
  return out.str();
}

}  // namespace seatcfn
