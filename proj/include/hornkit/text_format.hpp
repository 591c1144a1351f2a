#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hornkit/implication.hpp"
#include "hornkit/set_family.hpp"
#include "hornkit/universe.hpp"

// Plain-text formats.
//
//   # comment
//   elements: a b c d
//   a b -> c        (implication file; either side may be empty)
//   a c             (family file; "{}" denotes the empty set)
//
// Blank lines and text after '#' are ignored.
namespace hornkit {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline std::string strip_comment(const std::string& line) {
  auto p = line.find('#');
  return p == std::string::npos ? line : line.substr(0, p);
}

struct Lines {
  UniversePtr universe;
  std::vector<std::pair<std::size_t, std::string>> body;  // line number, content
};

inline Lines read_lines(std::istream& in) {
  Lines r;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::string content = strip_comment(line);
    if (split_ws(content).empty()) continue;
    if (!r.universe) {
      auto p = content.find("elements:");
      if (p == std::string::npos || !split_ws(content.substr(0, p)).empty())
        throw Error(ErrorCode::malformed_input, "line " + std::to_string(no) + ": expected 'elements:' declaration");
      r.universe = Universe::make(split_ws(content.substr(p + 9)));
      continue;
    }
    r.body.emplace_back(no, content);
  }
  if (!r.universe) throw Error(ErrorCode::empty_declaration, "no 'elements:' line");
  return r;
}

inline AttrSet parse_labels(const Universe& u, const std::vector<std::string>& tokens) {
  AttrSet s(u.size());
  for (const auto& t : tokens) {
    if (t == "{}") continue;
    s.insert(u.position(t));
  }
  return s;
}

}  // namespace detail

// Parses a set such as "1 2 5" or "{}" against a universe.
inline AttrSet parse_set(const Universe& u, const std::string& text) {
  return detail::parse_labels(u, detail::split_ws(text));
}

inline Implication parse_implication(const Universe& u, const std::string& text) {
  auto p = text.find("->");
  if (p == std::string::npos) throw Error(ErrorCode::missing_arrow, "'" + text + "'");
  if (text.find("->", p + 2) != std::string::npos)
    throw Error(ErrorCode::malformed_input, "more than one arrow in '" + text + "'");
  return {parse_set(u, text.substr(0, p)), parse_set(u, text.substr(p + 2))};
}

inline ImplicationSet parse_implications(std::istream& in) {
  auto lines = detail::read_lines(in);
  std::vector<Implication> items;
  for (const auto& [no, content] : lines.body) {
    try {
      items.push_back(parse_implication(*lines.universe, content));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(no) + ": " + e.what());
    }
  }
  return ImplicationSet(lines.universe, std::move(items));
}

inline ImplicationSet parse_implications(const std::string& text) {
  std::istringstream in(text);
  return parse_implications(in);
}

inline SetFamily parse_family(std::istream& in) {
  auto lines = detail::read_lines(in);
  std::vector<AttrSet> sets;
  for (const auto& [no, content] : lines.body) {
    if (content.find("->") != std::string::npos)
      throw Error(ErrorCode::malformed_input, "line " + std::to_string(no) + ": implication in a family file");
    try {
      sets.push_back(parse_set(*lines.universe, content));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(no) + ": " + e.what());
    }
  }
  return SetFamily(lines.universe, std::move(sets));
}

inline SetFamily parse_family(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in);
}

inline std::string render_set(const Universe& u, const AttrSet& s) {
  std::string out;
  s.for_each([&](std::size_t e) {
    if (!out.empty()) out += ' ';
    out += u.label(e);
  });
  return out.empty() ? "{}" : out;
}

inline std::string render_implication(const Universe& u, const Implication& i) {
  std::string out;
  i.premise.for_each([&](std::size_t e) { out += u.label(e) + ' '; });
  out += "->";
  i.conclusion.for_each([&](std::size_t e) { out += ' ' + u.label(e); });
  return out;
}

inline std::string render_universe(const Universe& u) {
  std::string out = "elements:";
  for (const auto& l : u.labels()) out += ' ' + l;
  return out;
}

// File form: declaration line followed by one implication per line, input order.
inline std::string render_implications(const ImplicationSet& sigma) {
  std::string out = render_universe(sigma.universe()) + '\n';
  for (const auto& i : sigma) out += render_implication(sigma.universe(), i) + '\n';
  return out;
}

inline std::string render_family(const SetFamily& f) {
  std::string out = render_universe(f.universe()) + '\n';
  for (const auto& s : f) out += render_set(f.universe(), s) + '\n';
  return out;
}

}  // namespace hornkit
