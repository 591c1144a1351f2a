#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "hornkit/hornkit.hpp"

#ifndef HORNKIT_TEST_DATA
#error "HORNKIT_TEST_DATA must point at the data directory"
#endif

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(HORNKIT_TEST_DATA) + "/" + name; }

inline hornkit::ImplicationSet sigma(const std::string& name) {
  std::ifstream in(path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  return hornkit::parse_implications(in);
}

inline hornkit::SetFamily family(const std::string& name) {
  std::ifstream in(path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  return hornkit::parse_family(in);
}

// Implications in "A -> B" lines over an existing universe.
inline hornkit::ImplicationSet implications(const hornkit::UniversePtr& u, const std::vector<std::string>& lines) {
  std::vector<hornkit::Implication> items;
  for (const auto& l : lines) items.push_back(hornkit::parse_implication(*u, l));
  return hornkit::ImplicationSet(u, std::move(items));
}

inline hornkit::SetFamily sets(const hornkit::UniversePtr& u, const std::vector<std::string>& lines) {
  std::vector<hornkit::AttrSet> out;
  for (const auto& l : lines) out.push_back(hornkit::parse_set(*u, l));
  return hornkit::SetFamily(u, std::move(out));
}

inline hornkit::AttrSet set(const hornkit::UniversePtr& u, const std::string& text) {
  return hornkit::parse_set(*u, text);
}

inline std::vector<std::string> rendered(const hornkit::SetFamily& f) {
  std::vector<std::string> out;
  for (const auto& s : hornkit::sorted_canonical(f.sets())) out.push_back(hornkit::render_set(f.universe(), s));
  return out;
}

inline std::vector<std::string> rendered(const hornkit::ImplicationSet& s) {
  std::vector<std::string> out;
  for (const auto& i : s) out.push_back(hornkit::render_implication(s.universe(), i));
  return out;
}

}  // namespace fixtures
