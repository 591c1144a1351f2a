#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hornkit/attr_set.hpp"
#include "hornkit/error.hpp"

namespace hornkit {

// Ordered finite ground set; labels map to positions 0..n-1.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw Error(ErrorCode::empty_declaration, "no elements declared");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw Error(ErrorCode::malformed_input, "empty label");
      if (!index_.emplace(labels_[i], i).second) throw Error(ErrorCode::duplicate_label, labels_[i]);
    }
  }

  // Elements labelled 1..n.
  static std::shared_ptr<const Universe> numbered(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return std::make_shared<const Universe>(std::move(labels));
  }

  static std::shared_ptr<const Universe> make(std::vector<std::string> labels) {
    return std::make_shared<const Universe>(std::move(labels));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const std::string& label(std::size_t pos) const {
    if (pos >= labels_.size()) throw Error(ErrorCode::element_out_of_range, std::to_string(pos));
    return labels_[pos];
  }

  std::optional<std::size_t> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t position(const std::string& label) const {
    auto p = find(label);
    if (!p) throw Error(ErrorCode::unknown_label, label);
    return *p;
  }

  AttrSet empty_set() const { return AttrSet(size()); }
  AttrSet full_set() const { return AttrSet::full(size()); }

  AttrSet set_of(const std::vector<std::string>& labels) const {
    AttrSet s(size());
    for (const auto& l : labels) s.insert(position(l));
    return s;
  }

  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (!same_universe(a, b)) throw Error(ErrorCode::universe_mismatch, "operands declare different elements");
}

inline void require_width(const UniversePtr& u, const AttrSet& s) {
  if (s.width() != u->size())
    throw Error(ErrorCode::universe_mismatch,
                "set of width " + std::to_string(s.width()) + " against " + std::to_string(u->size()) + " elements");
}

}  // namespace hornkit
