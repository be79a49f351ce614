// Copyright 2026 The sectiondim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sectiondim/cayley.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "sectiondim/errors.hpp"

namespace sectiondim {

namespace {

// Layered breadth-first search from the identity. Layer k holds exactly the
// elements of word length k; words are extended on the right, g -> g s.
class Sweep {
 public:
  Sweep(const GroupSpec& spec, std::size_t cap) : spec_(spec), cap_(cap) {
    GroupElement e = identity(spec);
    seen_.insert(e);
    layer_.push_back(std::move(e));
  }

  const std::vector<GroupElement>& layer() const { return layer_; }
  std::size_t depth() const { return depth_; }

  /// Advances to the next layer; returns false when the group is exhausted.
  bool advance() {
    std::vector<GroupElement> next;
    for (const auto& g : layer_) {
      for (const auto& s : spec_.generators()) {
        GroupElement h = multiply(spec_, g, s);
        if (seen_.insert(h).second) {
          if (seen_.size() > cap_) {
            throw CapExceeded("Cayley enumeration for " + spec_.name() +
                              " exceeded the cap of " + std::to_string(cap_) +
                              " elements at radius " +
                              std::to_string(depth_ + 1));
          }
          next.push_back(std::move(h));
        }
      }
    }
    layer_ = std::move(next);
    ++depth_;
    return !layer_.empty();
  }

 private:
  const GroupSpec& spec_;
  std::size_t cap_;
  std::size_t depth_ = 0;
  std::unordered_set<GroupElement, ElementHash> seen_;
  std::vector<GroupElement> layer_;
};

}  // namespace

Ball ball(const GroupSpec& spec, std::size_t radius, std::size_t cap) {
  Ball out;
  out.radius = radius;
  Sweep sweep(spec, cap);
  while (true) {
    std::vector<GroupElement> layer = sweep.layer();
    std::sort(layer.begin(), layer.end());
    for (auto& g : layer) out.entries.push_back({std::move(g), sweep.depth()});
    if (sweep.depth() == radius || !sweep.advance()) break;
  }
  return out;
}

std::optional<std::size_t> word_length(const GroupSpec& spec,
                                       const GroupElement& g, std::size_t r_max,
                                       std::size_t cap) {
  if (!spec.valid(g)) {
    throw DomainError("word_length: element shape does not match " +
                      spec.name());
  }
  Sweep sweep(spec, cap);
  while (true) {
    const auto& layer = sweep.layer();
    if (std::find(layer.begin(), layer.end(), g) != layer.end()) {
      return sweep.depth();
    }
    if (sweep.depth() == r_max || !sweep.advance()) return std::nullopt;
  }
}

std::vector<std::size_t> word_lengths(const GroupSpec& spec,
                                      std::span<const GroupElement> targets,
                                      std::size_t cap,
                                      std::size_t max_radius) {
  std::unordered_map<GroupElement, std::vector<std::size_t>, ElementHash>
      pending;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!spec.valid(targets[i])) {
      throw DomainError("word_lengths: element shape does not match " +
                        spec.name());
    }
    pending[targets[i]].push_back(i);
  }
  std::vector<std::size_t> out(targets.size(), 0);
  Sweep sweep(spec, cap);
  while (!pending.empty()) {
    for (const auto& g : sweep.layer()) {
      auto it = pending.find(g);
      if (it == pending.end()) continue;
      for (auto i : it->second) out[i] = sweep.depth();
      pending.erase(it);
    }
    if (pending.empty()) break;
    if (sweep.depth() == max_radius) {
      throw CapExceeded("element " + format_element(pending.begin()->first) +
                        " is longer than the radius limit " +
                        std::to_string(max_radius));
    }
    if (!sweep.advance()) {
      // Unreachable for generating sets; kept so a bad target cannot spin.
      throw DomainError("word_lengths: element not reachable from identity");
    }
  }
  return out;
}

}  // namespace sectiondim
