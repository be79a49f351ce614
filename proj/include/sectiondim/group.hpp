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

#ifndef SECTIONDIM_GROUP_HPP
#define SECTIONDIM_GROUP_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sectiondim {

// Normal forms. Each preset uses exactly one alternative of GroupElement and
// two elements are equal iff their normal forms are structurally equal. The
// defaulted ordering (field order, lexicographic) is the tie-break used after
// word length wherever elements index rows and columns.

/// Element of Z^d as an integer vector.
struct ZnElement {
  std::vector<std::int64_t> coords;
  auto operator<=>(const ZnElement&) const = default;
};

/// Upper unitriangular integer matrix [[1,a,c],[0,1,b],[0,0,1]].
struct HeisElement {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  auto operator<=>(const HeisElement&) const = default;
};

/// (m; eps) in Z x Z/2.
struct ZxZ2Element {
  std::int64_t m = 0;
  std::uint8_t eps = 0;
  auto operator<=>(const ZxZ2Element&) const = default;
};

/// Lamplighter element: set of lit lamps (sorted, no repeats) and the
/// lighter position.
struct LampElement {
  std::vector<std::int64_t> lamps;
  std::int64_t pos = 0;
  auto operator<=>(const LampElement&) const = default;
};

using GroupElement =
    std::variant<ZnElement, HeisElement, ZxZ2Element, LampElement>;

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

enum class Preset { FreeAbelian, Heisenberg, ZCrossZ2, Lamplighter };

/// One of the preset finitely generated groups together with its fixed
/// symmetric generating set.
///
///   z:d   Z^d, generators +-e_1, ..., +-e_d
///   heis  discrete Heisenberg group, generators x^{+-1}, y^{+-1} with
///         x = (1,0,0), y = (0,1,0)
///   zxz2  Z x Z/2, generators s^{+-1} = (+-1;0) and the involution t = (0;1)
///   lamp  Z/2 wr Z, generators a = ({0};0) (involution), m^{+-1} = ({};+-1)
class GroupSpec {
 public:
  static GroupSpec free_abelian(int d);
  static GroupSpec heisenberg();
  static GroupSpec z_cross_z2();
  static GroupSpec lamplighter();

  /// Parses `z:d`, `heis`, `zxz2` or `lamp`.
  static GroupSpec parse(std::string_view text);

  Preset preset() const noexcept { return preset_; }
  /// d for free-abelian presets, 0 otherwise.
  int rank() const noexcept { return rank_; }
  const std::vector<GroupElement>& generators() const noexcept {
    return generators_;
  }
  /// The spec string accepted by parse().
  std::string name() const;

  /// True if g has the shape of this preset's normal form.
  bool valid(const GroupElement& g) const noexcept;

  bool operator==(const GroupSpec& other) const noexcept {
    return preset_ == other.preset_ && rank_ == other.rank_;
  }

 private:
  GroupSpec(Preset preset, int rank);

  Preset preset_;
  int rank_;
  std::vector<GroupElement> generators_;
};

GroupElement identity(const GroupSpec& spec);

/// Group law. Throws DomainError when either operand does not match the
/// preset's normal-form shape.
GroupElement multiply(const GroupSpec& spec, const GroupElement& a,
                      const GroupElement& b);

GroupElement inverse(const GroupSpec& spec, const GroupElement& a);

/// Element literals: `(1,-2)` for Z^d, `(a,b,c)` for heis, `(m;0)` for zxz2,
/// `({0,2};3)` for lamp. Whitespace is ignored.
std::string format_element(const GroupElement& g);
GroupElement parse_element(const GroupSpec& spec, std::string_view text);

}  // namespace sectiondim

#endif  // SECTIONDIM_GROUP_HPP
