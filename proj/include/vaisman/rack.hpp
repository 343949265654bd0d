#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vaisman::rack {

using Element = std::size_t;
using Triple = std::array<Element, 3>;

/// Finite binary operation table, op(x, y) = x > y, on {0..n-1}.
///
/// Construction only checks that entries are in range; whether the table is
/// a rack is decided by `verify_rack`. `unit` is an optional declared unit.
class RackTable {
 public:
  RackTable(std::size_t n, std::vector<Element> flat, std::optional<Element> unit = std::nullopt);
  static RackTable from_rows(const std::vector<std::vector<Element>>& rows,
                             std::optional<Element> unit = std::nullopt);

  std::size_t size() const { return n_; }
  Element op(Element x, Element y) const { return flat_[x * n_ + y]; }
  const std::vector<Element>& flat() const { return flat_; }
  std::vector<std::vector<Element>> rows() const;
  const std::optional<Element>& unit() const { return unit_; }
  void set_unit(std::optional<Element> unit);

  /// Whether y -> x > y is a permutation, for every x.
  bool rows_bijective() const;
  bool row_bijective(Element x) const;

  friend bool operator==(const RackTable&, const RackTable&) = default;

 private:
  std::size_t n_;
  std::vector<Element> flat_;
  std::optional<Element> unit_;
};

/// Finite group given by its Cayley table.
class GroupTable {
 public:
  /// Throws std::invalid_argument unless the table is a group.
  GroupTable(std::size_t n, std::vector<Element> mul);

  std::size_t size() const { return n_; }
  Element mul(Element a, Element b) const { return mul_[a * n_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element identity() const { return id_; }

 private:
  std::size_t n_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  Element id_ = 0;
};

struct RackVerdict {
  bool rows_bijective = false;
  bool self_distributive = false;
  bool is_rack = false;
  bool is_quandle = false;
  bool is_pointed = false;
  /// Every element satisfying 1 > x = x and x > 1 = 1.
  std::vector<Element> units;
  /// Self-distributivity violations, capped at `kFailureCap`.
  std::vector<Triple> failing_triples;
  std::size_t failure_count = 0;
};

struct QybeVerdict {
  bool satisfies_qybe = false;
  bool rows_bijective = false;
  std::vector<Triple> failing_triples;
  std::size_t failure_count = 0;
};

inline constexpr std::size_t kFailureCap = 16;

RackVerdict verify_rack(const RackTable& t);

/// op(x, y) = x y x^{-1}, pointed at the group identity.
RackTable conjugation_rack(const GroupTable& g);

/// Set-theoretic R(x, y) = (x, x > y) acting on slots (i, j) of a triple.
Triple apply_r(const RackTable& t, std::size_t i, std::size_t j, Triple v);

/// Checks R12 R13 R23 = R23 R13 R12 on every triple. Runs even when some
/// row is not bijective; the verdict records that.
QybeVerdict yang_baxter_check(const RackTable& t);

/// Lexicographically smallest relabeling of the table, with the smallest
/// unit (if any) recorded.
RackTable canonical_form(const RackTable& t);

inline constexpr std::size_t kMaxEnumerationSize = 4;

/// All racks on n elements up to isomorphism, in canonical order. With
/// `pointed`, only racks that have a unit. Throws std::out_of_range for
/// n = 0 or n > kMaxEnumerationSize.
std::vector<RackTable> enumerate_racks(std::size_t n, bool pointed);

/// Every table on n elements whose rows are permutations ((n!)^n tables).
std::vector<RackTable> all_bijective_row_tables(std::size_t n);

GroupTable cyclic_group(std::size_t n);
GroupTable klein_four_group();
GroupTable symmetric_group_s3();

struct NamedGroup {
  std::string name;
  GroupTable group;
};
std::vector<NamedGroup> bundled_groups();

/// op(i, j) = (2i - j) mod n.
RackTable dihedral_quandle(std::size_t n);
/// op(x, y) = y.
RackTable trivial_rack(std::size_t n);

}  // namespace vaisman::rack
