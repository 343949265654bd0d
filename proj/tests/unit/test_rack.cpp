#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "vaisman/rack.hpp"

using namespace vaisman::rack;

namespace {

// ---- naive oracle: every n^(n^2) table, pairwise isomorphism test ----

using Table = std::vector<std::size_t>;

bool naive_is_rack(const Table& t, std::size_t n) {
  auto op = [&](std::size_t x, std::size_t y) { return t[x * n + y]; };
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<int> hits(n, 0);
    for (std::size_t y = 0; y < n; ++y) ++hits[op(x, y)];
    for (int h : hits) {
      if (h != 1) return false;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (op(x, op(y, z)) != op(op(x, y), op(x, z))) return false;
      }
    }
  }
  return true;
}

bool naive_has_unit(const Table& t, std::size_t n) {
  for (std::size_t u = 0; u < n; ++u) {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x) ok = ok && t[u * n + x] == x && t[x * n + u] == u;
    if (ok) return true;
  }
  return false;
}

bool isomorphic(const Table& a, const Table& b, std::size_t n) {
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) ok = s[a[x * n + y]] == b[s[x] * n + s[y]];
    }
    if (ok) return true;
  } while (std::next_permutation(s.begin(), s.end()));
  return false;
}

std::size_t naive_count(std::size_t n, bool pointed) {
  std::vector<Table> reps;
  Table t(n * n, 0);
  for (;;) {
    if (naive_is_rack(t, n) && (!pointed || naive_has_unit(t, n))) {
      const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Table& r) { return isomorphic(r, t, n); });
      if (!seen) reps.push_back(t);
    }
    std::size_t k = 0;
    while (k < t.size() && ++t[k] == n) t[k++] = 0;
    if (k == t.size()) break;
  }
  return reps.size();
}

RackTable perturbed_dihedral3() {
  auto rows = dihedral_quandle(3).rows();
  std::swap(rows[0][1], rows[0][2]);  // row 0 stays a permutation
  return RackTable::from_rows(rows);
}

}  // namespace

TEST_CASE("table construction validates entries") {
  CHECK_THROWS_AS(RackTable(2, {0, 1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(RackTable(2, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(RackTable(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(RackTable(2, {0, 1, 1, 0}, 5), std::invalid_argument);
  CHECK_THROWS_AS(RackTable::from_rows({{0, 1}, {1}}), std::invalid_argument);
  const RackTable t = RackTable::from_rows({{0, 1}, {1, 0}});
  CHECK(t.op(1, 0) == 1);
  CHECK(t.rows_bijective());
  CHECK_FALSE(RackTable::from_rows({{0, 0}, {1, 0}}).rows_bijective());
}

TEST_CASE("trivial rack") {
  const RackTable t = trivial_rack(3);
  const RackVerdict v = verify_rack(t);
  CHECK(v.is_rack);
  CHECK(v.is_quandle);
  CHECK(v.units == std::vector<Element>{0, 1, 2});
  for (Element u = 0; u < 3; ++u) {
    RackTable pointed = t;
    pointed.set_unit(u);
    CHECK(verify_rack(pointed).is_pointed);
  }
}

TEST_CASE("dihedral quandle on three elements") {
  const RackTable t = dihedral_quandle(3);
  CHECK(t.rows() == std::vector<std::vector<Element>>{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  const RackVerdict v = verify_rack(t);
  CHECK(v.is_rack);
  CHECK(v.is_quandle);
  CHECK(v.failing_triples.empty());
  CHECK_FALSE(v.is_pointed);
  CHECK(yang_baxter_check(t).satisfies_qybe);
}

TEST_CASE("a perturbed dihedral table is not a rack") {
  const RackTable t = perturbed_dihedral3();
  CHECK(t.rows_bijective());
  const RackVerdict v = verify_rack(t);
  CHECK_FALSE(v.is_rack);
  CHECK_FALSE(v.self_distributive);
  REQUIRE_FALSE(v.failing_triples.empty());
  for (const auto& [x, y, z] : v.failing_triples) {
    CHECK(t.op(x, t.op(y, z)) != t.op(t.op(x, y), t.op(x, z)));
  }
  CHECK(v.failure_count >= v.failing_triples.size());
  CHECK_FALSE(yang_baxter_check(t).satisfies_qybe);
}

TEST_CASE("failing triples are capped") {
  // op(x, y) = x + y mod 4 fails self-distributivity whenever x != 0.
  std::vector<Element> flat(16);
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) flat[x * 4 + y] = (x + y) % 4;
  }
  const RackVerdict v = verify_rack(RackTable(4, flat));
  CHECK(v.rows_bijective);
  CHECK(v.failing_triples.size() == kFailureCap);
  CHECK(v.failure_count == 48);
}

TEST_CASE("QYBE runs on tables with non-bijective rows") {
  const RackTable t(4, std::vector<Element>(16, 1));
  const QybeVerdict q = yang_baxter_check(t);
  CHECK_FALSE(q.rows_bijective);
  CHECK(q.satisfies_qybe);
  CHECK_FALSE(verify_rack(t).is_rack);
  CHECK(verify_rack(t).self_distributive);
}

TEST_CASE("group tables") {
  CHECK_THROWS_AS(GroupTable(2, {0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 1}), std::invalid_argument);
  const GroupTable s3 = symmetric_group_s3();
  CHECK(s3.size() == 6);
  for (Element a = 0; a < 6; ++a) {
    CHECK(s3.mul(a, s3.inv(a)) == s3.identity());
    CHECK(s3.mul(s3.identity(), a) == a);
  }
  bool abelian = true;
  for (Element a = 0; a < 6; ++a) {
    for (Element b = 0; b < 6; ++b) abelian = abelian && s3.mul(a, b) == s3.mul(b, a);
  }
  CHECK_FALSE(abelian);
}

TEST_CASE("conjugation racks of the bundled groups") {
  const auto groups = bundled_groups();
  CHECK(groups.size() == 5);
  for (const auto& [name, g] : groups) {
    CAPTURE(name);
    const RackTable t = conjugation_rack(g);
    const RackVerdict v = verify_rack(t);
    CHECK(v.is_rack);
    CHECK(v.is_quandle);
    CHECK(v.is_pointed);
    REQUIRE(t.unit().has_value());
    CHECK(*t.unit() == g.identity());
    for (Element y = 0; y < g.size(); ++y) CHECK(t.op(g.identity(), y) == y);
    for (Element x = 0; x < g.size(); ++x) CHECK(t.row_bijective(x));
  }
  CHECK(conjugation_rack(cyclic_group(3)).flat() == trivial_rack(3).flat());
  // S3 conjugation has nontrivial rows.
  const RackTable s3 = conjugation_rack(symmetric_group_s3());
  CHECK(s3.flat() != trivial_rack(6).flat());
}

TEST_CASE("QYBE and self-distributivity agree on every bijective-row table") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t racks = 0;
    const auto tables = all_bijective_row_tables(n);
    std::size_t factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) factorial *= i;
    std::size_t expected = 1;
    for (std::size_t k = 0; k < n; ++k) expected *= factorial;
    CHECK(tables.size() == expected);
    for (const auto& t : tables) {
      const bool sd = verify_rack(t).self_distributive;
      CHECK(yang_baxter_check(t).satisfies_qybe == sd);
      if (sd) ++racks;
    }
    CHECK(racks > 0);
  }
}

TEST_CASE("the R-matrix acts on the named slots") {
  const RackTable t = dihedral_quandle(3);
  CHECK(apply_r(t, 0, 1, {1, 2, 0}) == Triple{1, t.op(1, 2), 0});
  CHECK(apply_r(t, 1, 2, {1, 2, 0}) == Triple{1, 2, t.op(2, 0)});
  CHECK(apply_r(t, 0, 2, {1, 2, 0}) == Triple{1, 2, t.op(1, 0)});
}

TEST_CASE("canonical forms identify relabelings") {
  const RackTable t = conjugation_rack(symmetric_group_s3());
  const RackTable c = canonical_form(t);
  // relabel by a transposition of 0 and 5
  std::vector<Element> s{5, 1, 2, 3, 4, 0};
  std::vector<Element> flat(36);
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) flat[s[x] * 6 + s[y]] = s[t.op(x, y)];
  }
  CHECK(canonical_form(RackTable(6, flat)).flat() == c.flat());
  CHECK(canonical_form(c) == c);
}

TEST_CASE("enumeration agrees with the naive enumerator") {
  CHECK(enumerate_racks(1, false).size() == 1);
  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(enumerate_racks(n, false).size() == naive_count(n, false));
    CHECK(enumerate_racks(n, true).size() == naive_count(n, true));
  }
  CHECK_THROWS_AS(enumerate_racks(0, false), std::out_of_range);
  CHECK_THROWS_AS(enumerate_racks(5, false), std::out_of_range);
}

TEST_CASE("enumeration at n = 4 is stable and sound") {
  const auto a = enumerate_racks(4, false);
  const auto b = enumerate_racks(4, false);
  CHECK(a == b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(verify_rack(a[i]).is_rack);
    CHECK(canonical_form(a[i]) == a[i]);
    for (std::size_t j = i + 1; j < a.size(); ++j) CHECK(a[i].flat() < a[j].flat());
  }
  // Every n = 4 conjugation rack (Z4, V4) appears.
  for (const auto& g : {cyclic_group(4), klein_four_group()}) {
    const RackTable c = canonical_form(conjugation_rack(g));
    CHECK(std::any_of(a.begin(), a.end(), [&](const RackTable& r) { return r.flat() == c.flat(); }));
  }
  const auto pointed = enumerate_racks(4, true);
  for (const auto& t : pointed) CHECK(verify_rack(t).is_pointed);
  CHECK(pointed.size() <= a.size());
}
