#include "vaisman/rack.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace vaisman::rack {

RackTable::RackTable(std::size_t n, std::vector<Element> flat, std::optional<Element> unit)
    : n_(n), flat_(std::move(flat)) {
  if (n == 0) throw std::invalid_argument("rack table must have at least one element");
  if (flat_.size() != n * n) throw std::invalid_argument("rack table must be n x n");
  for (std::size_t k = 0; k < flat_.size(); ++k) {
    if (flat_[k] >= n) {
      throw std::invalid_argument("rack table entry op[" + std::to_string(k / n) + "][" +
                                  std::to_string(k % n) + "] = " + std::to_string(flat_[k]) +
                                  " out of range");
    }
  }
  set_unit(unit);
}

RackTable RackTable::from_rows(const std::vector<std::vector<Element>>& rows,
                               std::optional<Element> unit) {
  std::vector<Element> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw std::invalid_argument("rack table must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return RackTable(rows.size(), std::move(flat), unit);
}

std::vector<std::vector<Element>> RackTable::rows() const {
  std::vector<std::vector<Element>> out(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    out[x].assign(flat_.begin() + static_cast<std::ptrdiff_t>(x * n_),
                  flat_.begin() + static_cast<std::ptrdiff_t>((x + 1) * n_));
  }
  return out;
}

void RackTable::set_unit(std::optional<Element> unit) {
  if (unit && *unit >= n_) throw std::invalid_argument("declared unit out of range");
  unit_ = unit;
}

bool RackTable::row_bijective(Element x) const {
  std::vector<bool> seen(n_, false);
  for (std::size_t y = 0; y < n_; ++y) {
    const Element v = op(x, y);
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool RackTable::rows_bijective() const {
  for (std::size_t x = 0; x < n_; ++x) {
    if (!row_bijective(x)) return false;
  }
  return true;
}

GroupTable::GroupTable(std::size_t n, std::vector<Element> mul)
    : n_(n), mul_(std::move(mul)), inv_(n, 0) {
  if (n == 0 || mul_.size() != n * n) throw std::invalid_argument("group table must be n x n");
  for (const Element v : mul_) {
    if (v >= n) throw std::invalid_argument("group table entry out of range");
  }
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = this->mul(e, a) == a && this->mul(a, e) == a;
    if (ok) {
      id_ = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("group table has no identity");
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c))) {
          throw std::invalid_argument("group table is not associative");
        }
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    bool ok = false;
    for (Element b = 0; b < n && !ok; ++b) {
      if (this->mul(a, b) == id_ && this->mul(b, a) == id_) {
        inv_[a] = b;
        ok = true;
      }
    }
    if (!ok) throw std::invalid_argument("group element " + std::to_string(a) + " has no inverse");
  }
}

namespace {

bool is_unit(const RackTable& t, Element u) {
  for (Element x = 0; x < t.size(); ++x) {
    if (t.op(u, x) != x || t.op(x, u) != u) return false;
  }
  return true;
}

}  // namespace

RackVerdict verify_rack(const RackTable& t) {
  RackVerdict v;
  const std::size_t n = t.size();
  v.rows_bijective = t.rows_bijective();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (t.op(x, t.op(y, z)) != t.op(t.op(x, y), t.op(x, z))) {
          if (v.failing_triples.size() < kFailureCap) v.failing_triples.push_back({x, y, z});
          ++v.failure_count;
        }
      }
    }
  }
  v.self_distributive = v.failure_count == 0;
  v.is_rack = v.rows_bijective && v.self_distributive;
  bool idempotent = true;
  for (Element x = 0; x < n; ++x) idempotent = idempotent && t.op(x, x) == x;
  v.is_quandle = v.is_rack && idempotent;
  for (Element u = 0; u < n; ++u) {
    if (is_unit(t, u)) v.units.push_back(u);
  }
  const bool declared_ok = !t.unit() || is_unit(t, *t.unit());
  v.is_pointed = v.is_rack && !v.units.empty() && declared_ok;
  return v;
}

RackTable conjugation_rack(const GroupTable& g) {
  const std::size_t n = g.size();
  std::vector<Element> flat(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) flat[x * n + y] = g.mul(g.mul(x, y), g.inv(x));
  }
  return RackTable(n, std::move(flat), g.identity());
}

Triple apply_r(const RackTable& t, std::size_t i, std::size_t j, Triple v) {
  v[j] = t.op(v[i], v[j]);
  return v;
}

QybeVerdict yang_baxter_check(const RackTable& t) {
  QybeVerdict v;
  v.rows_bijective = t.rows_bijective();
  const std::size_t n = t.size();
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      for (Element i = 0; i < n; ++i) {
        const Triple start{g, h, i};
        // Operators compose right to left: R12 R13 R23 applies R23 first.
        const Triple lhs = apply_r(t, 0, 1, apply_r(t, 0, 2, apply_r(t, 1, 2, start)));
        const Triple rhs = apply_r(t, 1, 2, apply_r(t, 0, 2, apply_r(t, 0, 1, start)));
        if (lhs != rhs) {
          if (v.failing_triples.size() < kFailureCap) v.failing_triples.push_back(start);
          ++v.failure_count;
        }
      }
    }
  }
  v.satisfies_qybe = v.failure_count == 0;
  return v;
}

RackTable canonical_form(const RackTable& t) {
  const std::size_t n = t.size();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<Element> best;
  std::vector<Element> candidate(n * n);
  do {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) candidate[perm[x] * n + perm[y]] = perm[t.op(x, y)];
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  RackTable out(n, std::move(best));
  for (Element u = 0; u < n; ++u) {
    if (is_unit(out, u)) {
      out.set_unit(u);
      break;
    }
  }
  return out;
}

namespace {

std::vector<std::vector<Element>> all_permutations(std::size_t n) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<std::vector<Element>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Checks every self-distributivity triple whose entries are already fixed
// when rows 0..filled-1 are assigned.
bool consistent_so_far(const std::vector<Element>& flat, std::size_t n, std::size_t filled) {
  const auto op = [&](Element x, Element y) { return flat[x * n + y]; };
  for (Element x = 0; x < filled; ++x) {
    for (Element y = 0; y < filled; ++y) {
      const Element xy = op(x, y);
      if (xy >= filled) continue;
      for (Element z = 0; z < n; ++z) {
        if (op(x, op(y, z)) != op(xy, op(x, z))) return false;
      }
    }
  }
  return true;
}

void extend(std::vector<Element>& flat, std::size_t n, std::size_t row,
            const std::vector<std::vector<Element>>& perms, std::set<std::vector<Element>>& out) {
  if (row == n) {
    out.insert(canonical_form(RackTable(n, flat)).flat());
    return;
  }
  for (const auto& p : perms) {
    std::copy(p.begin(), p.end(), flat.begin() + static_cast<std::ptrdiff_t>(row * n));
    if (consistent_so_far(flat, n, row + 1)) extend(flat, n, row + 1, perms, out);
  }
}

}  // namespace

std::vector<RackTable> enumerate_racks(std::size_t n, bool pointed) {
  if (n == 0 || n > kMaxEnumerationSize) {
    throw std::out_of_range("rack enumeration supports 1 <= n <= " +
                            std::to_string(kMaxEnumerationSize));
  }
  const auto perms = all_permutations(n);
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, perms.size());

  // Each worker owns a strided slice of first-row choices; the merged set is
  // ordered, so the result does not depend on scheduling.
  std::set<std::vector<Element>> merged;
  std::mutex merge_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        std::set<std::vector<Element>> local;
        std::vector<Element> flat(n * n, 0);
        for (std::size_t k = w; k < perms.size(); k += workers) {
          std::copy(perms[k].begin(), perms[k].end(), flat.begin());
          if (consistent_so_far(flat, n, 1)) extend(flat, n, 1, perms, local);
        }
        const std::scoped_lock lock(merge_mutex);
        merged.insert(local.begin(), local.end());
      });
    }
  }

  std::vector<RackTable> out;
  for (const auto& flat : merged) {
    RackTable t = canonical_form(RackTable(n, flat));
    if (pointed && !t.unit()) continue;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<RackTable> all_bijective_row_tables(std::size_t n) {
  if (n == 0 || n > kMaxEnumerationSize) throw std::out_of_range("unsupported table size");
  const auto perms = all_permutations(n);
  std::vector<RackTable> out;
  std::vector<std::size_t> choice(n, 0);
  for (;;) {
    std::vector<Element> flat;
    for (std::size_t x = 0; x < n; ++x) flat.insert(flat.end(), perms[choice[x]].begin(), perms[choice[x]].end());
    out.emplace_back(n, std::move(flat));
    std::size_t k = 0;
    while (k < n && ++choice[k] == perms.size()) choice[k++] = 0;
    if (k == n) break;
  }
  return out;
}

GroupTable cyclic_group(std::size_t n) {
  std::vector<Element> mul(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  }
  return GroupTable(n, std::move(mul));
}

GroupTable klein_four_group() {
  std::vector<Element> mul(16);
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) mul[a * 4 + b] = a ^ b;
  }
  return GroupTable(4, std::move(mul));
}

GroupTable symmetric_group_s3() {
  auto perms = all_permutations(3);  // perms[0] is the identity
  const auto index_of = [&](const std::vector<Element>& p) {
    return static_cast<Element>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<Element> mul(36);
  for (Element a = 0; a < 6; ++a) {
    for (Element b = 0; b < 6; ++b) {
      std::vector<Element> composed(3);
      for (Element k = 0; k < 3; ++k) composed[k] = perms[a][perms[b][k]];  // (a o b)(k)
      mul[a * 6 + b] = index_of(composed);
    }
  }
  return GroupTable(6, std::move(mul));
}

std::vector<NamedGroup> bundled_groups() {
  return {{"Z2", cyclic_group(2)},
          {"Z3", cyclic_group(3)},
          {"Z4", cyclic_group(4)},
          {"S3", symmetric_group_s3()},
          {"V4", klein_four_group()}};
}

RackTable dihedral_quandle(std::size_t n) {
  std::vector<Element> flat(n * n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) flat[i * n + j] = (2 * i + n - j) % n;
  }
  return RackTable(n, std::move(flat));
}

RackTable trivial_rack(std::size_t n) {
  std::vector<Element> flat(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) flat[x * n + y] = y;
  }
  return RackTable(n, std::move(flat));
}

}  // namespace vaisman::rack
