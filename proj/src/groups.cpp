#include "pact/groups.hpp"

#include <algorithm>
#include <numeric>

namespace pact {

FinGroup FinGroup::from_table(std::vector<std::string> elements,
                              std::vector<std::vector<int>> table) {
  const std::size_t n = elements.size();
  if (n == 0) fail(errc::validation, "group has no elements");
  if (table.size() != n)
    fail(errc::validation, "multiplication table needs one row per element");
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n)
      fail(errc::validation, "row \"" + elements[g] + "\" has wrong length");
    for (int v : table[g])
      if (v < 0 || v >= static_cast<int>(n))
        fail(errc::validation,
             "row \"" + elements[g] + "\" maps outside the element set");
  }

  int identity = -1;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n; ++g)
      if (table[e][g] != static_cast<int>(g) ||
          table[g][e] != static_cast<int>(g))
        ok = false;
    if (ok) {
      identity = static_cast<int>(e);
      break;
    }
  }
  if (identity < 0) fail(errc::no_identity, "no two-sided identity");

  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[g][h]][k] != table[g][table[h][k]])
          fail(errc::not_associative, "(" + elements[g] + "*" + elements[h] +
                                          ")*" + elements[k] + " differs from " +
                                          elements[g] + "*(" + elements[h] +
                                          "*" + elements[k] + ")");

  std::vector<int> inv(n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] == identity && table[h][g] == identity) {
        inv[g] = static_cast<int>(h);
        break;
      }
    if (inv[g] < 0) fail(errc::no_inverse, "\"" + elements[g] + "\" has no inverse");
  }

  auto d = std::make_shared<Data>();
  d->elements = std::move(elements);
  d->table = std::move(table);
  d->inv = std::move(inv);
  d->identity = identity;
  FinGroup out;
  out.d_ = std::move(d);
  return out;
}

FinGroup FinGroup::trivial() { return cyclic(1); }

FinGroup FinGroup::cyclic(int n) {
  if (n < 1) fail(errc::validation, "cyclic group needs positive order");
  std::vector<std::string> elems(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g) {
    elems[g] = std::to_string(g);
    for (int h = 0; h < n; ++h) table[g][h] = (g + h) % n;
  }
  return from_table(std::move(elems), std::move(table));
}

FinGroup FinGroup::klein4() {
  // Index arithmetic is xor on {0,1,2,3}.
  std::vector<std::string> elems = {"1", "a", "b", "c"};
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) table[g][h] = g ^ h;
  return from_table(std::move(elems), std::move(table));
}

FinGroup FinGroup::symmetric(int n) {
  if (n < 1) fail(errc::validation, "symmetric group needs positive degree");
  if (n > 4) fail(errc::size_limit, "symmetric group degree capped at 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t m = perms.size();
  std::vector<std::string> elems(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::string word;
    for (int v : perms[i]) word += std::to_string(v + 1);
    elems[i] = word;
  }

  auto find = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) -
                            perms.begin());
  };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<int> comp(n);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h) {
      // (g*h)(i) = g(h(i)).
      for (int i = 0; i < n; ++i) comp[i] = perms[g][perms[h][i]];
      table[g][h] = find(comp);
    }
  return from_table(std::move(elems), std::move(table));
}

int FinGroup::index_of(std::string_view label) const {
  if (!d_) return -1;
  for (std::size_t i = 0; i < d_->elements.size(); ++i)
    if (d_->elements[i] == label) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> subgroups(const FinGroup& g) {
  const int n = static_cast<int>(g.order());
  if (n > 20) fail(errc::size_limit, "subgroup enumeration capped at order 20");
  std::vector<std::vector<int>> out;
  const std::uint64_t id_bit = std::uint64_t(1) << g.identity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    if (!(mask & id_bit)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      if (!(mask >> g.inv(a) & 1)) closed = false;
      for (int b = 0; b < n && closed; ++b) {
        if (!(mask >> b & 1)) continue;
        if (!(mask >> g.mul(a, b) & 1)) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<int> members;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1) members.push_back(a);
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace pact
