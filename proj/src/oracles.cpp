#include "nkind/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nkind/arith.hpp"

namespace nkind {

std::vector<Subgroup> subgroups_by_subset_scan(const FiniteGroup& g) {
  const int n = g.n;
  if (n > 20) throw CapError("subset scan oracle: group too large");
  std::vector<int> others;
  for (int x = 0; x < n; ++x)
    if (x != g.identity) others.push_back(x);
  const int k = static_cast<int>(others.size());
  std::vector<Subgroup> out;
  for (unsigned long long mask = 0; mask < (1ULL << k); ++mask) {
    if (n % (__builtin_popcountll(mask) + 1) != 0) continue;  // Lagrange prune
    std::vector<int> members{g.identity};
    for (int i = 0; i < k; ++i)
      if (mask & (1ULL << i)) members.push_back(others[i]);
    if (is_subgroup_set(g, members)) {
      std::sort(members.begin(), members.end());
      out.push_back(Subgroup{&g, std::move(members)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<Subgroup> subgroups_by_generator_bfs(const FiniteGroup& g) {
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> queue;
  std::vector<int> triv{g.identity};
  known.insert(triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    std::vector<int> s = std::move(queue.back());
    queue.pop_back();
    for (int x = 0; x < g.n; ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      std::vector<int> seed = s;
      seed.push_back(x);
      std::vector<int> t = close_subset(g, std::move(seed));
      if (known.insert(t).second) queue.push_back(std::move(t));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (auto& v : known) out.push_back(Subgroup{&g, v});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

bool brute_force_p_elementary(const FiniteGroup& g, long long p) {
  // Search for a cyclic C = <x> of order prime to p and a commuting subgroup
  // T of p-power elements with |C| * |T| = |G|.
  for (int x = 0; x < g.n; ++x) {
    if (g.order(x) % p == 0) continue;
    std::vector<int> c = close_subset(g, {x});
    std::vector<int> t;
    for (int y = 0; y < g.n; ++y) {
      if (p_prime_part(g.order(y), p) != 1) continue;
      bool commutes = true;
      for (int z : c)
        if (g.compose(y, z) != g.compose(z, y)) {
          commutes = false;
          break;
        }
      if (commutes) t.push_back(y);
    }
    if (static_cast<long long>(c.size() * t.size()) != static_cast<long long>(g.n)) continue;
    if (is_subgroup_set(g, t)) return true;
  }
  return false;
}

bool brute_force_p_hyperelementary(const FiniteGroup& g, long long p) {
  // Search for a normal cyclic C = <x> of order prime to p with p-power index.
  for (int x = 0; x < g.n; ++x) {
    if (g.order(x) % p == 0) continue;
    Subgroup c = cyclic_subgroup(g, x);
    long long index = g.n / c.order();
    if (p_prime_part(index, p) != 1) continue;
    if (is_normal(g, c)) return true;
  }
  return false;
}

namespace {

bool extend_iso(const FiniteGroup& a, const FiniteGroup& b, std::vector<int>& img,
                std::vector<char>& used, const std::vector<int>& gens, std::size_t gi) {
  if (gi == gens.size()) return true;
  int gen = gens[gi];
  for (int target = 0; target < b.n; ++target) {
    if (used[target] || b.order(target) != a.order(gen)) continue;
    // tentatively map gen -> target and propagate over known products
    std::vector<int> saved_img = img;
    std::vector<char> saved_used = used;
    img[gen] = target;
    used[target] = 1;
    // close the partial map: BFS over products of defined elements
    bool ok = true;
    bool changed = true;
    while (changed && ok) {
      changed = false;
      for (int x = 0; x < a.n && ok; ++x) {
        if (img[x] < 0) continue;
        for (int y = 0; y < a.n && ok; ++y) {
          if (img[y] < 0) continue;
          int xy = a.compose(x, y);
          int im = b.compose(img[x], img[y]);
          if (img[xy] < 0) {
            if (used[im]) {
              ok = false;
            } else {
              img[xy] = im;
              used[im] = 1;
              changed = true;
            }
          } else if (img[xy] != im) {
            ok = false;
          }
        }
      }
    }
    if (ok && extend_iso(a, b, img, used, gens, gi + 1)) return true;
    img = saved_img;
    used = saved_used;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.n != b.n) return false;
  std::multiset<int> oa(a.element_orders.begin(), a.element_orders.end());
  std::multiset<int> ob(b.element_orders.begin(), b.element_orders.end());
  if (oa != ob) return false;
  std::vector<int> gens = canonical_generators(a);
  std::vector<int> img(a.n, -1);
  std::vector<char> used(b.n, 0);
  img[a.identity] = b.identity;
  used[b.identity] = 1;
  return extend_iso(a, b, img, used, gens, 0);
}

}  // namespace nkind
