#include "nkind/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "nkind/arith.hpp"

namespace nkind {

namespace {

// Applies a then b.
std::vector<int> perm_mul(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

std::string cycle_name(const std::vector<int>& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

void finalize_tables(FiniteGroup& g) {
  const int n = g.n;
  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.compose(a, b) == g.identity && g.compose(b, a) == g.identity) {
        g.inv[a] = b;
        break;
      }
    }
    if (g.inv[a] < 0) throw InternalError("group construction: element without inverse");
  }
  g.element_orders.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int x = a, ord = 1;
    while (x != g.identity) {
      x = g.compose(x, a);
      ++ord;
    }
    g.element_orders[a] = ord;
  }
  if (g.names.empty()) {
    g.names.resize(n);
    for (int i = 0; i < n; ++i) g.names[i] = std::to_string(i);
  }
}

namespace {

void require_cap(long long order, int cap, const std::string& what) {
  if (order > cap)
    throw CapError(what + ": order " + std::to_string(order) + " exceeds cap " +
                   std::to_string(cap));
}

}  // namespace

int FiniteGroup::power(int a, long long e) const {
  if (e < 0) return power(inv[a], -e);
  int r = identity;
  for (long long i = 0; i < e % order(a); ++i) r = compose(r, a);
  return r;
}

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool GroupHom::is_homomorphism() const {
  if (static_cast<int>(image.size()) != source->n) return false;
  if (image[source->identity] != target->identity) return false;
  for (int a = 0; a < source->n; ++a)
    for (int b = 0; b < source->n; ++b)
      if (image[source->compose(a, b)] != target->compose(image[a], image[b])) return false;
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<char> hit(target->n, 0);
  for (int v : image) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool GroupHom::is_injective() const {
  std::set<int> vals(image.begin(), image.end());
  return vals.size() == image.size();
}

void check_group_axioms(const FiniteGroup& g) {
  const int n = g.n;
  if (n <= 0) throw InternalError("axioms: empty element set");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g.compose(a, b);
      if (ab < 0 || ab >= n) throw InternalError("axioms: composition not closed");
    }
  for (int a = 0; a < n; ++a) {
    if (g.compose(g.identity, a) != a || g.compose(a, g.identity) != a)
      throw InternalError("axioms: identity not two-sided");
    if (g.compose(a, g.inv[a]) != g.identity || g.compose(g.inv[a], a) != g.identity)
      throw InternalError("axioms: inverse law fails");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.compose(g.compose(a, b), c) != g.compose(a, g.compose(b, c)))
          throw InternalError("axioms: associativity fails");
}

// -- constructions -----------------------------------------------------

FiniteGroup make_cyclic(long long n, int order_cap) {
  if (n < 1) throw SpecError("cyclic: order must be positive");
  require_cap(n, order_cap, "cyclic");
  FiniteGroup g;
  g.n = static_cast<int>(n);
  g.identity = 0;
  g.label = "cyclic:" + std::to_string(n);
  g.mul.resize(n * n);
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b) g.mul[a * n + b] = static_cast<int>((a + b) % n);
  finalize_tables(g);
  return g;
}

FiniteGroup make_perm_group(int degree,
                            const std::vector<std::vector<std::vector<int>>>& generators,
                            int order_cap) {
  if (degree < 1) throw SpecError("perm: degree must be positive");
  std::vector<std::vector<int>> gens;
  for (const auto& cycles : generators) {
    std::vector<int> p(degree);
    std::iota(p.begin(), p.end(), 0);
    for (const auto& cyc : cycles) {
      std::vector<char> used(degree, 0);
      for (int pt : cyc) {
        if (pt < 0 || pt >= degree) throw SpecError("perm: point out of range");
        if (used[pt]) throw SpecError("perm: repeated point in cycle");
        used[pt] = 1;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    gens.push_back(std::move(p));
  }

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> elems{id};
  std::vector<std::vector<int>> queue{id};
  while (!queue.empty()) {
    std::vector<int> x = std::move(queue.back());
    queue.pop_back();
    for (const auto& gperm : gens) {
      std::vector<int> y = perm_mul(x, gperm);
      if (elems.insert(y).second) {
        require_cap(static_cast<long long>(elems.size()), order_cap, "perm");
        queue.push_back(std::move(y));
      }
    }
  }

  std::vector<std::vector<int>> list(elems.begin(), elems.end());  // lex order
  const int n = static_cast<int>(list.size());
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<int>(std::lower_bound(list.begin(), list.end(), p) - list.begin());
  };
  FiniteGroup g;
  g.n = n;
  g.identity = index_of(id);
  g.mul.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[a * n + b] = index_of(perm_mul(list[a], list[b]));
  g.names.resize(n);
  for (int i = 0; i < n; ++i) g.names[i] = cycle_name(list[i]);
  g.label = "perm:" + std::to_string(degree) + ":" + std::to_string(n);
  finalize_tables(g);
  return g;
}

FiniteGroup make_symmetric(int degree, int order_cap) {
  if (degree < 1) throw SpecError("sym: degree must be positive");
  long long order = 1;
  for (int i = 2; i <= degree; ++i) order *= i;
  require_cap(order, order_cap, "sym");
  std::vector<std::vector<std::vector<int>>> gens;
  if (degree >= 2) {
    std::vector<int> cyc(degree);
    std::iota(cyc.begin(), cyc.end(), 0);
    gens.push_back({cyc});          // n-cycle
    gens.push_back({{0, 1}});       // transposition
  }
  FiniteGroup g = make_perm_group(degree, gens, order_cap);
  g.label = "sym:" + std::to_string(degree);
  return g;
}

FiniteGroup make_product(const FiniteGroup& a, const FiniteGroup& b, int order_cap) {
  long long order = static_cast<long long>(a.n) * b.n;
  require_cap(order, order_cap, "product");
  FiniteGroup g;
  g.n = static_cast<int>(order);
  g.identity = a.identity * b.n + b.identity;
  g.label = "product(" + a.label + "," + b.label + ")";
  g.mul.resize(order * order);
  for (int xa = 0; xa < a.n; ++xa)
    for (int xb = 0; xb < b.n; ++xb)
      for (int ya = 0; ya < a.n; ++ya)
        for (int yb = 0; yb < b.n; ++yb) {
          int x = xa * b.n + xb, y = ya * b.n + yb;
          g.mul[static_cast<std::size_t>(x) * g.n + y] =
              a.compose(xa, ya) * b.n + b.compose(xb, yb);
        }
  g.names.resize(order);
  for (int xa = 0; xa < a.n; ++xa)
    for (int xb = 0; xb < b.n; ++xb)
      g.names[xa * b.n + xb] = "(" + a.names[xa] + "," + b.names[xb] + ")";
  finalize_tables(g);
  return g;
}

FiniteGroup make_semidirect(long long m, const FiniteGroup& p,
                            const std::vector<long long>& generator_units, int order_cap) {
  if (m < 1) throw SpecError("semidirect: cyclic order must be positive");
  long long order = m * p.n;
  require_cap(order, order_cap, "semidirect");

  std::vector<int> gens = canonical_generators(p);
  if (generator_units.size() != gens.size())
    throw SpecError("semidirect: action list has " + std::to_string(generator_units.size()) +
                    " entries, group needs " + std::to_string(gens.size()) + " generators");
  for (long long u : generator_units) {
    long long r = pos_mod(u, m);
    if (m > 1 && std::gcd(r, m) != 1)
      throw SpecError("semidirect: action entry " + std::to_string(u) +
                      " is not a unit mod " + std::to_string(m));
  }

  // Extend the generator images over all of p along the Cayley graph, then
  // verify multiplicativity; failure means the assignment is not an action.
  const long long unit_id = (m == 1) ? 0 : 1;
  std::vector<long long> unit(p.n, -1);
  unit[p.identity] = unit_id;
  std::vector<int> queue{p.identity};
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = p.compose(x, gens[i]);
      if (unit[y] < 0) {
        unit[y] = (m == 1) ? 0 : pos_mod(unit[x] * generator_units[i], m);
        queue.push_back(y);
      }
    }
  }
  for (int x = 0; x < p.n; ++x)
    if (unit[x] < 0) throw InternalError("semidirect: generators do not generate");
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      long long lhs = unit[p.compose(x, y)];
      long long rhs = (m == 1) ? 0 : pos_mod(unit[x] * unit[y], m);
      if (lhs != rhs)
        throw SpecError("semidirect: action map is not a homomorphism into the automorphism group");
    }

  FiniteGroup g;
  g.n = static_cast<int>(order);
  g.identity = 0 * p.n + p.identity;
  {
    std::ostringstream lab;
    lab << "semidirect(c:" << m << ",p:" << p.label << ",action:[";
    for (std::size_t i = 0; i < generator_units.size(); ++i) {
      if (i) lab << ",";
      lab << pos_mod(generator_units[i], m);
    }
    lab << "])";
    g.label = lab.str();
  }
  g.mul.resize(order * order);
  for (long long c = 0; c < m; ++c)
    for (int x = 0; x < p.n; ++x)
      for (long long c2 = 0; c2 < m; ++c2)
        for (int x2 = 0; x2 < p.n; ++x2) {
          long long lhs = c * p.n + x, rhs = c2 * p.n + x2;
          long long cc = pos_mod(c + unit[x] * c2, m);
          g.mul[lhs * order + rhs] = static_cast<int>(cc * p.n + p.compose(x, x2));
        }
  g.names.resize(order);
  for (long long c = 0; c < m; ++c)
    for (int x = 0; x < p.n; ++x)
      g.names[c * p.n + x] = "(" + std::to_string(c) + "," + p.names[x] + ")";
  finalize_tables(g);
  return g;
}

FiniteGroup make_dihedral(int n, int order_cap) {
  if (n < 1) throw SpecError("dihedral: parameter must be positive");
  FiniteGroup c2 = make_cyclic(2, order_cap);
  FiniteGroup g = make_semidirect(n, c2, {n - 1}, order_cap);
  g.label = "dihedral:" + std::to_string(n);
  return g;
}

FiniteGroup make_quaternion8() {
  // (sign, axis) with axes 1,i,j,k; index = 2*axis + (sign < 0).
  static const char* kNames[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto mul_axis = [](int a, int b, int& axis) {
    // returns sign of the axis product
    if (a == 0) {
      axis = b;
      return 1;
    }
    if (b == 0) {
      axis = a;
      return 1;
    }
    if (a == b) {
      axis = 0;
      return -1;
    }
    // i=1, j=2, k=3: ij=k, jk=i, ki=j and the reversed products negate
    static const int next[4] = {0, 2, 3, 1};
    if (next[a] == b) {
      axis = 6 - a - b;
      return 1;
    }
    axis = 6 - a - b;
    return -1;
  };
  FiniteGroup g;
  g.n = 8;
  g.identity = 0;
  g.label = "quaternion:8";
  g.mul.resize(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sx = (x & 1) ? -1 : 1, ax = x >> 1;
      int sy = (y & 1) ? -1 : 1, ay = y >> 1;
      int az;
      int s = mul_axis(ax, ay, az) * sx * sy;
      g.mul[x * 8 + y] = 2 * az + (s < 0 ? 1 : 0);
    }
  g.names.assign(kNames, kNames + 8);
  finalize_tables(g);
  return g;
}

// -- construction grammar ----------------------------------------------

namespace {

struct SpecParser {
  std::string s;
  std::size_t pos = 0;
  int cap;

  explicit SpecParser(const std::string& raw, int order_cap) : cap(order_cap) {
    for (char c : raw)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SpecError("group spec: " + msg + " at position " + std::to_string(pos) + " in '" +
                    s + "'");
  }
  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    std::size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a construction name");
    return s.substr(start, pos - start);
  }
  long long integer() {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || (s[start] == '-' && pos == start + 1)) fail("expected an integer");
    long long v = 0;
    try {
      v = std::stoll(s.substr(start, pos - start));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
    if (v > 1000000000LL || v < -1000000000LL) fail("integer out of range");
    return v;
  }

  std::vector<std::vector<int>> cycles() {
    std::vector<std::vector<int>> out;
    while (pos < s.size() && s[pos] == '(') {
      expect('(');
      std::vector<int> cyc;
      cyc.push_back(static_cast<int>(integer()) - 1);  // grammar is 1-based
      while (eat(',')) cyc.push_back(static_cast<int>(integer()) - 1);
      expect(')');
      out.push_back(std::move(cyc));
    }
    if (out.empty()) fail("expected a cycle like (1,2,3)");
    return out;
  }

  FiniteGroup spec() {
    std::string kind = ident();
    if (kind == "cyclic") {
      expect(':');
      return make_cyclic(integer(), cap);
    }
    if (kind == "sym") {
      expect(':');
      return make_symmetric(static_cast<int>(integer()), cap);
    }
    if (kind == "dihedral") {
      expect(':');
      return make_dihedral(static_cast<int>(integer()), cap);
    }
    if (kind == "product") {
      expect('(');
      FiniteGroup a = spec();
      expect(',');
      FiniteGroup b = spec();
      expect(')');
      return make_product(a, b, cap);
    }
    if (kind == "semidirect") {
      expect('(');
      if (ident() != "c") fail("expected c:M");
      expect(':');
      long long m = integer();
      expect(',');
      if (ident() != "p") fail("expected p:SPEC");
      expect(':');
      FiniteGroup p = spec();
      expect(',');
      if (ident() != "action") fail("expected action:[...]");
      expect(':');
      expect('[');
      std::vector<long long> units;
      if (!eat(']')) {
        units.push_back(integer());
        while (eat(',')) units.push_back(integer());
        expect(']');
      }
      expect(')');
      return make_semidirect(m, p, units, cap);
    }
    if (kind == "perm") {
      expect('(');
      int degree = static_cast<int>(integer());
      std::vector<std::vector<std::vector<int>>> gens;
      while (eat(';')) gens.push_back(cycles());
      expect(')');
      return make_perm_group(degree, gens, cap);
    }
    fail("unknown construction '" + kind + "'");
  }
};

}  // namespace

FiniteGroup make_group(const std::string& spec, int order_cap) {
  SpecParser p(spec, order_cap);
  FiniteGroup g = p.spec();
  if (p.pos != p.s.size()) p.fail("trailing input");
  g.label = p.s;
  return g;
}

// -- subgroup machinery ------------------------------------------------

std::vector<int> close_subset(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<char> in(g.n, 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(g.identity);
  for (int x : seed) add(x);
  for (std::size_t q = 0; q < elems.size(); ++q)
    for (std::size_t j = 0; j <= q; ++j) {
      add(g.compose(elems[q], elems[j]));
      add(g.compose(elems[j], elems[q]));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  return Subgroup{&g, std::move(members)};
}

Subgroup cyclic_subgroup(const FiniteGroup& g, int x) {
  return make_subgroup(g, close_subset(g, {x}));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return make_subgroup(g, {g.identity}); }

Subgroup full_subgroup(const FiniteGroup& g) {
  std::vector<int> all(g.n);
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{&g, std::move(all)};
}

bool is_subgroup_set(const FiniteGroup& g, const std::vector<int>& members) {
  std::vector<char> in(g.n, 0);
  for (int x : members) in[x] = 1;
  if (!in[g.identity]) return false;
  for (int a : members)
    for (int b : members)
      if (!in[g.compose(a, b)]) return false;
  return true;
}

bool subgroup_leq(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, Exec exec) {
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> list;
  auto add = [&](std::vector<int> v) {
    if (known.insert(v).second) list.push_back(std::move(v));
  };
  add({g.identity});
  for (int x = 0; x < g.n; ++x) add(close_subset(g, {x}));

  // Close under pairwise joins; each round joins the subgroups discovered in
  // the previous round against everything known so far.
  std::size_t frontier = 0;
  while (frontier < list.size()) {
    std::size_t sz = list.size();
    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (std::size_t j = frontier; j < sz; ++j)
      for (std::size_t i = 0; i < j; ++i) tasks.emplace_back(i, j);
    frontier = sz;
    std::vector<std::vector<int>> joins(tasks.size());
    for_each_index(tasks.size(), exec, [&](std::size_t t) {
      const auto& a = list[tasks[t].first];
      const auto& b = list[tasks[t].second];
      if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
          std::includes(b.begin(), b.end(), a.begin(), a.end()))
        return;  // join is the larger one, already known
      std::vector<int> seed = a;
      seed.insert(seed.end(), b.begin(), b.end());
      joins[t] = close_subset(g, std::move(seed));
    });
    for (auto& j : joins)
      if (!j.empty()) add(std::move(j));
  }

  std::vector<Subgroup> out;
  out.reserve(list.size());
  for (auto& v : list) out.push_back(Subgroup{&g, std::move(v)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, int by) {
  std::vector<int> conj;
  conj.reserve(s.members.size());
  for (int x : s.members) conj.push_back(g.conjugate(x, by));
  std::sort(conj.begin(), conj.end());
  return Subgroup{&g, std::move(conj)};
}

std::vector<int> canonical_conjugate(const FiniteGroup& g, const Subgroup& s) {
  std::vector<int> best = s.members;
  std::vector<int> conj(s.members.size());
  for (int by = 0; by < g.n; ++by) {
    for (std::size_t i = 0; i < s.members.size(); ++i) conj[i] = g.conjugate(s.members[i], by);
    std::sort(conj.begin(), conj.end());
    if (conj < best) best = conj;
  }
  return best;
}

std::vector<SubgroupClass> classify_subgroups(const FiniteGroup& g,
                                              const std::vector<Subgroup>& subs, Exec exec) {
  std::vector<std::vector<int>> canon(subs.size());
  for_each_index(subs.size(), exec,
                 [&](std::size_t i) { canon[i] = canonical_conjugate(g, subs[i]); });
  std::map<std::vector<int>, long long> count;
  for (auto& c : canon) ++count[c];
  std::vector<SubgroupClass> out;
  out.reserve(count.size());
  for (auto& [rep, sz] : count) out.push_back(SubgroupClass{Subgroup{&g, rep}, sz});
  std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.members.size() != b.representative.members.size())
      return a.representative.members.size() < b.representative.members.size();
    return a.representative.members < b.representative.members;
  });
  return out;
}

std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g, Exec exec) {
  return classify_subgroups(g, all_subgroups(g, exec), exec);
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  std::vector<int> out;
  for (int x = 0; x < g.n; ++x) {
    bool ok = true;
    for (int y : s.members)
      if (g.compose(x, y) != g.compose(y, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup{&g, std::move(out)};
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
  std::vector<int> out;
  for (int x = 0; x < g.n; ++x) {
    bool ok = true;
    for (int y : s.members)
      if (!s.contains(g.conjugate(y, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup{&g, std::move(out)};
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  return normalizer(g, s).order() == g.n;
}

bool is_cyclic_subgroup(const FiniteGroup& g, const Subgroup& s) {
  for (int x : s.members)
    if (g.order(x) == s.order()) return true;
  return false;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& nsub) {
  if (!is_normal(g, nsub)) throw SpecError("quotient: subgroup is not normal");
  std::vector<int> rep(g.n);
  for (int x = 0; x < g.n; ++x) {
    int best = g.n;
    for (int y : nsub.members) best = std::min(best, g.compose(x, y));
    rep[x] = best;
  }
  std::vector<int> reps;
  for (int x = 0; x < g.n; ++x)
    if (rep[x] == x) reps.push_back(x);
  auto rep_index = [&](int r) {
    return static_cast<int>(std::lower_bound(reps.begin(), reps.end(), r) - reps.begin());
  };

  auto q = std::make_shared<FiniteGroup>();
  q->n = static_cast<int>(reps.size());
  q->identity = rep_index(rep[g.identity]);
  q->label = g.label + "/sub" + std::to_string(nsub.order());
  q->mul.resize(static_cast<std::size_t>(q->n) * q->n);
  for (int i = 0; i < q->n; ++i)
    for (int j = 0; j < q->n; ++j)
      q->mul[i * q->n + j] = rep_index(rep[g.compose(reps[i], reps[j])]);
  q->names.resize(q->n);
  for (int i = 0; i < q->n; ++i) q->names[i] = "[" + g.names[reps[i]] + "]";
  finalize_tables(*q);

  GroupHom proj;
  proj.source = &g;
  proj.target = q.get();
  proj.image.resize(g.n);
  for (int x = 0; x < g.n; ++x) proj.image[x] = rep_index(rep[x]);
  return Quotient{std::move(q), std::move(proj)};
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> seed;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) seed.push_back(g.commutator(a, b));
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  return make_subgroup(g, close_subset(g, std::move(seed)));
}

long long abelianization_order(const FiniteGroup& g) {
  return g.n / commutator_subgroup(g).order();
}

Subgroup sylow_subgroup(const FiniteGroup& g, long long p) {
  if (!is_prime(p)) throw SpecError("sylow: p must be prime");
  const long long target = p_part(g.n, p);
  Subgroup s = trivial_subgroup(g);
  while (s.order() < target) {
    Subgroup nm = normalizer(g, s);
    bool grown = false;
    for (int x : nm.members) {
      if (s.contains(x)) continue;
      if (p_prime_part(g.order(x), p) != 1) continue;
      std::vector<int> seed = s.members;
      seed.push_back(x);
      std::vector<int> t = close_subset(g, std::move(seed));
      long long ord = static_cast<long long>(t.size());
      if (ord == p_part(ord, p)) {
        s = make_subgroup(g, std::move(t));
        grown = true;
        break;
      }
    }
    if (!grown) throw InternalError("sylow: p-subgroup could not be enlarged");
  }
  return s;
}

FiniteGroup materialize(const FiniteGroup& g, const Subgroup& s) {
  const int n = s.order();
  auto idx = [&](int x) {
    return static_cast<int>(std::lower_bound(s.members.begin(), s.members.end(), x) -
                            s.members.begin());
  };
  FiniteGroup h;
  h.n = n;
  h.identity = idx(g.identity);
  h.label = "sub" + std::to_string(n) + "(" + g.label + ")";
  h.mul.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h.mul[i * n + j] = idx(g.compose(s.members[i], s.members[j]));
  h.names.resize(n);
  for (int i = 0; i < n; ++i) h.names[i] = g.names[s.members[i]];
  finalize_tables(h);
  return h;
}

FiniteGroup relabel(const FiniteGroup& g, const std::vector<int>& perm) {
  FiniteGroup h;
  h.n = g.n;
  h.identity = perm[g.identity];
  h.label = g.label;
  h.mul.resize(g.mul.size());
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      h.mul[perm[a] * g.n + perm[b]] = perm[g.compose(a, b)];
  h.names.resize(g.n);
  for (int i = 0; i < g.n; ++i) h.names[perm[i]] = g.names[i];
  finalize_tables(h);
  return h;
}

std::vector<int> canonical_generators(const FiniteGroup& g) {
  std::vector<int> all(g.n);
  std::iota(all.begin(), all.end(), 0);
  return generating_set(g, all);
}

std::vector<int> generating_set(const FiniteGroup& g, const std::vector<int>& members) {
  std::vector<int> gens;
  std::vector<int> closure{g.identity};
  for (int x : members) {
    if (std::binary_search(closure.begin(), closure.end(), x)) continue;
    gens.push_back(x);
    std::vector<int> seed = closure;
    seed.push_back(x);
    closure = close_subset(g, std::move(seed));
    if (closure.size() == members.size()) break;
  }
  return gens;
}

}  // namespace nkind
