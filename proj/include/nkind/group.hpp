#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nkind/parallel.hpp"

namespace nkind {

// Malformed construction expression (CLI exit 2).
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configured order cap exceeded (CLI exit 3).
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A branch the theory guarantees failed to certify; always a bug (CLI exit 4).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline constexpr int kDefaultOrderCap = 200;
inline constexpr int kDefaultMaterializeCap = 500;

// A finite group as an indexed element set with an explicit composition
// table. Everything downstream iterates the table exhaustively, so orders
// stay below the configured cap.
struct FiniteGroup {
  int n = 0;
  std::vector<int> mul;  // row-major n*n: mul[a*n+b] = a.b
  std::vector<int> inv;
  int identity = 0;
  std::string label;
  std::vector<std::string> names;   // display names, size n
  std::vector<int> element_orders;  // size n

  int compose(int a, int b) const { return mul[a * n + b]; }
  int inverse(int a) const { return inv[a]; }
  int order(int a) const { return element_orders[a]; }
  // g^-1 x g
  int conjugate(int x, int g) const { return compose(compose(inv[g], x), g); }
  int power(int a, long long e) const;
  int commutator(int a, int b) const {
    return compose(compose(inv[a], inv[b]), compose(a, b));
  }
};

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;  // sorted ascending, contains the identity

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
};

// Conjugacy class of subgroups; the representative is the lexicographically
// least member set in the class.
struct SubgroupClass {
  Subgroup representative;
  long long classSize = 1;
};

struct GroupHom {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<int> image;  // size source->n

  int operator()(int x) const { return image[x]; }
  bool is_homomorphism() const;
  bool is_surjective() const;
  bool is_injective() const;
};

// -- construction ------------------------------------------------------

// Grammar (see the CLI docs for the authoritative description):
//   cyclic:N | sym:N | dihedral:N | product(SPEC,SPEC)
//   | semidirect(c:M,p:SPEC,action:[u1,...]) | perm(DEGREE;CYCLES;...)
FiniteGroup make_group(const std::string& spec, int order_cap = kDefaultOrderCap);

FiniteGroup make_cyclic(long long n, int order_cap = kDefaultOrderCap);
FiniteGroup make_symmetric(int degree, int order_cap = kDefaultOrderCap);
FiniteGroup make_dihedral(int n, int order_cap = kDefaultOrderCap);
FiniteGroup make_product(const FiniteGroup& a, const FiniteGroup& b,
                         int order_cap = kDefaultOrderCap);
// Semidirect C_m x| P where each canonical generator of P acts as the given
// unit mod m; composition is (c,x).(c',x') = (c + u_x c', x x').
FiniteGroup make_semidirect(long long m, const FiniteGroup& p,
                            const std::vector<long long>& generator_units,
                            int order_cap = kDefaultOrderCap);
// Permutation group generated by cycles (0-based points internally).
FiniteGroup make_perm_group(int degree,
                            const std::vector<std::vector<std::vector<int>>>& generators,
                            int order_cap = kDefaultOrderCap);
FiniteGroup make_quaternion8();

// Fills inv, element_orders and default names from the mul table.
void finalize_tables(FiniteGroup& g);

// Exhaustive associativity/identity/inverse/closure check; throws
// InternalError on violation.
void check_group_axioms(const FiniteGroup& g);

// Greedy generating sequence: scan indices ascending, keep those enlarging
// the generated subgroup. Deterministic; used by the semidirect action
// grammar and the corpus generator.
std::vector<int> canonical_generators(const FiniteGroup& g);
std::vector<int> generating_set(const FiniteGroup& g, const std::vector<int>& members);

// -- subgroup machinery ------------------------------------------------

std::vector<int> close_subset(const FiniteGroup& g, std::vector<int> seed);
Subgroup cyclic_subgroup(const FiniteGroup& g, int x);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> members);
bool is_subgroup_set(const FiniteGroup& g, const std::vector<int>& members);

// Every subgroup exactly once, sorted by (order, members lex): cyclic
// subgroups closed under pairwise joins until stable.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, Exec exec = Exec::Parallel);

// Partition of all_subgroups by conjugacy, classes sorted by (order, rep lex).
std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g, Exec exec = Exec::Parallel);
std::vector<SubgroupClass> classify_subgroups(const FiniteGroup& g,
                                              const std::vector<Subgroup>& subs,
                                              Exec exec = Exec::Parallel);

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, int by);
// Lexicographically least conjugate member set.
std::vector<int> canonical_conjugate(const FiniteGroup& g, const Subgroup& s);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);
bool is_normal(const FiniteGroup& g, const Subgroup& s);
bool is_cyclic_subgroup(const FiniteGroup& g, const Subgroup& s);
bool subgroup_leq(const Subgroup& a, const Subgroup& b);  // a subset of b

struct Quotient {
  std::shared_ptr<const FiniteGroup> group;
  GroupHom projection;  // source = parent, target = group.get()
};

// Coset group G/N; requires N normal in G (SpecError otherwise).
Quotient quotient(const FiniteGroup& g, const Subgroup& nsub);

Subgroup commutator_subgroup(const FiniteGroup& g);
long long abelianization_order(const FiniteGroup& g);

// The Sylow p-subgroup reached by greedily enlarging a p-subgroup inside
// its normalizer (always succeeds by Sylow's theorem).
Subgroup sylow_subgroup(const FiniteGroup& g, long long p);

// Standalone copy of a subgroup with reindexed elements.
FiniteGroup materialize(const FiniteGroup& g, const Subgroup& s);

// Same group with elements renamed by the permutation perm (new index of x
// is perm[x]); used by the relabeling-invariance tests.
FiniteGroup relabel(const FiniteGroup& g, const std::vector<int>& perm);

}  // namespace nkind
