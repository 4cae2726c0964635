#pragma once

#include <vector>

#include "nkind/group.hpp"

namespace nkind {

// Independent reference implementations. These deliberately avoid the
// library's production code paths (join closure, p'-element detectors,
// Goursat composition) so they can serve as oracles in the verification
// suite and in tests.

// Exhaustive scan over all subsets containing the identity. Only feasible
// for |G| <= ~16.
std::vector<Subgroup> subgroups_by_subset_scan(const FiniteGroup& g);

// Worklist of closures S -> close(S + {x}); complete for any order, used as
// the oracle where the subset scan is infeasible.
std::vector<Subgroup> subgroups_by_generator_bfs(const FiniteGroup& g);

// Definition-unfolding structure searches: look for an explicit (C, P)
// realizing the direct product / the extension.
bool brute_force_p_elementary(const FiniteGroup& g, long long p);
bool brute_force_p_hyperelementary(const FiniteGroup& g, long long p);

// Backtracking isomorphism search; intended for orders <= ~48.
bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace nkind
