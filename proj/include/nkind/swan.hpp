#pragma once

#include <vector>

#include "nkind/families.hpp"
#include "nkind/group.hpp"
#include "nkind/parallel.hpp"
#include "nkind/snf.hpp"

namespace nkind {

// Fixed-point counts of cyclic subgroups on the coset spaces G/H, H running
// over the p-hyperelementary family. These are the marks that detect
// permutation modules rationally.
struct MarksMatrix {
  std::vector<SubgroupClass> rows;     // inducing family H_p, up to conjugacy
  std::vector<SubgroupClass> columns;  // cyclic subgroup classes
  std::vector<long long> entries;      // rows x columns, row-major

  long long at(std::size_t r, std::size_t c) const { return entries[r * columns.size() + c]; }
};

// Coefficients a_H with sum_H a_H . m_C([G/H]) = 1 for every cyclic C, all
// denominators prime to p.
struct DressCertificate {
  long long prime = 2;
  std::vector<SubgroupClass> classes;  // the family the coefficients refer to
  std::vector<BigRat> coefficients;    // parallel to classes; zeros allowed
};

// Fixed cosets of C acting on G/H.
long long mark(const FiniteGroup& g, const Subgroup& H, const Subgroup& C);

MarksMatrix marks_matrix(const FiniteGroup& g, long long p, Exec exec = Exec::Parallel);

// Solves the marks system over the p-local integers via integer Smith normal
// form, then greedily zeroes out classes that are not needed (ascending
// index). Throws InternalError when no p-local solution exists, which Dress
// induction rules out for correct inputs.
DressCertificate dress_certificate(const FiniteGroup& g, long long p,
                                   Exec exec = Exec::Parallel);

// Exact rational identity on every cyclic column plus the denominator check.
bool verify_certificate(const FiniteGroup& g, const DressCertificate& cert,
                        Exec exec = Exec::Parallel);

}  // namespace nkind
