#pragma once

#include "skewcap/altpoly.hpp"
#include "skewcap/matrix.hpp"
#include "skewcap/weyl.hpp"

namespace skewcap {

// The substitution pi(g): coordinates map to linear forms and monomial
// images are expanded on demand and memoized, so repeated application to
// overlapping monomial sets stays cheap. Instances are not safe to share
// across threads.
class GroupSubstitution {
  public:
    // Throws std::domain_error for singular g.
    GroupSubstitution(const ScalarMatrix& g, int n);

    AltPoly operator()(const AltPoly& f) const;
    int n() const { return n_; }

  private:
    const AltPoly& image(const AltPoly::Monomial& m) const;

    int n_;
    std::map<VarIndex, AltPoly> var_images_;
    mutable std::map<AltPoly::Monomial, AltPoly> memo_;
};

// pi(g) f: substitutes x -> g^{-1} x t(g^{-1}) and re-expands in the
// canonical coordinates. Throws std::domain_error for singular g.
AltPoly group_action(const ScalarMatrix& g, const AltPoly& f);

// Closed forms for pi(g) d_{i,j} pi(g)^{-1} and pi(g) x_{i,j} pi(g)^{-1}:
// sums of 2x2 minors of g (resp. g^{-1}) against the generators.
WeylElement conjugate_derivation(const ScalarMatrix& g, int i, int j);
WeylElement conjugate_multiplication(const ScalarMatrix& g, int i, int j);

// dpi(E_{i,j}) = -sum_k x_{k,j} d_{k,i}.
WeylElement dpi(int n, int i, int j);

}  // namespace skewcap
