#pragma once

#include <vector>

#include "eislat/eisenstein.hpp"

namespace eislat {

// Exact Bernoulli number B_n (B_1 = -1/2 convention), memoized.
Rat bernoulli(unsigned n);

// Bernoulli polynomial B_n(x), exact.
Rat bernoulli_poly(unsigned n, const Rat& x);

// Quadratic character mod 3: 1, -1, 0 for n = 1, 2, 0 mod 3.
int chi3(long n);

// Generalized Bernoulli number B_{n,chi} for the nontrivial character mod 3,
// via the conductor-3 Bernoulli-polynomial formula
//   B_{n,chi} = 3^{n-1} (B_n(1/3) - B_n(2/3)).
Rat bernoulli_chi3(unsigned n);

enum class Geometry { orthogonal, symplectic };

struct MassValue {
    int r = 0;
    Rat value;
};

// Mass of the genus of even unimodular O-modules of rank r (4 | r):
//   mu_r = 1/(2^{r-1} r!) * prod_{j=1}^{r/2} |B_{2j} B_{2j-1,chi}|.
MassValue mass_even(int r);

// Mass of the genus of odd unimodular O-modules of rank r (4 | r):
//   mu*_r = (3^{r/2}+1)/(2^r r!) * prod_{j=1}^{r/2} |B_{2j} B_{2j-1,chi}|.
MassValue mass_odd(int r);

// Number of maximal totally isotropic subspaces of F_3^r:
// orthogonal (hyperbolic plus-type) form: prod_{j=1}^{r/2} (3^{j-1}+1);
// symplectic form: prod_{j=1}^{r/2} (3^j+1).  Throws on odd r.
Int isotropic_count(int r, Geometry g);

// Independent oracle: exhaustive enumeration of maximal totally isotropic
// subspaces of F_3^r for the same two forms.  Guarded to r <= 6.
Int brute_force_isotropic(int r, Geometry g);

} // namespace eislat
