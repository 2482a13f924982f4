#ifndef TRIGCERT_CERTIFY_HPP
#define TRIGCERT_CERTIFY_HPP

#include "trigcert/bounds.hpp"
#include "trigcert/sturm.hpp"
#include "trigcert/trigpoly.hpp"

namespace trigcert {

enum class CertifyMethod { sturm, interval };

// Decides nonnegativity on [0, pi]. The sturm method reduces to the
// algebraic polynomial on [-1, 1] and is complete; its negative witnesses
// are exact X-space rationals. The interval method runs the Taylor
// branch-and-bound prover and may return inconclusive.
Verdict certify_sine(const SinePoly& p, CertifyMethod method, int max_depth = 24);
Verdict certify_cosine(const CosinePoly& p, CertifyMethod method, int max_depth = 24);

}  // namespace trigcert

#endif
