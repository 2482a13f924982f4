#include "trigcert/certify.hpp"

namespace trigcert {

Verdict certify_sine(const SinePoly& p, CertifyMethod method, int max_depth) {
    if (method == CertifyMethod::sturm) {
        if (p.effective_degree() == 0) return Verdict::nonneg({});
        return is_nonneg_on(sine_to_algebraic(p), Rational(-1), Rational(1));
    }
    return branch_and_bound_nn(p, Rational(0), pi_upper(), max_depth);
}

Verdict certify_cosine(const CosinePoly& p, CertifyMethod method, int max_depth) {
    if (method == CertifyMethod::sturm) {
        AlgPoly q = cosine_to_algebraic(p);
        return is_nonneg_on(q, Rational(-1), Rational(1));
    }
    return branch_and_bound_nn(p, Rational(0), pi_upper(), max_depth);
}

}  // namespace trigcert
