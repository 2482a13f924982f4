#ifndef TRIGCERT_FAMILIES_HPP
#define TRIGCERT_FAMILIES_HPP

#include <optional>
#include <string>

#include "trigcert/rational.hpp"
#include "trigcert/trigpoly.hpp"

namespace trigcert {

// Named coefficient families.

// (5/4, 1, ..., 1, (2n-3)/(4n)), odd n >= 3.
SinePoly phi(int n);

// (1, ..., 1, 1/2), n >= 2.
SinePoly sigma(int n);

// (n, 0, ..., 0, sign), sign = +-1, n >= 2.
SinePoly theta(int n, int sign);

// (n, n-1, ..., 1).
SinePoly lukacs(int n);

// (kappa, 1, ..., 1, lambda), n >= 3.
SinePoly kappa_lambda(int n, const Rational& kappa, const Rational& lambda);

SinePoly vietoris_sine(int n);

enum class FamilyTag { phi, sigma, theta_minus, theta_plus, lukacs, vietoris, kappa_lambda };

struct FamilyId {
    FamilyTag tag;
    int n = 0;
    std::optional<Rational> kappa;
    std::optional<Rational> lambda;

    SinePoly build() const;
    std::string name() const;
};

// Parses "phi:5", "sigma:6", "theta-:2", "theta+:4", "lukacs:3",
// "vietoris:7", "kappa-lambda:4:1:1/2".
FamilyId parse_family_id(const std::string& text);

}  // namespace trigcert

#endif
