#include "trigcert/families.hpp"

#include <sstream>
#include <stdexcept>

#include "trigcert/criteria.hpp"

namespace trigcert {

SinePoly phi(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("phi: n must be odd and >= 3");
    std::vector<Rational> c(static_cast<size_t>(n), Rational(1));
    c.front() = make_rational(5, 4);
    c.back() = make_rational(2L * n - 3, 4L * n);
    return SinePoly(std::move(c));
}

SinePoly sigma(int n) {
    if (n < 2) throw std::invalid_argument("sigma: n must be >= 2");
    std::vector<Rational> c(static_cast<size_t>(n), Rational(1));
    c.back() = make_rational(1, 2);
    return SinePoly(std::move(c));
}

SinePoly theta(int n, int sign) {
    if (n < 2) throw std::invalid_argument("theta: n must be >= 2");
    if (sign != 1 && sign != -1) throw std::invalid_argument("theta: sign must be +-1");
    std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
    c.front() = Rational(n);
    c.back() = Rational(sign);
    return SinePoly(std::move(c));
}

SinePoly lukacs(int n) {
    if (n < 1) throw std::invalid_argument("lukacs: n must be >= 1");
    std::vector<Rational> c(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) c[static_cast<size_t>(k)] = Rational(n - k);
    return SinePoly(std::move(c));
}

SinePoly kappa_lambda(int n, const Rational& kappa, const Rational& lambda) {
    if (n < 3) throw std::invalid_argument("kappa_lambda: n must be >= 3");
    std::vector<Rational> c(static_cast<size_t>(n), Rational(1));
    c.front() = kappa;
    c.back() = lambda;
    return SinePoly(std::move(c));
}

SinePoly vietoris_sine(int n) { return SinePoly(vietoris_coefficients(n)); }

SinePoly FamilyId::build() const {
    switch (tag) {
        case FamilyTag::phi: return phi(n);
        case FamilyTag::sigma: return sigma(n);
        case FamilyTag::theta_minus: return theta(n, -1);
        case FamilyTag::theta_plus: return theta(n, +1);
        case FamilyTag::lukacs: return lukacs(n);
        case FamilyTag::vietoris: return vietoris_sine(n);
        case FamilyTag::kappa_lambda: return kappa_lambda(n, *kappa, *lambda);
    }
    throw std::logic_error("FamilyId: bad tag");
}

std::string FamilyId::name() const {
    switch (tag) {
        case FamilyTag::phi: return "phi";
        case FamilyTag::sigma: return "sigma";
        case FamilyTag::theta_minus: return "theta-";
        case FamilyTag::theta_plus: return "theta+";
        case FamilyTag::lukacs: return "lukacs";
        case FamilyTag::vietoris: return "vietoris";
        case FamilyTag::kappa_lambda: return "kappa-lambda";
    }
    return "?";
}

FamilyId parse_family_id(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ':')) parts.push_back(item);
    if (parts.size() < 2) throw std::invalid_argument("family id: expected \"<name>:<n>[...]\"");

    FamilyId id;
    const std::string& name = parts[0];
    if (name == "phi") id.tag = FamilyTag::phi;
    else if (name == "sigma") id.tag = FamilyTag::sigma;
    else if (name == "theta-") id.tag = FamilyTag::theta_minus;
    else if (name == "theta+") id.tag = FamilyTag::theta_plus;
    else if (name == "lukacs") id.tag = FamilyTag::lukacs;
    else if (name == "vietoris") id.tag = FamilyTag::vietoris;
    else if (name == "kappa-lambda") id.tag = FamilyTag::kappa_lambda;
    else throw std::invalid_argument("family id: unknown family \"" + name + "\"");

    try {
        size_t pos = 0;
        id.n = std::stoi(parts[1], &pos);
        if (pos != parts[1].size()) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("family id: bad degree \"" + parts[1] + "\"");
    }

    if (id.tag == FamilyTag::kappa_lambda) {
        if (parts.size() != 4)
            throw std::invalid_argument("family id: kappa-lambda needs \"kappa-lambda:n:kappa:lambda\"");
        id.kappa = parse_rational(parts[2]);
        id.lambda = parse_rational(parts[3]);
    } else if (parts.size() != 2) {
        throw std::invalid_argument("family id: unexpected extra parameters in \"" + text + "\"");
    }
    id.build();  // validate parameters eagerly
    return id;
}

}  // namespace trigcert
