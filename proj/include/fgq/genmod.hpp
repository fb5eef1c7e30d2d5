#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "fgq/linear.hpp"

namespace fgq {

/// Exponents of (x, y, u, v) in one monomial.
using MonomialExp = std::array<int, 4>;

/// Graded-lexicographic monomial order: total degree first, then lexicographic
/// on the exponent vector. Fixes the evaluation order of poly_act.
struct GradedLex {
    bool operator()(const MonomialExp& a, const MonomialExp& b) const {
        int da = a[0] + a[1] + a[2] + a[3], db = b[0] + b[1] + b[2] + b[3];
        if (da != db) return da < db;
        return a < b;
    }
};

/// An element of the ideal generated by the four indeterminates inside
/// Z[x, y, u, v]: an integer polynomial with zero constant term. Terms are
/// normalized (no zero coefficients); the class invariant forbids the
/// all-zero exponent vector, which addition and multiplication preserve.
class RPoly {
public:
    using Terms = std::map<MonomialExp, long long, GradedLex>;

    RPoly() = default;

    static RPoly zero() { return RPoly(); }
    /// which: 0 = x, 1 = y, 2 = u, 3 = v.
    static RPoly indeterminate(int which);
    /// Throws invalid_module_error on a constant term (all-zero exponents).
    static RPoly monomial(const MonomialExp& exp, long long coeff);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    RPoly operator+(const RPoly& o) const;
    RPoly operator-() const;
    RPoly operator-(const RPoly& o) const { return *this + (-o); }
    RPoly operator*(const RPoly& o) const;

    bool operator==(const RPoly&) const = default;

    std::string to_string() const;

private:
    Terms terms_;
};

/// A group with four commuting central endomorphisms phi, psi, mu, nu acting
/// as the indeterminates, subject to the annihilator relations
/// phi + mu + phi mu = 0 and psi + nu + psi nu = 0 (pointwise).
struct GenModule {
    GroupTable group;
    ElementMap phi, psi, mu, nu;
};

/// First violated module invariant with a witness element; nullopt when valid.
std::optional<std::string> check_module(const GenModule& m);

struct PointedModule {
    GenModule module;
    int e = 0;
};

struct PointedQuasigroup {
    CayleyTable table;
    int point = 0;
};

/// Evaluates p at (phi, psi, mu, nu) on x: monomials in graded-lex order,
/// each the composition phi^a psi^b mu^c nu^d applied to x and scaled by the
/// integer coefficient through repeated group addition.
int poly_act(const RPoly& p, const GenModule& m, int x);

/// True iff poly_act(p, m, x) is the group neutral for every x.
bool annihilates(const RPoly& p, const GenModule& m);

/// Quasigroup -> module: takes the arithmetic form with neutral pq.point and
/// builds phi(x) = -x + f(x), mu(x) = -x + f^-1(x), psi(x) = -x + g(x),
/// nu(x) = -x + g^-1(x); every module invariant is re-certified
/// (internal_error on failure, unreachable for FG input).
PointedModule rho(const PointedQuasigroup& pq);

/// Module -> quasigroup: f(x) = x + phi(x), g(x) = x + psi(x), certified
/// automorphisms with inverses x + mu(x) and x + nu(x); the table is the
/// standard linear product and the point is the group neutral.
/// Throws invalid_module_error when the record is not a valid module.
PointedQuasigroup sigma(const PointedModule& pm);

}  // namespace fgq
