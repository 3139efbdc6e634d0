#pragma once

#include <map>
#include <vector>

#include "relbr/rat.hpp"

namespace relbr {

/// Caps on the desk-scale factoring engine: trial division by primes up to
/// `trial_bound`, then Brent/Pollard rho limited to `rho_iterations` steps
/// per split attempt.
struct FactorLimits {
    unsigned long trial_bound = 1'000'000;
    unsigned long rho_iterations = 2'000'000;
};

struct Factorization {
    int sign = 1;
    std::map<Integer, unsigned> primes;

    Integer value() const;
};

/// Factors a nonzero integer. Throws FactoringLimitExceeded when a composite
/// cofactor cannot be split within `limits`.
Factorization factor(const Integer& n, const FactorLimits& limits = {});

/// Prime support of numerator and denominator of a nonzero rational.
std::vector<Integer> prime_support(const Rat& r, const FactorLimits& limits = {});

/// p-adic valuation of a nonzero rational.
long valuation(const Rat& r, const Integer& p);

/// Representative s of r modulo (Q*)^m: s is an integer whose prime exponents
/// all lie in [0, m). For even m the sign of r is kept; for odd m, s > 0.
Rat mth_power_free_part(const Rat& r, unsigned m, const FactorLimits& limits = {});

/// True iff r is the m-th power of a rational.
bool is_mth_power(const Rat& r, unsigned m);

}  // namespace relbr
