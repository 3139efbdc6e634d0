#include "relbr/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "relbr/errors.hpp"

namespace relbr {

namespace {

std::vector<unsigned long> sieve(unsigned long bound)
{
    std::vector<bool> composite(bound + 1, false);
    std::vector<unsigned long> primes;
    for (unsigned long i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

const std::vector<unsigned long>& default_primes()
{
    static const std::vector<unsigned long> primes = sieve(FactorLimits{}.trial_bound);
    return primes;
}

bool is_probable_prime(const Integer& n)
{
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// One Brent-rho attempt with polynomial x^2 + c; returns a nontrivial factor or 0.
Integer rho_split(const Integer& n, unsigned long c, unsigned long max_iterations)
{
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, iterations = 0;
    const unsigned long batch = 128;
    auto step = [&](Integer& v) {
        v = v * v + c;
        v %= n;
    };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            const unsigned long lim = std::min(batch, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                step(y);
                Integer diff = x - y;
                q = (q * abs(diff)) % n;
            }
            g = gcd(q, n);
            k += lim;
            iterations += lim;
            if (iterations > max_iterations) return 0;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            step(ys);
            Integer diff = x - ys;
            g = gcd(abs(diff), n);
        } while (g == 1);
    }
    return g == n ? Integer(0) : g;
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out, const FactorLimits& limits)
{
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Integer root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        split_into(root, out, limits);
        split_into(root, out, limits);
        return;
    }
    for (unsigned long c = 1; c <= 8; ++c) {
        const Integer d = rho_split(n, c, limits.rho_iterations);
        if (d != 0) {
            split_into(d, out, limits);
            split_into(Integer(n / d), out, limits);
            return;
        }
    }
    throw FactoringLimitExceeded("could not factor cofactor " + n.get_str());
}

}  // namespace

Integer Factorization::value() const
{
    Integer v = 1;
    for (const auto& [p, e] : primes) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return sign < 0 ? Integer(-v) : v;
}

Factorization factor(const Integer& n, const FactorLimits& limits)
{
    if (n == 0) throw std::domain_error("factor(0)");
    Factorization result;
    result.sign = sgn(n) < 0 ? -1 : 1;
    Integer rest = abs(n);
    std::vector<unsigned long> custom;
    if (limits.trial_bound != FactorLimits{}.trial_bound) custom = sieve(limits.trial_bound);
    const auto& primes = custom.empty() && limits.trial_bound == FactorLimits{}.trial_bound ? default_primes() : custom;
    for (const unsigned long p : primes) {
        if (rest == 1) break;
        if (Integer(p) * p > rest) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0) result.primes[Integer(p)] = e;
    }
    split_into(rest, result.primes, limits);
    return result;
}

std::vector<Integer> prime_support(const Rat& r, const FactorLimits& limits)
{
    if (r.is_zero()) throw std::domain_error("prime support of zero");
    std::vector<Integer> out;
    for (const auto& [p, e] : factor(r.num(), limits).primes) out.push_back(p);
    for (const auto& [p, e] : factor(r.den(), limits).primes) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

long valuation(const Rat& r, const Integer& p)
{
    if (r.is_zero()) throw std::domain_error("valuation of zero");
    auto count = [&p](Integer n) {
        long e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        return e;
    };
    return count(abs(r.num())) - count(r.den());
}

Rat mth_power_free_part(const Rat& r, unsigned m, const FactorLimits& limits)
{
    if (r.is_zero()) throw std::domain_error("mth_power_free_part of zero");
    if (m == 0) throw std::domain_error("mth_power_free_part with m = 0");
    std::map<Integer, long> exps;
    for (const auto& [p, e] : factor(r.num(), limits).primes) exps[p] += e;
    for (const auto& [p, e] : factor(r.den(), limits).primes) exps[p] -= e;
    Integer s = 1;
    for (const auto& [p, e] : exps) {
        const long reduced = ((e % static_cast<long>(m)) + m) % m;
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(reduced));
        s *= pe;
    }
    if (m % 2 == 0 && r.sign() < 0) s = -s;
    return Rat(s);
}

bool is_mth_power(const Rat& r, unsigned m)
{
    if (m == 0) throw std::domain_error("is_mth_power with m = 0");
    if (r.is_zero()) return true;
    if (m % 2 == 0 && r.sign() < 0) return false;
    auto exact_root = [m](const Integer& n) {
        Integer root;
        return mpz_root(root.get_mpz_t(), n.get_mpz_t(), m) != 0;
    };
    return exact_root(r.num()) && exact_root(r.den());
}

}  // namespace relbr
