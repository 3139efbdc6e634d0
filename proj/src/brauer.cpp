#include "relbr/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "relbr/errors.hpp"

namespace relbr {

namespace {

// Integer in the same square class as r.
Integer square_class_integer(const Rat& r)
{
    return r.num() * r.den();
}

// Splits n = p^e * u with p not dividing u.
unsigned split_off(Integer& n, const Integer& p)
{
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

unsigned mod8(const Integer& u)
{
    return static_cast<unsigned>(mpz_fdiv_ui(u.get_mpz_t(), 8));
}

unsigned eps2(const Integer& u)
{
    const unsigned r = mod8(u);
    return (r == 3 || r == 7) ? 1U : 0U;
}

unsigned omega2(const Integer& u)
{
    const unsigned r = mod8(u);
    return (r == 3 || r == 5) ? 1U : 0U;
}

unsigned long multiplicative_order_in_quotient(unsigned long g, const ExtensionDescriptor::Cyclotomic& c)
{
    unsigned long acc = g % c.conductor;
    for (unsigned long k = 1;; ++k) {
        if (std::binary_search(c.subgroup.begin(), c.subgroup.end(), acc)) return k;
        acc = acc * g % c.conductor;
    }
}

}  // namespace

Place Place::prime(Integer p)
{
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw InvalidArgument("place must be a prime or infinity");
    return Place(std::move(p));
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v)
{
    if (a.is_zero() || b.is_zero()) throw InvalidArgument("Hilbert symbol of zero");
    if (v.is_infinite()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
    const Integer& p = v.prime();
    Integer u = square_class_integer(a), w = square_class_integer(b);
    const unsigned alpha = split_off(u, p), beta = split_off(w, p);
    if (p == 2) {
        const unsigned e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
        return e % 2 == 0 ? 1 : -1;
    }
    int sign = 1;
    const Integer half = (p - 1) / 2;
    if ((alpha * beta) % 2 == 1 && mpz_odd_p(half.get_mpz_t())) sign = -sign;
    if (beta % 2 == 1) sign *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
    if (alpha % 2 == 1) sign *= mpz_legendre(w.get_mpz_t(), p.get_mpz_t());
    return sign;
}

std::vector<Place> relevant_places(const Rat& a, const Rat& b, const FactorLimits& limits)
{
    std::set<Integer> primes{Integer(2)};
    for (const Rat& r : {a, b}) {
        for (const Integer& p : prime_support(r, limits)) primes.insert(p);
    }
    std::vector<Place> out{Place::infinity()};
    for (const Integer& p : primes) out.push_back(Place::prime(p));
    return out;
}

std::optional<Place> quaternion_obstruction(const Rat& a, const Rat& b, const FactorLimits& limits)
{
    for (const Place& v : relevant_places(a, b, limits)) {
        if (hilbert_symbol(a, b, v) == -1) return v;
    }
    return std::nullopt;
}

bool quaternion_is_split(const Rat& a, const Rat& b, const FactorLimits& limits)
{
    return !quaternion_obstruction(a, b, limits).has_value();
}

ExtensionDescriptor ExtensionDescriptor::quadratic(const Integer& d)
{
    if (d == 0 || d == 1) throw InvalidArgument("quadratic extension needs d != 0, 1");
    for (const auto& [p, e] : factor(d).primes) {
        if (e > 1) throw InvalidArgument("quadratic extension needs squarefree d, got " + d.get_str());
    }
    return ExtensionDescriptor(Quadratic{d}, 2);
}

ExtensionDescriptor ExtensionDescriptor::cyclotomic(unsigned long conductor, const std::vector<unsigned long>& generators)
{
    if (conductor < 3) throw InvalidArgument("cyclotomic conductor must be at least 3");
    std::vector<unsigned long> units;
    for (unsigned long a = 1; a < conductor; ++a) {
        if (std::gcd(a, conductor) == 1) units.push_back(a);
    }
    std::set<unsigned long> subgroup{1};
    for (unsigned long g : generators) {
        g %= conductor;
        if (std::gcd(g, conductor) != 1) throw InvalidArgument("subgroup generator " + std::to_string(g) + " is not a unit");
    }
    // closure under multiplication by the generators
    std::vector<unsigned long> frontier{1};
    while (!frontier.empty()) {
        const unsigned long e = frontier.back();
        frontier.pop_back();
        for (const unsigned long g : generators) {
            const unsigned long next = e * (g % conductor) % conductor;
            if (subgroup.insert(next).second) frontier.push_back(next);
        }
    }
    Cyclotomic data{conductor, {subgroup.begin(), subgroup.end()}};
    const auto degree = static_cast<unsigned>(units.size() / data.subgroup.size());
    const bool cyclic = std::any_of(units.begin(), units.end(),
                                    [&](unsigned long u) { return multiplicative_order_in_quotient(u, data) == degree; });
    if (!cyclic) throw InvalidArgument("(Z/" + std::to_string(conductor) + ")*/H is not cyclic");
    return ExtensionDescriptor(std::move(data), degree);
}

bool ExtensionDescriptor::is_ramified(const Integer& p) const
{
    if (is_quadratic()) {
        const Integer& d = as_quadratic().d;
        if (p == 2) return mod8(d) % 4 != 1;
        return mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()) != 0;
    }
    return mpz_divisible_p(Integer(as_cyclotomic().conductor).get_mpz_t(), p.get_mpz_t()) != 0;
}

unsigned ExtensionDescriptor::residue_degree(const Integer& p) const
{
    if (is_ramified(p)) throw RamifiedPrime("prime " + p.get_str() + " ramifies in " + str());
    if (is_quadratic()) {
        const Integer& d = as_quadratic().d;
        const Integer disc = mod8(d) % 4 == 1 ? d : Integer(4 * d);
        return mpz_kronecker(disc.get_mpz_t(), p.get_mpz_t()) == 1 ? 1U : 2U;
    }
    const auto& c = as_cyclotomic();
    return static_cast<unsigned>(multiplicative_order_in_quotient(mpz_fdiv_ui(p.get_mpz_t(), c.conductor), c));
}

std::string ExtensionDescriptor::str() const
{
    if (is_quadratic()) return "quad:" + as_quadratic().d.get_str();
    const auto& c = as_cyclotomic();
    std::string out = "cyclo:" + std::to_string(c.conductor) + ":";
    for (std::size_t i = 0; i < c.subgroup.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c.subgroup[i]);
    }
    return out;
}

CyclicAlgebraClass CyclicAlgebraClass::make(unsigned m, ExtensionDescriptor ext, Rat b_raw, const FactorLimits& limits)
{
    if (ext.degree() != m) {
        throw InvalidArgument("extension " + ext.str() + " has degree " + std::to_string(ext.degree()) + ", expected " + std::to_string(m));
    }
    Rat normalized = mth_power_free_part(b_raw, m, limits);
    return {m, std::move(ext), std::move(b_raw), std::move(normalized)};
}

std::optional<Integer> unramified_obstruction(const CyclicAlgebraClass& alg, const FactorLimits& limits)
{
    for (const Integer& p : prime_support(alg.b_raw, limits)) {
        if (alg.ext.is_ramified(p)) continue;
        const long v = valuation(alg.b_raw, p);
        if (v % static_cast<long>(alg.ext.residue_degree(p)) != 0) return p;
    }
    return std::nullopt;
}

bool quaternion_class_equal(const CyclicAlgebraClass& lhs, const CyclicAlgebraClass& rhs, const FactorLimits& limits)
{
    if (lhs.m != 2 || rhs.m != 2 || !lhs.ext.is_quadratic() || !(lhs.ext == rhs.ext)) {
        throw InvalidArgument("quaternion comparison needs two m = 2 classes over the same quadratic field");
    }
    return quaternion_is_split(Rat(lhs.ext.as_quadratic().d), lhs.b_raw * rhs.b_raw, limits);
}

std::string to_string(ClassStatus s)
{
    switch (s) {
    case ClassStatus::Trivial: return "trivial";
    case ClassStatus::NontrivialCertified: return "nontrivial";
    case ClassStatus::Undetermined: return "undetermined";
    }
    return "undetermined";
}

ClassVerdict classify(const CyclicAlgebraClass& alg, const FactorLimits& limits)
{
    if (alg.m == 1 || alg.b_normalized == Rat(1)) return {ClassStatus::Trivial, std::nullopt};
    if (alg.ext.is_quadratic()) {
        const auto place = quaternion_obstruction(Rat(alg.ext.as_quadratic().d), alg.b_raw, limits);
        if (!place) return {ClassStatus::Trivial, std::nullopt};
        return {ClassStatus::NontrivialCertified, place};
    }
    if (const auto p = unramified_obstruction(alg, limits)) return {ClassStatus::NontrivialCertified, Place::prime(*p)};
    return {ClassStatus::Undetermined, std::nullopt};
}

std::vector<unsigned> quaternion_group_structure(const std::vector<CyclicAlgebraClass>& classes, const FactorLimits& limits)
{
    if (classes.empty()) return {};
    const auto& ext = classes.front().ext;
    std::set<Place> places;
    for (const auto& alg : classes) {
        if (alg.m != 2 || !alg.ext.is_quadratic() || !(alg.ext == ext)) {
            throw InvalidArgument("group structure needs m = 2 classes over one quadratic field");
        }
        for (const Place& v : relevant_places(Rat(ext.as_quadratic().d), alg.b_raw, limits)) places.insert(v);
    }
    // Rows are local-invariant vectors over F_2; the class group is (Z/2)^rank.
    std::vector<std::vector<int>> rows;
    for (const auto& alg : classes) {
        std::vector<int> row;
        for (const Place& v : places) row.push_back(hilbert_symbol(Rat(ext.as_quadratic().d), alg.b_raw, v) == -1 ? 1 : 0);
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    const std::size_t cols = places.size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        auto pivot = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(), [col](const auto& r) { return r[col] == 1; });
        if (pivot == rows.end()) continue;
        std::swap(*pivot, rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != rank && rows[i][col] == 1) {
                for (std::size_t j = 0; j < cols; ++j) rows[i][j] ^= rows[rank][j];
            }
        }
        ++rank;
    }
    return std::vector<unsigned>(rank, 2U);
}

}  // namespace relbr
