#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "relbr/curve.hpp"
#include "relbr/factor.hpp"
#include "relbr/rat.hpp"

namespace relbr {

/// A place of Q: a prime p or the real place.
class Place {
public:
    static Place infinity() { return Place(Integer(0)); }
    static Place prime(Integer p);

    bool is_infinite() const { return p_ == 0; }
    const Integer& prime() const { return p_; }
    /// "inf" or the decimal prime.
    std::string str() const { return is_infinite() ? "inf" : p_.get_str(); }

    friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }
    /// infinity sorts first
    friend bool operator<(const Place& a, const Place& b) { return a.p_ < b.p_; }

private:
    explicit Place(Integer p) : p_(std::move(p)) {}
    Integer p_;
};

/// Local Hilbert symbol (a, b)_v in {+1, -1} for nonzero rationals.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

/// Infinity, 2, and every odd prime dividing a numerator or denominator of a or b.
std::vector<Place> relevant_places(const Rat& a, const Rat& b, const FactorLimits& limits = {});

/// First place (in relevant_places order) where (a, b)_v = -1, if any.
std::optional<Place> quaternion_obstruction(const Rat& a, const Rat& b, const FactorLimits& limits = {});

/// Hasse-Minkowski for the quaternion algebra (a, b) over Q.
bool quaternion_is_split(const Rat& a, const Rat& b, const FactorLimits& limits = {});

/// A cyclic extension L/Q: either Q(sqrt d) or the fixed field of a subgroup H
/// of (Z/N)* inside Q(zeta_N), with (Z/N)*/H cyclic.
class ExtensionDescriptor {
public:
    struct Quadratic {
        Integer d;
        friend bool operator==(const Quadratic&, const Quadratic&) = default;
    };
    struct Cyclotomic {
        unsigned long conductor;
        std::vector<unsigned long> subgroup;  // all elements of H, sorted
        friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;
    };

    /// d squarefree, d != 0, 1. Throws InvalidArgument.
    static ExtensionDescriptor quadratic(const Integer& d);
    /// H is generated by `generators`; throws InvalidArgument unless the quotient is cyclic.
    static ExtensionDescriptor cyclotomic(unsigned long conductor, const std::vector<unsigned long>& generators);

    bool is_quadratic() const { return std::holds_alternative<Quadratic>(data_); }
    const Quadratic& as_quadratic() const { return std::get<Quadratic>(data_); }
    const Cyclotomic& as_cyclotomic() const { return std::get<Cyclotomic>(data_); }

    unsigned degree() const { return degree_; }
    bool is_ramified(const Integer& p) const;
    /// Residue degree of an unramified prime; throws RamifiedPrime otherwise.
    unsigned residue_degree(const Integer& p) const;

    /// "quad:d" or "cyclo:N:h1,h2,..." (all elements of H).
    std::string str() const;

    friend bool operator==(const ExtensionDescriptor&, const ExtensionDescriptor&) = default;

private:
    ExtensionDescriptor(std::variant<Quadratic, Cyclotomic> data, unsigned degree) : data_(std::move(data)), degree_(degree) {}

    std::variant<Quadratic, Cyclotomic> data_;
    unsigned degree_;
};

/// The cyclic algebra (L/Q, sigma, b). b_normalized is the m-th-power-free representative.
struct CyclicAlgebraClass {
    unsigned m;
    ExtensionDescriptor ext;
    Rat b_raw;
    Rat b_normalized;

    /// Throws InvalidArgument if ext.degree() != m.
    static CyclicAlgebraClass make(unsigned m, ExtensionDescriptor ext, Rat b_raw, const FactorLimits& limits = {});
};

/// Least prime p unramified in L with residue_degree(p) not dividing v_p(b); its
/// existence certifies the class nontrivial. Absence decides nothing.
std::optional<Integer> unramified_obstruction(const CyclicAlgebraClass& alg, const FactorLimits& limits = {});

/// For two m = 2 classes over the same Q(sqrt d).
bool quaternion_class_equal(const CyclicAlgebraClass& lhs, const CyclicAlgebraClass& rhs, const FactorLimits& limits = {});

enum class ClassStatus { Trivial, NontrivialCertified, Undetermined };

std::string to_string(ClassStatus s);

struct ClassVerdict {
    ClassStatus status = ClassStatus::Undetermined;
    std::optional<Place> witness;
};

/// Trivial when b is an m-th power or (m = 2, quadratic) the quaternion splits;
/// NontrivialCertified with a witness place when a local obstruction is found.
ClassVerdict classify(const CyclicAlgebraClass& alg, const FactorLimits& limits = {});

/// Abelian invariants of the subgroup of Br(Q)[2] generated by quaternion classes (d, b_i).
/// All classes must be m = 2 over the same Q(sqrt d).
std::vector<unsigned> quaternion_group_structure(const std::vector<CyclicAlgebraClass>& classes, const FactorLimits& limits = {});

struct BrauerPresentation {
    struct Entry {
        CurvePoint point;
        unsigned point_order = 0;
        CyclicAlgebraClass algebra;
        ClassVerdict verdict;
    };
    std::vector<Entry> entries;
    /// Present only when every class order is decided (m = 2, quadratic L).
    std::optional<std::vector<unsigned>> group_structure;
    /// Every class order divides this.
    unsigned order_bound = 1;
};

}  // namespace relbr
