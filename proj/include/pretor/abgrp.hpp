#pragma once

// Finite abelian groups of order dividing a fixed N.  Indecomposables are the
// cyclic groups Z/p^k with p^k | N.  A morphism (+)Z/m_i -> (+)Z/n_j is an
// integer matrix (rows = target summands) whose (j, i) entry is read modulo
// n_j and satisfies m_i * f_ji = 0 mod n_j.

#include "pretor/abcat.hpp"

#include <map>
#include <mutex>
#include <set>

namespace pretor::abgrp {

/// Sorted multiset of prime-power cyclic orders; empty = zero group.
struct AbGroup {
    std::vector<Scalar> cyclic_orders;
    Scalar order() const;
    std::string to_string() const;  // "Z/4+Z/3", "0"
    auto operator<=>(const AbGroup&) const = default;
};

/// Prime set generating the multiplicative set S.
struct PrimeSet {
    std::set<Scalar> primes;
    bool contains(Scalar p) const { return primes.count(p) > 0; }
    std::string to_string() const;  // "{2,3}"
};

/// Every prime of |M| lies in P.
bool in_T(const PrimeSet& p, const AbGroup& m);
/// No prime of |M| lies in P.
bool in_F(const PrimeSet& p, const AbGroup& m);

/// Orders of all elements of M, by enumeration.
std::vector<Scalar> element_orders(const AbGroup& m);

class AbGrpCategory : public Category {
public:
    explicit AbGrpCategory(Scalar bound = 360, std::size_t element_limit = 1u << 20);

    Scalar bound() const { return bound_; }
    Scalar cyclic_order(IndId id) const { return inventory_.at(static_cast<std::size_t>(id)); }
    IndId id(Scalar prime_power) const;
    ObjectExpr object(const AbGroup& g) const;
    AbGroup group(const ObjectExpr& x) const;
    std::vector<Scalar> orders(const ObjectExpr& x) const;

    /// Morphism from an integer matrix, checked to be well defined.
    Morphism make_morphism(const ObjectExpr& x, const ObjectExpr& y, const Matrix& m) const;
    std::vector<Scalar> apply(const Morphism& f, const std::vector<Scalar>& element) const;
    /// All elements of x in mixed-radix order.
    std::vector<std::vector<Scalar>> elements(const ObjectExpr& x) const;

    using Category::length;
    std::string backend() const override { return "abgrp"; }
    std::string bounds() const override { return "order | " + std::to_string(bound_); }
    std::size_t indecomposable_count() const override { return inventory_.size(); }
    std::string name(IndId id) const override;
    /// Accepts "Z/4", "Z4" and "4".
    std::optional<IndId> parse_indecomposable(std::string_view text) const override;
    int length(IndId id) const override;
    std::vector<IndId> composition_factors(IndId id) const override;
    Morphism zero(const ObjectExpr& x, const ObjectExpr& y) const override;
    Morphism identity(const ObjectExpr& x) const override;
    Morphism compose(const Morphism& g, const Morphism& f) const override;
    Morphism add(const Morphism& f, const Morphism& g) const override;
    Morphism scale(const Morphism& f, Scalar k) const override;
    std::vector<Morphism> hom_basis(const ObjectExpr& x, const ObjectExpr& y) const override;
    std::vector<Scalar> coords(const Morphism& f) const override;
    std::vector<Scalar> coord_moduli(const ObjectExpr& x, const ObjectExpr& y) const override;
    Morphism kernel(const Morphism& f) const override;
    Morphism cokernel(const Morphism& f) const override;
    std::optional<Morphism> lift_through_mono(const Morphism& m, const Morphism& f) const override;
    std::optional<Morphism> lift_through_epi(const Morphism& e, const Morphism& f) const override;
    std::vector<Morphism> subobjects(const ObjectExpr& x, std::size_t limit) const override;
    std::vector<SubQuot> subobject_types(const ObjectExpr& x, std::size_t limit) const override;
    Morphism summand_map(const ObjectExpr& x, const ObjectExpr& y,
                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs) const override;
    /// All groups of order dividing the bound (zero excluded).
    std::vector<ObjectExpr> default_universe() const override;

private:
    Scalar reduce_row(Scalar v, Scalar n) const { return exactla::mod_reduce(v, n); }
    void check_size(const ObjectExpr& x) const;

    Scalar bound_;
    std::size_t element_limit_;
    std::vector<Scalar> inventory_;

    mutable std::mutex cache_mutex_;
    mutable std::map<ObjectExpr, std::vector<SubQuot>> subtype_cache_;
};

/// Largest subgroup whose element orders only involve primes in P, with its
/// inclusion.
Morphism primary_part(const AbGrpCategory& c, const PrimeSet& p, const ObjectExpr& x);

struct HomGenerator {
    Morphism map;
    Scalar order;
};
/// Generators of Hom(x, y): one of order gcd(m_i, n_j) per pair of cyclic summands.
std::vector<HomGenerator> hom_group(const AbGrpCategory& c, const ObjectExpr& x, const ObjectExpr& y);

}  // namespace pretor::abgrp
