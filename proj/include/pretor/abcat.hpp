#pragma once

// Backend-neutral contract for the finite abelian length categories used
// here.  Objects are formal direct sums of indecomposables; morphisms carry
// backend data (vertex-wise matrices or integer matrices).  Everything above
// this layer is written against `Category` only.

#include "pretor/exactla.hpp"

#include <cstddef>
#include <compare>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pretor {

using exactla::Matrix;
using exactla::ModSpan;
using exactla::Scalar;

/// Index of an indecomposable within its backend's inventory.
using IndId = int;

/// A universe size bound was hit; the caller should shrink parameters.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A theorem-guaranteed check failed: this can only be an implementation bug.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Multiset of indecomposables in canonical (sorted) order; empty = zero object.
class ObjectExpr {
public:
    ObjectExpr() = default;
    explicit ObjectExpr(std::vector<IndId> summands);
    static ObjectExpr single(IndId id) { return ObjectExpr({id}); }

    const std::vector<IndId>& summands() const { return summands_; }
    std::size_t size() const { return summands_.size(); }
    bool is_zero() const { return summands_.empty(); }
    IndId operator[](std::size_t i) const { return summands_[i]; }

    ObjectExpr operator+(const ObjectExpr& o) const;
    auto operator<=>(const ObjectExpr&) const = default;

private:
    std::vector<IndId> summands_;
};

struct Morphism {
    ObjectExpr source;
    ObjectExpr target;
    std::vector<Matrix> blocks;

    bool operator==(const Morphism&) const = default;
};

/// 0 -> sub --i--> middle --p--> quot -> 0
struct Ses {
    Morphism i;
    Morphism p;
    const ObjectExpr& sub() const { return i.source; }
    const ObjectExpr& middle() const { return i.target; }
    const ObjectExpr& quot() const { return p.target; }
};

/// A subobject together with the quotient it determines.
struct SubQuot {
    ObjectExpr sub;
    ObjectExpr quot;
    auto operator<=>(const SubQuot&) const = default;
};

class Category {
public:
    virtual ~Category() = default;

    virtual std::string backend() const = 0;
    /// Human-readable universe bounds, echoed in every report.
    virtual std::string bounds() const = 0;

    virtual std::size_t indecomposable_count() const = 0;
    virtual std::string name(IndId id) const = 0;
    virtual std::optional<IndId> parse_indecomposable(std::string_view text) const = 0;
    /// Composition length of an indecomposable.
    virtual int length(IndId id) const = 0;
    /// Simple composition factors of an indecomposable, with multiplicity.
    virtual std::vector<IndId> composition_factors(IndId id) const = 0;

    virtual Morphism zero(const ObjectExpr& x, const ObjectExpr& y) const = 0;
    virtual Morphism identity(const ObjectExpr& x) const = 0;
    /// g o f
    virtual Morphism compose(const Morphism& g, const Morphism& f) const = 0;
    virtual Morphism add(const Morphism& f, const Morphism& g) const = 0;
    virtual Morphism scale(const Morphism& f, Scalar k) const = 0;

    /// Generators of Hom(x, y); a field basis for linear backends.
    virtual std::vector<Morphism> hom_basis(const ObjectExpr& x, const ObjectExpr& y) const = 0;
    /// Coordinates of f in  Z/m_1 (+) ... (+) Z/m_k  with m = coord_moduli(source, target).
    virtual std::vector<Scalar> coords(const Morphism& f) const = 0;
    virtual std::vector<Scalar> coord_moduli(const ObjectExpr& x, const ObjectExpr& y) const = 0;

    /// Kernel mono K -> source(f).
    virtual Morphism kernel(const Morphism& f) const = 0;
    /// Cokernel epi target(f) -> C.
    virtual Morphism cokernel(const Morphism& f) const = 0;
    /// The unique x with m o x = f (m mono); nullopt if f does not factor.
    virtual std::optional<Morphism> lift_through_mono(const Morphism& m, const Morphism& f) const = 0;
    /// The unique x with x o e = f (e epi); nullopt if f does not factor.
    virtual std::optional<Morphism> lift_through_epi(const Morphism& e, const Morphism& f) const = 0;

    /// One mono per subobject of x.  Throws BoundExceeded past `limit`.
    virtual std::vector<Morphism> subobjects(const ObjectExpr& x, std::size_t limit) const = 0;
    /// Distinct (subobject, quotient) isomorphism types over all subobjects of x.
    virtual std::vector<SubQuot> subobject_types(const ObjectExpr& x, std::size_t limit) const;

    /// Morphism whose (j, i) component is the identity of the common
    /// indecomposable for each listed pair (source summand i, target summand j).
    virtual Morphism summand_map(const ObjectExpr& x, const ObjectExpr& y,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs) const = 0;

    /// Objects over which "for every object" statements are checked.
    virtual std::vector<ObjectExpr> default_universe() const = 0;

    // Non-virtual conveniences.
    std::vector<IndId> indecomposables() const;
    std::vector<ObjectExpr> indecomposable_objects() const;
    int length(const ObjectExpr& x) const;
    /// Indecomposables of length one, in IndId order.
    std::vector<IndId> simples() const;
    std::string describe(const ObjectExpr& x) const;
    std::optional<ObjectExpr> parse_object(std::string_view text) const;
    bool hom_nonzero(IndId a, IndId b) const;
    Scalar order(const Morphism& f) const;
    Morphism subtract(const Morphism& f, const Morphism& g) const { return add(f, scale(g, -1)); }
    bool is_zero(const Morphism& f) const;
};

// ---- generic constructions over the contract ----

bool is_mono(const Category& c, const Morphism& f);
bool is_epi(const Category& c, const Morphism& f);
bool is_iso(const Category& c, const Morphism& f);

/// f = mono o epi with the image as middle object.
struct ImageFactorization {
    Morphism epi;
    Morphism mono;
};
ImageFactorization image(const Category& c, const Morphism& f);

struct Biproduct {
    ObjectExpr object;
    std::vector<Morphism> injections;
    std::vector<Morphism> projections;
};
Biproduct biproduct(const Category& c, const std::vector<ObjectExpr>& parts);

/// f (+) g : X1 (+) X2 -> Y1 (+) Y2
Morphism direct_sum(const Category& c, const Morphism& f, const Morphism& g);
/// Sum over k of fs[k] after the k-th biproduct projection of the source.
Morphism from_biproduct(const Category& c, const std::vector<Morphism>& fs, const ObjectExpr& target);
/// Morphism into the biproduct of the targets of `fs`.
Morphism to_biproduct(const Category& c, const std::vector<Morphism>& fs, const ObjectExpr& source);

struct Square {
    ObjectExpr apex;
    Morphism to_a;  // P -> A  (pullback)   or  A -> Q (pushout)
    Morphism to_b;  // P -> B               or  B -> Q
};
/// Pullback of f: A -> C and g: B -> C.
Square pullback(const Category& c, const Morphism& f, const Morphism& g);
/// Pushout of f: C -> A and g: C -> B.
Square pushout(const Category& c, const Morphism& f, const Morphism& g);

/// Throws std::logic_error with a reason if the data is not a short exact sequence.
void validate_ses(const Category& c, const Ses& s);
bool is_ses(const Category& c, const Ses& s);

/// The subgroup Hom(x, y) inside its coordinate group.
ModSpan hom_span(const Category& c, const ObjectExpr& x, const ObjectExpr& y);

/// Checks the kernel universal property of k against testers: every
/// g: W -> source(f) with f o g = 0 factors through k.
bool verify_kernel_universal(const Category& c, const Morphism& f, const Morphism& k,
                             const std::vector<ObjectExpr>& testers);
bool verify_cokernel_universal(const Category& c, const Morphism& f, const Morphism& q,
                               const std::vector<ObjectExpr>& testers);

/// Every element of the subgroup generated by `gens` (bounded enumeration).
std::vector<Morphism> enumerate_span(const Category& c, const std::vector<Morphism>& gens,
                                     const ObjectExpr& x, const ObjectExpr& y, std::size_t limit);

}  // namespace pretor
