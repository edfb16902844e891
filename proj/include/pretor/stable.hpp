#pragma once

// The additive quotient C/Z by the ideal of Z-trivial morphisms, and the
// check that a pretorsion theory (T, F) becomes a torsion theory there.

#include "pretor/pretor.hpp"

#include "json.hpp"

#include <map>
#include <mutex>

namespace pretor::stable {

using torsion::ClassSpec;

/// Log-orders (dimensions over a field) of Hom, Triv and their quotient.
struct HomTable {
    int hom = 0;
    int triv = 0;
    int quotient = 0;
};

/// A morphism of C/Z: a representative and its coset tag (normal form of the
/// representative modulo Triv).
struct QuotMorphism {
    Morphism rep;
    std::vector<Scalar> tag;
    bool operator==(const QuotMorphism& o) const {
        return rep.source == o.rep.source && rep.target == o.rep.target && tag == o.tag;
    }
};

class QuotientCategory {
public:
    /// Throws std::invalid_argument if Z names something that is not an indecomposable.
    QuotientCategory(const Category& base, ClassSpec z);

    const Category& base() const { return base_; }
    const ClassSpec& Z() const { return z_; }

    HomTable table(const ObjectExpr& x, const ObjectExpr& y) const;
    QuotMorphism sigma(const Morphism& f) const;
    QuotMorphism add(const QuotMorphism& f, const QuotMorphism& g) const;
    QuotMorphism compose(const QuotMorphism& g, const QuotMorphism& f) const;
    bool is_zero(const QuotMorphism& f) const;
    /// X becomes a zero object: its identity is trivial.
    bool is_zero_object(const ObjectExpr& x) const;

    nlohmann::json dump_tables(const std::vector<ObjectExpr>& objects) const;

private:
    const ModSpan& triv(const ObjectExpr& x, const ObjectExpr& y) const;

    const Category& base_;
    ClassSpec z_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<ObjectExpr, ObjectExpr>, ModSpan> triv_cache_;
};

struct QuotientTorsionReport {
    ClassSpec sigma_T;  // members of T not killed by the quotient
    ClassSpec sigma_F;
    std::size_t objects = 0;
    std::size_t testers = 0;
};

/// For every universe object, S(eta) o S(eps) = 0, S(eps) is a kernel of S(eta)
/// and S(eta) a cokernel of S(eps) in C/Z (testers: indecomposables), and
/// Hom_{C/Z}(T, F) = 0 on members.  Throws std::invalid_argument if (T, F)
/// is not a pretorsion theory with Z = T n F matching the quotient, and
/// TheoremViolation if a check fails.
QuotientTorsionReport verify_quotient_torsion(const QuotientCategory& q, const ClassSpec& t, const ClassSpec& f,
                                              const std::vector<ObjectExpr>& universe);

}  // namespace pretor::stable
