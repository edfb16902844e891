#pragma once

// Torsion pairs over any backend.  A class is the additive closure of a set
// of indecomposables; "for every object" statements run over a bounded
// universe of objects supplied by the caller (normally the backend default).

#include "pretor/abcat.hpp"

#include <boost/rational.hpp>
#include <set>

namespace pretor::torsion {

struct ClassSpec {
    std::set<IndId> members;

    bool contains(IndId id) const { return members.count(id) > 0; }
    /// Membership of the additive closure: every summand is a member.
    bool contains(const ObjectExpr& x) const;
    bool subset_of(const ClassSpec& o) const;
    ClassSpec intersect(const ClassSpec& o) const;
    bool operator==(const ClassSpec&) const = default;
    auto operator<=>(const ClassSpec&) const = default;

    static ClassSpec all(const Category& c);
    /// Indecomposables satisfying `pred`.
    template <class Pred>
    static ClassSpec where(const Category& c, Pred pred) {
        ClassSpec s;
        for (auto id : c.indecomposables())
            if (pred(id)) s.members.insert(id);
        return s;
    }
};

/// "add{[1,1],[1,2]}"
std::string describe(const Category& c, const ClassSpec& s);
/// Parses a comma-separated member list (object names); throws std::invalid_argument.
ClassSpec parse_class(const Category& c, std::string_view text);

struct TorsionPair {
    ClassSpec T;
    ClassSpec F;
    auto operator<=>(const TorsionPair&) const = default;
    bool operator==(const TorsionPair&) const = default;
};

/// Outcome of a check: ok plus a human-readable line per failure.
struct Report {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string why) {
        ok = false;
        failures.push_back(std::move(why));
    }
};

/// Default bound on subobjects enumerated for a single object.
inline constexpr std::size_t kSubobjectLimit = 200000;

struct ClosureReport {
    bool under_quotients = true;
    bool under_subobjects = true;
    bool under_extensions = true;
    std::vector<std::string> witnesses;
};
ClosureReport closure_checks(const Category& c, const ClassSpec& s, const std::vector<ObjectExpr>& universe);

/// Largest subobject generated by maps from members of T (sum of images).
Morphism trace(const Category& c, const ObjectExpr& x, const ClassSpec& t);
/// Quotient by the intersection of kernels of maps into members of F.
Morphism reject(const Category& c, const ObjectExpr& x, const ClassSpec& f);

/// Hom(T, F) = 0 on members and every universe object has its trace
/// sequence with torsion part in T and quotient in F.
Report is_torsion_pair(const Category& c, const TorsionPair& tp, const std::vector<ObjectExpr>& universe);

/// trace(X, T) >-> X ->> X / trace, checked against the pair.
Ses canonical_ses(const Category& c, const ObjectExpr& x, const TorsionPair& tp);

/// {Y : Hom(t, Y) = 0 for all t in T} and {X : Hom(X, f) = 0 for all f in F}.
ClassSpec right_perp(const Category& c, const ClassSpec& t);
ClassSpec left_perp(const Category& c, const ClassSpec& f);

/// Every torsion pair, in increasing order of T (by member bitmask).
std::vector<TorsionPair> enumerate_torsion_pairs(const Category& c, const std::vector<ObjectExpr>& universe);

/// X in A * B: some subobject lies in add(A) with quotient in add(B).
bool in_ext_product(const Category& c, const ClassSpec& a, const ClassSpec& b, const ObjectExpr& x);
/// Indecomposables in A * B.
ClassSpec ext_product(const Category& c, const ClassSpec& a, const ClassSpec& b);

bool is_serre(const Category& c, const ClassSpec& s, const std::vector<ObjectExpr>& universe);
/// Indecomposables all of whose composition factors lie in `simples`.
ClassSpec serre_from_simples(const Category& c, const std::set<IndId>& simples);
/// Largest subobject in S, and quotient by the smallest subobject with quotient in S.
inline Morphism s_coreflection(const Category& c, const ObjectExpr& x, const ClassSpec& s) { return trace(c, x, s); }
inline Morphism s_reflection(const Category& c, const ObjectExpr& x, const ClassSpec& s) { return reject(c, x, s); }

using Rational = boost::rational<long long>;

/// Phi(X) = (theta . [X]) / (ell . [X]) over the composition factors of X.
/// theta and ell are indexed like Category::simples().
struct StabilityFunction {
    std::vector<long long> theta;
    std::vector<long long> ell;

    Rational value(const Category& c, const ObjectExpr& x) const;
    void check(const Category& c) const;  // throws std::invalid_argument
};

/// T_{>=p} (T_{>p} if strict) and F_{<p} (F_{<=p} if strict), by enumerating
/// quotients and subobjects.
bool in_stability_T(const Category& c, const StabilityFunction& phi, Rational p, bool strict, const ObjectExpr& x);
bool in_stability_F(const Category& c, const StabilityFunction& phi, Rational p, bool strict, const ObjectExpr& x);
TorsionPair stability_classes(const Category& c, const StabilityFunction& phi, Rational p, bool strict);

/// For every short exact sequence with nonzero ends inside the universe,
/// exactly one of  Phi(A) < Phi(B) < Phi(C),  =,=  or  >,>  holds.
Report seesaw_check(const Category& c, const StabilityFunction& phi, const std::vector<ObjectExpr>& universe);

std::string to_string(const Rational& r);

}  // namespace pretor::torsion
