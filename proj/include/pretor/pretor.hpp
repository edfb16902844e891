#pragma once

// Pretorsion theories: the ideal of Z-trivial morphisms, Z-kernels and
// Z-cokernels, the pretorsion checker, and the two constructions (from a
// comparable pair of torsion pairs, and from a torsion pair plus a Serre
// class).

#include "pretor/torsion.hpp"

#include <map>

namespace pretor::pt {

using torsion::ClassSpec;
using torsion::Report;
using torsion::TorsionPair;

/// f = sum_i right[i] o left[i] with left[i] : X -> W_i, right[i] : W_i -> Y.
struct TrivWitness {
    std::vector<IndId> through;
    std::vector<Morphism> left;
    std::vector<Morphism> right;
};

/// Triv(X, Y) as a subgroup of Hom(X, Y), with the products it was spanned by.
struct TrivSpan {
    ModSpan span;
    std::vector<IndId> through;  // per generator
    std::vector<Morphism> left;
    std::vector<Morphism> right;
};

TrivSpan triv_span(const Category& c, const ObjectExpr& x, const ObjectExpr& y, const ClassSpec& z);
/// Log-order (dimension for fields) of Triv(X, Y).
int triv_dim(const Category& c, const ObjectExpr& x, const ObjectExpr& y, const ClassSpec& z);
std::optional<TrivWitness> is_trivial(const Category& c, const Morphism& f, const ClassSpec& z);
/// Recomposes a witness (sum of right o left).
Morphism recompose(const Category& c, const TrivWitness& w, const ObjectExpr& x, const ObjectExpr& y);

/// eps is a Z-kernel of f: f o eps trivial, eps mono, and every lambda : W -> source(f)
/// with f o lambda trivial factors through eps (W over the testers).
bool verify_z_kernel(const Category& c, const Morphism& eps, const Morphism& f, const ClassSpec& z,
                     const std::vector<ObjectExpr>& testers);
bool verify_z_cokernel(const Category& c, const Morphism& eta, const Morphism& f, const ClassSpec& z,
                       const std::vector<ObjectExpr>& testers);

/// T_X >-eps-> X ->>-eta-> F_X
struct ZExactSeq {
    Morphism eps;
    Morphism eta;
    const ObjectExpr& torsion() const { return eps.source; }
    const ObjectExpr& object() const { return eps.target; }
    const ObjectExpr& free() const { return eta.target; }
};

/// Empty string when the sequence is short Z-exact, otherwise the reason.
/// Also throws TheoremViolation if eta is trivial but eps is not an iso.
std::string check_z_exact(const Category& c, const ZExactSeq& s, const ClassSpec& z,
                          const std::vector<ObjectExpr>& testers);
/// Closure of `cls` under Z-extensions: every universe object X with a short
/// Z-exact sequence A >-> X ->> B (A, B in cls, sequence from a subobject of X)
/// lies in cls.  Returns the first offending object described, or "".
std::string z_extension_witness(const Category& c, const ClassSpec& cls, const ClassSpec& z,
                                const std::vector<ObjectExpr>& universe);
/// Z-exact sequences of one object agree up to isomorphism at both ends.
bool sequences_isomorphic(const Category& c, const ZExactSeq& a, const ZExactSeq& b);
ZExactSeq direct_sum(const Category& c, const ZExactSeq& a, const ZExactSeq& b);

struct PretorsionReport {
    bool ok = true;
    bool hom_condition = true;
    ClassSpec Z;
    std::vector<std::string> failures;
    std::vector<std::pair<ObjectExpr, ZExactSeq>> sequences;
    /// Objects checked directly vs. assembled from verified summand sequences.
    std::size_t verified_directly = 0;
    std::size_t assembled = 0;
};

struct PretorsionOptions {
    /// Verify every universe object directly instead of assembling sums.
    bool verify_all = false;
    /// Keep the per-object sequences in the report.
    bool keep_sequences = true;
    /// Stop at the first failure.
    bool stop_early = false;
};

/// (T, F) with Z = T n F: Hom(T, F) = Triv(T, F) on members, and every
/// universe object has a short Z-exact sequence.  The candidate sequence is
/// trace(X, T) >-> X ->> reject(X, F); any Z-exact sequence with ends in T and
/// F is isomorphic to it, so a failure here means no sequence exists.
PretorsionReport is_pretorsion(const Category& c, const ClassSpec& t, const ClassSpec& f,
                               const std::vector<ObjectExpr>& universe, const PretorsionOptions& opts = {});

struct PretorsionTheory {
    ClassSpec T;
    ClassSpec F;
    ClassSpec Z;
    std::string provenance;
    std::vector<std::pair<ObjectExpr, ZExactSeq>> sequences;
};

/// (T1, F2) for torsion pairs with T2 c T1.  Sequences eps = trace for T1,
/// eta = torsion-free quotient for tp2.  Verifies the result, T1 = T2 * Z and
/// F2 = Z * F1 over the universe; throws TheoremViolation if any check fails
/// and std::invalid_argument if T2 is not contained in T1.
PretorsionTheory comparable_pretorsion(const Category& c, const TorsionPair& tp1, const TorsionPair& tp2,
                                       const std::vector<ObjectExpr>& universe);

/// (U * S, S * V) for a torsion pair (U, V) and a Serre class S, with the
/// sequences built from pullbacks and pushouts.  Throws std::invalid_argument
/// if S is not Serre, TheoremViolation if a verification fails.
PretorsionTheory serre_extension(const Category& c, const TorsionPair& tp, const ClassSpec& s,
                                 const std::vector<ObjectExpr>& universe);

/// The sequence of the Serre construction for one object.
ZExactSeq serre_sequence(const Category& c, const TorsionPair& tp, const ClassSpec& s, const ObjectExpr& x);

}  // namespace pretor::pt
