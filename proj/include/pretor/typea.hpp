#pragma once

// mod(kA_n) for the linear orientation 1 -> 2 -> ... -> n.  The interval
// module [a,b] has top a and socle b; it is written "a(a+1)...b" in stack
// notation, e.g. [1,2] = "12".

#include "pretor/linrep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pretor::typea {

struct Interval {
    int a;  // top vertex
    int b;  // socle vertex
    auto operator<=>(const Interval&) const = default;
    std::string name() const;   // "[a,b]"
    std::string stack() const;  // "12" (only for n < 10)
};

/// Hom([a,b],[c,d]) = 1 iff c <= a <= d <= b.
int interval_hom_dim(Interval x, Interval y);

/// Ext^1(B, A) with B = [a,b] and A = [c,d]: 1 iff a < c <= b+1 <= d.
int interval_ext_dim(Interval b, Interval a);
/// Summands of the nonsplit middle term, [a,d] and (if c <= b) [c,b].
std::vector<Interval> interval_ext_middle(Interval b, Interval a);

/// Nonzero subobjects {[c,b] : a <= c <= b}; the zero subobject is implicit.
std::vector<Interval> interval_subs(Interval x);
/// Nonzero quotients {[a,d] : a <= d <= b}.
std::vector<Interval> interval_quots(Interval x);

class TypeA : public linrep::LinearRepCategory {
public:
    /// For n >= 4 the default universe keeps multiplicity-free sums of at
    /// most this many summands (all of them for n <= 3).
    static constexpr std::size_t kDefaultSummandLimit = 4;

    explicit TypeA(int n, Scalar p = 2);

    int n() const { return n_; }
    IndId id(Interval iv) const;
    Interval interval_of(IndId id) const;
    ObjectExpr object(const std::vector<Interval>& ivs) const;
    linrep::QuiverRep to_rep(const ObjectExpr& x) const { return canonical_rep(x); }
    /// Stack notation for display, e.g. "1+12".
    std::string stack_name(const ObjectExpr& x) const;
    /// Nonsplit sequence 0 -> A -> middle -> B -> 0 (requires Ext(B, A) != 0).
    Ses ext_sequence(Interval b, Interval a) const;

    std::string backend() const override { return "typea"; }
    std::string bounds() const override;
    std::size_t indecomposable_count() const override;
    std::string name(IndId id) const override;
    /// Accepts "[a,b]", "a..b" and stack notation such as "12" or "2".
    std::optional<IndId> parse_indecomposable(std::string_view text) const override;

private:
    int n_;
};

/// Oracle: every arrow-invariant tuple of subspaces of r.  Throws
/// BoundExceeded past `limit` submodules.
std::vector<std::vector<Matrix>> rep_submodules(const linrep::QuiverRep& r, std::size_t limit = 100000);

/// Oracle: dim Ext^1(B, A) from the projective resolution
/// 0 -> [b+1,n] -> [a,n] -> [a,b] -> 0 and intertwiner solves.
int oracle_ext_dim(const TypeA& c, Interval b, Interval a);

struct ArArrow {
    Interval from;
    Interval to;
    bool mono;  // ascending arrows are monos, descending ones epis
};

struct ArQuiver {
    int n;
    std::vector<Interval> vertices;
    std::vector<ArArrow> arrows;
    std::vector<Interval> projectives;
    std::vector<Interval> injectives;
    std::vector<Interval> simples;
    std::string to_dot() const;
};

ArQuiver ar_quiver(int n);

}  // namespace pretor::typea
