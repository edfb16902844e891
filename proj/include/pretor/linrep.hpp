#pragma once

// Representations of the linearly oriented quiver 0 -> 1 -> ... -> m-1 over
// GF(p).  Shared engine for the mod(kA_n) and chain-complex backends: both
// have interval modules as indecomposables and vertex-wise linear algebra for
// kernels, cokernels and subobjects.

#include "pretor/abcat.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace pretor::linrep {

/// Vertex-indexed dimensions and arrow matrices (arrow v : V_v -> V_{v+1}).
struct QuiverRep {
    Scalar p = 2;
    std::vector<std::size_t> dims;
    std::vector<Matrix> arrows;

    std::size_t vertex_count() const { return dims.size(); }
    std::size_t total_dim() const;
    /// Composite V_a -> V_b for a <= b (identity when a == b).
    Matrix composite(std::size_t a, std::size_t b) const;
    /// Throws std::invalid_argument if shapes are inconsistent.
    void check() const;
};

/// Closed vertex range [start, end] of an interval module.
struct VertexInterval {
    int start;
    int end;
    auto operator<=>(const VertexInterval&) const = default;
};

/// Interval multiplicities of a rep from ranks of composite maps.
std::map<VertexInterval, int> interval_multiplicities(const QuiverRep& r);

/// Intertwiners R1 -> R2 by solving the commutation equations directly.
std::vector<std::vector<Matrix>> rep_hom_basis(const QuiverRep& r1, const QuiverRep& r2);

/// Calls `visit` with the per-vertex bases of every subrepresentation.
/// Stops early (returning false) when `visit` returns false.
bool for_each_subrep(const QuiverRep& r, const std::function<bool(const std::vector<Matrix>&)>& visit);

/// Base class for backends whose objects are interval modules on a linear quiver.
class LinearRepCategory : public Category {
public:
    LinearRepCategory(std::size_t vertices, Scalar p, std::vector<VertexInterval> inventory);

    Scalar field() const { return p_; }
    std::size_t vertex_count() const { return vertices_; }
    const VertexInterval& interval(IndId id) const { return inventory_.at(static_cast<std::size_t>(id)); }
    std::optional<IndId> find(VertexInterval iv) const;

    QuiverRep canonical_rep(const ObjectExpr& x) const;
    std::vector<std::size_t> dims(const ObjectExpr& x) const;

    /// Krull-Schmidt type of a rep, by rank counts.
    ObjectExpr decompose_type(const QuiverRep& r) const;
    /// Explicit isomorphism canonical_rep(type) -> r, per vertex.
    struct Decomposition {
        ObjectExpr type;
        std::vector<Matrix> iso;
    };
    Decomposition decompose(const QuiverRep& r) const;

    /// Morphism from per-vertex blocks, checked to intertwine.
    Morphism make_morphism(const ObjectExpr& x, const ObjectExpr& y, std::vector<Matrix> blocks) const;
    bool intertwines(const Morphism& f) const;

    // Category
    using Category::length;
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
    std::vector<ObjectExpr> default_universe() const override;

    /// Universe of multiplicity-free sums with at most `max_summands` summands
    /// (0 = no limit).
    void set_universe_summand_limit(std::size_t max_summands) { universe_limit_ = max_summands; }
    std::size_t universe_summand_limit() const { return universe_limit_; }

protected:
    /// Position of each summand's basis vector at each vertex (-1 if absent).
    std::vector<std::vector<int>> layout(const ObjectExpr& x) const;

private:
    std::size_t vertices_;
    Scalar p_;
    std::vector<VertexInterval> inventory_;
    std::map<VertexInterval, IndId> index_;
    std::size_t universe_limit_ = 0;

    mutable std::mutex cache_mutex_;
    mutable std::map<ObjectExpr, std::vector<SubQuot>> subtype_cache_;
    mutable std::map<ObjectExpr, std::size_t> too_many_;  // largest limit already exceeded
};

}  // namespace pretor::linrep
