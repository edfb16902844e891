#pragma once

// Bounded chain complexes over GF(p) in a degree window [lo, hi].  A complex
// is a representation of the linear quiver with vertex hi-k holding X_k, so
// the differential d_k : X_k -> X_{k-1} is an arrow.  Indecomposables are the
// spheres S_k (k in [lo,hi]) and the disks D_k = (X_k = X_{k-1}, d_k = id).
//
// Class conventions used throughout:
//   T_n        X_k = 0 for k <= n
//   Fmono(n)   X_k = 0 for k > n and d_n injective
// The torsion-free class paired with T_n is Fmono(n+1).

#include "pretor/linrep.hpp"

#include "json.hpp"
#include <random>

namespace pretor::chaincx {

struct Complex {
    int lo = 0;
    int hi = 0;
    Scalar p = 2;
    std::vector<std::size_t> dims;  // dims[k - lo]
    std::vector<Matrix> diffs;      // diffs[k - lo - 1] = d_k : X_k -> X_{k-1}, k = lo+1..hi

    std::size_t dim(int k) const { return (k < lo || k > hi) ? 0 : dims[static_cast<std::size_t>(k - lo)]; }
    /// d_k; a zero map when either end lies outside the window.
    Matrix diff(int k) const;
    /// Throws std::invalid_argument on bad shapes or d o d != 0.
    void check() const;
    bool is_zero() const;
};

/// Per-degree inclusion matrices of a subcomplex.
struct SubComplex {
    Complex sub;
    std::vector<Matrix> inclusion;  // inclusion[k - lo] : sub_k -> X_k
};

bool in_Tn(int n, const Complex& x);
bool in_Fmono(int n, const Complex& x);

/// (..., X_{n+2}, ker d_{n+1}, 0, ...) with its inclusion.
SubComplex torsion_part(int n, const Complex& x);
/// Per-degree cokernel of a subcomplex inclusion, with the projection.
struct QuotientComplex {
    Complex quot;
    std::vector<Matrix> projection;  // projection[k - lo] : X_k -> quot_k
};
QuotientComplex quotient(const SubComplex& s, const Complex& x);

/// Random complex with dims <= max_dim; d_k maps into ker d_{k-1}.
Complex random_complex(std::mt19937_64& rng, int lo, int hi, std::size_t max_dim, Scalar p);

class ChainCategory : public linrep::LinearRepCategory {
public:
    ChainCategory(int lo, int hi, Scalar p = 2);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    IndId sphere(int k) const;
    IndId disk(int k) const;
    bool is_sphere(IndId id) const;
    /// Degree of a sphere, or top degree k of a disk D_k.
    int degree(IndId id) const;

    linrep::QuiverRep to_rep(const Complex& x) const;
    Complex to_complex(const ObjectExpr& x) const;
    /// Decomposition of x with the explicit isomorphism (per vertex).
    Decomposition decompose_complex(const Complex& x) const;

    /// Indecomposable membership in T_n and Fmono(n).
    bool ind_in_T(int n, IndId id) const;
    bool ind_in_Fmono(int n, IndId id) const;

    std::string backend() const override { return "chaincx"; }
    std::string bounds() const override;
    std::size_t indecomposable_count() const override;
    std::string name(IndId id) const override;  // "S3", "D3"
    std::optional<IndId> parse_indecomposable(std::string_view text) const override;

private:
    int lo_;
    int hi_;
};

nlohmann::json to_json(const Complex& x);
/// Parses {lo, hi, dims, diffs}; `p` is the field for the matrices.
Complex complex_from_json(const nlohmann::json& j, Scalar p);

}  // namespace pretor::chaincx
