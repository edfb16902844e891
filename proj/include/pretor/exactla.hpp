#pragma once

// Dense exact linear algebra over prime fields GF(p), plus finite
// abelian-group spans over mixed moduli (Howell-form reduction).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pretor::exactla {

using Scalar = std::int64_t;

Scalar mod_reduce(Scalar x, Scalar m);
Scalar mod_inverse(Scalar x, Scalar m);  // requires gcd(x, m) == 1
bool is_prime(Scalar n);
std::map<Scalar, int> factorize(Scalar n);

/// Row-major matrix with entries reduced modulo `modulus`.
/// A modulus of 0 stores raw integers (used by the abelian-group backend,
/// which reduces row by row against its own orders).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Scalar modulus);

    static Matrix identity(std::size_t n, Scalar modulus);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, Scalar modulus);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar modulus() const { return mod_; }

    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Scalar v);
    void add_to(std::size_t r, std::size_t c, Scalar v);

    std::vector<Scalar> column(std::size_t c) const;
    std::vector<Scalar> row(std::size_t r) const;
    const std::vector<Scalar>& data() const { return data_; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const = default;

    Matrix transpose() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(Scalar k) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Scalar mod_ = 2;
    std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Matrix whose columns are the given vectors (all of length `ambient`).
Matrix from_columns(const std::vector<std::vector<Scalar>>& cols, std::size_t ambient, Scalar modulus);
Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& idx);

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};
Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Column basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
/// Independent columns spanning the column space of m (a subset of m's columns).
Matrix column_basis(const Matrix& m);
/// Some x with a x = b, if b lies in the column space.
std::optional<std::vector<Scalar>> solve(const Matrix& a, std::span<const Scalar> b);
/// Some X with a X = b, if every column of b lies in the column space.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);
/// Inverse of a square invertible matrix.
std::optional<Matrix> inverse(const Matrix& m);

/// A subspace of GF(p)^ambient stored as an independent column basis.
class Subspace {
public:
    Subspace(std::size_t ambient, Scalar p);
    Subspace(const Matrix& spanning_columns);  // reduces to an independent basis

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    Scalar modulus() const { return p_; }
    const Matrix& basis() const { return basis_; }

    bool contains(std::span<const Scalar> v) const;
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersection(const Subspace& o) const;
    /// Columns completing this basis to a basis of the ambient space.
    Matrix quotient_basis() const;

private:
    std::size_t ambient_;
    Scalar p_;
    Matrix basis_;
};

/// Calls `visit` once per subspace of GF(p)^dim (basis given as RREF columns).
/// Returns false if `visit` stopped the enumeration by returning false.
bool enumerate_subspaces(std::size_t dim, Scalar p, const std::function<bool(const Matrix&)>& visit);

/// Subgroup of  Z/m_1 (+) ... (+) Z/m_k  generated by inserted vectors.
/// Each p-primary component is kept in Howell form over Z/p^E, which makes
/// membership tests, normal forms and "elements whose leading block vanishes"
/// exact.
class ModSpan {
public:
    explicit ModSpan(std::vector<Scalar> moduli);

    const std::vector<Scalar>& moduli() const { return moduli_; }
    void add(std::span<const Scalar> v);
    bool contains(std::span<const Scalar> v) const;
    /// Canonical coset representative of v modulo the span.
    std::vector<Scalar> normal_form(std::span<const Scalar> v) const;
    /// Order of the span as prime -> exponent.
    std::map<Scalar, int> order() const;
    /// Total log-order (sum of exponents); equals the dimension for a field.
    int log_order() const;
    /// Generators of the subgroup of elements whose first `k` coordinates vanish.
    std::vector<std::vector<Scalar>> tail_generators(std::size_t k) const;
    /// If v = sum_i c_i g_i for the generators inserted so far, some such c
    /// (coefficient i taken modulo the order of g_i).
    std::optional<std::vector<Scalar>> express(std::span<const Scalar> v) const;
    const std::vector<std::vector<Scalar>>& generators() const { return gens_; }

private:
    struct Component {
        Scalar prime;
        int top;                       // E
        Scalar pe;                     // p^E
        std::vector<std::size_t> idx;  // coordinates with nonzero p-part
        std::vector<int> exp;          // v_p(m_i) for those coordinates
        std::map<std::size_t, std::vector<Scalar>> rows;  // pivot column -> row
    };
    std::vector<Scalar> project(const Component& c, std::span<const Scalar> v) const;
    std::vector<Scalar> lift(const Component& c, const std::vector<Scalar>& w) const;
    static void insert(Component& c, std::vector<Scalar> v);
    static std::vector<Scalar> reduce(const Component& c, std::vector<Scalar> v, std::size_t stop_col, bool full);

    std::vector<Scalar> moduli_;
    std::vector<Component> comps_;
    std::vector<std::vector<Scalar>> gens_;
};

/// Order of an element of Z/m_1 (+) ... (+) Z/m_k.
Scalar element_order(std::span<const Scalar> v, std::span<const Scalar> moduli);

/// Generators (as coefficient vectors) of {c : sum_i c_i images_i in target}.
/// Coefficient i lives in Z/orders_i, where orders_i annihilates the i-th
/// domain generator.
std::vector<std::vector<Scalar>> preimage_generators(const std::vector<std::vector<Scalar>>& images,
                                                     const std::vector<Scalar>& orders,
                                                     const ModSpan& target);

}  // namespace pretor::exactla
