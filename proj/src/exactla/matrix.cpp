#include "pretor/exactla.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pretor::exactla {

Scalar mod_reduce(Scalar x, Scalar m) {
    if (m == 0) return x;
    Scalar r = x % m;
    return r < 0 ? r + m : r;
}

Scalar mod_inverse(Scalar x, Scalar m) {
    Scalar a = mod_reduce(x, m), b = m, u = 1, v = 0;
    while (b != 0) {
        Scalar q = a / b;
        a -= q * b;
        std::swap(a, b);
        u -= q * v;
        std::swap(u, v);
    }
    if (a != 1) throw std::domain_error("mod_inverse: element not invertible");
    return mod_reduce(u, m);
}

bool is_prime(Scalar n) {
    if (n < 2) return false;
    for (Scalar d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::map<Scalar, int> factorize(Scalar n) {
    std::map<Scalar, int> f;
    for (Scalar d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            ++f[d];
            n /= d;
        }
    if (n > 1) ++f[n];
    return f;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Scalar modulus)
    : rows_(rows), cols_(cols), mod_(modulus), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, Scalar modulus) {
    Matrix m(n, n, modulus);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Scalar modulus) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c, modulus);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v) { data_[r * cols_ + c] = mod_reduce(v, mod_); }

void Matrix::add_to(std::size_t r, std::size_t c, Scalar v) { set(r, c, data_[r * cols_ + c] + v); }

std::vector<Scalar> Matrix::column(std::size_t c) const {
    std::vector<Scalar> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, mod_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
    return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix +: shape mismatch");
    Matrix s(rows_, cols_, mod_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = mod_reduce(data_[i] + o.data_[i], mod_);
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix -: shape mismatch");
    Matrix s(rows_, cols_, mod_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = mod_reduce(data_[i] - o.data_[i], mod_);
    return s;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix *: shape mismatch");
    Matrix s(rows_, o.cols_, mod_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Scalar a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) s.data_[i * o.cols_ + j] += a * o(k, j);
            if (mod_ != 0)
                for (std::size_t j = 0; j < o.cols_; ++j)
                    s.data_[i * o.cols_ + j] = mod_reduce(s.data_[i * o.cols_ + j], mod_);
        }
    return s;
}

Matrix Matrix::scaled(Scalar k) const {
    Matrix s = *this;
    for (auto& x : s.data_) x = mod_reduce(x * k, mod_);
    return s;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols(), a.modulus());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m.set(r, c, a(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) m.set(r, a.cols() + c, b(r, c));
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols(), a.modulus());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t r = 0; r < a.rows(); ++r) m.set(r, c, a(r, c));
        for (std::size_t r = 0; r < b.rows(); ++r) m.set(a.rows() + r, c, b(r, c));
    }
    return m;
}

Matrix from_columns(const std::vector<std::vector<Scalar>>& cols, std::size_t ambient, Scalar modulus) {
    Matrix m(ambient, cols.size(), modulus);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != ambient) throw std::invalid_argument("from_columns: length mismatch");
        for (std::size_t r = 0; r < ambient; ++r) m.set(r, c, cols[c][r]);
    }
    return m;
}

Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& idx) {
    Matrix s(m.rows(), idx.size(), m.modulus());
    for (std::size_t c = 0; c < idx.size(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) s.set(r, c, m(r, idx[c]));
    return s;
}

Rref rref(const Matrix& m) {
    const Scalar p = m.modulus();
    if (p == 0) throw std::invalid_argument("rref: needs a prime modulus");
    Rref out{m, {}};
    Matrix& a = out.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < a.cols(); ++c) {
                Scalar t = a(piv, c);
                a.set(piv, c, a(row, c));
                a.set(row, c, t);
            }
        Scalar inv = mod_inverse(a(row, col), p);
        for (std::size_t c = 0; c < a.cols(); ++c) a.set(row, c, a(row, c) * inv);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            Scalar f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a.set(r, c, a(r, c) - f * a(row, c));
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rref(m).pivots.size();
}

Matrix nullspace(const Matrix& m) {
    const Scalar p = m.modulus();
    if (m.rows() == 0) return Matrix::identity(m.cols(), p);
    Rref r = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : r.pivots) is_piv[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        std::vector<Scalar> v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = mod_reduce(-r.reduced(i, f), p);
        basis.push_back(std::move(v));
    }
    return from_columns(basis, m.cols(), p);
}

Matrix column_basis(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return Matrix(m.rows(), 0, m.modulus());
    return select_columns(m, rref(m).pivots);
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, std::span<const Scalar> b) {
    Matrix bm(b.size(), 1, a.modulus());
    for (std::size_t i = 0; i < b.size(); ++i) bm.set(i, 0, b[i]);
    auto x = solve_matrix(a, bm);
    if (!x) return std::nullopt;
    return x->column(0);
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    const Scalar p = a.modulus();
    Matrix x(a.cols(), b.cols(), p);
    if (a.rows() == 0) return x;
    Rref r = rref(hstack(a, b));
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        if (r.pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t c = 0; c < b.cols(); ++c) x.set(r.pivots[i], c, r.reduced(i, a.cols() + c));
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve_matrix(m, Matrix::identity(m.rows(), m.modulus()));
}

Subspace::Subspace(std::size_t ambient, Scalar p) : ambient_(ambient), p_(p), basis_(ambient, 0, p) {}

Subspace::Subspace(const Matrix& spanning)
    : ambient_(spanning.rows()), p_(spanning.modulus()), basis_(column_basis(spanning)) {}

bool Subspace::contains(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
    return solve(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace: dimension mismatch");
    return solve_matrix(basis_, o.basis_).has_value();
}

bool Subspace::operator==(const Subspace& o) const { return dim() == o.dim() && contains(o); }

Subspace Subspace::sum(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace::sum: dimension mismatch");
    return Subspace(hstack(basis_, o.basis_));
}

Subspace Subspace::intersection(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace::intersection: dimension mismatch");
    // [A | -B] (x, y) = 0  =>  A x lies in both.
    Matrix joined = hstack(basis_, o.basis_.scaled(-1));
    Matrix ker = nullspace(joined);
    Matrix top(dim(), ker.cols(), p_);
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < ker.cols(); ++c) top.set(r, c, ker(r, c));
    if (dim() == 0) return Subspace(ambient_, p_);
    return Subspace(basis_ * top);
}

Matrix Subspace::quotient_basis() const {
    Matrix full = hstack(basis_, Matrix::identity(ambient_, p_));
    Rref r = rref(full);
    std::vector<std::size_t> extra;
    for (auto c : r.pivots)
        if (c >= dim()) extra.push_back(c - dim());
    return select_columns(Matrix::identity(ambient_, p_), extra);
}

namespace {

// Enumerate RREF matrices of a given rank with pivot set `piv`; free entries
// are the positions (i, c) with c > piv[i] and c not a pivot column.
bool enumerate_with_pivots(std::size_t dim, Scalar p, const std::vector<std::size_t>& piv,
                           const std::function<bool(const Matrix&)>& visit) {
    std::vector<bool> is_piv(dim, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t c = piv[i] + 1; c < dim; ++c)
            if (!is_piv[c]) free.emplace_back(i, c);
    std::vector<Scalar> val(free.size(), 0);
    while (true) {
        Matrix b(dim, piv.size(), p);  // columns = basis vectors (rows of the RREF)
        for (std::size_t i = 0; i < piv.size(); ++i) b.set(piv[i], i, 1);
        for (std::size_t k = 0; k < free.size(); ++k) b.set(free[k].second, free[k].first, val[k]);
        if (!visit(b)) return false;
        std::size_t k = 0;
        while (k < val.size() && ++val[k] == p) val[k++] = 0;
        if (k == val.size()) break;
    }
    return true;
}

bool enumerate_pivot_sets(std::size_t dim, Scalar p, std::size_t r, std::size_t start, std::vector<std::size_t>& piv,
                          const std::function<bool(const Matrix&)>& visit) {
    if (piv.size() == r) return enumerate_with_pivots(dim, p, piv, visit);
    for (std::size_t c = start; c < dim; ++c) {
        piv.push_back(c);
        bool go = enumerate_pivot_sets(dim, p, r, c + 1, piv, visit);
        piv.pop_back();
        if (!go) return false;
    }
    return true;
}

}  // namespace

bool enumerate_subspaces(std::size_t dim, Scalar p, const std::function<bool(const Matrix&)>& visit) {
    for (std::size_t r = 0; r <= dim; ++r) {
        std::vector<std::size_t> piv;
        if (!enumerate_pivot_sets(dim, p, r, 0, piv, visit)) return false;
    }
    return true;
}

}  // namespace pretor::exactla
