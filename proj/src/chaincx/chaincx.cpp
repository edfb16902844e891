#include "pretor/chaincx.hpp"

#include <charconv>

namespace pretor::chaincx {

using exactla::nullspace;
using exactla::rank;

Matrix Complex::diff(int k) const {
    if (k <= lo || k > hi) return Matrix(dim(k - 1), dim(k), p);
    return diffs[static_cast<std::size_t>(k - lo - 1)];
}

void Complex::check() const {
    if (hi < lo) throw std::invalid_argument("complex: empty window");
    if (dims.size() != static_cast<std::size_t>(hi - lo + 1)) throw std::invalid_argument("complex: wrong number of dims");
    if (diffs.size() != static_cast<std::size_t>(hi - lo)) throw std::invalid_argument("complex: wrong number of differentials");
    for (int k = lo + 1; k <= hi; ++k) {
        const Matrix& d = diff(k);
        if (d.rows() != dim(k - 1) || d.cols() != dim(k) || d.modulus() != p)
            throw std::invalid_argument("complex: d_" + std::to_string(k) + " has the wrong shape");
    }
    for (int k = lo + 2; k <= hi; ++k)
        if (!(diff(k - 1) * diff(k)).is_zero())
            throw std::invalid_argument("complex: d_" + std::to_string(k - 1) + " o d_" + std::to_string(k) + " != 0");
}

bool Complex::is_zero() const {
    for (auto d : dims)
        if (d) return false;
    return true;
}

bool in_Tn(int n, const Complex& x) {
    for (int k = x.lo; k <= std::min(n, x.hi); ++k)
        if (x.dim(k)) return false;
    return true;
}

bool in_Fmono(int n, const Complex& x) {
    for (int k = std::max(n + 1, x.lo); k <= x.hi; ++k)
        if (x.dim(k)) return false;
    return rank(x.diff(n)) == x.dim(n);
}

SubComplex torsion_part(int n, const Complex& x) {
    x.check();
    SubComplex s{{x.lo, x.hi, x.p, {}, {}}, {}};
    for (int k = x.lo; k <= x.hi; ++k) {
        Matrix inc;
        if (k >= n + 2) inc = Matrix::identity(x.dim(k), x.p);
        else if (k == n + 1) inc = nullspace(x.diff(k));
        else inc = Matrix(x.dim(k), 0, x.p);
        s.sub.dims.push_back(inc.cols());
        s.inclusion.push_back(std::move(inc));
    }
    for (int k = x.lo + 1; k <= x.hi; ++k) {
        auto d = exactla::solve_matrix(s.inclusion[k - 1 - x.lo], x.diff(k) * s.inclusion[k - x.lo]);
        if (!d) throw TheoremViolation("torsion_part: subcomplex is not closed under the differential");
        s.sub.diffs.push_back(*d);
    }
    return s;
}

QuotientComplex quotient(const SubComplex& s, const Complex& x) {
    QuotientComplex q{{x.lo, x.hi, x.p, {}, {}}, {}};
    std::vector<Matrix> sections;
    for (int k = x.lo; k <= x.hi; ++k) {
        exactla::Subspace img(s.inclusion[k - x.lo]);
        Matrix comp = img.quotient_basis();
        auto inv = exactla::inverse(exactla::hstack(img.basis(), comp));
        if (!inv) throw std::logic_error("quotient: basis completion failed");
        Matrix pr(comp.cols(), x.dim(k), x.p);
        for (std::size_t i = 0; i < comp.cols(); ++i)
            for (std::size_t j = 0; j < x.dim(k); ++j) pr.set(i, j, (*inv)(img.dim() + i, j));
        q.quot.dims.push_back(comp.cols());
        q.projection.push_back(std::move(pr));
        sections.push_back(std::move(comp));
    }
    for (int k = x.lo + 1; k <= x.hi; ++k)
        q.quot.diffs.push_back(q.projection[k - 1 - x.lo] * x.diff(k) * sections[k - x.lo]);
    return q;
}

Complex random_complex(std::mt19937_64& rng, int lo, int hi, std::size_t max_dim, Scalar p) {
    std::uniform_int_distribution<std::size_t> dim(0, max_dim);
    std::uniform_int_distribution<Scalar> entry(0, p - 1);
    Complex x{lo, hi, p, {}, {}};
    for (int k = lo; k <= hi; ++k) x.dims.push_back(dim(rng));
    for (int k = lo + 1; k <= hi; ++k) {
        Matrix ker = k - 1 == lo ? Matrix::identity(x.dim(k - 1), p) : nullspace(x.diffs.back());
        Matrix r(ker.cols(), x.dim(k), p);
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j) r.set(i, j, entry(rng));
        x.diffs.push_back(ker * r);
    }
    return x;
}

namespace {

std::vector<linrep::VertexInterval> inventory(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("chaincx: empty window");
    std::vector<linrep::VertexInterval> out;
    for (int k = lo; k <= hi; ++k) out.push_back({hi - k, hi - k});
    for (int k = lo + 1; k <= hi; ++k) out.push_back({hi - k, hi - k + 1});
    return out;
}

}  // namespace

ChainCategory::ChainCategory(int lo, int hi, Scalar p)
    : LinearRepCategory(static_cast<std::size_t>(hi < lo ? 1 : hi - lo + 1), p, inventory(lo, hi)), lo_(lo), hi_(hi) {}

IndId ChainCategory::sphere(int k) const {
    if (k < lo_ || k > hi_) throw std::invalid_argument("chaincx: S" + std::to_string(k) + " outside the window");
    return k - lo_;
}

IndId ChainCategory::disk(int k) const {
    if (k <= lo_ || k > hi_) throw std::invalid_argument("chaincx: D" + std::to_string(k) + " outside the window");
    return (hi_ - lo_ + 1) + (k - lo_ - 1);
}

bool ChainCategory::is_sphere(IndId id) const { return id <= hi_ - lo_; }

int ChainCategory::degree(IndId id) const { return hi_ - interval(id).start; }

linrep::QuiverRep ChainCategory::to_rep(const Complex& x) const {
    x.check();
    if (x.lo != lo_ || x.hi != hi_ || x.p != field()) throw std::invalid_argument("chaincx: complex outside this category");
    linrep::QuiverRep r{field(), {}, {}};
    for (int v = 0; v <= hi_ - lo_; ++v) r.dims.push_back(x.dim(hi_ - v));
    for (int v = 0; v < hi_ - lo_; ++v) r.arrows.push_back(x.diff(hi_ - v));
    return r;
}

Complex ChainCategory::to_complex(const ObjectExpr& x) const {
    auto r = canonical_rep(x);
    Complex c{lo_, hi_, field(), {}, {}};
    for (int k = lo_; k <= hi_; ++k) c.dims.push_back(r.dims[hi_ - k]);
    for (int k = lo_ + 1; k <= hi_; ++k) c.diffs.push_back(r.arrows[hi_ - k]);
    return c;
}

linrep::LinearRepCategory::Decomposition ChainCategory::decompose_complex(const Complex& x) const {
    return decompose(to_rep(x));
}

bool ChainCategory::ind_in_T(int n, IndId id) const {
    int k = degree(id);
    return is_sphere(id) ? k >= n + 1 : k >= n + 2;
}

bool ChainCategory::ind_in_Fmono(int n, IndId id) const {
    int k = degree(id);
    return is_sphere(id) ? k <= n - 1 : k <= n;
}

std::string ChainCategory::bounds() const {
    return "window=[" + std::to_string(lo_) + "," + std::to_string(hi_) + "] p=" + std::to_string(field());
}

std::size_t ChainCategory::indecomposable_count() const { return static_cast<std::size_t>(2 * (hi_ - lo_) + 1); }

std::string ChainCategory::name(IndId id) const {
    return (is_sphere(id) ? "S" : "D") + std::to_string(degree(id));
}

std::optional<IndId> ChainCategory::parse_indecomposable(std::string_view text) const {
    if (text.size() < 2 || (text[0] != 'S' && text[0] != 'D')) return std::nullopt;
    int k = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), k);
    if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
    if (text[0] == 'S') {
        if (k < lo_ || k > hi_) return std::nullopt;
        return sphere(k);
    }
    if (k <= lo_ || k > hi_) return std::nullopt;
    return disk(k);
}

nlohmann::json to_json(const Complex& x) {
    nlohmann::json j;
    j["lo"] = x.lo;
    j["hi"] = x.hi;
    j["dims"] = x.dims;
    j["diffs"] = nlohmann::json::array();
    for (const auto& d : x.diffs) {
        nlohmann::json m = nlohmann::json::array();
        for (std::size_t r = 0; r < d.rows(); ++r) m.push_back(d.row(r));
        j["diffs"].push_back(m);
    }
    return j;
}

Complex complex_from_json(const nlohmann::json& j, Scalar p) {
    Complex x;
    x.lo = j.at("lo").get<int>();
    x.hi = j.at("hi").get<int>();
    x.p = p;
    x.dims = j.at("dims").get<std::vector<std::size_t>>();
    const auto& diffs = j.at("diffs");
    if (!diffs.is_array() || diffs.size() != static_cast<std::size_t>(std::max(0, x.hi - x.lo)))
        throw std::invalid_argument("complex JSON: expected hi - lo differentials");
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        int k = x.lo + 1 + static_cast<int>(i);
        Matrix d(x.dim(k - 1), x.dim(k), p);
        const auto& rows = diffs[i];
        if (rows.size() != d.rows() && !(d.rows() == 0 && rows.empty()))
            throw std::invalid_argument("complex JSON: d_" + std::to_string(k) + " has the wrong number of rows");
        for (std::size_t r = 0; r < d.rows(); ++r) {
            auto row = rows[r].get<std::vector<Scalar>>();
            if (row.size() != d.cols()) throw std::invalid_argument("complex JSON: d_" + std::to_string(k) + " row length");
            for (std::size_t c = 0; c < row.size(); ++c) d.set(r, c, row[c]);
        }
        x.diffs.push_back(std::move(d));
    }
    x.check();
    return x;
}

}  // namespace pretor::chaincx
