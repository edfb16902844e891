#include "pretor/linrep.hpp"

#include <algorithm>
#include <set>

namespace pretor::linrep {

using exactla::column_basis;
using exactla::hstack;
using exactla::inverse;
using exactla::nullspace;
using exactla::rank;
using exactla::solve_matrix;
using exactla::Subspace;

std::size_t QuiverRep::total_dim() const {
    std::size_t s = 0;
    for (auto d : dims) s += d;
    return s;
}

Matrix QuiverRep::composite(std::size_t a, std::size_t b) const {
    Matrix m = Matrix::identity(dims[a], p);
    for (std::size_t v = a; v < b; ++v) m = arrows[v] * m;
    return m;
}

void QuiverRep::check() const {
    if (dims.empty()) {
        if (!arrows.empty()) throw std::invalid_argument("QuiverRep: arrows without vertices");
        return;
    }
    if (arrows.size() + 1 != dims.size()) throw std::invalid_argument("QuiverRep: wrong number of arrows");
    for (std::size_t v = 0; v < arrows.size(); ++v)
        if (arrows[v].rows() != dims[v + 1] || arrows[v].cols() != dims[v] || arrows[v].modulus() != p)
            throw std::invalid_argument("QuiverRep: arrow shape does not match dimensions");
}

std::map<VertexInterval, int> interval_multiplicities(const QuiverRep& r) {
    const int m = static_cast<int>(r.vertex_count());
    std::vector<std::vector<int>> rk(m, std::vector<int>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) rk[a][b] = static_cast<int>(rank(r.composite(a, b)));
    auto at = [&](int a, int b) { return (a < 0 || b >= m) ? 0 : rk[a][b]; };
    std::map<VertexInterval, int> mult;
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            int k = at(a, b) - at(a - 1, b) - at(a, b + 1) + at(a - 1, b + 1);
            if (k != 0) mult[{a, b}] = k;
        }
    return mult;
}

std::vector<std::vector<Matrix>> rep_hom_basis(const QuiverRep& r1, const QuiverRep& r2) {
    r1.check();
    r2.check();
    if (r1.vertex_count() != r2.vertex_count() || r1.p != r2.p)
        throw std::invalid_argument("rep_hom_basis: incompatible representations");
    const std::size_t m = r1.vertex_count();
    std::vector<std::size_t> offset(m + 1, 0);
    for (std::size_t v = 0; v < m; ++v) offset[v + 1] = offset[v] + r2.dims[v] * r1.dims[v];
    const std::size_t unknowns = offset[m];
    auto var = [&](std::size_t v, std::size_t i, std::size_t j) { return offset[v] + i * r1.dims[v] + j; };
    std::vector<std::vector<Scalar>> eqs;
    for (std::size_t v = 0; v + 1 < m; ++v) {
        const Matrix& a1 = r1.arrows[v];
        const Matrix& a2 = r2.arrows[v];
        // (F_{v+1} A1_v - A2_v F_v)[i, j] = 0
        for (std::size_t i = 0; i < r2.dims[v + 1]; ++i)
            for (std::size_t j = 0; j < r1.dims[v]; ++j) {
                std::vector<Scalar> row(unknowns, 0);
                for (std::size_t k = 0; k < r1.dims[v + 1]; ++k) row[var(v + 1, i, k)] += a1(k, j);
                for (std::size_t k = 0; k < r2.dims[v]; ++k) row[var(v, k, j)] -= a2(i, k);
                eqs.push_back(std::move(row));
            }
    }
    Matrix sys = eqs.empty() ? Matrix(0, unknowns, r1.p) : Matrix::from_rows(eqs, r1.p);
    Matrix ker = nullspace(sys);
    std::vector<std::vector<Matrix>> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        std::vector<Matrix> blocks;
        for (std::size_t v = 0; v < m; ++v) {
            Matrix b(r2.dims[v], r1.dims[v], r1.p);
            for (std::size_t i = 0; i < r2.dims[v]; ++i)
                for (std::size_t j = 0; j < r1.dims[v]; ++j) b.set(i, j, ker(var(v, i, j), c));
            blocks.push_back(std::move(b));
        }
        out.push_back(std::move(blocks));
    }
    return out;
}

namespace {

bool subrep_from(const QuiverRep& r, std::size_t v, std::vector<Matrix>& chosen,
                 const std::function<bool(const std::vector<Matrix>&)>& visit) {
    if (v == r.vertex_count()) return visit(chosen);
    Matrix forced = v == 0 ? Matrix(r.dims[0], 0, r.p) : column_basis(r.arrows[v - 1] * chosen[v - 1]);
    Subspace base(forced);
    Matrix comp = base.quotient_basis();
    return exactla::enumerate_subspaces(comp.cols(), r.p, [&](const Matrix& s) {
        chosen.push_back(hstack(base.basis(), comp * s));
        bool go = subrep_from(r, v + 1, chosen, visit);
        chosen.pop_back();
        return go;
    });
}

// Restriction of the arrows of r to the subrep with per-vertex bases.
QuiverRep restrict_to(const QuiverRep& r, const std::vector<Matrix>& bases) {
    QuiverRep s{r.p, {}, {}};
    for (const auto& b : bases) s.dims.push_back(b.cols());
    for (std::size_t v = 0; v + 1 < r.vertex_count(); ++v) {
        auto a = solve_matrix(bases[v + 1], r.arrows[v] * bases[v]);
        if (!a) throw std::logic_error("restrict_to: subspaces are not arrow-invariant");
        s.arrows.push_back(*a);
    }
    return s;
}

}  // namespace

bool for_each_subrep(const QuiverRep& r, const std::function<bool(const std::vector<Matrix>&)>& visit) {
    r.check();
    std::vector<Matrix> chosen;
    return subrep_from(r, 0, chosen, visit);
}

LinearRepCategory::LinearRepCategory(std::size_t vertices, Scalar p, std::vector<VertexInterval> inventory)
    : vertices_(vertices), p_(p), inventory_(std::move(inventory)) {
    if (!exactla::is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    for (std::size_t i = 0; i < inventory_.size(); ++i) {
        const auto& iv = inventory_[i];
        if (iv.start < 0 || iv.end < iv.start || iv.end >= static_cast<int>(vertices_))
            throw std::invalid_argument("LinearRepCategory: interval outside the quiver");
        index_[iv] = static_cast<IndId>(i);
    }
}

std::optional<IndId> LinearRepCategory::find(VertexInterval iv) const {
    auto it = index_.find(iv);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::vector<int>> LinearRepCategory::layout(const ObjectExpr& x) const {
    std::vector<std::vector<int>> pos(x.size(), std::vector<int>(vertices_, -1));
    std::vector<int> count(vertices_, 0);
    for (std::size_t k = 0; k < x.size(); ++k) {
        const auto& iv = interval(x[k]);
        for (int v = iv.start; v <= iv.end; ++v) pos[k][v] = count[v]++;
    }
    return pos;
}

std::vector<std::size_t> LinearRepCategory::dims(const ObjectExpr& x) const {
    std::vector<std::size_t> d(vertices_, 0);
    for (auto id : x.summands()) {
        const auto& iv = interval(id);
        for (int v = iv.start; v <= iv.end; ++v) ++d[v];
    }
    return d;
}

QuiverRep LinearRepCategory::canonical_rep(const ObjectExpr& x) const {
    QuiverRep r{p_, dims(x), {}};
    auto pos = layout(x);
    for (std::size_t v = 0; v + 1 < vertices_; ++v) {
        Matrix a(r.dims[v + 1], r.dims[v], p_);
        for (std::size_t k = 0; k < x.size(); ++k)
            if (pos[k][v] >= 0 && pos[k][v + 1] >= 0) a.set(pos[k][v + 1], pos[k][v], 1);
        r.arrows.push_back(std::move(a));
    }
    return r;
}

ObjectExpr LinearRepCategory::decompose_type(const QuiverRep& r) const {
    std::vector<IndId> ids;
    for (auto [iv, k] : interval_multiplicities(r)) {
        auto id = find(iv);
        if (!id || k < 0) throw std::logic_error("decompose: representation outside the backend inventory");
        ids.insert(ids.end(), static_cast<std::size_t>(k), *id);
    }
    return ObjectExpr(std::move(ids));
}

LinearRepCategory::Decomposition LinearRepCategory::decompose(const QuiverRep& r) const {
    r.check();
    if (r.vertex_count() != vertices_) throw std::invalid_argument("decompose: wrong quiver size");
    const int m = static_cast<int>(vertices_);
    struct Gen {
        IndId id;
        int start;
        std::vector<Scalar> vec;
    };
    std::vector<Gen> gens;
    for (int a = 0; a < m; ++a) {
        Matrix cur = a == 0 ? Matrix(r.dims[0], 0, p_) : column_basis(r.arrows[a - 1]);
        std::size_t cur_rank = cur.cols();
        for (int b = a; b < m; ++b) {
            Matrix ker = b + 1 < m ? nullspace(r.composite(a, b + 1)) : Matrix::identity(r.dims[a], p_);
            for (std::size_t c = 0; c < ker.cols(); ++c) {
                Matrix cand = hstack(cur, exactla::select_columns(ker, {c}));
                if (rank(cand) == cur_rank) continue;
                cur = cand;
                ++cur_rank;
                auto id = find({a, b});
                if (!id) throw std::logic_error("decompose: representation outside the backend inventory");
                gens.push_back({*id, a, ker.column(c)});
            }
        }
    }
    std::stable_sort(gens.begin(), gens.end(), [](const Gen& x, const Gen& y) { return x.id < y.id; });
    std::vector<IndId> ids;
    for (const auto& g : gens) ids.push_back(g.id);
    ObjectExpr type(ids);
    auto pos = layout(type);
    std::vector<Matrix> iso;
    for (int v = 0; v < m; ++v) iso.emplace_back(r.dims[v], r.dims[v], p_);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto& iv = interval(gens[k].id);
        Matrix vec = exactla::from_columns({gens[k].vec}, r.dims[gens[k].start], p_);
        for (int v = iv.start; v <= iv.end; ++v) {
            Matrix img = r.composite(gens[k].start, v) * vec;
            for (std::size_t i = 0; i < r.dims[v]; ++i) iso[v].set(i, pos[k][v], img(i, 0));
        }
    }
    for (int v = 0; v < m; ++v)
        if (rank(iso[v]) != r.dims[v]) throw TheoremViolation("decompose: constructed map is not an isomorphism");
    QuiverRep canon = canonical_rep(type);
    for (int v = 0; v + 1 < m; ++v)
        if (iso[v + 1] * canon.arrows[v] != r.arrows[v] * iso[v])
            throw TheoremViolation("decompose: constructed map does not intertwine");
    return {type, iso};
}

Morphism LinearRepCategory::make_morphism(const ObjectExpr& x, const ObjectExpr& y, std::vector<Matrix> blocks) const {
    Morphism f{x, y, std::move(blocks)};
    auto dx = dims(x), dy = dims(y);
    if (f.blocks.size() != vertices_) throw std::invalid_argument("morphism: wrong number of blocks");
    for (std::size_t v = 0; v < vertices_; ++v)
        if (f.blocks[v].rows() != dy[v] || f.blocks[v].cols() != dx[v])
            throw std::invalid_argument("morphism: block shape mismatch");
    if (!intertwines(f)) throw std::invalid_argument("morphism: blocks do not commute with the arrows");
    return f;
}

bool LinearRepCategory::intertwines(const Morphism& f) const {
    QuiverRep rx = canonical_rep(f.source), ry = canonical_rep(f.target);
    for (std::size_t v = 0; v + 1 < vertices_; ++v)
        if (f.blocks[v + 1] * rx.arrows[v] != ry.arrows[v] * f.blocks[v]) return false;
    return true;
}

int LinearRepCategory::length(IndId id) const {
    const auto& iv = interval(id);
    return iv.end - iv.start + 1;
}

std::vector<IndId> LinearRepCategory::composition_factors(IndId id) const {
    const auto& iv = interval(id);
    std::vector<IndId> out;
    for (int v = iv.start; v <= iv.end; ++v) {
        auto s = find({v, v});
        if (!s) throw std::logic_error("composition_factors: simple outside the inventory");
        out.push_back(*s);
    }
    return out;
}

Morphism LinearRepCategory::zero(const ObjectExpr& x, const ObjectExpr& y) const {
    auto dx = dims(x), dy = dims(y);
    Morphism f{x, y, {}};
    for (std::size_t v = 0; v < vertices_; ++v) f.blocks.emplace_back(dy[v], dx[v], p_);
    return f;
}

Morphism LinearRepCategory::identity(const ObjectExpr& x) const {
    auto d = dims(x);
    Morphism f{x, x, {}};
    for (std::size_t v = 0; v < vertices_; ++v) f.blocks.push_back(Matrix::identity(d[v], p_));
    return f;
}

Morphism LinearRepCategory::compose(const Morphism& g, const Morphism& f) const {
    if (f.target != g.source) throw std::invalid_argument("compose: objects do not match");
    Morphism h{f.source, g.target, {}};
    for (std::size_t v = 0; v < vertices_; ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
    return h;
}

Morphism LinearRepCategory::add(const Morphism& f, const Morphism& g) const {
    if (f.source != g.source || f.target != g.target) throw std::invalid_argument("add: objects do not match");
    Morphism h{f.source, f.target, {}};
    for (std::size_t v = 0; v < vertices_; ++v) h.blocks.push_back(f.blocks[v] + g.blocks[v]);
    return h;
}

Morphism LinearRepCategory::scale(const Morphism& f, Scalar k) const {
    Morphism h = f;
    for (auto& b : h.blocks) b = b.scaled(k);
    return h;
}

std::vector<Morphism> LinearRepCategory::hom_basis(const ObjectExpr& x, const ObjectExpr& y) const {
    std::vector<Morphism> out;
    auto px = layout(x), py = layout(y);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) {
            const auto& s = interval(x[i]);
            const auto& t = interval(y[j]);
            // nonzero iff t.start <= s.start <= t.end <= s.end; identity on [s.start, t.end]
            if (!(t.start <= s.start && s.start <= t.end && t.end <= s.end)) continue;
            Morphism f = zero(x, y);
            for (int v = s.start; v <= t.end; ++v) f.blocks[v].set(py[j][v], px[i][v], 1);
            out.push_back(std::move(f));
        }
    return out;
}

std::vector<Scalar> LinearRepCategory::coords(const Morphism& f) const {
    std::vector<Scalar> v;
    for (const auto& b : f.blocks) v.insert(v.end(), b.data().begin(), b.data().end());
    return v;
}

std::vector<Scalar> LinearRepCategory::coord_moduli(const ObjectExpr& x, const ObjectExpr& y) const {
    auto dx = dims(x), dy = dims(y);
    std::size_t n = 0;
    for (std::size_t v = 0; v < vertices_; ++v) n += dx[v] * dy[v];
    return std::vector<Scalar>(n, p_);
}

Morphism LinearRepCategory::kernel(const Morphism& f) const {
    QuiverRep rx = canonical_rep(f.source);
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < vertices_; ++v) bases.push_back(nullspace(f.blocks[v]));
    Decomposition d = decompose(restrict_to(rx, bases));
    Morphism k{d.type, f.source, {}};
    for (std::size_t v = 0; v < vertices_; ++v) k.blocks.push_back(bases[v] * d.iso[v]);
    return k;
}

Morphism LinearRepCategory::cokernel(const Morphism& f) const {
    QuiverRep ry = canonical_rep(f.target);
    std::vector<Matrix> proj, section;
    QuiverRep q{p_, {}, {}};
    for (std::size_t v = 0; v < vertices_; ++v) {
        Subspace img(f.blocks[v]);
        Matrix comp = img.quotient_basis();
        Matrix full = hstack(img.basis(), comp);
        auto inv = inverse(full);
        if (!inv) throw std::logic_error("cokernel: basis completion failed");
        Matrix pr(comp.cols(), ry.dims[v], p_);
        for (std::size_t i = 0; i < comp.cols(); ++i)
            for (std::size_t j = 0; j < ry.dims[v]; ++j) pr.set(i, j, (*inv)(img.dim() + i, j));
        q.dims.push_back(comp.cols());
        proj.push_back(std::move(pr));
        section.push_back(std::move(comp));
    }
    for (std::size_t v = 0; v + 1 < vertices_; ++v) q.arrows.push_back(proj[v + 1] * ry.arrows[v] * section[v]);
    Decomposition d = decompose(q);
    Morphism c{f.target, d.type, {}};
    for (std::size_t v = 0; v < vertices_; ++v) {
        auto inv = inverse(d.iso[v]);
        c.blocks.push_back(*inv * proj[v]);
    }
    return c;
}

std::optional<Morphism> LinearRepCategory::lift_through_mono(const Morphism& m, const Morphism& f) const {
    if (m.target != f.target) throw std::invalid_argument("lift_through_mono: targets differ");
    Morphism x{f.source, m.source, {}};
    for (std::size_t v = 0; v < vertices_; ++v) {
        auto s = solve_matrix(m.blocks[v], f.blocks[v]);
        if (!s) return std::nullopt;
        x.blocks.push_back(*s);
    }
    if (compose(m, x) != f || !intertwines(x)) return std::nullopt;
    return x;
}

std::optional<Morphism> LinearRepCategory::lift_through_epi(const Morphism& e, const Morphism& f) const {
    if (e.source != f.source) throw std::invalid_argument("lift_through_epi: sources differ");
    Morphism x{e.target, f.target, {}};
    for (std::size_t v = 0; v < vertices_; ++v) {
        auto s = solve_matrix(e.blocks[v].transpose(), f.blocks[v].transpose());
        if (!s) return std::nullopt;
        x.blocks.push_back(s->transpose());
    }
    if (compose(x, e) != f || !intertwines(x)) return std::nullopt;
    return x;
}

std::vector<Morphism> LinearRepCategory::subobjects(const ObjectExpr& x, std::size_t limit) const {
    QuiverRep r = canonical_rep(x);
    std::vector<Morphism> out;
    for_each_subrep(r, [&](const std::vector<Matrix>& bases) {
        if (out.size() >= limit) throw BoundExceeded("subobject enumeration exceeded the configured limit");
        Decomposition d = decompose(restrict_to(r, bases));
        Morphism mono{d.type, x, {}};
        for (std::size_t v = 0; v < vertices_; ++v) mono.blocks.push_back(bases[v] * d.iso[v]);
        out.push_back(std::move(mono));
        return true;
    });
    return out;
}

std::vector<SubQuot> LinearRepCategory::subobject_types(const ObjectExpr& x, std::size_t limit) const {
    {
        std::lock_guard lock(cache_mutex_);
        auto it = subtype_cache_.find(x);
        if (it != subtype_cache_.end()) return it->second;
        auto big = too_many_.find(x);
        if (big != too_many_.end() && limit <= big->second)
            throw BoundExceeded("subobject enumeration exceeded the configured limit");
    }
    QuiverRep r = canonical_rep(x);
    const int m = static_cast<int>(vertices_);
    std::vector<std::vector<Matrix>> comp(m);
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) comp[a].push_back(r.composite(a, b));
    std::set<SubQuot> found;
    std::size_t count = 0;
    std::vector<std::vector<int>> rs(m, std::vector<int>(m)), rq(m, std::vector<int>(m));
    auto from_ranks = [&](const std::vector<std::vector<int>>& rk) {
        auto at = [&](int a, int b) { return (a < 0 || b >= m) ? 0 : rk[a][b]; };
        std::vector<IndId> ids;
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b) {
                int k = at(a, b) - at(a - 1, b) - at(a, b + 1) + at(a - 1, b + 1);
                if (k == 0) continue;
                auto id = find({a, b});
                if (!id || k < 0) throw std::logic_error("subobject_types: type outside the inventory");
                ids.insert(ids.end(), static_cast<std::size_t>(k), *id);
            }
        return ObjectExpr(std::move(ids));
    };
    for_each_subrep(r, [&](const std::vector<Matrix>& bases) {
        if (++count > limit) {
            std::lock_guard lock(cache_mutex_);
            too_many_[x] = std::max(too_many_[x], limit);
            throw BoundExceeded("subobject enumeration exceeded the configured limit");
        }
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b) {
                const Matrix& c = comp[a][b - a];
                rs[a][b] = static_cast<int>(rank(c * bases[a]));
                rq[a][b] = static_cast<int>(rank(hstack(c, bases[b])) - bases[b].cols());
            }
        found.insert({from_ranks(rs), from_ranks(rq)});
        return true;
    });
    std::vector<SubQuot> out(found.begin(), found.end());
    std::lock_guard lock(cache_mutex_);
    subtype_cache_.emplace(x, out);
    return out;
}

Morphism LinearRepCategory::summand_map(const ObjectExpr& x, const ObjectExpr& y,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs) const {
    Morphism f = zero(x, y);
    auto px = layout(x), py = layout(y);
    for (auto [i, j] : pairs) {
        if (x[i] != y[j]) throw std::invalid_argument("summand_map: summands differ");
        const auto& iv = interval(x[i]);
        for (int v = iv.start; v <= iv.end; ++v) f.blocks[v].set(py[j][v], px[i][v], 1);
    }
    return f;
}

std::vector<ObjectExpr> LinearRepCategory::default_universe() const {
    const std::size_t n = inventory_.size();
    if (n > 20) throw BoundExceeded("universe of multiplicity-free sums is too large");
    std::vector<ObjectExpr> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (universe_limit_ && static_cast<std::size_t>(__builtin_popcount(mask)) > universe_limit_) continue;
        std::vector<IndId> ids;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) ids.push_back(static_cast<IndId>(i));
        out.emplace_back(std::move(ids));
    }
    std::stable_sort(out.begin(), out.end(), [](const ObjectExpr& a, const ObjectExpr& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

}  // namespace pretor::linrep
