#include "pretor/abcat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pretor {

ObjectExpr::ObjectExpr(std::vector<IndId> summands) : summands_(std::move(summands)) {
    std::sort(summands_.begin(), summands_.end());
}

ObjectExpr ObjectExpr::operator+(const ObjectExpr& o) const {
    std::vector<IndId> all = summands_;
    all.insert(all.end(), o.summands_.begin(), o.summands_.end());
    return ObjectExpr(std::move(all));
}

std::vector<SubQuot> Category::subobject_types(const ObjectExpr& x, std::size_t limit) const {
    std::set<SubQuot> out;
    for (const auto& m : subobjects(x, limit)) out.insert({m.source, cokernel(m).target});
    return {out.begin(), out.end()};
}

std::vector<IndId> Category::indecomposables() const {
    std::vector<IndId> ids(indecomposable_count());
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

std::vector<ObjectExpr> Category::indecomposable_objects() const {
    std::vector<ObjectExpr> out;
    for (auto id : indecomposables()) out.push_back(ObjectExpr::single(id));
    return out;
}

int Category::length(const ObjectExpr& x) const {
    int s = 0;
    for (auto id : x.summands()) s += length(id);
    return s;
}

std::vector<IndId> Category::simples() const {
    std::vector<IndId> out;
    for (auto id : indecomposables())
        if (length(id) == 1) out.push_back(id);
    return out;
}

std::string Category::describe(const ObjectExpr& x) const {
    if (x.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "+" : "") + name(x[i]);
    return s;
}

std::optional<ObjectExpr> Category::parse_object(std::string_view text) const {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "0" || text.empty()) return ObjectExpr{};
    std::vector<IndId> ids;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '+') {
            auto id = parse_indecomposable(trim(text.substr(start, i - start)));
            if (!id) return std::nullopt;
            ids.push_back(*id);
            start = i + 1;
        }
    }
    return ObjectExpr(std::move(ids));
}

bool Category::hom_nonzero(IndId a, IndId b) const {
    return !hom_basis(ObjectExpr::single(a), ObjectExpr::single(b)).empty();
}

Scalar Category::order(const Morphism& f) const {
    return exactla::element_order(coords(f), coord_moduli(f.source, f.target));
}

bool Category::is_zero(const Morphism& f) const {
    auto v = coords(f);
    return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

bool is_mono(const Category& c, const Morphism& f) { return c.kernel(f).source.is_zero(); }
bool is_epi(const Category& c, const Morphism& f) { return c.cokernel(f).target.is_zero(); }
bool is_iso(const Category& c, const Morphism& f) { return is_mono(c, f) && is_epi(c, f); }

ImageFactorization image(const Category& c, const Morphism& f) {
    Morphism m = c.kernel(c.cokernel(f));
    auto e = c.lift_through_mono(m, f);
    if (!e) throw std::logic_error("image: morphism does not factor through its image");
    return {*e, m};
}

Biproduct biproduct(const Category& c, const std::vector<ObjectExpr>& parts) {
    struct Slot {
        IndId id;
        std::size_t part;
        std::size_t index;
    };
    std::vector<Slot> slots;
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (std::size_t i = 0; i < parts[k].size(); ++i) slots.push_back({parts[k][i], k, i});
    std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.id < b.id; });
    std::vector<IndId> ids;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> maps(parts.size());
    for (std::size_t pos = 0; pos < slots.size(); ++pos) {
        ids.push_back(slots[pos].id);
        maps[slots[pos].part].emplace_back(slots[pos].index, pos);
    }
    Biproduct b{ObjectExpr(ids), {}, {}};
    for (std::size_t k = 0; k < parts.size(); ++k) {
        b.injections.push_back(c.summand_map(parts[k], b.object, maps[k]));
        std::vector<std::pair<std::size_t, std::size_t>> back;
        for (auto [i, pos] : maps[k]) back.emplace_back(pos, i);
        b.projections.push_back(c.summand_map(b.object, parts[k], back));
    }
    return b;
}

Morphism direct_sum(const Category& c, const Morphism& f, const Morphism& g) {
    Biproduct s = biproduct(c, {f.source, g.source});
    Biproduct t = biproduct(c, {f.target, g.target});
    return c.add(c.compose(t.injections[0], c.compose(f, s.projections[0])),
                 c.compose(t.injections[1], c.compose(g, s.projections[1])));
}

Morphism from_biproduct(const Category& c, const std::vector<Morphism>& fs, const ObjectExpr& target) {
    std::vector<ObjectExpr> parts;
    for (const auto& f : fs) parts.push_back(f.source);
    Biproduct b = biproduct(c, parts);
    Morphism sum = c.zero(b.object, target);
    for (std::size_t k = 0; k < fs.size(); ++k) sum = c.add(sum, c.compose(fs[k], b.projections[k]));
    return sum;
}

Morphism to_biproduct(const Category& c, const std::vector<Morphism>& fs, const ObjectExpr& source) {
    std::vector<ObjectExpr> parts;
    for (const auto& f : fs) parts.push_back(f.target);
    Biproduct b = biproduct(c, parts);
    Morphism sum = c.zero(source, b.object);
    for (std::size_t k = 0; k < fs.size(); ++k) sum = c.add(sum, c.compose(b.injections[k], fs[k]));
    return sum;
}

Square pullback(const Category& c, const Morphism& f, const Morphism& g) {
    if (f.target != g.target) throw std::invalid_argument("pullback: morphisms need a common target");
    Biproduct ab = biproduct(c, {f.source, g.source});
    Morphism d = c.subtract(c.compose(f, ab.projections[0]), c.compose(g, ab.projections[1]));
    Morphism k = c.kernel(d);
    return {k.source, c.compose(ab.projections[0], k), c.compose(ab.projections[1], k)};
}

Square pushout(const Category& c, const Morphism& f, const Morphism& g) {
    if (f.source != g.source) throw std::invalid_argument("pushout: morphisms need a common source");
    Biproduct ab = biproduct(c, {f.target, g.target});
    Morphism d = c.subtract(c.compose(ab.injections[0], f), c.compose(ab.injections[1], g));
    Morphism q = c.cokernel(d);
    return {q.target, c.compose(q, ab.injections[0]), c.compose(q, ab.injections[1])};
}

void validate_ses(const Category& c, const Ses& s) {
    if (s.i.target != s.p.source) throw std::logic_error("ses: maps are not composable");
    if (!c.is_zero(c.compose(s.p, s.i))) throw std::logic_error("ses: p o i != 0");
    if (!is_mono(c, s.i)) throw std::logic_error("ses: i is not a monomorphism");
    if (!is_epi(c, s.p)) throw std::logic_error("ses: p is not an epimorphism");
    if (c.length(s.middle()) != c.length(s.sub()) + c.length(s.quot()))
        throw std::logic_error("ses: lengths do not add up");
}

bool is_ses(const Category& c, const Ses& s) {
    try {
        validate_ses(c, s);
        return true;
    } catch (const std::logic_error&) {
        return false;
    }
}

ModSpan hom_span(const Category& c, const ObjectExpr& x, const ObjectExpr& y) {
    ModSpan span(c.coord_moduli(x, y));
    for (const auto& h : c.hom_basis(x, y)) span.add(c.coords(h));
    return span;
}

namespace {

Morphism combine(const Category& c, const std::vector<Morphism>& basis, const std::vector<Scalar>& coeff,
                 const ObjectExpr& x, const ObjectExpr& y) {
    Morphism m = c.zero(x, y);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeff[i] != 0) m = c.add(m, c.scale(basis[i], coeff[i]));
    return m;
}

}  // namespace

bool verify_kernel_universal(const Category& c, const Morphism& f, const Morphism& k,
                             const std::vector<ObjectExpr>& testers) {
    if (!c.is_zero(c.compose(f, k))) return false;
    for (const auto& w : testers) {
        auto basis = c.hom_basis(w, f.source);
        std::vector<std::vector<Scalar>> images;
        std::vector<Scalar> orders;
        for (const auto& g : basis) {
            images.push_back(c.coords(c.compose(f, g)));
            orders.push_back(c.order(g));
        }
        ModSpan zero_span(c.coord_moduli(w, f.target));
        for (const auto& coeff : exactla::preimage_generators(images, orders, zero_span)) {
            Morphism g = combine(c, basis, coeff, w, f.source);
            if (!c.lift_through_mono(k, g)) return false;
        }
    }
    return true;
}

bool verify_cokernel_universal(const Category& c, const Morphism& f, const Morphism& q,
                               const std::vector<ObjectExpr>& testers) {
    if (!c.is_zero(c.compose(q, f))) return false;
    for (const auto& w : testers) {
        auto basis = c.hom_basis(f.target, w);
        std::vector<std::vector<Scalar>> images;
        std::vector<Scalar> orders;
        for (const auto& g : basis) {
            images.push_back(c.coords(c.compose(g, f)));
            orders.push_back(c.order(g));
        }
        ModSpan zero_span(c.coord_moduli(f.source, w));
        for (const auto& coeff : exactla::preimage_generators(images, orders, zero_span)) {
            Morphism g = combine(c, basis, coeff, f.target, w);
            if (!c.lift_through_epi(q, g)) return false;
        }
    }
    return true;
}

std::vector<Morphism> enumerate_span(const Category& c, const std::vector<Morphism>& gens, const ObjectExpr& x,
                                     const ObjectExpr& y, std::size_t limit) {
    std::set<std::vector<Scalar>> seen;
    std::vector<Morphism> out{c.zero(x, y)};
    seen.insert(c.coords(out.front()));
    for (const auto& g : gens) {
        std::size_t current = out.size();
        for (std::size_t i = 0; i < current; ++i) {
            Morphism m = c.add(out[i], g);
            while (seen.insert(c.coords(m)).second) {
                out.push_back(m);
                if (out.size() > limit) throw BoundExceeded("enumerate_span: hom group too large");
                m = c.add(m, g);
            }
        }
    }
    return out;
}

}  // namespace pretor
