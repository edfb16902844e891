#include "pretor/torsion.hpp"

#include <algorithm>
#include <map>

namespace pretor::torsion {

bool ClassSpec::contains(const ObjectExpr& x) const {
    return std::all_of(x.summands().begin(), x.summands().end(), [&](IndId id) { return contains(id); });
}

bool ClassSpec::subset_of(const ClassSpec& o) const {
    return std::includes(o.members.begin(), o.members.end(), members.begin(), members.end());
}

ClassSpec ClassSpec::intersect(const ClassSpec& o) const {
    ClassSpec r;
    std::set_intersection(members.begin(), members.end(), o.members.begin(), o.members.end(),
                          std::inserter(r.members, r.members.end()));
    return r;
}

ClassSpec ClassSpec::all(const Category& c) {
    return where(c, [](IndId) { return true; });
}

std::string describe(const Category& c, const ClassSpec& s) {
    std::string out = "add{";
    bool first = true;
    for (auto id : s.members) {
        out += (first ? "" : ",") + c.name(id);
        first = false;
    }
    return out + "}";
}

ClassSpec parse_class(const Category& c, std::string_view text) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
        while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
        return v;
    };
    text = trim(text);
    if (text.starts_with("add{") && text.ends_with("}")) text = text.substr(4, text.size() - 5);
    else if (text.starts_with("{") && text.ends_with("}")) text = text.substr(1, text.size() - 2);
    ClassSpec s;
    text = trim(text);
    if (text.empty() || text == "0") return s;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '[') ++depth;
        if (i < text.size() && text[i] == ']') --depth;
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            auto item = trim(text.substr(start, i - start));
            auto id = c.parse_indecomposable(item);
            if (!id) throw std::invalid_argument("unknown indecomposable '" + std::string(item) + "' for backend " + c.backend());
            s.members.insert(*id);
            start = i + 1;
        }
    }
    return s;
}

ClosureReport closure_checks(const Category& c, const ClassSpec& s, const std::vector<ObjectExpr>& universe) {
    ClosureReport r;
    for (const auto& x : universe) {
        bool member = s.contains(x);
        for (const auto& sq : c.subobject_types(x, kSubobjectLimit)) {
            if (member && !s.contains(sq.quot) && r.under_quotients) {
                r.under_quotients = false;
                r.witnesses.push_back("quotient " + c.describe(sq.quot) + " of " + c.describe(x));
            }
            if (member && !s.contains(sq.sub) && r.under_subobjects) {
                r.under_subobjects = false;
                r.witnesses.push_back("subobject " + c.describe(sq.sub) + " of " + c.describe(x));
            }
            if (!member && s.contains(sq.sub) && s.contains(sq.quot) && r.under_extensions) {
                r.under_extensions = false;
                r.witnesses.push_back("extension " + c.describe(x) + " of " + c.describe(sq.quot) + " by " +
                                      c.describe(sq.sub));
            }
        }
    }
    return r;
}

Morphism trace(const Category& c, const ObjectExpr& x, const ClassSpec& t) {
    std::vector<Morphism> gens;
    for (auto id : t.members)
        for (auto& h : c.hom_basis(ObjectExpr::single(id), x)) gens.push_back(std::move(h));
    if (gens.empty()) return c.zero(ObjectExpr(), x);
    return image(c, from_biproduct(c, gens, x)).mono;
}

Morphism reject(const Category& c, const ObjectExpr& x, const ClassSpec& f) {
    std::vector<Morphism> maps;
    for (auto id : f.members)
        for (auto& h : c.hom_basis(x, ObjectExpr::single(id))) maps.push_back(std::move(h));
    if (maps.empty()) return c.zero(x, ObjectExpr());
    return c.cokernel(c.kernel(to_biproduct(c, maps, x)));
}

Report is_torsion_pair(const Category& c, const TorsionPair& tp, const std::vector<ObjectExpr>& universe) {
    Report r;
    for (auto t : tp.T.members)
        for (auto f : tp.F.members)
            if (c.hom_nonzero(t, f)) r.fail("Hom(" + c.name(t) + ", " + c.name(f) + ") != 0");
    for (const auto& x : universe) {
        Morphism m = trace(c, x, tp.T);
        if (!tp.T.contains(m.source)) {
            r.fail("trace of " + c.describe(x) + " is " + c.describe(m.source) + ", not in T");
            continue;
        }
        auto q = c.cokernel(m).target;
        if (!tp.F.contains(q)) r.fail("canonical sequence of " + c.describe(x) + " has quotient " + c.describe(q) + " not in F");
    }
    return r;
}

Ses canonical_ses(const Category& c, const ObjectExpr& x, const TorsionPair& tp) {
    Morphism m = trace(c, x, tp.T);
    Morphism q = c.cokernel(m);
    if (!tp.T.contains(m.source) || !tp.F.contains(q.target))
        throw std::invalid_argument("canonical_ses: " + c.describe(x) + " has no sequence for this pair");
    Ses s{m, q};
    validate_ses(c, s);
    return s;
}

ClassSpec right_perp(const Category& c, const ClassSpec& t) {
    return ClassSpec::where(c, [&](IndId y) {
        return std::none_of(t.members.begin(), t.members.end(), [&](IndId a) { return c.hom_nonzero(a, y); });
    });
}

ClassSpec left_perp(const Category& c, const ClassSpec& f) {
    return ClassSpec::where(c, [&](IndId x) {
        return std::none_of(f.members.begin(), f.members.end(), [&](IndId b) { return c.hom_nonzero(x, b); });
    });
}

std::vector<TorsionPair> enumerate_torsion_pairs(const Category& c, const std::vector<ObjectExpr>& universe) {
    const std::size_t n = c.indecomposable_count();
    if (n > 20) throw BoundExceeded("enumerate_torsion_pairs: more than 20 indecomposables");
    std::vector<std::uint32_t> out_mask(n, 0), in_mask(n, 0);  // hom nonzero a -> b
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (c.hom_nonzero(static_cast<IndId>(a), static_cast<IndId>(b))) {
                out_mask[a] |= 1u << b;
                in_mask[b] |= 1u << a;
            }
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    auto to_class = [&](std::uint32_t m) {
        ClassSpec s;
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1u) s.members.insert(static_cast<IndId>(i));
        return s;
    };
    std::vector<TorsionPair> out;
    for (std::uint32_t t = 0; t <= full; ++t) {
        std::uint32_t reach = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (t >> i & 1u) reach |= out_mask[i];
        std::uint32_t f = full & ~reach;
        std::uint32_t back = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (f >> i & 1u) back |= in_mask[i];
        if ((full & ~back) != t) continue;
        TorsionPair tp{to_class(t), to_class(f)};
        if (is_torsion_pair(c, tp, universe).ok) out.push_back(std::move(tp));
    }
    return out;
}

bool in_ext_product(const Category& c, const ClassSpec& a, const ClassSpec& b, const ObjectExpr& x) {
    if (a.contains(x) || b.contains(x)) return true;  // 0 -> x -> x and x -> x -> 0
    for (const auto& sq : c.subobject_types(x, kSubobjectLimit))
        if (a.contains(sq.sub) && b.contains(sq.quot)) return true;
    return false;
}

ClassSpec ext_product(const Category& c, const ClassSpec& a, const ClassSpec& b) {
    return ClassSpec::where(c, [&](IndId id) { return in_ext_product(c, a, b, ObjectExpr::single(id)); });
}

bool is_serre(const Category& c, const ClassSpec& s, const std::vector<ObjectExpr>& universe) {
    auto r = closure_checks(c, s, universe);
    return r.under_quotients && r.under_subobjects && r.under_extensions;
}

ClassSpec serre_from_simples(const Category& c, const std::set<IndId>& simples) {
    return ClassSpec::where(c, [&](IndId id) {
        auto fs = c.composition_factors(id);
        return std::all_of(fs.begin(), fs.end(), [&](IndId s) { return simples.count(s) > 0; });
    });
}

void StabilityFunction::check(const Category& c) const {
    auto n = c.simples().size();
    if (theta.size() != n || ell.size() != n)
        throw std::invalid_argument("stability function needs one weight per simple (" + std::to_string(n) + ")");
    for (auto l : ell)
        if (l <= 0) throw std::invalid_argument("stability function: ell weights must be positive");
}

Rational StabilityFunction::value(const Category& c, const ObjectExpr& x) const {
    if (x.is_zero()) throw std::invalid_argument("stability function is undefined on the zero object");
    auto simples = c.simples();
    std::map<IndId, std::size_t> index;
    for (std::size_t i = 0; i < simples.size(); ++i) index[simples[i]] = i;
    long long num = 0, den = 0;
    for (auto id : x.summands())
        for (auto s : c.composition_factors(id)) {
            num += theta.at(index.at(s));
            den += ell.at(index.at(s));
        }
    return Rational(num, den);
}

bool in_stability_T(const Category& c, const StabilityFunction& phi, Rational p, bool strict, const ObjectExpr& x) {
    for (const auto& sq : c.subobject_types(x, kSubobjectLimit)) {
        if (sq.quot.is_zero()) continue;
        Rational v = phi.value(c, sq.quot);
        if (strict ? !(v > p) : v < p) return false;
    }
    return true;
}

bool in_stability_F(const Category& c, const StabilityFunction& phi, Rational p, bool strict, const ObjectExpr& x) {
    for (const auto& sq : c.subobject_types(x, kSubobjectLimit)) {
        if (sq.sub.is_zero()) continue;
        Rational v = phi.value(c, sq.sub);
        if (strict ? v > p : !(v < p)) return false;
    }
    return true;
}

TorsionPair stability_classes(const Category& c, const StabilityFunction& phi, Rational p, bool strict) {
    phi.check(c);
    TorsionPair tp;
    tp.T = ClassSpec::where(c, [&](IndId id) { return in_stability_T(c, phi, p, strict, ObjectExpr::single(id)); });
    tp.F = ClassSpec::where(c, [&](IndId id) { return in_stability_F(c, phi, p, strict, ObjectExpr::single(id)); });
    return tp;
}

Report seesaw_check(const Category& c, const StabilityFunction& phi, const std::vector<ObjectExpr>& universe) {
    phi.check(c);
    Report r;
    for (const auto& x : universe) {
        if (x.is_zero()) continue;
        Rational b = phi.value(c, x);
        for (const auto& sq : c.subobject_types(x, kSubobjectLimit)) {
            if (sq.sub.is_zero() || sq.quot.is_zero()) continue;
            Rational a = phi.value(c, sq.sub), q = phi.value(c, sq.quot);
            int cases = int(a < b && b < q) + int(a == b && b == q) + int(a > b && b > q);
            if (cases != 1)
                r.fail("0 -> " + c.describe(sq.sub) + " -> " + c.describe(x) + " -> " + c.describe(sq.quot) +
                       " -> 0 has values " + to_string(a) + ", " + to_string(b) + ", " + to_string(q));
        }
    }
    return r;
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace pretor::torsion
