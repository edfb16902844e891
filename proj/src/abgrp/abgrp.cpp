#include "pretor/abgrp.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace pretor::abgrp {

using exactla::factorize;
using exactla::mod_reduce;

Scalar AbGroup::order() const {
    Scalar o = 1;
    for (auto m : cyclic_orders) o *= m;
    return o;
}

std::string AbGroup::to_string() const {
    if (cyclic_orders.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < cyclic_orders.size(); ++i) s += (i ? "+Z/" : "Z/") + std::to_string(cyclic_orders[i]);
    return s;
}

std::string PrimeSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto p : primes) {
        s += (first ? "" : ",") + std::to_string(p);
        first = false;
    }
    return s + "}";
}

bool in_T(const PrimeSet& p, const AbGroup& m) {
    for (auto [q, e] : factorize(m.order()))
        if (!p.contains(q)) return false;
    return true;
}

bool in_F(const PrimeSet& p, const AbGroup& m) {
    for (auto [q, e] : factorize(m.order()))
        if (p.contains(q)) return false;
    return true;
}

namespace {

// Mixed-radix indexing of the elements of (+)Z/m_i.
struct ElementSpace {
    std::vector<Scalar> mods;
    std::size_t size = 1;

    explicit ElementSpace(std::vector<Scalar> m) : mods(std::move(m)) {
        for (auto x : mods) size *= static_cast<std::size_t>(x);
    }
    std::size_t encode(const std::vector<Scalar>& v) const {
        std::size_t idx = 0;
        for (std::size_t i = mods.size(); i-- > 0;)
            idx = idx * static_cast<std::size_t>(mods[i]) + static_cast<std::size_t>(mod_reduce(v[i], mods[i]));
        return idx;
    }
    std::vector<Scalar> decode(std::size_t idx) const {
        std::vector<Scalar> v(mods.size());
        for (std::size_t i = 0; i < mods.size(); ++i) {
            v[i] = static_cast<Scalar>(idx % static_cast<std::size_t>(mods[i]));
            idx /= static_cast<std::size_t>(mods[i]);
        }
        return v;
    }
    std::size_t add(std::size_t a, std::size_t b) const {
        auto x = decode(a), y = decode(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return encode(x);
    }
    std::size_t mul(Scalar k, std::size_t a) const {
        auto x = decode(a);
        for (auto& c : x) c *= k;
        return encode(x);
    }
};

// A finite abelian group presented by canonical element indices and a
// canonicalizing addition (identity for subgroups, coset minimum for quotients).
struct AbstractGroup {
    std::vector<std::size_t> elems;
    std::function<std::size_t(std::size_t, std::size_t)> add;
    std::function<std::size_t(Scalar, std::size_t)> mul;
    std::size_t zero;

    Scalar order_of(std::size_t x) const {
        Scalar k = 1;
        std::size_t y = x;
        while (y != zero) {
            y = add(y, x);
            ++k;
        }
        return k;
    }
};

struct CyclicFactor {
    Scalar order;
    std::size_t gen;
};

int exact_log(std::size_t v, Scalar p) {
    int e = 0;
    while (v > 1) {
        v /= static_cast<std::size_t>(p);
        ++e;
    }
    return e;
}

// Direct decomposition into cyclic groups of prime-power order.
std::vector<CyclicFactor> cyclic_decomposition(const AbstractGroup& g) {
    std::vector<CyclicFactor> out;
    std::map<std::size_t, Scalar> ord;
    for (auto x : g.elems) ord[x] = g.order_of(x);
    for (auto [p, e_total] : factorize(static_cast<Scalar>(g.elems.size()))) {
        std::vector<std::size_t> hp;
        for (auto x : g.elems)
            if (factorize(ord[x]).size() <= 1 && (ord[x] == 1 || ord[x] % p == 0)) hp.push_back(x);
        // r_j = #{parts >= j} from the sizes of the p^j-torsion subgroups
        std::vector<int> r;
        int prev = 0;
        for (Scalar pj = p;; pj *= p) {
            std::size_t c = 0;
            for (auto x : hp)
                if (pj % ord[x] == 0) ++c;
            int lg = exact_log(c, p);
            r.push_back(lg - prev);
            prev = lg;
            if (c == hp.size()) break;
        }
        std::vector<int> parts;
        for (int i = 1; i <= r[0]; ++i) {
            int cnt = 0;
            for (auto rj : r)
                if (rj >= i) ++cnt;
            parts.push_back(cnt);
        }
        std::vector<std::size_t> chosen;
        std::set<std::size_t> span{g.zero};
        std::function<bool(std::size_t)> dfs = [&](std::size_t k) {
            if (k == parts.size()) return true;
            Scalar target = 1;
            for (int i = 0; i < parts[k]; ++i) target *= p;
            for (auto x : hp) {
                if (ord[x] != target) continue;
                if (span.count(g.mul(target / p, x))) continue;
                std::set<std::size_t> saved = span, next;
                for (auto s : span) {
                    std::size_t y = s;
                    for (Scalar t = 0; t < target; ++t) {
                        next.insert(y);
                        y = g.add(y, x);
                    }
                }
                span = std::move(next);
                chosen.push_back(x);
                if (dfs(k + 1)) return true;
                chosen.pop_back();
                span = std::move(saved);
            }
            return false;
        };
        if (!dfs(0)) throw TheoremViolation("cyclic_decomposition: no basis found");
        for (std::size_t k = 0; k < parts.size(); ++k) {
            Scalar o = 1;
            for (int i = 0; i < parts[k]; ++i) o *= p;
            out.push_back({o, chosen[k]});
        }
        (void)e_total;
    }
    return out;
}

Scalar gcd(Scalar a, Scalar b) { return std::gcd(a, b); }

}  // namespace

std::vector<Scalar> element_orders(const AbGroup& m) {
    ElementSpace sp(m.cyclic_orders);
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < sp.size; ++i) out.push_back(exactla::element_order(sp.decode(i), m.cyclic_orders));
    return out;
}

AbGrpCategory::AbGrpCategory(Scalar bound, std::size_t element_limit) : bound_(bound), element_limit_(element_limit) {
    if (bound < 1) throw std::invalid_argument("abgrp: bound must be positive");
    for (auto [p, e] : factorize(bound)) {
        Scalar q = 1;
        for (int k = 1; k <= e; ++k) inventory_.push_back(q *= p);
    }
}

IndId AbGrpCategory::id(Scalar prime_power) const {
    auto it = std::find(inventory_.begin(), inventory_.end(), prime_power);
    if (it == inventory_.end())
        throw std::invalid_argument("abgrp: Z/" + std::to_string(prime_power) + " is not an indecomposable within the bound");
    return static_cast<IndId>(it - inventory_.begin());
}

ObjectExpr AbGrpCategory::object(const AbGroup& g) const {
    std::vector<IndId> ids;
    for (auto m : g.cyclic_orders) ids.push_back(id(m));
    return ObjectExpr(std::move(ids));
}

AbGroup AbGrpCategory::group(const ObjectExpr& x) const { return {orders(x)}; }

std::vector<Scalar> AbGrpCategory::orders(const ObjectExpr& x) const {
    std::vector<Scalar> o;
    for (auto id : x.summands()) o.push_back(cyclic_order(id));
    return o;
}

void AbGrpCategory::check_size(const ObjectExpr& x) const {
    double s = 1;
    for (auto m : orders(x)) s *= static_cast<double>(m);
    if (s > static_cast<double>(element_limit_)) throw BoundExceeded("abgrp: group " + describe(x) + " is too large to enumerate");
}

Morphism AbGrpCategory::make_morphism(const ObjectExpr& x, const ObjectExpr& y, const Matrix& m) const {
    auto ox = orders(x), oy = orders(y);
    if (m.rows() != oy.size() || m.cols() != ox.size()) throw std::invalid_argument("abgrp: matrix shape mismatch");
    Matrix r(oy.size(), ox.size(), 0);
    for (std::size_t j = 0; j < oy.size(); ++j)
        for (std::size_t i = 0; i < ox.size(); ++i) {
            Scalar v = mod_reduce(m(j, i), oy[j]);
            if (mod_reduce(v * ox[i], oy[j]) != 0)
                throw std::invalid_argument("abgrp: entry (" + std::to_string(j) + "," + std::to_string(i) +
                                            ") is not a homomorphism Z/" + std::to_string(ox[i]) + " -> Z/" +
                                            std::to_string(oy[j]));
            r.set(j, i, v);
        }
    return {x, y, {r}};
}

std::vector<Scalar> AbGrpCategory::apply(const Morphism& f, const std::vector<Scalar>& element) const {
    auto oy = orders(f.target);
    const Matrix& m = f.blocks[0];
    std::vector<Scalar> out(oy.size(), 0);
    for (std::size_t j = 0; j < oy.size(); ++j) {
        Scalar s = 0;
        for (std::size_t i = 0; i < element.size(); ++i) s = mod_reduce(s + m(j, i) * element[i], oy[j]);
        out[j] = s;
    }
    return out;
}

std::vector<std::vector<Scalar>> AbGrpCategory::elements(const ObjectExpr& x) const {
    check_size(x);
    ElementSpace sp(orders(x));
    std::vector<std::vector<Scalar>> out;
    for (std::size_t i = 0; i < sp.size; ++i) out.push_back(sp.decode(i));
    return out;
}

std::string AbGrpCategory::name(IndId id) const { return "Z/" + std::to_string(cyclic_order(id)); }

std::optional<IndId> AbGrpCategory::parse_indecomposable(std::string_view text) const {
    if (text.starts_with("Z/")) text.remove_prefix(2);
    else if (text.starts_with("Z")) text.remove_prefix(1);
    Scalar v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
    auto it = std::find(inventory_.begin(), inventory_.end(), v);
    if (it == inventory_.end()) return std::nullopt;
    return static_cast<IndId>(it - inventory_.begin());
}

int AbGrpCategory::length(IndId id) const {
    int k = 0;
    for (auto [p, e] : factorize(cyclic_order(id))) k += e;
    return k;
}

std::vector<IndId> AbGrpCategory::composition_factors(IndId id) const {
    std::vector<IndId> out;
    for (auto [p, e] : factorize(cyclic_order(id))) out.insert(out.end(), static_cast<std::size_t>(e), this->id(p));
    return out;
}

Morphism AbGrpCategory::zero(const ObjectExpr& x, const ObjectExpr& y) const {
    return {x, y, {Matrix(y.size(), x.size(), 0)}};
}

Morphism AbGrpCategory::identity(const ObjectExpr& x) const { return {x, x, {Matrix::identity(x.size(), 0)}}; }

Morphism AbGrpCategory::compose(const Morphism& g, const Morphism& f) const {
    if (f.target != g.source) throw std::invalid_argument("compose: objects do not match");
    auto oz = orders(g.target);
    Matrix m = g.blocks[0] * f.blocks[0];
    for (std::size_t k = 0; k < m.rows(); ++k)
        for (std::size_t i = 0; i < m.cols(); ++i) m.set(k, i, mod_reduce(m(k, i), oz[k]));
    return {f.source, g.target, {m}};
}

Morphism AbGrpCategory::add(const Morphism& f, const Morphism& g) const {
    if (f.source != g.source || f.target != g.target) throw std::invalid_argument("add: objects do not match");
    auto oy = orders(f.target);
    Matrix m = f.blocks[0] + g.blocks[0];
    for (std::size_t j = 0; j < m.rows(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) m.set(j, i, mod_reduce(m(j, i), oy[j]));
    return {f.source, f.target, {m}};
}

Morphism AbGrpCategory::scale(const Morphism& f, Scalar k) const {
    auto oy = orders(f.target);
    Matrix m = f.blocks[0].scaled(k);
    for (std::size_t j = 0; j < m.rows(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) m.set(j, i, mod_reduce(m(j, i), oy[j]));
    return {f.source, f.target, {m}};
}

std::vector<Morphism> AbGrpCategory::hom_basis(const ObjectExpr& x, const ObjectExpr& y) const {
    std::vector<Morphism> out;
    for (const auto& g : hom_group(*this, x, y)) out.push_back(g.map);
    return out;
}

std::vector<Scalar> AbGrpCategory::coords(const Morphism& f) const { return f.blocks[0].data(); }

std::vector<Scalar> AbGrpCategory::coord_moduli(const ObjectExpr& x, const ObjectExpr& y) const {
    std::vector<Scalar> out;
    for (auto n : orders(y))
        for (std::size_t i = 0; i < x.size(); ++i) out.push_back(n);
    return out;
}

namespace {

Morphism inclusion_of(const AbGrpCategory& c, const ObjectExpr& x, const ElementSpace& sp,
                      const std::vector<std::size_t>& subgroup) {
    AbstractGroup g{subgroup, [&](std::size_t a, std::size_t b) { return sp.add(a, b); },
                    [&](Scalar k, std::size_t a) { return sp.mul(k, a); }, 0};
    auto factors = cyclic_decomposition(g);
    std::stable_sort(factors.begin(), factors.end(),
                     [&](const CyclicFactor& a, const CyclicFactor& b) { return c.id(a.order) < c.id(b.order); });
    std::vector<IndId> ids;
    for (const auto& f : factors) ids.push_back(c.id(f.order));
    ObjectExpr sub(ids);
    Matrix m(x.size(), factors.size(), 0);
    for (std::size_t k = 0; k < factors.size(); ++k) {
        auto v = sp.decode(factors[k].gen);
        for (std::size_t j = 0; j < v.size(); ++j) m.set(j, k, v[j]);
    }
    return c.make_morphism(sub, x, m);
}

std::vector<std::size_t> generated(const ElementSpace& sp, const std::vector<std::size_t>& gens) {
    std::set<std::size_t> span{0};
    for (auto g : gens) {
        std::set<std::size_t> next = span;
        for (auto s : span) {
            std::size_t y = sp.add(s, g);
            while (!next.count(y)) {
                next.insert(y);
                y = sp.add(y, g);
            }
        }
        // closing under g once per existing element suffices because next is closed under adding g
        span = std::move(next);
    }
    return {span.begin(), span.end()};
}

}  // namespace

Morphism AbGrpCategory::kernel(const Morphism& f) const {
    check_size(f.source);
    ElementSpace sp(orders(f.source));
    std::vector<std::size_t> ker;
    for (std::size_t i = 0; i < sp.size; ++i) {
        auto y = apply(f, sp.decode(i));
        if (std::all_of(y.begin(), y.end(), [](Scalar v) { return v == 0; })) ker.push_back(i);
    }
    return inclusion_of(*this, f.source, sp, ker);
}

Morphism AbGrpCategory::cokernel(const Morphism& f) const {
    check_size(f.target);
    auto oy = orders(f.target);
    ElementSpace sp(oy);
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < f.source.size(); ++i) gens.push_back(sp.encode(f.blocks[0].column(i)));
    auto img = generated(sp, gens);
    std::vector<std::size_t> canon(sp.size, sp.size);
    std::vector<std::size_t> reps;
    for (std::size_t y = 0; y < sp.size; ++y) {
        if (canon[y] != sp.size) continue;
        reps.push_back(y);
        for (auto i : img) canon[sp.add(y, i)] = y;
    }
    AbstractGroup q{reps, [&](std::size_t a, std::size_t b) { return canon[sp.add(a, b)]; },
                    [&](Scalar k, std::size_t a) { return canon[sp.mul(k, a)]; }, 0};
    auto factors = cyclic_decomposition(q);
    std::stable_sort(factors.begin(), factors.end(),
                     [&](const CyclicFactor& a, const CyclicFactor& b) { return id(a.order) < id(b.order); });
    std::vector<IndId> ids;
    std::vector<Scalar> qo;
    for (const auto& fc : factors) {
        ids.push_back(id(fc.order));
        qo.push_back(fc.order);
    }
    // coefficients of every coset in the chosen basis
    std::map<std::size_t, std::vector<Scalar>> coeff;
    ElementSpace cs(qo);
    for (std::size_t t = 0; t < cs.size; ++t) {
        auto c = cs.decode(t);
        std::size_t e = 0;
        for (std::size_t k = 0; k < c.size(); ++k) e = canon[sp.add(e, sp.mul(c[k], factors[k].gen))];
        coeff[e] = c;
    }
    Matrix m(factors.size(), oy.size(), 0);
    for (std::size_t j = 0; j < oy.size(); ++j) {
        std::vector<Scalar> unit(oy.size(), 0);
        unit[j] = 1;
        const auto& c = coeff.at(canon[sp.encode(unit)]);
        for (std::size_t k = 0; k < c.size(); ++k) m.set(k, j, c[k]);
    }
    return make_morphism(f.target, ObjectExpr(ids), m);
}

std::optional<Morphism> AbGrpCategory::lift_through_mono(const Morphism& m, const Morphism& f) const {
    if (m.target != f.target) throw std::invalid_argument("lift_through_mono: targets differ");
    check_size(m.source);
    ElementSpace src(orders(m.source)), tgt(orders(m.target));
    std::map<std::size_t, std::size_t> pre;
    for (std::size_t i = 0; i < src.size; ++i) pre.emplace(tgt.encode(apply(m, src.decode(i))), i);
    Matrix x(m.source.size(), f.source.size(), 0);
    for (std::size_t i = 0; i < f.source.size(); ++i) {
        auto it = pre.find(tgt.encode(f.blocks[0].column(i)));
        if (it == pre.end()) return std::nullopt;
        auto v = src.decode(it->second);
        for (std::size_t j = 0; j < v.size(); ++j) x.set(j, i, v[j]);
    }
    Morphism l;
    try {
        l = make_morphism(f.source, m.source, x);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (compose(m, l) != f) return std::nullopt;
    return l;
}

std::optional<Morphism> AbGrpCategory::lift_through_epi(const Morphism& e, const Morphism& f) const {
    if (e.source != f.source) throw std::invalid_argument("lift_through_epi: sources differ");
    check_size(e.source);
    ElementSpace src(orders(e.source)), mid(orders(e.target));
    std::map<std::size_t, std::size_t> pre;
    for (std::size_t i = 0; i < src.size; ++i) pre.emplace(mid.encode(apply(e, src.decode(i))), i);
    Matrix x(f.target.size(), e.target.size(), 0);
    for (std::size_t j = 0; j < e.target.size(); ++j) {
        std::vector<Scalar> unit(e.target.size(), 0);
        unit[j] = 1;
        auto it = pre.find(mid.encode(unit));
        if (it == pre.end()) return std::nullopt;
        auto v = apply(f, src.decode(it->second));
        for (std::size_t k = 0; k < v.size(); ++k) x.set(k, j, v[k]);
    }
    Morphism l;
    try {
        l = make_morphism(e.target, f.target, x);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (compose(l, e) != f) return std::nullopt;
    return l;
}

std::vector<Morphism> AbGrpCategory::subobjects(const ObjectExpr& x, std::size_t limit) const {
    check_size(x);
    auto ords = orders(x);
    ElementSpace sp(ords);
    // subgroups split along primary components: close each one, then take sums
    std::map<Scalar, std::vector<std::size_t>> by_prime;
    for (std::size_t i = 0; i < ords.size(); ++i) by_prime[factorize(ords[i]).begin()->first].push_back(i);
    std::set<std::vector<std::size_t>> all{{0}};
    for (const auto& [p, pos] : by_prime) {
        std::vector<Scalar> sub_mods;
        for (auto i : pos) sub_mods.push_back(ords[i]);
        ElementSpace local(sub_mods);
        std::vector<std::size_t> elems;
        for (std::size_t k = 0; k < local.size; ++k) {
            auto v = local.decode(k);
            std::vector<Scalar> full(ords.size(), 0);
            for (std::size_t t = 0; t < pos.size(); ++t) full[pos[t]] = v[t];
            elems.push_back(sp.encode(full));
        }
        std::set<std::vector<std::size_t>> cyclic;
        for (auto e : elems) cyclic.insert(generated(sp, {e}));
        std::set<std::vector<std::size_t>> part{{0}};
        std::vector<std::vector<std::size_t>> frontier{{0}};
        while (!frontier.empty()) {
            std::vector<std::vector<std::size_t>> next;
            for (const auto& s : frontier)
                for (const auto& c : cyclic) {
                    if (std::includes(s.begin(), s.end(), c.begin(), c.end())) continue;
                    std::set<std::size_t> join;
                    for (auto a : s)
                        for (auto b : c) join.insert(sp.add(a, b));
                    std::vector<std::size_t> j(join.begin(), join.end());
                    if (part.insert(j).second) {
                        if (part.size() > limit) throw BoundExceeded("subgroup enumeration exceeded the configured limit");
                        next.push_back(std::move(j));
                    }
                }
            frontier = std::move(next);
        }
        std::set<std::vector<std::size_t>> combined;
        for (const auto& a : all)
            for (const auto& b : part) {
                std::set<std::size_t> join;
                for (auto u : a)
                    for (auto v : b) join.insert(sp.add(u, v));
                combined.insert({join.begin(), join.end()});
                if (combined.size() > limit) throw BoundExceeded("subgroup enumeration exceeded the configured limit");
            }
        all = std::move(combined);
    }
    std::vector<Morphism> out;
    for (const auto& s : all) out.push_back(inclusion_of(*this, x, sp, s));
    return out;
}

std::vector<SubQuot> AbGrpCategory::subobject_types(const ObjectExpr& x, std::size_t limit) const {
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = subtype_cache_.find(x); it != subtype_cache_.end()) return it->second;
    }
    auto types = Category::subobject_types(x, limit);
    std::lock_guard lock(cache_mutex_);
    subtype_cache_.emplace(x, types);
    return types;
}

Morphism AbGrpCategory::summand_map(const ObjectExpr& x, const ObjectExpr& y,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) const {
    Matrix m(y.size(), x.size(), 0);
    for (auto [i, j] : pairs) {
        if (x[i] != y[j]) throw std::invalid_argument("summand_map: summands differ");
        m.set(j, i, 1);
    }
    return {x, y, {m}};
}

std::vector<ObjectExpr> AbGrpCategory::default_universe() const {
    // partitions of each prime exponent, combined across primes
    std::vector<std::vector<std::vector<Scalar>>> per_prime;
    for (auto [p, e] : factorize(bound_)) {
        std::vector<std::vector<Scalar>> groups;
        std::function<void(int, int, std::vector<Scalar>&)> rec = [&](int left, int maxpart, std::vector<Scalar>& cur) {
            groups.push_back(cur);
            for (int k = std::min(left, maxpart); k >= 1; --k) {
                Scalar q = 1;
                for (int i = 0; i < k; ++i) q *= p;
                cur.push_back(q);
                rec(left - k, k, cur);
                cur.pop_back();
            }
        };
        std::vector<Scalar> cur;
        rec(e, e, cur);
        per_prime.push_back(std::move(groups));
    }
    std::vector<ObjectExpr> out;
    std::function<void(std::size_t, std::vector<Scalar>&)> combine = [&](std::size_t k, std::vector<Scalar>& cur) {
        if (k == per_prime.size()) {
            if (!cur.empty()) out.push_back(object({cur}));
            return;
        }
        for (const auto& g : per_prime[k]) {
            auto size = cur.size();
            cur.insert(cur.end(), g.begin(), g.end());
            combine(k + 1, cur);
            cur.resize(size);
        }
    };
    std::vector<Scalar> cur;
    combine(0, cur);
    std::sort(out.begin(), out.end(), [&](const ObjectExpr& a, const ObjectExpr& b) {
        return group(a).order() != group(b).order() ? group(a).order() < group(b).order() : a < b;
    });
    return out;
}

Morphism primary_part(const AbGrpCategory& c, const PrimeSet& p, const ObjectExpr& x) {
    std::vector<IndId> ids;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto q = factorize(c.cyclic_order(x[i])).begin()->first;
        if (p.contains(q)) {
            pairs.push_back({ids.size(), i});
            ids.push_back(x[i]);
        }
    }
    return c.summand_map(ObjectExpr(ids), x, pairs);
}

std::vector<HomGenerator> hom_group(const AbGrpCategory& c, const ObjectExpr& x, const ObjectExpr& y) {
    auto ox = c.orders(x), oy = c.orders(y);
    std::vector<HomGenerator> out;
    for (std::size_t i = 0; i < ox.size(); ++i)
        for (std::size_t j = 0; j < oy.size(); ++j) {
            Scalar g = gcd(ox[i], oy[j]);
            if (g == 1) continue;
            Morphism f = c.zero(x, y);
            f.blocks[0].set(j, i, oy[j] / g);
            out.push_back({f, g});
        }
    return out;
}

}  // namespace pretor::abgrp
