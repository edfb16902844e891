#include "pretor/typea.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace pretor::typea {

std::string Interval::name() const { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }

std::string Interval::stack() const {
    std::string s;
    for (int v = a; v <= b; ++v) s += std::to_string(v);
    return s;
}

int interval_hom_dim(Interval x, Interval y) { return (y.a <= x.a && x.a <= y.b && y.b <= x.b) ? 1 : 0; }

int interval_ext_dim(Interval b, Interval a) { return (b.a < a.a && a.a <= b.b + 1 && b.b + 1 <= a.b) ? 1 : 0; }

std::vector<Interval> interval_ext_middle(Interval b, Interval a) {
    if (!interval_ext_dim(b, a)) return {};
    std::vector<Interval> mid{{b.a, a.b}};
    if (a.a <= b.b) mid.push_back({a.a, b.b});
    return mid;
}

std::vector<Interval> interval_subs(Interval x) {
    std::vector<Interval> out;
    for (int c = x.a; c <= x.b; ++c) out.push_back({c, x.b});
    return out;
}

std::vector<Interval> interval_quots(Interval x) {
    std::vector<Interval> out;
    for (int d = x.a; d <= x.b; ++d) out.push_back({x.a, d});
    return out;
}

namespace {

std::vector<linrep::VertexInterval> inventory(int n) {
    if (n < 1) throw std::invalid_argument("typea: n must be at least 1");
    std::vector<linrep::VertexInterval> out;
    for (int len = 0; len < n; ++len)
        for (int a = 1; a + len <= n; ++a) out.push_back({a - 1, a + len - 1});
    return out;
}

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

TypeA::TypeA(int n, Scalar p) : LinearRepCategory(static_cast<std::size_t>(n < 1 ? 1 : n), p, inventory(n)), n_(n) {
    if (n >= 4) set_universe_summand_limit(kDefaultSummandLimit);
}

IndId TypeA::id(Interval iv) const {
    auto r = find({iv.a - 1, iv.b - 1});
    if (!r) throw std::invalid_argument("typea: interval " + iv.name() + " is not in mod(kA_" + std::to_string(n_) + ")");
    return *r;
}

Interval TypeA::interval_of(IndId id) const {
    const auto& v = interval(id);
    return {v.start + 1, v.end + 1};
}

ObjectExpr TypeA::object(const std::vector<Interval>& ivs) const {
    std::vector<IndId> ids;
    for (const auto& iv : ivs) ids.push_back(id(iv));
    return ObjectExpr(std::move(ids));
}

std::string TypeA::stack_name(const ObjectExpr& x) const {
    if (x.is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (k) s += "+";
        s += interval_of(x[k]).stack();
    }
    return s;
}

Ses TypeA::ext_sequence(Interval b, Interval a) const {
    auto mid = interval_ext_middle(b, a);
    if (mid.empty()) throw std::invalid_argument("ext_sequence: Ext(" + b.name() + "," + a.name() + ") = 0");
    ObjectExpr oa = object({a}), ob = object({b});
    auto unique_map = [&](Interval s, Interval t) { return hom_basis(object({s}), object({t})).at(0); };
    std::vector<Morphism> into, out;
    for (std::size_t k = 0; k < mid.size(); ++k) {
        into.push_back(unique_map(a, mid[k]));
        Morphism q = unique_map(mid[k], b);
        out.push_back(k == 0 ? q : scale(q, -1));
    }
    Morphism i = to_biproduct(*this, into, oa);
    Morphism p = from_biproduct(*this, out, ob);
    return {i, p};
}

std::string TypeA::bounds() const {
    std::string b = "n=" + std::to_string(n_) + " p=" + std::to_string(field());
    if (universe_summand_limit()) b += " universe<=" + std::to_string(universe_summand_limit()) + " summands";
    return b;
}

std::size_t TypeA::indecomposable_count() const { return static_cast<std::size_t>(n_ * (n_ + 1) / 2); }

std::string TypeA::name(IndId id) const { return interval_of(id).name(); }

std::optional<IndId> TypeA::parse_indecomposable(std::string_view text) const {
    auto lookup = [&](int a, int b) -> std::optional<IndId> {
        if (a < 1 || b < a || b > n_) return std::nullopt;
        return id({a, b});
    };
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
        auto inner = text.substr(1, text.size() - 2);
        auto comma = inner.find(',');
        if (comma == std::string_view::npos) return std::nullopt;
        auto a = parse_int(inner.substr(0, comma)), b = parse_int(inner.substr(comma + 1));
        if (!a || !b) return std::nullopt;
        return lookup(*a, *b);
    }
    if (auto dots = text.find(".."); dots != std::string_view::npos) {
        auto a = parse_int(text.substr(0, dots)), b = parse_int(text.substr(dots + 2));
        if (!a || !b) return std::nullopt;
        return lookup(*a, *b);
    }
    if (n_ >= 10 || text.empty()) return std::nullopt;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] < '1' || text[k] > '9') return std::nullopt;
        if (k && text[k] != text[k - 1] + 1) return std::nullopt;
    }
    return lookup(text.front() - '0', text.back() - '0');
}

std::vector<std::vector<Matrix>> rep_submodules(const linrep::QuiverRep& r, std::size_t limit) {
    std::vector<std::vector<Matrix>> out;
    linrep::for_each_subrep(r, [&](const std::vector<Matrix>& bases) {
        if (out.size() >= limit) throw BoundExceeded("rep_submodules: more than " + std::to_string(limit) + " submodules");
        out.push_back(bases);
        return true;
    });
    return out;
}

int oracle_ext_dim(const TypeA& c, Interval b, Interval a) {
    if (b.b == c.n()) return 0;
    auto p0 = c.to_rep(c.object({{b.a, c.n()}}));
    auto p1 = c.to_rep(c.object({{b.b + 1, c.n()}}));
    auto na = c.to_rep(c.object({a}));
    auto incl = linrep::rep_hom_basis(p1, p0);
    if (incl.size() != 1) throw TheoremViolation("oracle_ext_dim: expected a unique inclusion of projectives");
    auto hom1 = linrep::rep_hom_basis(p1, na);
    std::vector<std::vector<Scalar>> restricted;
    for (const auto& f : linrep::rep_hom_basis(p0, na)) {
        std::vector<Scalar> v;
        for (std::size_t k = 0; k < f.size(); ++k) {
            Matrix g = f[k] * incl[0][k];
            v.insert(v.end(), g.data().begin(), g.data().end());
        }
        restricted.push_back(std::move(v));
    }
    std::size_t r = restricted.empty() ? 0 : exactla::rank(Matrix::from_rows(restricted, c.field()));
    return static_cast<int>(hom1.size() - r);
}

ArQuiver ar_quiver(int n) {
    if (n < 1) throw std::invalid_argument("ar_quiver: n must be at least 1");
    ArQuiver q{n, {}, {}, {}, {}, {}};
    for (int len = 0; len < n; ++len)
        for (int a = 1; a + len <= n; ++a) q.vertices.push_back({a, a + len});
    for (const auto& iv : q.vertices) {
        if (iv.a > 1) q.arrows.push_back({iv, {iv.a - 1, iv.b}, true});
        if (iv.b > iv.a) q.arrows.push_back({iv, {iv.a, iv.b - 1}, false});
        if (iv.b == n) q.projectives.push_back(iv);
        if (iv.a == 1) q.injectives.push_back(iv);
        if (iv.a == iv.b) q.simples.push_back(iv);
    }
    return q;
}

std::string ArQuiver::to_dot() const {
    std::ostringstream os;
    os << "digraph AR {\n  rankdir=LR;\n";
    for (const auto& v : vertices)
        os << "  \"" << v.name() << "\" [label=\"" << (n < 10 ? v.stack() : v.name()) << "\"];\n";
    for (const auto& e : arrows)
        os << "  \"" << e.from.name() << "\" -> \"" << e.to.name() << "\" [label=\"" << (e.mono ? "mono" : "epi")
           << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace pretor::typea
