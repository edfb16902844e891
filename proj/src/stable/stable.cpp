#include "pretor/stable.hpp"

namespace pretor::stable {

namespace {

Morphism combine(const Category& c, const std::vector<Morphism>& basis, const std::vector<Scalar>& coeff,
                 const ObjectExpr& x, const ObjectExpr& y) {
    Morphism m = c.zero(x, y);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeff[i] != 0) m = c.add(m, c.scale(basis[i], coeff[i]));
    return m;
}

std::vector<Scalar> orders_of(const Category& c, const std::vector<Morphism>& basis) {
    std::vector<Scalar> o;
    for (const auto& b : basis) o.push_back(c.order(b));
    return o;
}

}  // namespace

QuotientCategory::QuotientCategory(const Category& base, ClassSpec z) : base_(base), z_(std::move(z)) {
    for (auto id : z_.members)
        if (id < 0 || static_cast<std::size_t>(id) >= base_.indecomposable_count())
            throw std::invalid_argument("quotient: Z member " + std::to_string(id) + " is not an indecomposable");
}

const ModSpan& QuotientCategory::triv(const ObjectExpr& x, const ObjectExpr& y) const {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(x, y);
    auto it = triv_cache_.find(key);
    if (it == triv_cache_.end()) it = triv_cache_.emplace(key, pt::triv_span(base_, x, y, z_).span).first;
    return it->second;
}

HomTable QuotientCategory::table(const ObjectExpr& x, const ObjectExpr& y) const {
    HomTable t;
    t.hom = hom_span(base_, x, y).log_order();
    t.triv = triv(x, y).log_order();
    t.quotient = t.hom - t.triv;
    return t;
}

QuotMorphism QuotientCategory::sigma(const Morphism& f) const {
    return {f, triv(f.source, f.target).normal_form(base_.coords(f))};
}

QuotMorphism QuotientCategory::add(const QuotMorphism& f, const QuotMorphism& g) const {
    return sigma(base_.add(f.rep, g.rep));
}

QuotMorphism QuotientCategory::compose(const QuotMorphism& g, const QuotMorphism& f) const {
    return sigma(base_.compose(g.rep, f.rep));
}

bool QuotientCategory::is_zero(const QuotMorphism& f) const {
    return std::all_of(f.tag.begin(), f.tag.end(), [](Scalar s) { return s == 0; });
}

bool QuotientCategory::is_zero_object(const ObjectExpr& x) const { return is_zero(sigma(base_.identity(x))); }

nlohmann::json QuotientCategory::dump_tables(const std::vector<ObjectExpr>& objects) const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : objects)
        for (const auto& y : objects) {
            auto t = table(x, y);
            out.push_back({{"source", base_.describe(x)},
                           {"target", base_.describe(y)},
                           {"hom", t.hom},
                           {"triv", t.triv},
                           {"quotient", t.quotient}});
        }
    return out;
}

QuotientTorsionReport verify_quotient_torsion(const QuotientCategory& q, const ClassSpec& t, const ClassSpec& f,
                                              const std::vector<ObjectExpr>& universe) {
    const Category& c = q.base();
    if (t.intersect(f) != q.Z())
        throw std::invalid_argument("verify_quotient_torsion: T n F differs from the quotient's Z");
    pt::PretorsionOptions opts;
    opts.verify_all = false;
    auto rep = pt::is_pretorsion(c, t, f, universe, opts);
    if (!rep.ok) throw std::invalid_argument("verify_quotient_torsion: not a pretorsion theory: " + rep.failures.front());

    QuotientTorsionReport out;
    for (auto id : t.members)
        if (!q.Z().contains(id)) out.sigma_T.members.insert(id);
    for (auto id : f.members)
        if (!q.Z().contains(id)) out.sigma_F.members.insert(id);
    for (auto a : t.members)
        for (auto b : f.members)
            if (q.table(ObjectExpr::single(a), ObjectExpr::single(b)).quotient != 0)
                throw TheoremViolation("Hom_{C/Z}(" + c.name(a) + ", " + c.name(b) + ") != 0");

    const auto testers = c.indecomposable_objects();
    out.testers = testers.size();
    auto in_span = [&](const ModSpan& base, const std::vector<Morphism>& extra, const Morphism& g) {
        ModSpan s = base;
        for (const auto& e : extra) s.add(c.coords(e));
        return s.contains(c.coords(g));
    };
    for (const auto& [x, s] : rep.sequences) {
        const auto& tx = s.torsion();
        const auto& fx = s.free();
        if (!q.is_zero(q.compose(q.sigma(s.eta), q.sigma(s.eps))))
            throw TheoremViolation("S(eta) o S(eps) != 0 on " + c.describe(x));
        for (const auto& w : testers) {
            // kernel: every g : W -> X with S(eta g) = 0 is S(eps) h, uniquely
            auto gb = c.hom_basis(w, x);
            if (!gb.empty()) {
                std::vector<std::vector<Scalar>> images;
                for (const auto& g : gb) images.push_back(c.coords(c.compose(s.eta, g)));
                ModSpan triv_wf = pt::triv_span(c, w, fx, q.Z()).span;
                ModSpan triv_wx = pt::triv_span(c, w, x, q.Z()).span;
                std::vector<Morphism> through;
                for (const auto& h : c.hom_basis(w, tx)) through.push_back(c.compose(s.eps, h));
                for (const auto& coeff : exactla::preimage_generators(images, orders_of(c, gb), triv_wf))
                    if (!in_span(triv_wx, through, combine(c, gb, coeff, w, x)))
                        throw TheoremViolation("S(eps) is not a kernel of S(eta) on " + c.describe(x) + " (tester " +
                                               c.describe(w) + ")");
            }
            auto hb = c.hom_basis(w, tx);
            if (!hb.empty()) {
                std::vector<std::vector<Scalar>> images;
                for (const auto& h : hb) images.push_back(c.coords(c.compose(s.eps, h)));
                ModSpan triv_wx = pt::triv_span(c, w, x, q.Z()).span;
                ModSpan triv_wt = pt::triv_span(c, w, tx, q.Z()).span;
                for (const auto& coeff : exactla::preimage_generators(images, orders_of(c, hb), triv_wx))
                    if (!triv_wt.contains(c.coords(combine(c, hb, coeff, w, tx))))
                        throw TheoremViolation("S(eps) is not a monomorphism in C/Z on " + c.describe(x));
            }
            // cokernel: every g : X -> W with S(g eps) = 0 is h S(eta), uniquely
            auto cb = c.hom_basis(x, w);
            if (!cb.empty()) {
                std::vector<std::vector<Scalar>> images;
                for (const auto& g : cb) images.push_back(c.coords(c.compose(g, s.eps)));
                ModSpan triv_tw = pt::triv_span(c, tx, w, q.Z()).span;
                ModSpan triv_xw = pt::triv_span(c, x, w, q.Z()).span;
                std::vector<Morphism> through;
                for (const auto& h : c.hom_basis(fx, w)) through.push_back(c.compose(h, s.eta));
                for (const auto& coeff : exactla::preimage_generators(images, orders_of(c, cb), triv_tw))
                    if (!in_span(triv_xw, through, combine(c, cb, coeff, x, w)))
                        throw TheoremViolation("S(eta) is not a cokernel of S(eps) on " + c.describe(x) + " (tester " +
                                               c.describe(w) + ")");
            }
            auto fb = c.hom_basis(fx, w);
            if (!fb.empty()) {
                std::vector<std::vector<Scalar>> images;
                for (const auto& h : fb) images.push_back(c.coords(c.compose(h, s.eta)));
                ModSpan triv_xw = pt::triv_span(c, x, w, q.Z()).span;
                ModSpan triv_fw = pt::triv_span(c, fx, w, q.Z()).span;
                for (const auto& coeff : exactla::preimage_generators(images, orders_of(c, fb), triv_xw))
                    if (!triv_fw.contains(c.coords(combine(c, fb, coeff, fx, w))))
                        throw TheoremViolation("S(eta) is not an epimorphism in C/Z on " + c.describe(x));
            }
        }
        ++out.objects;
    }
    return out;
}

}  // namespace pretor::stable
