#include "pretor/app.hpp"

#include "pretor/abgrp.hpp"
#include "pretor/chaincx.hpp"
#include "pretor/typea.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace pretor::app {

using nlohmann::json;
using torsion::Rational;
using torsion::TorsionPair;
using typea::Interval;
using typea::TypeA;

namespace {

std::string yes(bool b) { return b ? "yes" : "no"; }

ClassSpec intervals(const TypeA& c, const std::function<bool(Interval)>& keep) {
    return ClassSpec::where(c, [&](IndId id) { return keep(c.interval_of(id)); });
}

std::string ext_witness(const Category& c, const ClassSpec& cls, const std::vector<ObjectExpr>& u) {
    for (const auto& x : u) {
        if (cls.contains(x)) continue;
        for (const auto& sq : c.subobject_types(x, torsion::kSubobjectLimit))
            if (!sq.sub.is_zero() && !sq.quot.is_zero() && cls.contains(sq.sub) && cls.contains(sq.quot))
                return "0 -> " + label(c, sq.sub) + " -> " + label(c, x) + " -> " + label(c, sq.quot) + " -> 0";
    }
    return {};
}

struct Ctx {
    Result r;
    RunConfig cfg;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    void line(const std::string& s) { r.text += s + "\n"; }
    void need(bool ok, const std::string& what) {
        if (!ok) {
            r.status = 1;
            r.report["failures"].push_back(what);
            line("FAILED: " + what);
        }
    }
    Result finish() {
        r.report["verdict"] = r.status == 0 ? "pass" : "fail";
        line(std::string("verdict: ") + (r.status == 0 ? "pass" : "fail"));
        r.report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
        return std::move(r);
    }
};

Ctx start(const std::string& name, RunConfig cfg, int n_default) {
    Ctx x;
    if (cfg.backend == "typea" && cfg.n < 1) cfg.n = n_default;
    x.cfg = cfg;
    x.r.report = {{"tool", "pretor"}, {"version", kVersion}, {"command", "repro"}, {"name", name},
                  {"config", cfg.to_json()}, {"failures", json::array()}};
    x.line("repro " + name);
    return x;
}

Result repro_a2(RunConfig cfg) {
    cfg.backend = "typea";
    cfg.n = 2;
    auto x = start("a2", cfg, 2);
    auto b = make_backend(x.cfg);
    const auto& c = static_cast<const TypeA&>(*b.cat);
    auto s1 = c.id({1, 1}), s2 = c.id({2, 2}), p1 = c.id({1, 2});
    TorsionPair tp{ClassSpec{{s1, p1}}, ClassSpec{{s2}}};
    ClassSpec s{{s1}};
    x.line("mod(kA_2) over GF(" + std::to_string(x.cfg.p) + ")");
    x.line("torsion pair (U, V) = (" + label(c, tp.T) + ", " + label(c, tp.F) + ")");
    x.line("Serre class S = " + label(c, s));
    x.need(torsion::is_torsion_pair(c, tp, b.universe).ok, "(U, V) is a torsion pair");
    auto p = pt::serre_extension(c, tp, s, b.universe);
    x.line("(U*S, S*V) = (" + label(c, p.T) + ", " + label(c, p.F) + ")");
    x.line("trivial objects Z = " + label(c, p.Z));
    x.need(p.T == ClassSpec{{s1, p1}} && p.F == ClassSpec{{s1, s2}} && p.Z == s, "classes match add{1,12}, add{2,1}");
    auto rep = pt::is_pretorsion(c, p.T, p.F, b.universe);
    x.need(rep.ok, "is_pretorsion");
    std::map<ObjectExpr, pt::ZExactSeq> seq(rep.sequences.begin(), rep.sequences.end());
    auto names = [&](const Morphism& m) -> std::string {
        if (c.is_zero(m) || m.source.size() != 1 || m.target.size() != 1) return "";
        if (m.source[0] == p1 && m.target[0] == s1) return "beta";
        if (m.source[0] == s2 && m.target[0] == p1) return "alpha";
        return "";
    };
    x.line("short Z-exact sequences:");
    const std::vector<std::string> expected{"0 -> 2 = 2", "12 = 12 -beta-> 1", "1 = 1 = 1"};
    std::vector<std::string> got;
    for (auto id : {s2, p1, s1}) got.push_back(render_sequence(c, seq.at(ObjectExpr::single(id)), names));
    for (const auto& g : got) x.line("  " + g);
    x.need(got == expected, "sequences match the displayed ones");
    x.r.report["sequences"] = got;
    auto w = ext_witness(c, p.F, b.universe);
    x.line("S*V closed under extensions: " + yes(w.empty()) + (w.empty() ? "" : ", witness " + w));
    x.need(w == "0 -> 2 -> 12 -> 1 -> 0", "extension witness 0 -> 2 -> 12 -> 1 -> 0");
    auto zf = pt::z_extension_witness(c, p.F, p.Z, b.universe);
    auto zt = pt::z_extension_witness(c, p.T, p.Z, b.universe);
    x.line("S*V closed under Z-extensions: " + yes(zf.empty()));
    x.line("U*S closed under Z-extensions: " + yes(zt.empty()));
    x.need(zf.empty() && zt.empty(), "closure under Z-extensions");
    x.r.report["extension_witness"] = w;
    x.r.report["z_extension_closed"] = zf.empty() && zt.empty();
    return x.finish();
}

Result repro_stable_ka2(RunConfig cfg) {
    cfg.backend = "typea";
    cfg.n = 2;
    auto x = start("stable-ka2", cfg, 2);
    auto b = make_backend(x.cfg);
    const auto& c = static_cast<const TypeA&>(*b.cat);
    auto s1 = c.id({1, 1}), s2 = c.id({2, 2}), p1 = c.id({1, 2});
    ClassSpec t{{s1, s2}}, f{{s2, p1}};
    stable::QuotientCategory q(c, t.intersect(f));
    x.line("mod(kA_2) over GF(" + std::to_string(x.cfg.p) + ") modulo Z = " + label(c, q.Z()));
    x.line("pretorsion theory (T, F) = (" + label(c, t) + ", " + label(c, f) + ")");
    x.line("dim Hom / Triv / quotient:");
    auto inds = c.indecomposable_objects();
    for (const auto& a : inds)
        for (const auto& bb : inds) {
            auto h = q.table(a, bb);
            x.line("  " + label(c, a) + " -> " + label(c, bb) + ": " + std::to_string(h.hom) + " / " +
                   std::to_string(h.triv) + " / " + std::to_string(h.quotient));
        }
    x.r.report["hom_table"] = q.dump_tables(inds);
    auto rep = stable::verify_quotient_torsion(q, t, f, b.universe);
    x.line("torsion theory in C/Z: (" + label(c, rep.sigma_T) + ", " + label(c, rep.sigma_F) + ")");
    x.need(rep.sigma_T == ClassSpec{{s1}} && rep.sigma_F == ClassSpec{{p1}}, "image is (add{1}, add{12})");
    x.line("2 is a zero object in C/Z: " + yes(q.is_zero_object(ObjectExpr::single(s2))));
    x.r.report["sigma_T"] = label(c, rep.sigma_T);
    x.r.report["sigma_F"] = label(c, rep.sigma_F);
    return x.finish();
}

Result repro_an_chain(RunConfig cfg, int i, int j) {
    cfg.backend = "typea";
    auto x = start("an-chain", cfg, 3);
    int n = x.cfg.n;
    if (i < 0) i = n;
    if (j < 0) j = std::max(0, i - 2);
    if (!(0 <= j && j < i && i <= n)) throw UsageError("an-chain needs 0 <= j < i <= n");
    auto b = make_backend(x.cfg);
    const auto& c = static_cast<const TypeA&>(*b.cat);
    auto tk = [&](int k) {
        auto t = intervals(c, [&](Interval iv) { return iv.a == 1 && iv.b <= k; });
        return TorsionPair{t, torsion::right_perp(c, t)};
    };
    auto ti = tk(i), tj = tk(j);
    x.line("mod(kA_" + std::to_string(n) + ") over GF(" + std::to_string(x.cfg.p) + "), i = " + std::to_string(i) +
           ", j = " + std::to_string(j));
    x.line("T_i = " + label(c, ti.T));
    x.line("F_j = " + label(c, tj.F));
    x.need(torsion::is_torsion_pair(c, ti, b.universe).ok && torsion::is_torsion_pair(c, tj, b.universe).ok,
           "T_i and T_j are torsion classes");
    auto p = pt::comparable_pretorsion(c, ti, tj, b.universe);
    auto want = intervals(c, [&](Interval iv) { return iv.a == 1 && iv.b > j && iv.b <= i; });
    x.line("(T_i, F_j) pretorsion: yes");
    x.line("Z = " + label(c, p.Z));
    x.line("expected add{1..(j+1), ..., 1..i} = " + label(c, want) + ": " + (p.Z == want ? "match" : "MISMATCH"));
    x.need(p.Z == want, "Z matches the closed formula");
    x.line("T_i = T_j * Z and F_j = Z * F_i: yes");
    x.r.report["Z"] = label(c, p.Z);
    return x.finish();
}

Result repro_an_quot(RunConfig cfg, int i, int j) {
    cfg.backend = "typea";
    auto x = start("an-quot", cfg, 4);
    int n = x.cfg.n;
    if (i < 0) i = 2;
    if (j < 0) j = 3;
    if (!(0 <= i && i < n && 0 <= j && j < n && i != j)) throw UsageError("an-quot needs 0 <= i, j < n and i != j");
    auto b = make_backend(x.cfg);
    const auto& c = static_cast<const TypeA&>(*b.cat);
    // T_k = quot{[n-k+1, n], ...}: intervals [a,d] with n-k+1 <= a; F_k = submod{[1,1..n-k]}: d <= n-k
    auto tk = [&](int k) { return intervals(c, [&](Interval iv) { return iv.a >= n - k + 1; }); };
    auto fk = [&](int k) { return intervals(c, [&](Interval iv) { return iv.b <= n - k; }); };
    x.line("mod(kA_" + std::to_string(n) + ") over GF(" + std::to_string(x.cfg.p) + "), i = " + std::to_string(i) +
           ", j = " + std::to_string(j));
    for (int k : {i, j}) {
        bool perp = torsion::right_perp(c, tk(k)) == fk(k);
        TorsionPair tp{tk(k), fk(k)};
        x.line("T_" + std::to_string(k) + " = " + label(c, tk(k)) + ", F_" + std::to_string(k) + " = " +
               label(c, fk(k)) + ", torsion pair: " + yes(perp && torsion::is_torsion_pair(c, tp, b.universe).ok));
        x.need(perp, "F_k is the right perpendicular of T_k");
    }
    pt::PretorsionOptions o;
    o.stop_early = true;
    o.keep_sequences = false;
    bool literal = pt::is_pretorsion(c, tk(i), fk(j), b.universe, o).ok;
    x.line("(T_i, F_j) pretorsion: " + yes(literal));
    x.need(literal == (i > j), "verdict agrees with T_j in T_i");
    x.r.report["literal_pretorsion"] = literal;
    int hi = std::max(i, j), lo = std::min(i, j);
    if (i < j)
        x.line("note: T_j is not contained in T_i for i < j; the pretorsion theory of the chain is (T_" +
               std::to_string(hi) + ", F_" + std::to_string(lo) + ")");
    auto p = pt::comparable_pretorsion(c, {tk(hi), fk(hi)}, {tk(lo), fk(lo)}, b.universe);
    // quot{[n-lo, n-lo], [n-lo-1, n-lo], ..., [n-hi+1, n-lo]}
    ClassSpec gens;
    for (int a = n - hi + 1; a <= n - lo; ++a) gens.members.insert(c.id({a, n - lo}));
    auto want = intervals(c, [&](Interval iv) {
        for (auto g : gens.members) {
            auto q = typea::interval_quots(c.interval_of(g));
            if (std::find(q.begin(), q.end(), iv) != q.end()) return true;
        }
        return false;
    });
    x.line("(T_" + std::to_string(hi) + ", F_" + std::to_string(lo) + ") pretorsion: yes, Z = " + label(c, p.Z));
    x.line("expected quot" + label(c, gens).substr(3) + " = " + label(c, want) + ": " +
           (p.Z == want ? "match" : "MISMATCH"));
    x.need(p.Z == want, "Z matches the quotient-closure formula");
    x.r.report["Z"] = label(c, p.Z);
    return x.finish();
}

Result repro_abgrp(RunConfig cfg) {
    cfg.backend = "abgrp";
    auto x = start("abgrp", cfg, 0);
    auto b = make_backend(x.cfg);
    const auto& g = static_cast<const abgrp::AbGrpCategory&>(*b.cat);
    x.line("finite abelian groups of order dividing " + std::to_string(x.cfg.order) + ", " +
           std::to_string(b.universe.size()) + " groups");
    auto primes = x.cfg.primes;
    std::sort(primes.begin(), primes.end());
    auto subset = [&](unsigned mask) {
        abgrp::PrimeSet s;
        for (std::size_t k = 0; k < primes.size(); ++k)
            if (mask >> k & 1u) s.primes.insert(primes[k]);
        return s;
    };
    auto prime_of = [&](IndId id) { return g.cyclic_order(g.composition_factors(id).at(0)); };
    auto is_set_number = [](Scalar o, const abgrp::PrimeSet& s) {
        for (auto q : s.primes)
            while (o % q == 0) o /= q;
        return o == 1;
    };
    json rows = json::array();
    unsigned full = (1u << primes.size()) - 1;
    for (unsigned qm = 0; qm <= full; ++qm)
        for (unsigned pm = qm;; pm = (pm - 1) & qm) {
            auto Q = subset(qm), P = subset(pm);
            TorsionPair tq{ClassSpec::where(g, [&](IndId id) { return Q.contains(prime_of(id)); }),
                           ClassSpec::where(g, [&](IndId id) { return !Q.contains(prime_of(id)); })};
            TorsionPair tp{ClassSpec::where(g, [&](IndId id) { return P.contains(prime_of(id)); }),
                           ClassSpec::where(g, [&](IndId id) { return !P.contains(prime_of(id)); })};
            auto p = pt::comparable_pretorsion(g, tq, tp, b.universe);
            // element-wise: every element is killed by a Q-number, no nonzero element by a P-number
            std::size_t agree = 0;
            for (const auto& obj : b.universe) {
                bool ann = true;
                for (auto o : abgrp::element_orders(g.group(obj)))
                    ann = ann && is_set_number(o, Q) && (o == 1 || !is_set_number(o, P));
                agree += ann == p.Z.contains(obj);
            }
            bool ok = agree == b.universe.size();
            x.line("P = " + P.to_string() + ", Q = " + Q.to_string() + ": pretorsion yes, Z = " + label(g, p.Z) +
                   ", annihilator description " + std::to_string(agree) + "/" + std::to_string(b.universe.size()));
            x.need(ok, "Z membership for P = " + P.to_string() + ", Q = " + Q.to_string());
            rows.push_back({{"P", P.to_string()}, {"Q", Q.to_string()}, {"Z", label(g, p.Z)}, {"agree", agree}});
            if (pm == 0) break;
        }
    x.r.report["pairs"] = rows;
    return x.finish();
}

Result repro_chain(RunConfig cfg) {
    cfg.backend = "chaincx";
    auto x = start("chain", cfg, 0);
    auto b = make_backend(x.cfg);
    const auto& c = static_cast<const chaincx::ChainCategory&>(*b.cat);
    x.line("chain complexes over GF(" + std::to_string(x.cfg.p) + "), window [" + std::to_string(c.lo()) + "," +
           std::to_string(c.hi()) + "], dims <= " + std::to_string(x.cfg.dim_cap) + ", " +
           std::to_string(x.cfg.samples) + " samples, universe " + std::to_string(b.universe.size()) + " objects");
    int top = std::min(3, c.hi() - 1);
    auto tn = [&](int n) { return ClassSpec::where(c, [&](IndId id) { return c.ind_in_T(n, id); }); };
    auto fm = [&](int n) { return ClassSpec::where(c, [&](IndId id) { return c.ind_in_Fmono(n, id); }); };
    json discrepancies = json::array();
    for (int n = c.lo(); n <= top; ++n) {
        TorsionPair tp{tn(n), fm(n + 1)};
        bool ok = torsion::is_torsion_pair(c, tp, b.universe).ok;
        x.line("(T_" + std::to_string(n) + ", Fmono(" + std::to_string(n + 1) + ")) torsion pair: " + yes(ok));
        x.need(ok, "implemented pairing at n = " + std::to_string(n));
        auto literal = torsion::is_torsion_pair(c, {tn(n), fm(n)}, b.universe);
        if (!literal.ok) {
            auto s = ObjectExpr::single(c.sphere(n));
            bool witness = !tn(n).contains(s) && !fm(n).contains(s) && torsion::trace(c, s, tn(n)).source.is_zero();
            std::string msg = "literal (T_" + std::to_string(n) + ", F_" + std::to_string(n) + ") is not a torsion pair; " +
                              "witness " + c.name(c.sphere(n)) + " lies in neither class and has no T_" +
                              std::to_string(n) + "-subobject";
            x.line("note (index convention): " + msg);
            x.need(witness, "sphere witness at n = " + std::to_string(n));
            discrepancies.push_back(msg);
        }
    }
    for (int n = c.lo() + 1; n <= top; ++n)
        for (int m = c.lo(); m < n; ++m) {
            auto p = pt::comparable_pretorsion(c, {tn(m), fm(m + 1)}, {tn(n), fm(n + 1)}, b.universe);
            x.line("(T_" + std::to_string(m) + ", Fmono(" + std::to_string(n + 1) + ")) pretorsion: yes, Z = " +
                   label(c, p.Z));
        }
    x.r.report["discrepancies"] = discrepancies;
    return x.finish();
}

std::vector<Rational> thresholds(const Category& c, const torsion::StabilityFunction& phi, std::size_t count) {
    std::set<Rational> vals;
    for (const auto& o : c.indecomposable_objects()) vals.insert(phi.value(c, o));
    std::vector<Rational> all(vals.begin(), vals.end());
    if (all.size() <= count) return all;
    std::vector<Rational> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(all[k * (all.size() - 1) / (count - 1)]);
    return out;
}

Result repro_stability(RunConfig cfg) {
    cfg.backend = "typea";
    auto x = start("stability", cfg, 4);
    auto b = make_backend(x.cfg);
    const Category& c = *b.cat;
    x.line("mod(kA_" + std::to_string(x.cfg.n) + ") over GF(" + std::to_string(x.cfg.p) + "), seed " +
           std::to_string(x.cfg.seed));
    std::mt19937_64 rng(x.cfg.seed);
    json runs = json::array();
    for (int k = 0; k < 10; ++k) {
        auto phi = random_stability(rng, c.simples().size());
        std::string desc = "theta = (";
        for (std::size_t v = 0; v < phi.theta.size(); ++v) desc += (v ? "," : "") + std::to_string(phi.theta[v]);
        desc += "), ell = (";
        for (std::size_t v = 0; v < phi.ell.size(); ++v) desc += (v ? "," : "") + std::to_string(phi.ell[v]);
        desc += ")";
        bool seesaw = torsion::seesaw_check(c, phi, b.universe).ok;
        auto ps = thresholds(c, phi, 5);
        std::vector<TorsionPair> pairs;
        bool torsion_ok = true;
        for (const auto& p : ps) {
            pairs.push_back(torsion::stability_classes(c, phi, p, false));
            torsion_ok = torsion_ok && torsion::is_torsion_pair(c, pairs.back(), b.universe).ok;
        }
        std::size_t pre = 0;
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t q = a; q < ps.size(); ++q) {
                pt::PretorsionOptions o;
                o.keep_sequences = false;
                pre += pt::is_pretorsion(c, pairs[a].T, pairs[q].F, b.universe, o).ok;
            }
        std::size_t want = ps.size() * (ps.size() + 1) / 2;
        std::string thr;
        for (std::size_t v = 0; v < ps.size(); ++v) thr += (v ? " " : "") + torsion::to_string(ps[v]);
        x.line(desc + ": seesaw " + yes(seesaw) + ", thresholds {" + thr + "}, torsion pairs " + yes(torsion_ok) +
               ", (T>=p, F<q) pretorsion " + std::to_string(pre) + "/" + std::to_string(want));
        x.need(seesaw && torsion_ok && pre == want, "stability function " + desc);
        runs.push_back({{"phi", desc}, {"thresholds", thr}, {"pretorsion", pre}});
    }
    x.r.report["functions"] = runs;
    return x.finish();
}

}  // namespace

std::vector<std::string> repro_names() {
    return {"an-chain", "an-quot", "a2", "stable-ka2", "abgrp", "chain", "stability"};
}

Result cmd_repro(const std::string& name, const RunConfig& cfg, int i, int j) {
    if (name == "a2") return repro_a2(cfg);
    if (name == "stable-ka2") return repro_stable_ka2(cfg);
    if (name == "an-chain") return repro_an_chain(cfg, i, j);
    if (name == "an-quot") return repro_an_quot(cfg, i, j);
    if (name == "abgrp") return repro_abgrp(cfg);
    if (name == "chain") return repro_chain(cfg);
    if (name == "stability") return repro_stability(cfg);
    throw UsageError("unknown repro '" + name + "'");
}

}  // namespace pretor::app
