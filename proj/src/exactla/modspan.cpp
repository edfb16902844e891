#include "pretor/exactla.hpp"

#include <numeric>

namespace pretor::exactla {

namespace {

Scalar ipow(Scalar b, int e) {
    Scalar r = 1;
    while (e-- > 0) r *= b;
    return r;
}

int valuation(Scalar x, Scalar p, int top) {
    if (x == 0) return top;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace

ModSpan::ModSpan(std::vector<Scalar> moduli) : moduli_(std::move(moduli)) {
    std::map<Scalar, Component> by_prime;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (moduli_[i] < 1) throw std::invalid_argument("ModSpan: moduli must be positive");
        for (auto [p, e] : factorize(moduli_[i])) {
            auto& c = by_prime[p];
            c.prime = p;
            c.idx.push_back(i);
            c.exp.push_back(e);
            c.top = std::max(c.top, e);
        }
    }
    for (auto& [p, c] : by_prime) {
        c.pe = ipow(p, c.top);
        comps_.push_back(std::move(c));
    }
}

std::vector<Scalar> ModSpan::project(const Component& c, std::span<const Scalar> v) const {
    std::vector<Scalar> w(c.idx.size());
    for (std::size_t k = 0; k < c.idx.size(); ++k) {
        Scalar pk = ipow(c.prime, c.exp[k]);
        w[k] = mod_reduce(mod_reduce(v[c.idx[k]], pk) * ipow(c.prime, c.top - c.exp[k]), c.pe);
    }
    return w;
}

std::vector<Scalar> ModSpan::lift(const Component& c, const std::vector<Scalar>& w) const {
    std::vector<Scalar> v(moduli_.size(), 0);
    for (std::size_t k = 0; k < c.idx.size(); ++k) {
        Scalar m = moduli_[c.idx[k]];
        Scalar pk = ipow(c.prime, c.exp[k]);
        Scalar r = w[k] / ipow(c.prime, c.top - c.exp[k]);
        Scalar q = m / pk;
        Scalar idem = q == 1 ? 1 : q * mod_inverse(q, pk);
        v[c.idx[k]] = mod_reduce(r * idem, m);
    }
    return v;
}

void ModSpan::insert(Component& c, std::vector<Scalar> v) {
    std::vector<std::vector<Scalar>> work{std::move(v)};
    const Scalar pe = c.pe;
    auto first_nonzero = [](const std::vector<Scalar>& x) {
        std::size_t i = 0;
        while (i < x.size() && x[i] == 0) ++i;
        return i;
    };
    auto saturate = [&](const std::vector<Scalar>& row, int val) {
        std::vector<Scalar> s(row.size());
        Scalar f = ipow(c.prime, c.top - val);
        for (std::size_t i = 0; i < row.size(); ++i) s[i] = mod_reduce(row[i] * f, pe);
        return s;
    };
    while (!work.empty()) {
        std::vector<Scalar> x = std::move(work.back());
        work.pop_back();
        while (true) {
            std::size_t col = first_nonzero(x);
            if (col == x.size()) break;
            int w = valuation(x[col], c.prime, c.top);
            Scalar unit = x[col] / ipow(c.prime, w);
            Scalar uinv = mod_inverse(unit, pe);
            for (auto& e : x) e = mod_reduce(e * uinv, pe);
            auto it = c.rows.find(col);
            if (it == c.rows.end()) {
                work.push_back(saturate(x, w));
                c.rows.emplace(col, std::move(x));
                break;
            }
            auto& row = it->second;
            int rv = valuation(row[col], c.prime, c.top);
            if (w >= rv) {
                Scalar f = ipow(c.prime, w - rv);
                for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_reduce(x[i] - f * row[i], pe);
            } else {
                std::vector<Scalar> old = std::move(row);
                row = x;
                work.push_back(saturate(row, w));
                Scalar f = ipow(c.prime, rv - w);
                for (std::size_t i = 0; i < old.size(); ++i) old[i] = mod_reduce(old[i] - f * row[i], pe);
                x = std::move(old);
            }
        }
    }
}

std::vector<Scalar> ModSpan::reduce(const Component& c, std::vector<Scalar> v, std::size_t stop_col, bool full) {
    for (std::size_t col = 0; col < std::min(stop_col, v.size()); ++col) {
        if (v[col] == 0) continue;
        auto it = c.rows.find(col);
        if (it == c.rows.end()) {
            if (!full) return v;
            continue;
        }
        const auto& row = it->second;
        Scalar pv = row[col];  // a power of the prime
        Scalar q = v[col] / pv;
        if (!full && v[col] % pv != 0) return v;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_reduce(v[i] - q * row[i], c.pe);
    }
    return v;
}

void ModSpan::add(std::span<const Scalar> v) {
    if (v.size() != moduli_.size()) throw std::invalid_argument("ModSpan::add: length mismatch");
    std::vector<Scalar> g(v.begin(), v.end());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = mod_reduce(g[i], moduli_[i]);
    for (auto& c : comps_) insert(c, project(c, g));
    gens_.push_back(std::move(g));
}

bool ModSpan::contains(std::span<const Scalar> v) const {
    if (v.size() != moduli_.size()) throw std::invalid_argument("ModSpan::contains: length mismatch");
    for (const auto& c : comps_) {
        auto r = reduce(c, project(c, v), c.idx.size(), false);
        if (std::any_of(r.begin(), r.end(), [](Scalar x) { return x != 0; })) return false;
    }
    return true;
}

std::vector<Scalar> ModSpan::normal_form(std::span<const Scalar> v) const {
    if (v.size() != moduli_.size()) throw std::invalid_argument("ModSpan::normal_form: length mismatch");
    std::vector<Scalar> out(moduli_.size(), 0);
    for (const auto& c : comps_) {
        auto part = lift(c, reduce(c, project(c, v), c.idx.size(), true));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_reduce(out[i] + part[i], moduli_[i]);
    }
    return out;
}

std::map<Scalar, int> ModSpan::order() const {
    std::map<Scalar, int> ord;
    for (const auto& c : comps_) {
        int e = 0;
        for (const auto& [col, row] : c.rows) e += c.top - valuation(row[col], c.prime, c.top);
        if (e > 0) ord[c.prime] = e;
    }
    return ord;
}

int ModSpan::log_order() const {
    int s = 0;
    for (auto [p, e] : order()) s += e;
    return s;
}

std::vector<std::vector<Scalar>> ModSpan::tail_generators(std::size_t k) const {
    std::vector<std::vector<Scalar>> out;
    for (const auto& c : comps_)
        for (const auto& [col, row] : c.rows)
            if (c.idx[col] >= k) out.push_back(lift(c, row));
    return out;
}

std::optional<std::vector<Scalar>> ModSpan::express(std::span<const Scalar> v) const {
    const std::size_t n = moduli_.size();
    std::vector<Scalar> aug_mod = moduli_;
    for (const auto& g : gens_) aug_mod.push_back(std::max<Scalar>(1, element_order(g, moduli_)));
    ModSpan aug(aug_mod);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        std::vector<Scalar> row = gens_[i];
        row.resize(aug_mod.size(), 0);
        row[n + i] = 1;
        aug.add(row);
    }
    std::vector<Scalar> coeff(gens_.size(), 0);
    std::vector<Scalar> target(v.begin(), v.end());
    target.resize(aug_mod.size(), 0);
    for (const auto& c : aug.comps_) {
        std::size_t stop = 0;
        while (stop < c.idx.size() && c.idx[stop] < n) ++stop;
        auto r = reduce(c, aug.project(c, target), stop, false);
        for (std::size_t col = 0; col < stop; ++col)
            if (r[col] != 0) return std::nullopt;
        auto lifted = aug.lift(c, r);
        for (std::size_t i = 0; i < gens_.size(); ++i)
            coeff[i] = mod_reduce(coeff[i] - lifted[n + i], aug_mod[n + i]);
    }
    return coeff;
}

Scalar element_order(std::span<const Scalar> v, std::span<const Scalar> moduli) {
    Scalar ord = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Scalar x = mod_reduce(v[i], moduli[i]);
        Scalar o = moduli[i] / std::gcd(x, moduli[i]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

std::vector<std::vector<Scalar>> preimage_generators(const std::vector<std::vector<Scalar>>& images,
                                                     const std::vector<Scalar>& orders, const ModSpan& target) {
    const std::size_t n = target.moduli().size();
    std::vector<Scalar> aug_mod = target.moduli();
    for (auto o : orders) aug_mod.push_back(std::max<Scalar>(1, o));
    ModSpan aug(aug_mod);
    for (std::size_t i = 0; i < images.size(); ++i) {
        std::vector<Scalar> row = images[i];
        row.resize(aug_mod.size(), 0);
        row[n + i] = 1;
        aug.add(row);
    }
    for (const auto& t : target.generators()) {
        std::vector<Scalar> row = t;
        row.resize(aug_mod.size(), 0);
        aug.add(row);
    }
    std::vector<std::vector<Scalar>> out;
    for (auto& g : aug.tail_generators(n)) out.emplace_back(g.begin() + static_cast<std::ptrdiff_t>(n), g.end());
    return out;
}

}  // namespace pretor::exactla
