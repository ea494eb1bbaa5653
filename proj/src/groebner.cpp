#include "lgcy/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace lgcy {

namespace {

// Working representation: terms sorted descending in the active order.
struct Term {
    Monomial m;
    Rational c;
};
using OrderedPoly = std::vector<Term>;

OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& ord) {
    OrderedPoly v;
    v.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) v.push_back({m, c});
    std::sort(v.begin(), v.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return v;
}

Polynomial to_polynomial(const OrderedPoly& v, std::size_t nvars) {
    Polynomial p(nvars);
    for (const auto& t : v) p.add_term(t.m, t.c);
    return p;
}

// a -= c * (q * b), both sorted descending; merge in O(|a| + |b|)
OrderedPoly merge_subtract(const OrderedPoly& a, const Rational& c, const Monomial& q,
                           const OrderedPoly& b, const MonomialOrder& ord) {
    OrderedPoly out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        Monomial bm = q * b[j].m;
        if (i == a.size()) {
            out.push_back({bm, -(c * b[j].c)});
            ++j;
            continue;
        }
        if (ord.greater(a[i].m, bm)) {
            out.push_back(a[i++]);
        } else if (ord.greater(bm, a[i].m)) {
            out.push_back({bm, -(c * b[j].c)});
            ++j;
        } else {
            Rational s = a[i].c - c * b[j].c;
            if (!s.is_zero()) out.push_back({a[i].m, s});
            ++i;
            ++j;
        }
    }
    return out;
}

struct Reducer {
    const std::vector<OrderedPoly>& gens;  // monic
    const MonomialOrder& ord;
    std::uint64_t& budget;

    // Full reduction: every term of the result is irreducible.
    OrderedPoly reduce(OrderedPoly p) const {
        OrderedPoly out;
        while (!p.empty()) {
            const Term& lead = p.front();
            std::optional<std::size_t> hit;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                if (gens[g].front().m.divides(lead.m)) {
                    hit = g;
                    break;
                }
            }
            if (!hit) {
                out.push_back(lead);
                p.erase(p.begin());
                continue;
            }
            if (budget == 0)
                throw BudgetExceeded("reduction budget exceeded; instance beyond desk scale");
            --budget;
            Monomial q = lead.m / gens[*hit].front().m;
            p = merge_subtract(p, lead.c, q, gens[*hit], ord);
        }
        return out;
    }
};

OrderedPoly make_monic(OrderedPoly p) {
    if (p.empty()) return p;
    Rational lc = p.front().c;
    if (lc == Rational(1)) return p;
    for (auto& t : p) t.c /= lc;
    return p;
}

OrderedPoly spoly_ordered(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& ord) {
    Monomial l = Monomial::lcm(f.front().m, g.front().m);
    Monomial qf = l / f.front().m;
    Monomial qg = l / g.front().m;
    // both monic: spoly = qf*f - qg*g
    OrderedPoly lf;
    lf.reserve(f.size());
    for (const auto& t : f) lf.push_back({qf * t.m, t.c});
    return merge_subtract(lf, Rational(1), qg, g, ord);
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order,
                             std::vector<Polynomial> source)
    : gens_(std::move(generators)), order_(std::move(order)), source_(std::move(source)) {
    if (gens_.empty()) throw std::invalid_argument("GroebnerBasis: empty generator list");
    nvars_ = gens_[0].nvars();
    lead_.reserve(gens_.size());
    for (auto& g : gens_) {
        if (g.is_zero()) throw std::invalid_argument("GroebnerBasis: zero generator");
        // leading monomial = maximal term under the order; force monic
        const Monomial* best = nullptr;
        for (const auto& [m, c] : g.terms())
            if (!best || order_.greater(m, *best)) best = &m;
        Monomial lead = *best;
        Rational lc = g.coeff(lead);
        if (lc != Rational(1)) g = g * lc.inverse();
        lead_.push_back(lead);
    }
}

GroebnerBasis groebner(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                       std::uint64_t budget) {
    if (generators.empty()) throw std::invalid_argument("groebner: empty generator list");
    const std::size_t nvars = generators[0].nvars();
    for (const auto& g : generators)
        if (g.nvars() != nvars) throw std::invalid_argument("groebner: variable count mismatch");

    std::vector<OrderedPoly> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        basis.push_back(make_monic(to_ordered(g, order)));
    }
    if (basis.empty()) throw std::invalid_argument("groebner: all generators are zero");

    Reducer red{basis, order, budget};

    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.lcm != b.lcm) return order.less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> processed;
    auto push_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            pending.push_back({Monomial::lcm(basis[i].front().m, basis[k].front().m), i, k});
    };
    for (std::size_t k = 1; k < basis.size(); ++k) push_pairs_for(k);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair p = *it;
        pending.erase(it);
        processed.insert({p.i, p.j});

        const Monomial& li = basis[p.i].front().m;
        const Monomial& lj = basis[p.j].front().m;
        // product criterion: coprime leading monomials
        if (Monomial::lcm(li, lj) == li * lj) continue;
        // chain criterion: some k with LT(k) | lcm and both (i,k),(j,k) done
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].front().m.divides(p.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (processed.count(key(p.i, k)) && processed.count(key(p.j, k))) chained = true;
        }
        if (chained) continue;

        OrderedPoly r = red.reduce(spoly_ordered(basis[p.i], basis[p.j], order));
        if (r.empty()) continue;
        basis.push_back(make_monic(std::move(r)));
        push_pairs_for(basis.size() - 1);
    }

    // minimalize: drop generators whose LT is divisible by another's LT
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (basis[j].front().m.divides(basis[i].front().m) &&
                !(basis[i].front().m == basis[j].front().m && j > i))
                keep[i] = false;
        }
    }
    std::vector<OrderedPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // auto-reduce tails against the final leading-term set, to fixpoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<OrderedPoly> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Reducer ired{others, order, budget};
            OrderedPoly r = make_monic(ired.reduce(minimal[i]));
            if (!(r.size() == minimal[i].size() &&
                  std::equal(r.begin(), r.end(), minimal[i].begin(), [](const Term& a, const Term& b) {
                      return a.m == b.m && a.c == b.c;
                  }))) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
        return order.less(a.front().m, b.front().m);
    });

    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (const auto& g : minimal) out.push_back(to_polynomial(g, nvars));
    return GroebnerBasis(std::move(out), order, generators);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.nvars() != gb.nvars()) throw std::invalid_argument("normal_form: variable count mismatch");
    std::vector<OrderedPoly> gens;
    gens.reserve(gb.generators().size());
    for (const auto& g : gb.generators()) gens.push_back(to_ordered(g, gb.order()));
    std::uint64_t budget = UINT64_MAX;  // NF against a reduced GB always terminates
    Reducer red{gens, gb.order(), budget};
    return to_polynomial(red.reduce(to_ordered(p, gb.order())), gb.nvars());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    OrderedPoly of = make_monic(to_ordered(f, order));
    OrderedPoly og = make_monic(to_ordered(g, order));
    if (of.empty() || og.empty()) throw std::invalid_argument("s_polynomial: zero input");
    return to_polynomial(spoly_ordered(of, og, order), f.nvars());
}

const Polynomial& NormalFormCache::monomial_nf(const Monomial& m) {
    auto found = memo_.find(m);
    if (found != memo_.end()) return found->second;

    // Iterative post-order over the reduction DAG (children are strictly
    // order-smaller), to keep recursion depth off the machine stack.
    std::vector<Monomial> stack{m};
    while (!stack.empty()) {
        Monomial cur = stack.back();
        if (memo_.count(cur)) {
            stack.pop_back();
            continue;
        }
        const auto& leads = gb_.leading_monomials();
        std::size_t hit = leads.size();
        for (std::size_t g = 0; g < leads.size(); ++g) {
            if (leads[g].divides(cur)) {
                hit = g;
                break;
            }
        }
        if (hit == leads.size()) {
            memo_.emplace(cur, Polynomial::monomial(cur));
            stack.pop_back();
            continue;
        }
        const Polynomial& g = gb_.generators()[hit];
        Monomial q = cur / leads[hit];
        bool ready = true;
        for (const auto& [tm, tc] : g.terms()) {
            if (tm == leads[hit]) continue;
            Monomial child = q * tm;
            if (!memo_.count(child)) {
                if (ready) ready = false;
                stack.push_back(child);
            }
        }
        if (!ready) continue;
        Polynomial acc(gb_.nvars());
        for (const auto& [tm, tc] : g.terms()) {
            if (tm == leads[hit]) continue;
            acc += memo_.at(q * tm) * (-tc);
        }
        memo_.emplace(cur, std::move(acc));
        stack.pop_back();
    }
    return memo_.at(m);
}

Polynomial NormalFormCache::nf(const Polynomial& p) {
    Polynomial out(p.nvars());
    for (const auto& [m, c] : p.terms()) out += monomial_nf(m) * c;
    return out;
}

}  // namespace lgcy
