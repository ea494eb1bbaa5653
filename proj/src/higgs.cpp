#include "lgcy/higgs.hpp"

#include <sstream>

namespace lgcy {

namespace {

std::string point_str(const std::vector<Rational>& u) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < u.size(); ++i) os << (i ? "," : "") << u[i].str();
    os << ")";
    return os.str();
}

// Gram matrix between two levels: entries Res(m_row * m_col).
RationalMatrix level_gram(const ResiduePairing& rp, const std::vector<Monomial>& rows,
                          const std::vector<Monomial>& cols) {
    RationalMatrix g(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            g.at(i, j) = rp.residue_of_monomial(rows[i] * cols[j]);
    return g;
}

}  // namespace

HiggsField higgs_matrices(const Polynomial& f, const std::vector<Polynomial>& marginals,
                          const std::vector<Rational>& u, const MonomialOrder& order,
                          std::uint64_t budget, bool verify_closure) {
    if (marginals.empty()) throw std::invalid_argument("higgs_matrices: no marginal directions");
    if (u.size() != marginals.size())
        throw std::invalid_argument("higgs_matrices: u length != direction count");
    WeightSystem w = WeightSystem::homogeneous(f.nvars(), long(f.degree().value_or(0)));
    for (const auto& phi : marginals) {
        auto cls = classify_deformation(phi, w);
        if (cls.kind != DeformationKind::Marginal)
            throw std::invalid_argument("higgs_matrices: direction is not marginal");
    }

    HiggsField h;
    h.base_f = f;
    h.marginals = marginals;
    h.point = u;
    Polynomial fu = f;
    for (std::size_t i = 0; i < marginals.size(); ++i) fu += marginals[i] * u[i];
    try {
        h.ring = build_milnor_ring(fu, w, order, budget);
    } catch (const DegenerateSingularity&) {
        throw DegenerateMember(point_str(u));
    }
    h.sub = std::make_shared<const GradedSubring>(h.ring, verify_closure);
    h.pairing = std::make_shared<const ResiduePairing>(h.ring);

    const int n = h.sub->n();
    NormalFormCache& cache = h.pairing->nf_cache();
    h.blocks.resize(marginals.size());
    for (std::size_t dir = 0; dir < marginals.size(); ++dir) {
        h.blocks[dir].reserve(n);
        for (int a = 0; a < n; ++a) {
            const auto& dom = h.sub->level(a);
            const auto& img = h.sub->level(a + 1);
            RationalMatrix M(img.size(), dom.size());
            for (std::size_t j = 0; j < dom.size(); ++j) {
                Polynomial nf = cache.nf(marginals[dir] * Polynomial::monomial(dom[j]));
                auto col = h.sub->coordinates(a + 1, nf);  // throws if it leaves the level
                for (std::size_t i = 0; i < img.size(); ++i) M.at(i, j) = col[i];
            }
            h.blocks[dir].push_back(std::move(M));
        }
        // strict level raising: multiplying the top level lands in the ideal
        for (const auto& m : h.sub->level(n)) {
            Polynomial nf = cache.nf(marginals[dir] * Polynomial::monomial(m));
            if (!nf.is_zero())
                throw Error("higgs_matrices: top-level product escaped the ideal");
        }
    }
    return h;
}

HiggsStructureReport verify_higgs_structure(const HiggsField& h) {
    HiggsStructureReport rep;
    const int n = h.n();
    const std::size_t dirs = h.blocks.size();

    rep.level_raising = true;  // certified during construction

    rep.commuting = true;
    for (std::size_t i = 0; i < dirs && rep.commuting; ++i)
        for (std::size_t j = i + 1; j < dirs && rep.commuting; ++j)
            for (int a = 0; a + 2 <= n; ++a) {
                RationalMatrix lhs = h.blocks[i][a + 1] * h.blocks[j][a];
                RationalMatrix rhs = h.blocks[j][a + 1] * h.blocks[i][a];
                if (lhs != rhs) {
                    rep.commuting = false;
                    break;
                }
            }

    // nilpotency index per direction: smallest k with all length-k chains zero
    for (std::size_t i = 0; i < dirs; ++i) {
        int index = n + 1;
        for (int k = 1; k <= n; ++k) {
            bool all_zero = true;
            for (int a = 0; a + k <= n; ++a) {
                RationalMatrix chain = h.blocks[i][a];
                for (int t = 1; t < k; ++t) chain = h.blocks[i][a + t] * chain;
                if (!chain.is_zero()) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) {
                index = k;
                break;
            }
        }
        rep.nilpotency_index.push_back(index);
        rep.max_nilpotency_index = std::max(rep.max_nilpotency_index, index);
    }

    // eta-symmetry via Gram blocks: C^T G = G C on complementary levels
    rep.eta_symmetric = true;
    for (std::size_t i = 0; i < dirs && rep.eta_symmetric; ++i)
        for (int a = 0; a < n && rep.eta_symmetric; ++a) {
            int b = n - a - 1;
            if (b < 0) continue;
            RationalMatrix g1 = level_gram(*h.pairing, h.sub->level(a + 1), h.sub->level(b));
            RationalMatrix g2 = level_gram(*h.pairing, h.sub->level(a), h.sub->level(b + 1));
            RationalMatrix lhs = h.blocks[i][a].transposed() * g1;
            RationalMatrix rhs = g2 * h.blocks[i][b];
            if (lhs != rhs) rep.eta_symmetric = false;
        }
    return rep;
}

TransportReport transported_higgs_check(const HiggsField& h) {
    for (const auto& c : h.point)
        if (!c.is_zero())
            throw std::invalid_argument("transported_higgs_check: defined at u = 0 only");
    TransportReport rep;
    const int n = h.n();
    for (int a = 0; a < n; ++a) {
        TransportLevel lvl;
        lvl.a = a;
        lvl.lhs = Rational(-(long(a) + 1)) * cech_constant(n, a + 1) / cech_constant(n, a);
        lvl.rhs = Rational(a % 2 == 0 ? 1 : -1);
        lvl.ok = lvl.lhs == lvl.rhs;
        rep.levels.push_back(lvl);
    }
    return rep;
}

PotentialityReport potentiality_check(const Polynomial& f,
                                      const std::vector<Polynomial>& marginals,
                                      const std::vector<std::vector<Rational>>& u_samples,
                                      const Rational& step, const MonomialOrder& order,
                                      std::uint64_t budget) {
    if (step.is_zero()) throw std::invalid_argument("potentiality_check: zero step");
    PotentialityReport rep;
    rep.step = step;
    const std::size_t dirs = marginals.size();

    for (const auto& center : u_samples) {
        if (center.size() != dirs)
            throw std::invalid_argument("potentiality_check: center length != direction count");
        for (std::size_t i = 0; i < dirs; ++i)
            for (std::size_t j = i + 1; j < dirs; ++j) {
                PotentialityEntry ent;
                ent.center = center;
                ent.dir_i = i;
                ent.dir_j = j;

                auto shifted = [&](std::size_t dir, int sign) {
                    auto u = center;
                    u[dir] += step * Rational(sign);
                    return higgs_matrices(f, marginals, u, order, budget,
                                          /*verify_closure=*/false);
                };
                HiggsField ip = shifted(i, +1), im = shifted(i, -1);
                HiggsField jp = shifted(j, +1), jm = shifted(j, -1);

                bool same_basis = ip.sub->levels() == im.sub->levels() &&
                                  ip.sub->levels() == jp.sub->levels() &&
                                  ip.sub->levels() == jm.sub->levels();
                if (!same_basis) {
                    ent.status = PotentialityStatus::BasisJump;
                    rep.entries.push_back(std::move(ent));
                    continue;
                }

                Rational half = (Rational(2) * step).inverse();
                ent.status = PotentialityStatus::Zero;
                const int n = ip.n();
                for (int a = 0; a < n; ++a) {
                    RationalMatrix di_cj = (ip.blocks[j][a] - im.blocks[j][a]).scaled(half);
                    RationalMatrix dj_ci = (jp.blocks[i][a] - jm.blocks[i][a]).scaled(half);
                    RationalMatrix anti = di_cj - dj_ci;
                    if (anti.is_zero()) continue;
                    ent.status = PotentialityStatus::NonZero;
                    if (ent.sample_level < 0) {
                        for (std::size_t r = 0; r < anti.rows() && ent.sample_level < 0; ++r)
                            for (std::size_t c = 0; c < anti.cols(); ++c)
                                if (!anti.at(r, c).is_zero()) {
                                    ent.sample_level = a;
                                    ent.sample_row = ip.sub->level(a + 1)[r];
                                    ent.sample_col = ip.sub->level(a)[c];
                                    ent.sample_value = anti.at(r, c);
                                    break;
                                }
                    }
                }
                rep.entries.push_back(std::move(ent));
            }
    }
    return rep;
}

}  // namespace lgcy
