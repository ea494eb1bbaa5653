#include "lgcy/hodge.hpp"

#include <random>

namespace lgcy {

GradedSubring::GradedSubring(std::shared_ptr<const MilnorRing> ring, bool verify_closure)
    : ring_(std::move(ring)) {
    const std::size_t N = ring_->f.nvars();
    if (!ring_->weights.is_homogeneous() ||
        ring_->weights.common_degree() != static_cast<std::int64_t>(N))
        throw NotCalabiYau("graded subring requires homogeneous f with deg f = #variables");
    d_ = ring_->weights.common_degree();
    n_ = static_cast<int>(N) - 2;
    if (n_ < 0) throw NotCalabiYau("need at least two variables");

    levels_.resize(n_ + 1);
    for (const auto& m : ring_->basis.monomials) {
        std::uint64_t deg = m.degree();
        if (deg % static_cast<std::uint64_t>(d_)) continue;
        std::uint64_t a = deg / static_cast<std::uint64_t>(d_);
        if (a <= static_cast<std::uint64_t>(n_)) levels_[a].push_back(m);
    }
    if (levels_[0].size() != 1 || levels_[n_].size() != 1)
        throw NotCalabiYau("level 0 and level n must be one-dimensional");

    if (verify_closure) {
        NormalFormCache cache(ring_->gb);
        for (int a = 0; a <= n_; ++a)
            for (int b = a; b <= n_; ++b) {
                for (const auto& ma : levels_[a])
                    for (const auto& mb : levels_[b]) {
                        Polynomial nf = cache.monomial_nf(ma * mb);
                        if (a + b > n_) {
                            if (!nf.is_zero())
                                throw Error("closure: product past the top level not in the ideal");
                            continue;
                        }
                        // support must lie inside the target level's monomial set
                        for (const auto& [m, c] : nf.terms()) {
                            if (m.degree() != static_cast<std::uint64_t>(d_) * (a + b))
                                throw Error("closure: product leaves the graded subring");
                        }
                    }
            }
        closure_verified_ = true;
    }
}

std::optional<int> GradedSubring::level_of(const Polynomial& p) const {
    auto deg = p.degree();
    if (!deg || !p.is_homogeneous()) return std::nullopt;
    if (*deg % static_cast<std::uint64_t>(d_)) return std::nullopt;
    std::uint64_t a = *deg / static_cast<std::uint64_t>(d_);
    if (a > static_cast<std::uint64_t>(n_)) return std::nullopt;
    return static_cast<int>(a);
}

std::vector<Rational> GradedSubring::coordinates(int a, const Polynomial& p) const {
    std::vector<Rational> x(levels_[a].size(), Rational(0));
    for (std::size_t i = 0; i < levels_[a].size(); ++i) x[i] = p.coeff(levels_[a][i]);
    // certify p is inside the span
    Polynomial rebuilt(p.nvars());
    for (std::size_t i = 0; i < levels_[a].size(); ++i) rebuilt.add_term(levels_[a][i], x[i]);
    if (rebuilt != p) throw Error("coordinates: polynomial not supported on the level basis");
    return x;
}

bool HodgeNumbers::palindromic() const {
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] != h[h.size() - 1 - i]) return false;
    return true;
}

HodgeNumbers hodge_numbers(const GradedSubring& sub) {
    HodgeNumbers out;
    for (const auto& lvl : sub.levels()) out.h.push_back(lvl.size());
    return out;
}

Rational cech_constant(int n, int a) {
    if (a < 0) throw std::invalid_argument("cech_constant: a >= 0 required");
    long e = long(n) + long(a) * (long(a) + 1) / 2;
    Rational sign(e % 2 == 0 ? 1 : -1);
    return sign / factorial(unsigned(a));
}

Rational pairing_constant(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("pairing_constant: a, b >= 0 required");
    long e = (long(a) * (a - 1) + long(b) * (b - 1)) / 2 + long(b) * b;
    Rational sign(e % 2 == 0 ? 1 : -1);
    return sign / (factorial(unsigned(a)) * factorial(unsigned(b)));
}

GaussRational lg_pairing_constant(int N) {
    if (N < 0) throw std::invalid_argument("lg_pairing_constant: N >= 0 required");
    long e = long(N) * (N - 1) / 2;
    Rational sign(e % 2 == 0 ? 1 : -1);
    Rational mag = sign / Rational(2).pow(N);
    return GaussRational::i_pow(N) * mag;
}

BridgeConstants bridge_constants(int n, int a, int b) {
    return BridgeConstants{cech_constant(n, a), pairing_constant(a, b), lg_pairing_constant(n)};
}

bool sign_chain_holds(int n, int a) {
    Rational lhs = Rational(-(long(a) + 1)) * cech_constant(n, a + 1) / cech_constant(n, a);
    Rational rhs(a % 2 == 0 ? 1 : -1);
    return lhs == rhs;
}

GaussRational cy_pairing(const GradedSubring& sub, const ResiduePairing& rp, const Polynomial& A,
                         const Polynomial& B) {
    if (A.is_zero() || B.is_zero()) return GaussRational();
    auto a = sub.level_of(A), b = sub.level_of(B);
    if (!a || !b) throw Error("cy_pairing: arguments must be homogeneous of level degree");
    if (*a + *b != sub.n()) return GaussRational();
    Rational res = rp.residue_pairing(A, B);
    return GaussRational::i_pow(long(*a) - long(*b)) * (pairing_constant(*a, *b) * res);
}

Polynomial yukawa_product(const GradedSubring& sub, const ResiduePairing& rp, const Polynomial& A,
                          const Polynomial& B) {
    const std::size_t nv = sub.ring().f.nvars();
    if (A.is_zero() || B.is_zero()) return Polynomial::zero(nv);
    auto a = sub.level_of(A), b = sub.level_of(B);
    if (!a || !b) throw Error("yukawa_product: arguments must be homogeneous of level degree");
    Polynomial nf = rp.nf_cache().nf(A * B);
    if (*a + *b > sub.n()) {
        if (!nf.is_zero()) throw Error("yukawa_product: overflow product escaped the ideal");
        return nf;
    }
    return nf;
}

bool FrobeniusReport::pass() const {
    if (!frobenius_compatible || !grading_respected) return false;
    for (const auto& blk : blocks)
        if (!blk.block_constant || !blk.matches_formula) return false;
    return true;
}

FrobeniusReport verify_frobenius_isomorphism(const GradedSubring& sub, const ResiduePairing& rp,
                                             std::uint64_t seed, std::uint64_t sample_triples,
                                             std::size_t exhaustive_dim_threshold) {
    FrobeniusReport rep;
    const int n = sub.n();

    // (iii) grading: every pairwise product reduces inside the target level
    // (or the ideal, past the top); delegated to the closure certificate.
    rep.grading_respected = sub.closure_verified();

    // (i) Frobenius compatibility eta(A*B, C) = eta(A, B*C)
    std::size_t maxdim = 0;
    for (const auto& lvl : sub.levels()) maxdim = std::max(maxdim, lvl.size());
    rep.sampled = maxdim > exhaustive_dim_threshold;

    auto check_triple = [&](const Monomial& A, const Monomial& B, const Monomial& C) {
        Rational lhs = rp.residue_of_monomial(A * B * C);
        // both associations reduce to the residue of the triple product; exercise
        // the product machinery on each side instead of relying on that
        Polynomial AB = yukawa_product(sub, rp, Polynomial::monomial(A), Polynomial::monomial(B));
        Polynomial BC = yukawa_product(sub, rp, Polynomial::monomial(B), Polynomial::monomial(C));
        Rational via_ab = rp.residue_pairing(AB, Polynomial::monomial(C));
        Rational via_bc = rp.residue_pairing(Polynomial::monomial(A), BC);
        return via_ab == lhs && via_bc == lhs;
    };

    rep.frobenius_compatible = true;
    if (!rep.sampled) {
        for (int a = 0; a <= n && rep.frobenius_compatible; ++a)
            for (int b = 0; a + b <= n && rep.frobenius_compatible; ++b) {
                int c = n - a - b;
                for (const auto& A : sub.level(a))
                    for (const auto& B : sub.level(b))
                        for (const auto& C : sub.level(c)) {
                            ++rep.triples_checked;
                            if (!check_triple(A, B, C)) {
                                rep.frobenius_compatible = false;
                                goto done_exhaustive;
                            }
                        }
            done_exhaustive:;
            }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> la(0, n);
        for (std::uint64_t t = 0; t < sample_triples; ++t) {
            int a = la(rng);
            std::uniform_int_distribution<int> lb(0, n - a);
            int b = lb(rng);
            int c = n - a - b;
            auto pick = [&](int lvl) {
                std::uniform_int_distribution<std::size_t> d(0, sub.level(lvl).size() - 1);
                return sub.level(lvl)[d(rng)];
            };
            ++rep.triples_checked;
            if (!check_triple(pick(a), pick(b), pick(c))) {
                rep.frobenius_compatible = false;
                break;
            }
        }
    }

    // (ii) per-bidegree transport scalar between the CY pairing and Res_f
    for (int a = 0; a <= n; ++a) {
        int b = n - a;
        FrobeniusBlockReport blk;
        blk.a = a;
        blk.b = b;
        blk.predicted_scalar = GaussRational::i_pow(long(a) - long(b)) * pairing_constant(a, b);
        std::optional<GaussRational> solved;
        bool constant = true;
        for (const auto& A : sub.level(a)) {
            for (const auto& B : sub.level(b)) {
                Polynomial pa = Polynomial::monomial(A), pb = Polynomial::monomial(B);
                Rational res = rp.residue_pairing(pa, pb);
                GaussRational cy = cy_pairing(sub, rp, pa, pb);
                if (res.is_zero()) {
                    if (!cy.is_zero()) constant = false;
                    continue;
                }
                GaussRational ratio = cy * res.inverse();
                if (!solved)
                    solved = ratio;
                else if (*solved != ratio)
                    constant = false;
            }
        }
        blk.block_constant = constant && solved.has_value();
        blk.transport_scalar = solved.value_or(GaussRational());
        blk.matches_formula = blk.block_constant && blk.transport_scalar == blk.predicted_scalar;
        rep.blocks.push_back(std::move(blk));
    }
    return rep;
}

}  // namespace lgcy
