#ifndef LGCY_HIGGS_HPP
#define LGCY_HIGGS_HPP

#include "lgcy/hodge.hpp"

namespace lgcy {

// A family member f_u = f + sum u_i phi_i turned out to be degenerate.
struct DegenerateMember : DegenerateSingularity {
    DegenerateMember(const std::string& point)
        : DegenerateSingularity("degenerate family member at u = " + point), u(point) {}
    std::string u;
};

// Multiplication matrices by the marginal directions on the graded-subring
// basis of R_{f_u}, stored blockwise level a -> a+1.
struct HiggsField {
    Polynomial base_f;
    std::vector<Polynomial> marginals;
    std::vector<Rational> point;
    std::shared_ptr<const MilnorRing> ring;       // of f_u
    std::shared_ptr<const GradedSubring> sub;     // of f_u
    std::shared_ptr<const ResiduePairing> pairing;
    // blocks[dir][a]: |level a+1| x |level a|, a = 0..n-1
    std::vector<std::vector<RationalMatrix>> blocks;

    int n() const { return sub->n(); }
};

// Builds f_u, its ring, and the per-direction blocks. All phi_i must be
// marginal; f_u degenerate raises DegenerateMember naming u.
HiggsField higgs_matrices(const Polynomial& f, const std::vector<Polynomial>& marginals,
                          const std::vector<Rational>& u,
                          const MonomialOrder& order = MonomialOrder::grevlex(),
                          std::uint64_t budget = kDefaultReductionBudget,
                          bool verify_closure = true);

struct HiggsStructureReport {
    bool commuting = false;          // [C_i, C_j] = 0, blockwise
    bool level_raising = false;      // products of level n annihilate
    std::vector<int> nilpotency_index;  // per direction
    int max_nilpotency_index = 0;
    bool eta_symmetric = false;      // Res(C_i A, B) = Res(A, C_i B)
    bool pass() const { return commuting && level_raising && eta_symmetric; }
};

HiggsStructureReport verify_higgs_structure(const HiggsField& h);

struct TransportLevel {
    int a;
    Rational lhs;   // -(a+1) c_{a+1} / c_a
    Rational rhs;   // (-1)^a
    bool ok;
};

struct TransportReport {
    std::vector<TransportLevel> levels;
    bool pass() const {
        for (const auto& l : levels)
            if (!l.ok) return false;
        return true;
    }
};

// The arithmetic identity behind "C_i r(A) = -(a+1) r(phi_i A)" matching the
// r'-frame sign; the transported block at level a is (-1)^a times the
// multiplication block.
TransportReport transported_higgs_check(const HiggsField& h);

enum class PotentialityStatus { Zero, NonZero, BasisJump };

struct PotentialityEntry {
    std::vector<Rational> center;
    std::size_t dir_i = 0, dir_j = 0;
    PotentialityStatus status = PotentialityStatus::Zero;
    // first nonzero entry of the antisymmetrized divided difference, if any
    int sample_level = -1;
    Monomial sample_row, sample_col;
    Rational sample_value;
};

struct PotentialityReport {
    Rational step;
    std::vector<PotentialityEntry> entries;
    bool vanishes_where_defined() const {
        for (const auto& e : entries)
            if (e.status == PotentialityStatus::NonZero) return false;
        return true;
    }
};

// Symmetric divided differences of the C-matrices in the fixed monomial
// frame: Delta_i C_j - Delta_j C_i per direction pair at each center. A
// stencil whose four points do not share one standard-monomial basis is
// reported as BasisJump and skipped.
PotentialityReport potentiality_check(const Polynomial& f,
                                      const std::vector<Polynomial>& marginals,
                                      const std::vector<std::vector<Rational>>& u_samples,
                                      const Rational& step,
                                      const MonomialOrder& order = MonomialOrder::grevlex(),
                                      std::uint64_t budget = kDefaultReductionBudget);

}  // namespace lgcy

#endif
