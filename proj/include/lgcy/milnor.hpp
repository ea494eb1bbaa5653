#ifndef LGCY_MILNOR_HPP
#define LGCY_MILNOR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>

#include "lgcy/quotient.hpp"
#include "lgcy/weights.hpp"

namespace lgcy {

// R_f = Q[z]/(df), with its standard-monomial basis and grading data.
// Immutable after construction; shareable.
struct MilnorRing {
    Polynomial f;
    WeightSystem weights;
    GroebnerBasis gb;
    QuotientBasis basis;
    std::uint64_t mu;
    std::map<std::uint64_t, std::uint64_t> graded_dims;
    // Syntactic condition: no mixed quadratic monomial z_i z_j with i != j.
    // Reported as a warning flag only; nondegeneracy itself is decided by
    // quotient finiteness.
    bool no_mixed_quadratic_term;
};

// Throws NotQuasiHomogeneous or DegenerateSingularity (infinite quotient).
std::shared_ptr<const MilnorRing> build_milnor_ring(
    const Polynomial& f, const WeightSystem& w,
    const MonomialOrder& order = MonomialOrder::grevlex(),
    std::uint64_t budget = kDefaultReductionBudget);

bool has_mixed_quadratic_term(const Polynomial& f);

enum class DeformationKind { Relevant, Marginal, Irrelevant };

std::string to_string(DeformationKind k);

struct DeformationClass {
    DeformationKind kind;
    Rational parameter_weight;  // 1 - weighted_degree(phi)
};

// phi must be weighted-homogeneous; parameter weight sign decides the class.
DeformationClass classify_deformation(const Polynomial& phi, const WeightSystem& w);

struct ModuliReport {
    int n = 0;          // hypersurface dimension, variables = n + 2
    std::int64_t d = 0;
    Rational formula_value;          // binom(n+1+d, d) - (n+2)^2
    std::uint64_t marginal_dimension = 0;  // dim R_f^d
    bool match = false;
    bool k3_exception = false;       // (n, d) == (2, 4)
    std::optional<int> complex_deformation_dim;  // 20, recorded for K3 only
};

ModuliReport moduli_numbers(int n, std::int64_t d, const MilnorRing& ring);

struct SteenbrinkEntry {
    Monomial monomial;
    Rational level;  // h(A) = (deg A + N) / d
    bool integral;
};

struct SteenbrinkReport {
    std::vector<SteenbrinkEntry> entries;
    std::uint64_t dim_w_lower = 0;  // # { h not integral }
    std::uint64_t dim_w_quotient = 0;  // # { h integral }
};

// Convention: f homogeneous of degree d in N variables; h(A) = (deg A + N)/d.
SteenbrinkReport steenbrink_levels(const MilnorRing& ring);

}  // namespace lgcy

#endif
