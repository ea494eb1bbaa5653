#ifndef LGCY_HODGE_HPP
#define LGCY_HODGE_HPP

#include <cstdint>
#include <memory>

#include "lgcy/residue.hpp"

namespace lgcy {

// The Calabi-Yau-side model: the graded subring \oplus_a R_f^{d a} of the
// Milnor ring of a nondegenerate homogeneous f with deg f = #variables.
// Level a carries Hodge bidegree (n-a, a), n = N-2.
class GradedSubring {
public:
    // Throws NotCalabiYau if deg f != #variables. When verify_closure is set,
    // every pairwise basis product is reduced and certified to lie in the
    // span of the target level.
    GradedSubring(std::shared_ptr<const MilnorRing> ring, bool verify_closure = true);

    const MilnorRing& ring() const { return *ring_; }
    std::shared_ptr<const MilnorRing> ring_ptr() const { return ring_; }
    int n() const { return n_; }
    std::int64_t d() const { return d_; }
    const std::vector<std::vector<Monomial>>& levels() const { return levels_; }
    const std::vector<Monomial>& level(int a) const { return levels_[a]; }
    bool closure_verified() const { return closure_verified_; }

    // level of a homogeneous polynomial supported on subring monomials;
    // nullopt for zero or degrees that are not multiples of d
    std::optional<int> level_of(const Polynomial& p) const;

    // coordinates of a level-a polynomial in the level basis
    std::vector<Rational> coordinates(int a, const Polynomial& p) const;

private:
    std::shared_ptr<const MilnorRing> ring_;
    int n_;
    std::int64_t d_;
    std::vector<std::vector<Monomial>> levels_;
    bool closure_verified_ = false;
};

struct HodgeNumbers {
    // h^{n-a, a}_prim for a = 0..n
    std::vector<std::uint64_t> h;
    bool palindromic() const;
};

HodgeNumbers hodge_numbers(const GradedSubring& sub);

// c_a = (-1)^{n + a(a+1)/2} / a!
Rational cech_constant(int n, int a);
// k_ab = (-1)^{(a(a-1) + b(b-1))/2 + b^2} / (a! b!)
Rational pairing_constant(int a, int b);
// k_N = (-1)^{N(N-1)/2} i^N / 2^N
GaussRational lg_pairing_constant(int N);

struct BridgeConstants {
    Rational c_a;
    Rational k_ab;
    GaussRational k_n;
};

BridgeConstants bridge_constants(int n, int a, int b);

// -(a+1) c_{a+1} / c_a == (-1)^a; the sign reconciling the CY Higgs factor
// with the r'-frame statement.
bool sign_chain_holds(int n, int a);

// i^{a-b} k_ab Res_f(A, B) as an exact Gauss rational; zero unless the level
// degrees are complementary (a + b = n).
GaussRational cy_pairing(const GradedSubring& sub, const ResiduePairing& rp,
                         const Polynomial& A, const Polynomial& B);

// [A] * [B] = [AB] reduced into the level-(a+b) basis. Products past the top
// level must land in the Jacobian ideal; that is asserted, and zero returned.
Polynomial yukawa_product(const GradedSubring& sub, const ResiduePairing& rp,
                          const Polynomial& A, const Polynomial& B);

struct FrobeniusBlockReport {
    int a = 0, b = 0;
    GaussRational transport_scalar;      // solved from the data, block-constant
    GaussRational predicted_scalar;      // i^{a-b} k_ab
    bool block_constant = false;
    bool matches_formula = false;
};

struct FrobeniusReport {
    bool frobenius_compatible = false;   // Res(A*B, C) == Res(A, B*C)
    bool grading_respected = false;
    bool sampled = false;                // true when triples were randomized
    std::uint64_t triples_checked = 0;
    std::vector<FrobeniusBlockReport> blocks;
    bool pass() const;
};

// Checks (i) Frobenius compatibility over all (or seeded-random, above the
// dimension threshold) basis triples, (ii) the per-bidegree transport scalar
// between the CY pairing and the residue pairing, (iii) grading of products.
FrobeniusReport verify_frobenius_isomorphism(const GradedSubring& sub, const ResiduePairing& rp,
                                             std::uint64_t seed = 0x5EED,
                                             std::uint64_t sample_triples = 500,
                                             std::size_t exhaustive_dim_threshold = 30);

}  // namespace lgcy

#endif
