#ifndef LGCY_MONOMIAL_HPP
#define LGCY_MONOMIAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgcy {

// Inputs with exponents beyond this are rejected at parse time.
inline constexpr std::uint64_t kExponentLimit = std::uint64_t(1) << 31;

// Exponent vector of fixed length (the ring's variable count).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    bool is_one() const {
        for (auto x : e_) if (x) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            std::uint64_t s = std::uint64_t(r.e_[i]) + o.e_[i];
            if (s > kExponentLimit) throw std::overflow_error("Monomial: exponent overflow");
            r.e_[i] = static_cast<std::uint32_t>(s);
        }
        return r;
    }

    // Exact quotient; caller guarantees o.divides(*this).
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
    // Plain lexicographic on the exponent vector; used only for canonical containers.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

    std::string str(const std::vector<std::string>& vars) const;

private:
    std::vector<std::uint32_t> e_;
};

enum class OrderKind { GrevLex, GrLex, Lex };

OrderKind order_kind_from_string(const std::string& s);
std::string to_string(OrderKind k);

// Total multiplicative monomial order. `priority` permutes variables before
// comparison: priority[0] is the highest-priority variable index. Empty
// priority means identity.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::vector<std::uint32_t> priority;

    static MonomialOrder grevlex() { return MonomialOrder{}; }
    static MonomialOrder grlex() { return MonomialOrder{OrderKind::GrLex, {}}; }
    static MonomialOrder lex() { return MonomialOrder{OrderKind::Lex, {}}; }

    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
    bool equal_to(const MonomialOrder& o) const {
        return kind == o.kind && priority == o.priority;
    }
};

// Canonical storage order for polynomial terms: graded reverse lexicographic,
// identity priority. Comparator for ordered containers.
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return MonomialOrder::grevlex().less(a, b);
    }
};

}  // namespace lgcy

#endif
