#include "lgcy/monomial.hpp"

namespace lgcy {

std::string Monomial::str(const std::vector<std::string>& vars) const {
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
}

OrderKind order_kind_from_string(const std::string& s) {
    if (s == "grevlex") return OrderKind::GrevLex;
    if (s == "grlex") return OrderKind::GrLex;
    if (s == "lex") return OrderKind::Lex;
    throw std::invalid_argument("unknown monomial order '" + s + "'");
}

std::string to_string(OrderKind k) {
    switch (k) {
        case OrderKind::GrevLex: return "grevlex";
        case OrderKind::GrLex: return "grlex";
        default: return "lex";
    }
}

namespace {

// a <_lex b on permuted coordinates
bool lex_less(const Monomial& a, const Monomial& b, const std::vector<std::uint32_t>& pr) {
    const std::size_t n = a.nvars();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t v = pr.empty() ? i : pr[i];
        if (a[v] != b[v]) return a[v] < b[v];
    }
    return false;
}

// grevlex tie-break among equal degrees: a < b iff the last (lowest-priority)
// position where they differ has a-exponent strictly larger.
bool grevlex_tail_less(const Monomial& a, const Monomial& b, const std::vector<std::uint32_t>& pr) {
    const std::size_t n = a.nvars();
    for (std::size_t i = n; i-- > 0;) {
        std::size_t v = pr.empty() ? i : pr[i];
        if (a[v] != b[v]) return a[v] > b[v];
    }
    return false;
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case OrderKind::Lex:
            return lex_less(a, b, priority);
        case OrderKind::GrLex: {
            auto da = a.degree(), db = b.degree();
            if (da != db) return da < db;
            return lex_less(a, b, priority);
        }
        case OrderKind::GrevLex:
        default: {
            auto da = a.degree(), db = b.degree();
            if (da != db) return da < db;
            return grevlex_tail_less(a, b, priority);
        }
    }
}

}  // namespace lgcy
