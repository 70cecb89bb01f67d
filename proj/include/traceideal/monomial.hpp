#pragma once

#include <array>
#include <cstdint>
#include <numeric>

#include "traceideal/errors.hpp"

namespace traceideal {

inline constexpr int kMaxVars = 8;

// Exponent vector over a ring context's variables.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint8_t nvars = 0;

    static Monomial one(int n) {
        Monomial m;
        m.nvars = static_cast<uint8_t>(n);
        return m;
    }
    static Monomial var(int n, int idx, int exp = 1) {
        Monomial m = one(n);
        m.e[idx] = static_cast<uint16_t>(exp);
        return m;
    }

    int degree() const {
        int d = 0;
        for (int i = 0; i < nvars; ++i) d += e[i];
        return d;
    }
    bool is_one() const {
        for (int i = 0; i < nvars; ++i)
            if (e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < nvars; ++i) r.e[i] = static_cast<uint16_t>(r.e[i] + o.e[i]);
        return r;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // this / o, requires o.divides(*this)
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < nvars; ++i) r.e[i] = static_cast<uint16_t>(r.e[i] - o.e[i]);
        return r;
    }
    bool operator==(const Monomial& o) const {
        if (nvars != o.nvars) return false;
        for (int i = 0; i < nvars; ++i)
            if (e[i] != o.e[i]) return false;
        return true;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < a.nvars; ++i)
        if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

// Total, multiplicative well-orders on monomials.  BlockElim compares the
// first `block` variables (grevlex within the block) before the rest, which
// makes it an elimination order for those variables.
struct MonomialOrder {
    enum class Kind : uint8_t { Lex, GrevLex, BlockElim };
    Kind kind = Kind::GrevLex;
    int block = 0;

    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
    static MonomialOrder block_elim(int k) { return {Kind::BlockElim, k}; }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    // <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::Lex: return cmp_lex(a, b, 0, a.nvars);
            case Kind::GrevLex: return cmp_grevlex(a, b, 0, a.nvars);
            case Kind::BlockElim: {
                int c = cmp_grevlex(a, b, 0, block);
                if (c) return c;
                return cmp_grevlex(a, b, block, a.nvars);
            }
        }
        return 0;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Lex: return "lex";
            case Kind::GrevLex: return "grevlex";
            case Kind::BlockElim: return "elim(" + std::to_string(block) + ")";
        }
        return "?";
    }

  private:
    static int cmp_lex(const Monomial& a, const Monomial& b, int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
    }
    static int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (int i = hi - 1; i >= lo; --i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
};

}  // namespace traceideal
