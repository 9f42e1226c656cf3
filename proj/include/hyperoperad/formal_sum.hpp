#pragma once

#include <map>

#include "canonical.hpp"
#include "rational.hpp"

namespace hyperoperad {

// Finite exact-rational linear combination of canonical hypergraphs.
// Keys are bit-exact canonical serializations, so iteration order (and hence
// printing) is deterministic.
class FormalSum {
public:
    struct Term {
        Rational coeff;
        Hypergraph graph;
    };

    FormalSum() = default;

    void add(const SignedGraph& sg, const Rational& c) {
        if (sg.zero || c == 0) return;
        auto [it, inserted] = terms_.try_emplace(sg.key, Term{c * sg.sign, sg.graph});
        if (!inserted) {
            it->second.coeff += c * sg.sign;
            if (it->second.coeff == 0) terms_.erase(it);
        }
    }

    void add_canonical(const Hypergraph& g, const Rational& c, int presign = 1) {
        add(canonicalize(g, presign), c);
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [k, t] : o.terms_) {
            auto [it, inserted] = terms_.try_emplace(k, t);
            if (!inserted) {
                it->second.coeff += t.coeff;
                if (it->second.coeff == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        FormalSum neg = o;
        neg *= Rational(-1);
        return *this += neg;
    }
    FormalSum& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, t] : terms_) t.coeff *= c;
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(const Rational& c, FormalSum a) { return a *= c; }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    bool operator==(const FormalSum& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (auto a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b)
            if (a->first != b->first || a->second.coeff != b->second.coeff) return false;
        return true;
    }

    Rational coeff_of(const std::string& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second.coeff;
    }
    Rational coeff_of(const SignedGraph& sg) const {
        if (sg.zero) return 0;
        return coeff_of(sg.key) * sg.sign;
    }

    const std::map<std::string, Term>& terms() const { return terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, t] : terms_) {
            if (!out.empty()) out += "\n";
            out += to_string(t.coeff) + " * " + k;
        }
        return out;
    }

    // Human-readable diff of two sums (for verification failure reports).
    static std::string diff(const FormalSum& expected, const FormalSum& got) {
        std::string out;
        for (const auto& [k, t] : expected.terms_) {
            Rational g = got.coeff_of(k);
            if (g != t.coeff)
                out += "  expected " + to_string(t.coeff) + ", got " + to_string(g) + " * " + k +
                       "\n";
        }
        for (const auto& [k, t] : got.terms_)
            if (expected.coeff_of(k) == 0)
                out += "  unexpected " + to_string(t.coeff) + " * " + k + "\n";
        return out;
    }

private:
    std::map<std::string, Term> terms_;
};

} // namespace hyperoperad
