#ifndef STEENROD_DUAL_HPP
#define STEENROD_DUAL_HPP

#include "expseq.hpp"
#include "terms.hpp"

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace steenrod {

// Monomial of D_0* = Z/4[xi_n, 2xi_{k,l}].  Either xi^R (k = l = -1) or
// 2xi_{k,l} xi^R with 0 <= k < l.  The factor 2 is part of the generator,
// so monomials with a xi_{k,l} slot are 2-torsion.
struct DualMono {
    int k = -1, l = -1;
    ExpSeq xi;

    bool hasKL() const { return l >= 0; }
    int degree() const { return degreeOf(xi) + (hasKL() ? (1 << k) + (1 << l) - 1 : 0); }
    int torsion() const { return hasKL() ? 2 : 4; }

    friend auto operator<=>(const DualMono&, const DualMono&) = default;
};

inline DualMono xiMono(const ExpSeq& r)
{
    DualMono m;
    m.xi = r;
    trimSeq(m.xi);
    return m;
}

inline DualMono xiKLMono(int k, int l, const ExpSeq& r = {})
{
    if (!(0 <= k && k < l))
        throw Error("2xi_{k,l} requires 0 <= k < l");
    DualMono m;
    m.k = k;
    m.l = l;
    m.xi = r;
    trimSeq(m.xi);
    return m;
}

// product of monomials; nullopt when it vanishes (two xi_{k,l} slots, 4 = 0)
inline std::optional<DualMono> mulDualMono(const DualMono& a, const DualMono& b)
{
    if (a.hasKL() && b.hasKL())
        return std::nullopt;
    DualMono m = a.hasKL() ? a : b;
    m.xi = seqAdd(a.xi, b.xi);
    return m;
}

// Element of D_0*; coefficients mod torsion of the monomial.
class DualElt {
public:
    void add(const DualMono& m, int c)
    {
        c %= m.torsion();
        if (c < 0)
            c += m.torsion();
        if (!c)
            return;
        auto [it, fresh] = t_.try_emplace(m, c);
        if (!fresh) {
            it->second = (it->second + c) % m.torsion();
            if (!it->second)
                t_.erase(it);
        }
    }
    int coef(const DualMono& m) const
    {
        auto it = t_.find(m);
        return it == t_.end() ? 0 : it->second;
    }
    bool isZero() const { return t_.empty(); }
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }
    size_t size() const { return t_.size(); }
    DualElt& operator+=(const DualElt& o)
    {
        for (auto& [m, c] : o)
            add(m, c);
        return *this;
    }
    void addScaled(const DualElt& o, int s)
    {
        for (auto& [m, c] : o)
            add(m, c * s);
    }
    friend bool operator==(const DualElt&, const DualElt&) = default;

private:
    std::map<DualMono, int> t_;
};

inline DualElt mulDualElt(const DualElt& a, const DualElt& b)
{
    DualElt out;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b)
            if (auto m = mulDualMono(ma, mb))
                out.add(*m, ca * cb);
    return out;
}

inline DualElt oneDualElt()
{
    DualElt e;
    e.add(xiMono({}), 1);
    return e;
}

// Element of D_0* (x) D_0*; a pair is 2-torsion when either slot carries a
// xi_{k,l} generator.
class DualTensor {
public:
    using Key = std::pair<DualMono, DualMono>;
    static int torsion(const Key& k) { return (k.first.hasKL() || k.second.hasKL()) ? 2 : 4; }

    void add(const Key& k, int c)
    {
        int m = torsion(k);
        c %= m;
        if (c < 0)
            c += m;
        if (!c)
            return;
        auto [it, fresh] = t_.try_emplace(k, c);
        if (!fresh) {
            it->second = (it->second + c) % m;
            if (!it->second)
                t_.erase(it);
        }
    }
    int coef(const Key& k) const
    {
        auto it = t_.find(k);
        return it == t_.end() ? 0 : it->second;
    }
    bool isZero() const { return t_.empty(); }
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }
    size_t size() const { return t_.size(); }
    friend bool operator==(const DualTensor&, const DualTensor&) = default;

private:
    std::map<Key, int> t_;
};

// Displayed coproducts of D_0*.  xi symbols with negative index are zero,
// xi_0 = 1.
DualTensor deltaXiD0(int n);
DualTensor deltaXiKL(int k, int l);

// Coproduct of a full monomial (multiplicative extension); exact table.
DualTensor dualCoproduct(const DualMono& m);

// Enumerate all dual monomials of the given degree.
template <typename Fn>
void forEachDualMono(int degree, Fn&& fn)
{
    forEachExpSeq(degree, [&](const ExpSeq& r) { fn(xiMono(r)); });
    for (int l = 1; (1 << l) <= degree; ++l)
        for (int k = 0; k < l; ++k) {
            int w = (1 << k) + (1 << l) - 1;
            if (w > degree)
                continue;
            forEachExpSeq(degree - w, [&](const ExpSeq& r) { fn(xiKLMono(k, l, r)); });
        }
}

}  // namespace steenrod

#endif
