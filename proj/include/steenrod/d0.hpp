#ifndef STEENROD_D0_HPP
#define STEENROD_D0_HPP

#include "dual.hpp"
#include "milnor.hpp"

namespace steenrod {

// Index of Y_{k,l}Sq(R); always stored with -1 <= k < l.
struct YKey {
    int k, l;
    ExpSeq r;
    friend auto operator<=>(const YKey&, const YKey&) = default;
};

inline int degreeY(int k, int l, const ExpSeq& r)
{
    return (1 << (k + 1)) + (1 << (l + 1)) - 1 + degreeOf(r);
}

// The Hopf algebra D_0 = Z/4{Sq(R)} + sum_{-1<=k<l} Y_{k,l}A.
struct D0Elt {
    Terms<ExpSeq, 4> sq;
    Terms<YKey, 2> y;

    bool isZero() const { return sq.isZero() && y.isZero(); }
    friend bool operator==(const D0Elt&, const D0Elt&) = default;
    D0Elt& operator+=(const D0Elt& o)
    {
        sq += o.sq;
        y += o.y;
        return *this;
    }
    friend D0Elt operator+(D0Elt a, const D0Elt& b)
    {
        a += b;
        return a;
    }
};

inline D0Elt sqD0(const ExpSeq& r, int c = 1)
{
    D0Elt e;
    ExpSeq s = r;
    trimSeq(s);
    e.sq.add(s, c);
    return e;
}

inline D0Elt unitD0() { return sqD0({}); }

// The section sigma: A -> D_0, coefficientwise lift 0 -> 0, 1 -> 1.
inline D0Elt sigma(const AElt& a)
{
    D0Elt e;
    for (auto& [r, c] : a.terms)
        e.sq.add(r, c);
    return e;
}

// pi: D_0 ->> A, Sq(R) mod 2, Y-part to zero.
inline AElt pi(const D0Elt& x)
{
    AElt a;
    for (auto& [r, c] : x.sq)
        a.terms.add(r, c);
    return a;
}

std::optional<int> degreeIfHomogeneous(const D0Elt& x);

// Adds c * Y_{k,l}(rest) for arbitrary k,l >= -1, rewriting indices k >= l
// via Y_{k,l} = Y_{l,k} and Y_{k,k} = 2Sq(Delta_{k+2}).
void addYNormalized(D0Elt& out, int k, int l, const AElt& rest, int c = 1);

inline D0Elt yElt(int k, int l, const ExpSeq& r = {})
{
    D0Elt e;
    addYNormalized(e, k, l, sqElt(r));
    return e;
}

// <x, m> in Z/4 under the basis-dual pairing of D_0 against D_0*.
int pairD0(const D0Elt& x, const DualMono& m);

// <x (x) y, Delta(m)> via pruned expansion of the dual coproduct.
int pairCoproductD0(const D0Elt& x, const D0Elt& y, const DualMono& m);

// Product in D_0, dual to the coproduct of D_0* (normative).
D0Elt mulD0(const D0Elt& x, const D0Elt& y);

inline D0Elt operator*(const D0Elt& x, const D0Elt& y) { return mulD0(x, y); }

// Independent route: Milnor matrices with integer multinomials mod 4 for
// the Sq-parts plus the closed commutation forms; the test oracle.
D0Elt mulD0Oracle(const D0Elt& x, const D0Elt& y);

// Closed-form left action a . Y_{k,l}Sq(R) from the commutation rule.
D0Elt yLeftAction(const AElt& a, int k, int l, const ExpSeq& r);

// phi = f^eff on generators: U_{k,l}Sq(R) -> Y_{k,l}Sq(R) (k != l, then
// normalized), U_{k,k}Sq(R) -> 2 Q_{k+1}Sq(R).
D0Elt phiEff(int k, int l, const ExpSeq& r);

// An element of R_D = ker pi (even Sq-coefficients).
struct RDElt {
    D0Elt v;
};

RDElt makeRD(const D0Elt& x);

inline D0Elt d0Scale(const D0Elt& x, int c)
{
    D0Elt out;
    out.sq.addScaled(x.sq, c);
    out.y.addScaled(x.y, c);
    return out;
}

// x - y with genuine mod-4 arithmetic on the Sq-part.
inline D0Elt d0Sub(const D0Elt& x, const D0Elt& y)
{
    D0Elt out = x;
    out.sq.addScaled(y.sq, 3);
    out.y += y.y;
    return out;
}

}  // namespace steenrod

#endif
