#ifndef STEENROD_MILNOR_HPP
#define STEENROD_MILNOR_HPP

#include "expseq.hpp"
#include "terms.hpp"

#include <functional>
#include <optional>
#include <utility>

namespace steenrod {

// The mod-2 Steenrod algebra A in the Milnor basis {Sq(R)}.
struct AElt {
    Terms<ExpSeq, 2> terms;

    bool isZero() const { return terms.isZero(); }
    friend bool operator==(const AElt&, const AElt&) = default;
    AElt& operator+=(const AElt& o)
    {
        terms += o.terms;
        return *this;
    }
    friend AElt operator+(AElt a, const AElt& b)
    {
        a += b;
        return a;
    }
};

// The dual A_* = F_2[xi_1, xi_2, ...]; terms are xi^R.
struct ADualElt {
    Terms<ExpSeq, 2> terms;
    friend bool operator==(const ADualElt&, const ADualElt&) = default;
};

// Elements of A (x) A.
struct TensorAA {
    Terms<std::pair<ExpSeq, ExpSeq>, 2> terms;

    bool isZero() const { return terms.isZero(); }
    friend bool operator==(const TensorAA&, const TensorAA&) = default;
    TensorAA& operator+=(const TensorAA& o)
    {
        terms += o.terms;
        return *this;
    }
    friend TensorAA operator+(TensorAA a, const TensorAA& b)
    {
        a += b;
        return a;
    }
};

inline AElt sqElt(const ExpSeq& r)
{
    AElt a;
    ExpSeq s = r;
    trimSeq(s);
    a.terms.add(s, 1);
    return a;
}

inline AElt sqSingle(int n)  // Sq^n = Sq((n)); Sq^0 = 1
{
    return sqElt(n > 0 ? ExpSeq{n} : ExpSeq{});
}

inline AElt unitA() { return sqElt({}); }

inline ADualElt xiElt(const ExpSeq& r)
{
    ADualElt p;
    ExpSeq s = r;
    trimSeq(s);
    p.terms.add(s, 1);
    return p;
}

// Q_k = Sq(Delta_{k+1}), k >= 0
inline AElt qElt(int k)
{
    if (k < 0)
        throw Error("q_element: k must be >= 0");
    return sqElt(deltaSeq(k + 1));
}

// P_t^s = Sq(2^s Delta_t), t >= 1, s >= 0
inline AElt pElt(int t, int s)
{
    if (t < 1 || s < 0)
        throw Error("p_element: require t >= 1, s >= 0");
    return sqElt(scaledDelta(1 << s, t));
}

std::optional<int> degreeIfHomogeneous(const AElt& a);

// Kronecker pairing <Sq(R), xi^S> = delta_{R,S}, extended bilinearly.
int pairAP(const AElt& a, const ADualElt& p);

// Contraction cont(p, a), the adjoint of multiplication by p in A_*:
// <cont(p,a), q> = <a, pq>.  On basis elements cont(xi^S, Sq(R)) = Sq(R-S).
AElt contSeq(const ExpSeq& s, const AElt& a);
AElt cont(const ADualElt& p, const AElt& a);

// The Kristensen derivation kappa(a) = cont(xi_1, a).
inline AElt kappa(const AElt& a) { return contSeq(deltaSeq(1), a); }

// Product in A.  Normative implementation: dual pairing against the
// coproduct of A_*, Delta(xi_n) = sum_{i+j=n} xi_i^{2^j} (x) xi_j.
AElt mulA(const AElt& a, const AElt& b);

inline AElt operator*(const AElt& a, const AElt& b) { return mulA(a, b); }

// Independent implementation via Milnor matrices; used as the test oracle.
AElt mulAMatrix(const AElt& a, const AElt& b);

// Enumerates Milnor matrices for the basis product Sq(r)Sq(s); calls
// fn(T, c) with the exact integer diagonal-multinomial coefficient c.
void forEachMilnorMatrix(const ExpSeq& r, const ExpSeq& s,
                         const std::function<void(const ExpSeq&, unsigned long long)>& fn);

// Milnor coproduct Delta(Sq(R)) = sum_{E+F=R} Sq(E) (x) Sq(F).
TensorAA coproductA(const AElt& a);

// <a (x) b, Delta(xi^T)> in F_2 via pruned expansion of the coproduct.
int pairCoproductA(const AElt& a, const AElt& b, const ExpSeq& t);

// Pointwise product on tensors: (x (x) y)(u (x) v) = xu (x) yv.
TensorAA mulTensorAA(const TensorAA& a, const TensorAA& b);

// a . (x (x) y) = sum a' x (x) a'' y  and the corresponding right action.
TensorAA leftActTensor(const AElt& a, const TensorAA& t);
TensorAA rightActTensor(const TensorAA& t, const AElt& a);

// Twist T(x (x) y) = y (x) x.
TensorAA twist(const TensorAA& t);

}  // namespace steenrod

#endif
