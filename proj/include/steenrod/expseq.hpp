#ifndef STEENROD_EXPSEQ_HPP
#define STEENROD_EXPSEQ_HPP

#include <optional>
#include <string>
#include <vector>

namespace steenrod {

// Exponent sequence R = (r_1, r_2, ...) indexing the Milnor basis element
// Sq(R) resp. the dual monomial xi^R.  Canonical form: no trailing zeros.
using ExpSeq = std::vector<int>;

inline void trimSeq(ExpSeq& r)
{
    while (!r.empty() && r.back() == 0)
        r.pop_back();
}

inline ExpSeq makeSeq(std::initializer_list<int> entries)
{
    ExpSeq r(entries);
    trimSeq(r);
    return r;
}

// |Sq(R)| = |xi^R| = sum r_i (2^i - 1)
inline int degreeOf(const ExpSeq& r)
{
    int d = 0;
    for (size_t i = 0; i < r.size(); ++i)
        d += r[i] * ((1 << (i + 1)) - 1);
    return d;
}

// Delta_k: the unit sequence with xi^{Delta_k} = xi_k; Delta_0 = ().
inline ExpSeq deltaSeq(int k)
{
    if (k <= 0)
        return {};
    ExpSeq r(static_cast<size_t>(k), 0);
    r[static_cast<size_t>(k) - 1] = 1;
    return r;
}

inline ExpSeq scaledDelta(int c, int k)
{
    if (k <= 0 || c == 0)
        return {};
    ExpSeq r(static_cast<size_t>(k), 0);
    r[static_cast<size_t>(k) - 1] = c;
    return r;
}

inline ExpSeq seqAdd(const ExpSeq& a, const ExpSeq& b)
{
    ExpSeq r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trimSeq(r);
    return r;
}

// a - b componentwise, or nullopt if any entry would be negative.
inline std::optional<ExpSeq> seqSub(const ExpSeq& a, const ExpSeq& b)
{
    if (b.size() > a.size()) {
        for (size_t i = a.size(); i < b.size(); ++i)
            if (b[i] != 0)
                return std::nullopt;
    }
    ExpSeq r = a;
    for (size_t i = 0; i < b.size() && i < a.size(); ++i) {
        r[i] -= b[i];
        if (r[i] < 0)
            return std::nullopt;
    }
    trimSeq(r);
    return r;
}

// componentwise a <= b
inline bool seqLeq(const ExpSeq& a, const ExpSeq& b)
{
    for (size_t i = 0; i < a.size(); ++i) {
        int bi = i < b.size() ? b[i] : 0;
        if (a[i] > bi)
            return false;
    }
    return true;
}

inline std::string seqStr(const ExpSeq& r)
{
    std::string s;
    for (size_t i = 0; i < r.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(r[i]);
    }
    return s;
}

// Enumerate all exponent sequences of the given degree (bounded integer
// compositions over the weights 2^i - 1).
template <typename Fn>
void forEachExpSeq(int degree, Fn&& fn)
{
    ExpSeq cur;
    int maxIdx = 0;
    while ((1 << (maxIdx + 2)) - 1 <= degree)
        ++maxIdx;
    ++maxIdx;  // 1-based largest usable index
    auto rec = [&](auto&& self, int idx, int rem) -> void {
        if (idx == 0) {
            if (rem == 0) {
                ExpSeq r = cur;
                std::reverse(r.begin(), r.end());
                trimSeq(r);
                fn(r);
            }
            return;
        }
        if (idx == 1) {
            cur.push_back(rem);
            self(self, 0, 0);
            cur.pop_back();
            return;
        }
        int w = (1 << idx) - 1;
        for (int e = rem / w; e >= 0; --e) {
            cur.push_back(e);
            self(self, idx - 1, rem - e * w);
            cur.pop_back();
        }
    };
    if (degree < 0)
        return;
    rec(rec, maxIdx, degree);
}

}  // namespace steenrod

#endif
