#include "steenrod/milnor.hpp"

#include <algorithm>
#include <vector>

namespace steenrod {

std::optional<int> degreeIfHomogeneous(const AElt& a)
{
    std::optional<int> d;
    for (auto& [r, c] : a.terms) {
        int dr = degreeOf(r);
        if (!d)
            d = dr;
        else if (*d != dr)
            return std::nullopt;
    }
    return d;
}

int pairAP(const AElt& a, const ADualElt& p)
{
    int v = 0;
    for (auto& [r, c] : a.terms)
        v ^= c & p.terms.coef(r);
    return v & 1;
}

AElt contSeq(const ExpSeq& s, const AElt& a)
{
    AElt out;
    for (auto& [r, c] : a.terms)
        if (auto d = seqSub(r, s))
            out.terms.add(*d, c);
    return out;
}

AElt cont(const ADualElt& p, const AElt& a)
{
    AElt out;
    for (auto& [s, c] : p.terms)
        out += contSeq(s, a);
    return out;
}

namespace {

    using Pair = std::pair<ExpSeq, ExpSeq>;
    using PairPoly = Terms<Pair, 2>;

    struct Prune {
        const std::vector<ExpSeq>* left;
        const std::vector<ExpSeq>* right;

        bool ok(const Pair& p) const
        {
            auto fits = [](const ExpSeq& m, const std::vector<ExpSeq>& targets) {
                for (auto& t : targets)
                    if (seqLeq(m, t))
                        return true;
                return false;
            };
            return fits(p.first, *left) && fits(p.second, *right);
        }
    };

    PairPoly mulPairPoly(const PairPoly& a, const PairPoly& b, const Prune& pr)
    {
        PairPoly out;
        for (auto& [pa, ca] : a)
            for (auto& [pb, cb] : b) {
                Pair p{seqAdd(pa.first, pb.first), seqAdd(pa.second, pb.second)};
                if (pr.ok(p))
                    out.add(p, ca * cb);
            }
        return out;
    }

    PairPoly onePairPoly()
    {
        PairPoly p;
        p.add({{}, {}}, 1);
        return p;
    }

    // Delta(xi_n) = sum_{i+j=n} xi_i^{2^j} (x) xi_j over F_2.
    PairPoly deltaXiA(int n)
    {
        PairPoly p;
        for (int j = 0; j <= n; ++j)
            p.add({scaledDelta(1 << j, n - j), deltaSeq(j)}, 1);
        return p;
    }

    PairPoly powPairPoly(const PairPoly& base, int e, const Prune& pr)
    {
        PairPoly acc = onePairPoly();
        PairPoly sq = base;
        while (e > 0) {
            if (e & 1)
                acc = mulPairPoly(acc, sq, pr);
            e >>= 1;
            if (e)
                sq = mulPairPoly(sq, sq, pr);
        }
        return acc;
    }

}  // namespace

int pairCoproductA(const AElt& a, const AElt& b, const ExpSeq& t)
{
    std::vector<ExpSeq> la, lb;
    for (auto& [r, c] : a.terms)
        la.push_back(r);
    for (auto& [r, c] : b.terms)
        lb.push_back(r);
    Prune pr{&la, &lb};

    PairPoly acc = onePairPoly();
    for (int i = static_cast<int>(t.size()); i >= 1 && !acc.isZero(); --i) {
        if (t[static_cast<size_t>(i) - 1] == 0)
            continue;
        acc = mulPairPoly(acc, powPairPoly(deltaXiA(i), t[static_cast<size_t>(i) - 1], pr), pr);
    }
    int v = 0;
    for (auto& [p, c] : acc)
        v ^= c & a.terms.coef(p.first) & b.terms.coef(p.second);
    return v & 1;
}

AElt mulA(const AElt& a, const AElt& b)
{
    AElt out;
    if (a.isZero() || b.isZero())
        return out;
    std::vector<int> degrees;
    for (auto& [r, c] : a.terms)
        for (auto& [s, d] : b.terms)
            degrees.push_back(degreeOf(r) + degreeOf(s));
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int d : degrees)
        forEachExpSeq(d, [&](const ExpSeq& t) {
            if (pairCoproductA(a, b, t))
                out.terms.add(t, 1);
        });
    return out;
}

namespace {

    unsigned long long binomialExact(int n, int k)
    {
        if (k < 0 || k > n)
            return 0;
        if (n > 62)
            throw Error("binomial overflow guard: oracle restricted to small degrees");
        unsigned long long r = 1;
        k = std::min(k, n - k);
        for (int i = 1; i <= k; ++i)
            r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
        return r;
    }

    unsigned long long multinomialExact(const std::vector<int>& parts)
    {
        int total = 0;
        unsigned long long r = 1;
        for (int p : parts) {
            total += p;
            r *= binomialExact(total, p);
        }
        return r;
    }

}  // namespace

void forEachMilnorMatrix(const ExpSeq& r, const ExpSeq& s,
                         const std::function<void(const ExpSeq&, unsigned long long)>& fn)
{
    int nr = static_cast<int>(r.size());
    int ns = static_cast<int>(s.size());
    // x[i][j], 1 <= i <= nr, 1 <= j <= ns ; borders derived.
    std::vector<std::vector<int>> x(static_cast<size_t>(nr) + 1, std::vector<int>(static_cast<size_t>(ns) + 1, 0));
    std::vector<int> rowRem(static_cast<size_t>(nr) + 1, 0);
    std::vector<int> colSum(static_cast<size_t>(ns) + 1, 0);
    for (int i = 1; i <= nr; ++i)
        rowRem[static_cast<size_t>(i)] = r[static_cast<size_t>(i) - 1];

    auto emit = [&]() {
        ExpSeq t(static_cast<size_t>(nr + ns), 0);
        std::vector<int> parts;
        unsigned long long coef = 1;
        for (int n = 1; n <= nr + ns; ++n) {
            parts.clear();
            int sum = 0;
            for (int i = std::max(0, n - ns); i <= std::min(n, nr); ++i) {
                int j = n - i;
                int e;
                if (i == 0)
                    e = s[static_cast<size_t>(j) - 1] - colSum[static_cast<size_t>(j)];
                else if (j == 0)
                    e = rowRem[static_cast<size_t>(i)];
                else
                    e = x[static_cast<size_t>(i)][static_cast<size_t>(j)];
                parts.push_back(e);
                sum += e;
            }
            coef *= multinomialExact(parts);
            if (coef == 0)
                return;
            t[static_cast<size_t>(n) - 1] = sum;
        }
        trimSeq(t);
        fn(t, coef);
    };

    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i > nr) {
            emit();
            return;
        }
        int ni = (j == ns) ? i + 1 : i;
        int nj = (j == ns) ? 1 : j + 1;
        int maxE = rowRem[static_cast<size_t>(i)] >> j;
        maxE = std::min(maxE, s[static_cast<size_t>(j) - 1] - colSum[static_cast<size_t>(j)]);
        for (int e = 0; e <= maxE; ++e) {
            if (e) {
                rowRem[static_cast<size_t>(i)] -= 1 << j;
                colSum[static_cast<size_t>(j)] += 1;
                x[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
            }
            self(self, ni, nj);
        }
        rowRem[static_cast<size_t>(i)] += (x[static_cast<size_t>(i)][static_cast<size_t>(j)]) << j;
        colSum[static_cast<size_t>(j)] -= x[static_cast<size_t>(i)][static_cast<size_t>(j)];
        x[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
    };

    if (ns == 0 || nr == 0) {
        emit();
        return;
    }
    rec(rec, 1, 1);
}

AElt mulAMatrix(const AElt& a, const AElt& b)
{
    AElt out;
    for (auto& [r, cr] : a.terms)
        for (auto& [s, cs] : b.terms)
            forEachMilnorMatrix(r, s, [&](const ExpSeq& t, unsigned long long c) {
                out.terms.add(t, static_cast<int>(c & 1));
            });
    return out;
}

TensorAA coproductA(const AElt& a)
{
    TensorAA out;
    for (auto& [r, c] : a.terms) {
        // all componentwise splits E + F = R
        ExpSeq e(r.size(), 0);
        auto rec = [&](auto&& self, size_t idx) -> void {
            if (idx == r.size()) {
                ExpSeq left = e, right(r.size());
                for (size_t i = 0; i < r.size(); ++i)
                    right[i] = r[i] - e[i];
                trimSeq(left);
                trimSeq(right);
                out.terms.add({left, right}, c);
                return;
            }
            for (int v = 0; v <= r[idx]; ++v) {
                e[idx] = v;
                self(self, idx + 1);
            }
            e[idx] = 0;
        };
        rec(rec, 0);
    }
    return out;
}

TensorAA mulTensorAA(const TensorAA& a, const TensorAA& b)
{
    TensorAA out;
    for (auto& [pa, ca] : a.terms)
        for (auto& [pb, cb] : b.terms) {
            AElt l = sqElt(pa.first) * sqElt(pb.first);
            AElt r = sqElt(pa.second) * sqElt(pb.second);
            for (auto& [lr, lc] : l.terms)
                for (auto& [rr, rc] : r.terms)
                    out.terms.add({lr, rr}, ca * cb * lc * rc);
        }
    return out;
}

TensorAA leftActTensor(const AElt& a, const TensorAA& t)
{
    TensorAA da = coproductA(a);
    return mulTensorAA(da, t);
}

TensorAA rightActTensor(const TensorAA& t, const AElt& a)
{
    TensorAA da = coproductA(a);
    return mulTensorAA(t, da);
}

TensorAA twist(const TensorAA& t)
{
    TensorAA out;
    for (auto& [p, c] : t.terms)
        out.terms.add({p.second, p.first}, c);
    return out;
}

}  // namespace steenrod
