#ifndef STEENROD_TERMS_HPP
#define STEENROD_TERMS_HPP

#include <map>
#include <stdexcept>

namespace steenrod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sparse linear combination over Z/M (M = 2 or 4), keyed by basis symbols.
// Zero coefficients are never stored.
template <typename Key, int M>
class Terms {
public:
    using Map = std::map<Key, int>;

    Terms() = default;

    void add(const Key& k, int c)
    {
        c %= M;
        if (c < 0)
            c += M;
        if (c == 0)
            return;
        auto [it, inserted] = t_.try_emplace(k, c);
        if (!inserted) {
            it->second = (it->second + c) % M;
            if (it->second == 0)
                t_.erase(it);
        }
    }

    int coef(const Key& k) const
    {
        auto it = t_.find(k);
        return it == t_.end() ? 0 : it->second;
    }

    bool isZero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    void clear() { t_.clear(); }

    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }

    Terms& operator+=(const Terms& o)
    {
        for (auto& [k, c] : o)
            add(k, c);
        return *this;
    }

    void addScaled(const Terms& o, int s)
    {
        for (auto& [k, c] : o)
            add(k, c * s);
    }

    friend bool operator==(const Terms&, const Terms&) = default;
    friend auto operator<=>(const Terms& a, const Terms& b) { return a.t_ <=> b.t_; }

private:
    Map t_;
};

}  // namespace steenrod

#endif
