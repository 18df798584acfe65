#pragma once

// Slow reference implementations for small permutation pairs, written
// independently of the library: plain array scans, full S_d enumeration for
// canonical forms, no cycle-type factoring. Only usable for d <= 6 or so.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace naive {

using Perm = std::vector<int>;  // 1-based images, perm[i-1] = image of i

inline std::vector<Perm> all_perms(int d) {
    Perm id(d);
    std::iota(id.begin(), id.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(id);
    } while (std::next_permutation(id.begin(), id.end()));
    return out;
}

inline Perm compose(const Perm& a, const Perm& b) {  // (a . b)(x) = a(b(x))
    Perm r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i] - 1];
    return r;
}

inline Perm inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i] - 1] = static_cast<int>(i) + 1;
    return r;
}

inline Perm conjugate(const Perm& g, const Perm& a) {  // g a g^-1
    return compose(compose(g, a), inverse(g));
}

inline bool transitive(const Perm& a, const Perm& b) {
    const int d = static_cast<int>(a.size());
    std::vector<bool> seen(d, false);
    std::vector<int> todo = {1};
    seen[0] = true;
    int count = 1;
    while (!todo.empty()) {
        const int x = todo.back();
        todo.pop_back();
        for (const Perm* p : {&a, &b}) {
            const int y = (*p)[x - 1];
            if (!seen[y - 1]) {
                seen[y - 1] = true;
                ++count;
                todo.push_back(y);
            }
        }
    }
    return count == d;
}

inline int cycle_count(const Perm& a) {
    const int d = static_cast<int>(a.size());
    std::vector<bool> seen(d, false);
    int c = 0;
    for (int i = 1; i <= d; ++i) {
        if (seen[i - 1]) continue;
        ++c;
        for (int j = i; !seen[j - 1]; j = a[j - 1]) seen[j - 1] = true;
    }
    return c;
}

inline std::vector<long> cycle_type(const Perm& a) {
    const int d = static_cast<int>(a.size());
    std::vector<bool> seen(d, false);
    std::vector<long> type;
    for (int i = 1; i <= d; ++i) {
        if (seen[i - 1]) continue;
        long len = 0;
        for (int j = i; !seen[j - 1]; j = a[j - 1]) {
            seen[j - 1] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

// Canonical form of a pair under simultaneous conjugation: minimum of
// (g a g^-1, g b g^-1) over all g in S_d, pairs compared lexicographically.
inline std::pair<Perm, Perm> canonical_pair(const Perm& a, const Perm& b,
                                            const std::vector<Perm>& sd) {
    std::pair<Perm, Perm> best{conjugate(sd[0], a), conjugate(sd[0], b)};
    for (size_t i = 1; i < sd.size(); ++i) {
        std::pair<Perm, Perm> cand{conjugate(sd[i], a), conjugate(sd[i], b)};
        if (cand < best) best = cand;
    }
    return best;
}

// Centralizer order of the pair by direct count.
inline long pair_centralizer_order(const Perm& a, const Perm& b,
                                   const std::vector<Perm>& sd) {
    long n = 0;
    for (const Perm& g : sd) {
        if (conjugate(g, a) == a && conjugate(g, b) == b) ++n;
    }
    return n;
}

// All transitive pairs up to simultaneous conjugacy, as a sorted set of
// canonical pairs. O((d!)^3); fine for d <= 5.
inline std::set<std::pair<Perm, Perm>> classes(int d) {
    const std::vector<Perm> sd = all_perms(d);
    std::set<std::pair<Perm, Perm>> out;
    for (const Perm& a : sd) {
        for (const Perm& b : sd) {
            if (!transitive(a, b)) continue;
            out.insert(canonical_pair(a, b, sd));
        }
    }
    return out;
}

}  // namespace naive
