#include "isobound/dessins.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace isobound {

namespace {

using Perm = std::vector<int>;  // 0-based image arrays internally

Perm to_internal(const std::vector<int>& one_based) {
    Perm p(one_based.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = one_based[i] - 1;
    return p;
}

std::vector<int> to_public(const Perm& p) {
    std::vector<int> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = p[i] + 1;
    return out;
}

bool is_perm(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Perm compose(const Perm& a, const Perm& b) {  // x -> a(b(x)), b first
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

Perm conjugate(const Perm& z, const Perm& s) {  // z s z^-1
    Perm r(s.size());
    for (size_t i = 0; i < s.size(); ++i) r[z[i]] = z[s[i]];
    return r;
}

int cycle_count(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    int c = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    return c;
}

std::vector<long> cycle_type_desc(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<long> type;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long rank_of(const Perm& p) {
    const int d = static_cast<int>(p.size());
    long r = 0;
    for (int i = 0; i < d; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < d; ++j)
            if (p[j] < p[i]) ++smaller;
        r = r * (d - i) + smaller;
    }
    return r;
}

Perm unrank(long r, int d) {
    std::vector<int> digits(d, 0);
    for (int i = d - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(r % (d - i));
        r /= (d - i);
    }
    std::vector<int> avail(d);
    std::iota(avail.begin(), avail.end(), 0);
    Perm p(d);
    for (int i = 0; i < d; ++i) {
        p[i] = avail[digits[i]];
        avail.erase(avail.begin() + digits[i]);
    }
    return p;
}

// Lexicographically smallest image array among permutations with the given
// cycle type: cycles sorted by ascending length, laid out on consecutive
// points, each cycle mapping i -> i+1 with the last point closing back.
Perm min_arrangement(std::vector<long> lambda) {
    std::sort(lambda.begin(), lambda.end());
    Perm p;
    int start = 0;
    for (long len : lambda) {
        for (long j = 0; j < len; ++j)
            p.push_back(j + 1 < len ? start + static_cast<int>(j) + 1 : start);
        start += static_cast<int>(len);
    }
    return p;
}

// Some conjugator moving s onto the minimal arrangement of its cycle type.
Perm transporter_to_min(const Perm& s) {
    const int d = static_cast<int>(s.size());
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(d, false);
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = s[j]) {
            seen[j] = true;
            cyc.push_back(j);
        }
        cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a[0] < b[0];
              });
    Perm g(d);
    int start = 0;
    for (const auto& cyc : cycles) {
        for (size_t j = 0; j < cyc.size(); ++j)
            g[cyc[j]] = start + static_cast<int>(j);
        start += static_cast<int>(cyc.size());
    }
    return g;
}

std::mutex cent_mutex;

// Full element list of the centralizer, cached per permutation. Only ever
// queried for minimal arrangements, so the cache stays tiny.
std::shared_ptr<const std::vector<Perm>> centralizer_of(const Perm& p) {
    std::lock_guard<std::mutex> lock(cent_mutex);
    static std::map<Perm, std::shared_ptr<const std::vector<Perm>>> cache;
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    const int d = static_cast<int>(p.size());
    auto out = std::make_shared<std::vector<Perm>>();
    const long fact = factorial(d);
    for (long r = 0; r < fact; ++r) {
        Perm z = unrank(r, d);
        if (compose(z, p) == compose(p, z)) out->push_back(std::move(z));
    }
    cache.emplace(p, out);
    return out;
}

long centralizer_order(const std::vector<long>& lambda) {
    std::map<long, long> mult;
    for (long k : lambda) ++mult[k];
    long order = 1;
    for (const auto& [k, m] : mult) {
        for (long i = 0; i < m; ++i) order *= k;
        order *= factorial(static_cast<int>(m));
    }
    return order;
}

bool transitive_pair(const Perm& a, const Perm& b) {
    const int d = static_cast<int>(a.size());
    std::vector<bool> seen(d, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : {a[x], b[x]}) {
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == d;
}

void validate(const Dessin& d) {
    if (d.degree < 1) throw std::invalid_argument("Dessin: degree < 1");
    if (static_cast<int>(d.sigma0.size()) != d.degree ||
        static_cast<int>(d.sigma1.size()) != d.degree)
        throw std::invalid_argument("Dessin: image array size mismatch");
    if (!is_perm(to_internal(d.sigma0)) || !is_perm(to_internal(d.sigma1)))
        throw std::invalid_argument("Dessin: not permutations of 1..d");
}

int genus_from(const Perm& s0, const Perm& s1) {
    const int d = static_cast<int>(s0.size());
    const int total =
        cycle_count(s0) + cycle_count(s1) + cycle_count(compose(s0, s1));
    const int twice = 2 + d - total;  // = 2g
    if (twice < 0 || twice % 2 != 0)
        throw std::logic_error("genus_from: Euler relation violated");
    return twice / 2;
}

}  // namespace

Dessin Dessin::make(int degree, std::vector<int> s0, std::vector<int> s1) {
    Dessin d{degree, std::move(s0), std::move(s1)};
    validate(d);
    return d;
}

std::vector<int> Dessin::sigma_inf() const {
    validate(*this);
    return to_public(
        inverse(compose(to_internal(sigma0), to_internal(sigma1))));
}

bool is_transitive(const Dessin& d) {
    validate(d);
    return transitive_pair(to_internal(d.sigma0), to_internal(d.sigma1));
}

int genus_of(const Dessin& d) {
    if (!is_transitive(d))
        throw std::domain_error("genus_of: dessin is not connected");
    return genus_from(to_internal(d.sigma0), to_internal(d.sigma1));
}

Passport passport_of(const Dessin& d) {
    validate(d);
    const Perm s0 = to_internal(d.sigma0);
    const Perm s1 = to_internal(d.sigma1);
    return Passport{cycle_type_desc(s0), cycle_type_desc(s1),
                    cycle_type_desc(compose(s0, s1))};
}

Dessin canonicalize(const Dessin& d) {
    validate(d);
    const Perm s0 = to_internal(d.sigma0);
    const Perm s1 = to_internal(d.sigma1);
    const Perm g = transporter_to_min(s0);
    const Perm p = conjugate(g, s0);
    Perm moved = conjugate(g, s1);
    // Every pair relabeling that minimizes the sigma0 component maps sigma0
    // onto p, and two such relabelings differ by an element of C(p); so the
    // canonical sigma1 is the C(p)-orbit minimum.
    Perm best = moved;
    for (const Perm& z : *centralizer_of(p)) {
        Perm cand = conjugate(z, moved);
        if (cand < best) best = std::move(cand);
    }
    return Dessin{d.degree, to_public(p), to_public(best)};
}

long automorphism_count(const Dessin& d) {
    validate(d);
    const Perm s0 = to_internal(d.sigma0);
    const Perm s1 = to_internal(d.sigma1);
    const Perm g = transporter_to_min(s0);
    const Perm p = conjugate(g, s0);
    const Perm moved = conjugate(g, s1);
    long count = 0;
    for (const Perm& z : *centralizer_of(p))
        if (conjugate(z, moved) == moved) ++count;
    return count;
}

namespace {

std::vector<std::vector<long>> partitions_of(int n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    // descending parts
    auto rec = [&](auto&& self, int rest, long max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long part = std::min<long>(max_part, rest); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - static_cast<int>(part), part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<CensusEntry> entries_for_type(int degree,
                                          const std::vector<long>& lambda) {
    const Perm p = min_arrangement(lambda);
    const auto cent = centralizer_of(p);
    if (static_cast<long>(cent->size()) != centralizer_order(lambda))
        throw std::logic_error("entries_for_type: centralizer order mismatch");
    const long fact = factorial(degree);
    std::vector<bool> visited(fact, false);
    std::vector<CensusEntry> out;
    for (long r = 0; r < fact; ++r) {
        if (visited[r]) continue;
        const Perm s1 = unrank(r, degree);
        long orbit_size = 0;
        Perm best = s1;
        for (const Perm& z : *cent) {
            Perm cand = conjugate(z, s1);
            if (cand < best) best = cand;
            const long q = rank_of(cand);
            if (!visited[q]) {
                visited[q] = true;
                ++orbit_size;
            }
        }
        if (!transitive_pair(p, s1)) continue;
        if (cent->size() % orbit_size != 0)
            throw std::logic_error("entries_for_type: orbit size does not divide");
        CensusEntry e;
        e.dessin = Dessin{degree, to_public(p), to_public(best)};
        e.genus = genus_from(p, best);
        e.passport = Passport{cycle_type_desc(p), cycle_type_desc(best),
                              cycle_type_desc(compose(p, best))};
        e.aut = static_cast<long>(cent->size()) / orbit_size;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

Census enumerate_dessins(int degree, int jobs, int cap) {
    if (degree < 1) throw std::invalid_argument("enumerate_dessins: degree < 1");
    if (cap > kMaxDegree)
        throw std::invalid_argument("enumerate_dessins: cap exceeds hard ceiling");
    if (degree > cap)
        throw std::invalid_argument(
            "enumerate_dessins: degree exceeds cap; raise the cap explicitly");
    if (jobs < 1) throw std::invalid_argument("enumerate_dessins: jobs < 1");

    const auto types = partitions_of(degree);
    std::vector<std::vector<CensusEntry>> per_type(types.size());
    const int workers = std::min<int>(jobs, static_cast<int>(types.size()));
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (size_t i = w; i < types.size(); i += workers)
                    per_type[i] = entries_for_type(degree, types[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    Census census;
    census.degree = degree;
    census.cap = cap;
    for (auto& chunk : per_type)
        for (auto& e : chunk) census.entries.push_back(std::move(e));
    std::sort(census.entries.begin(), census.entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) {
                  if (a.dessin.sigma0 != b.dessin.sigma0)
                      return a.dessin.sigma0 < b.dessin.sigma0;
                  return a.dessin.sigma1 < b.dessin.sigma1;
              });
    return census;
}

bool census_euler_check(const Census& c) {
    for (const auto& e : c.entries) {
        const Perm s0 = to_internal(e.dessin.sigma0);
        const Perm s1 = to_internal(e.dessin.sigma1);
        const int total =
            cycle_count(s0) + cycle_count(s1) + cycle_count(compose(s0, s1));
        if (2 - 2 * e.genus != total - e.dessin.degree) return false;
    }
    return true;
}

mpz_class transitive_pair_count(int degree) {
    if (degree < 1)
        throw std::invalid_argument("transitive_pair_count: degree < 1");
    std::vector<mpz_class> t(degree + 1);
    std::vector<mpz_class> fact(degree + 1);
    fact[0] = 1;
    for (int i = 1; i <= degree; ++i) fact[i] = fact[i - 1] * i;
    for (int n = 1; n <= degree; ++n) {
        mpz_class total = fact[n] * fact[n];
        for (int k = 1; k < n; ++k) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), n - 1, k - 1);
            total -= binom * t[k] * fact[n - k] * fact[n - k];
        }
        t[n] = total;
    }
    return t[degree];
}

}  // namespace isobound
