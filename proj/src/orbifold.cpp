#include "isobound/orbifold.hpp"

#include <algorithm>
#include <stdexcept>

namespace isobound {

OrbifoldSignature::OrbifoldSignature(int g, int r, std::vector<long> cone_orders)
    : genus(g), punctures(r), cones(std::move(cone_orders)) {
    if (g < 0 || r < 0)
        throw std::invalid_argument("OrbifoldSignature: negative genus or punctures");
    for (long i : cones)
        if (i < 2) throw std::invalid_argument("OrbifoldSignature: cone order < 2");
    std::sort(cones.begin(), cones.end());
}

Rational curve_euler(const CurveSignature& s) {
    if (s.genus < 0 || s.punctures < 0)
        throw std::invalid_argument("CurveSignature: negative genus or punctures");
    return Rational(2 - 2L * s.genus - s.punctures);
}

Rational orbifold_euler(const OrbifoldSignature& s) {
    Rational e(2 - 2L * s.genus - s.punctures);
    for (long i : s.cones) e -= Rational(i - 1, i);
    return e;
}

bool is_hyperbolic(const CurveSignature& s) { return curve_euler(s).sign() < 0; }

bool is_hyperbolic(const OrbifoldSignature& s) {
    return orbifold_euler(s).sign() < 0;
}

Rational etale_cover_euler(const Rational& base_euler, long degree) {
    if (degree < 1)
        throw std::invalid_argument("etale_cover_euler: degree < 1");
    return Rational(degree) * base_euler;
}

bool riemann_hurwitz_cover_check(const CurveSignature& top, long degree,
                                 const OrbifoldSignature& base) {
    if (degree < 1)
        throw std::invalid_argument("riemann_hurwitz_cover_check: degree < 1");
    if (!is_hyperbolic(top) || !is_hyperbolic(base)) return false;
    return curve_euler(top).abs() == Rational(degree) * orbifold_euler(base).abs();
}

namespace {

// Branch and bound over nondecreasing cone tuples (i_1, ..., i_c) for a fixed
// stratum. |euler| = t + c - S with S = sum 1/i, so minimizing |euler| means
// maximizing S subject to hyperbolicity S < U := t + c. Orders are
// nondecreasing, so a prefix with sum S_j and floor order m can reach at most
// S_j + (remaining)/m; prefixes that cannot beat the incumbent are cut.
struct ConeSearch {
    int c = 0;
    Rational U = Rational(0);
    Rational best = Rational(-1);
    std::vector<std::vector<long>> tuples = {};
    std::vector<long> cur = {};
    long nodes = 0;

    void run() {
        if (U.sign() <= 0) return;  // no hyperbolic tuples at all
        cur.assign(c, 0);
        dfs(0, 2, Rational(0));
    }

    void dfs(int depth, long min_order, const Rational& sum) {
        ++nodes;
        if (depth == c - 1) {
            // Last order: 1/i is strictly decreasing, so the unique candidate
            // is the smallest feasible i, i.e. the first with sum + 1/i < U.
            const Rational gap = U - sum;
            if (gap.sign() <= 0) return;
            mpz_class i0 = gap.inverse().floor() + 1;
            if (!i0.fits_slong_p())
                throw std::logic_error("ConeSearch: cone order overflow");
            long i = std::max(i0.get_si(), min_order);
            record(sum + Rational(1, i), i);
            return;
        }
        for (long i = min_order;; ++i) {
            const Rational term(1, i);
            const Rational next = sum + term;
            if (next >= U) continue;  // infeasible so far; larger i may fit
            // all remaining orders are >= i
            const Rational potential = next + Rational(c - depth - 1, i);
            if (best.sign() >= 0 && potential < best) break;
            cur[depth] = i;
            dfs(depth + 1, i, next);
        }
    }

    void record(const Rational& s, long last) {
        if (best.sign() >= 0 && s < best) return;
        if (s > best) {
            best = s;
            tuples.clear();
        }
        std::vector<long> tuple(cur.begin(), cur.begin() + (c - 1));
        tuple.push_back(last);
        tuples.push_back(std::move(tuple));
    }
};

std::vector<OrbifoldSignature> realize(int t, const std::vector<long>& cones) {
    // all (g, r) with 2g - 2 + r = t
    std::vector<OrbifoldSignature> out;
    for (int g = 0; 2 * g <= t + 2; ++g) {
        const int r = t + 2 - 2 * g;
        out.emplace_back(g, r, cones);
    }
    return out;
}

Stratum searched_stratum(int t, int c) {
    ConeSearch search{.c = c, .U = Rational(t + c)};
    search.run();
    Stratum s;
    s.key = "t=" + std::to_string(t) + ",c=" + std::to_string(c);
    s.kind = "searched";
    s.bound = Rational(t + c) - search.best;
    s.nodes = search.nodes;
    for (const auto& tuple : search.tuples)
        for (auto& sig : realize(t, tuple)) s.witnesses.push_back(sig);
    s.note = "exhaustive over nondecreasing cone tuples";
    return s;
}

Stratum analytic_stratum(std::string key, Rational bound, std::string note) {
    Stratum s;
    s.key = std::move(key);
    s.kind = "analytic";
    s.bound = std::move(bound);
    s.note = std::move(note);
    return s;
}

Stratum empty_stratum(std::string key, std::string note) {
    Stratum s;
    s.key = std::move(key);
    s.kind = "empty";
    s.bound = Rational(0);
    s.note = std::move(note);
    return s;
}

}  // namespace

MinimumCertificate min_abs_euler_hyperbolic() {
    MinimumCertificate cert;

    // Case split on t = 2g - 2 + r and the cone count c. Hyperbolic members
    // need t + c - S > 0 with S = sum 1/i <= c/2, so t >= 1 gives
    // |euler| >= t >= 1 and each extra cone beyond the searched window adds
    // at least 1/2.
    cert.trace.push_back(empty_stratum(
        "t=-2,c<=2", "|euler| = c - 2 - S <= 0: no hyperbolic members"));
    cert.trace.push_back(searched_stratum(-2, 3));
    cert.trace.push_back(searched_stratum(-2, 4));
    cert.trace.push_back(analytic_stratum(
        "t=-2,c>=5", Rational(1, 2),
        "S <= c/2 gives |euler| >= c/2 - 2 >= 1/2"));
    cert.trace.push_back(empty_stratum(
        "t=-1,c<=1", "|euler| = c - 1 - S <= 0: no hyperbolic members"));
    cert.trace.push_back(searched_stratum(-1, 2));
    cert.trace.push_back(analytic_stratum(
        "t=-1,c>=3", Rational(1, 2),
        "S <= c/2 gives |euler| >= c/2 - 1 >= 1/2"));
    cert.trace.push_back(empty_stratum(
        "t=0,c=0", "euler = 0: parabolic, not hyperbolic"));
    cert.trace.push_back(searched_stratum(0, 1));
    cert.trace.push_back(analytic_stratum(
        "t=0,c>=2", Rational(1),
        "S <= c/2 gives |euler| >= c/2 >= 1"));
    cert.trace.push_back(analytic_stratum(
        "t>=1", Rational(1), "|euler| = t + c - S >= t >= 1"));

    bool have = false;
    for (const auto& s : cert.trace) {
        if (s.kind != "searched") continue;
        if (!have || s.bound < cert.minimum) {
            cert.minimum = s.bound;
            have = true;
        }
    }
    for (const auto& s : cert.trace) {
        if (s.kind == "searched" && s.bound == cert.minimum)
            for (const auto& w : s.witnesses) cert.witnesses.push_back(w);
        if (s.kind == "analytic" && s.bound < cert.minimum)
            throw std::logic_error("min_abs_euler_hyperbolic: analytic stratum below minimum");
    }
    return cert;
}

}  // namespace isobound
