#include "rforge/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include "rforge/errors.hpp"
#include "rforge/solve.hpp"

namespace rforge {

uint64_t binomial_exact(int a, int b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    uint64_t result = 1;
    for (int i = 1; i <= b; ++i) {
        // multiply by (a - b + i) / i; the intermediate product stays integral
        uint64_t factor = uint64_t(a - b + i);
        if (result > ~uint64_t(0) / factor)
            throw SizeLimitExceeded("binomial_exact: C(" + std::to_string(a) + "," +
                                    std::to_string(b) + ") exceeds 64 bits");
        result = result * factor / uint64_t(i);
    }
    return result;
}

double log_binomial(int a, int b) {
    if (b < 0 || b > a) throw DomainError("log_binomial: b outside [0, a]");
    return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
}

LowerBoundReport lower_bound_l31(int m, double p, int n, double delta) {
    if (m < 2 || n < 3) throw DomainError("lower_bound_l31: need m >= 2, n >= 3");
    if (p < 0.0 || p > 1.0) throw DomainError("lower_bound_l31: p outside [0,1]");
    if (!(delta > 0.0) || delta > 1.0 / 6.0)
        throw DomainError("lower_bound_l31: delta outside (0, 1/6]");
    LowerBoundReport rep;
    // log(1 - p^3) through log1p keeps the near-1 regime accurate
    rep.branch_chromatic = LogValue::from_log(-double(n) * std::log1p(-p * p * p));
    rep.branch_density =
        LogValue::from_log(std::log(delta) + std::log(double(m)) - std::log(2.0) -
                           1.0 - 2.0 * std::log(double(n)));
    rep.m_branch_min = LogValue::min(rep.branch_chromatic, rep.branch_density);
    rep.value = LogValue::from_double(0.5) * rep.m_branch_min.pow(delta * n / 2.0);
    return rep;
}

AppendixReport appendix_eval(int s, int n) {
    if (s < 14 || n < 2) throw DomainError("appendix_eval: need s >= 14, n >= 2");
    AppendixReport rep;
    rep.log_m = (2.0 / 13.0) * log_binomial(n + s, s);
    rep.m_value = LogValue::from_log(rep.log_m);
    double log_p = -2.0 / (s - 1.0) * rep.log_m;
    rep.p = std::exp(log_p);
    rep.p_in_unit = rep.p > 0.0 && rep.p < 1.0;
    rep.one_minus_p3 = -std::expm1(3.0 * log_p);
    rep.branch_chromatic = LogValue::from_log(-3.0 * n * std::log(rep.one_minus_p3));
    rep.branch_density = LogValue::from_log(rep.log_m - std::log(486.0) - 1.0 -
                                            2.0 * std::log(double(n)));
    rep.min_branch = LogValue::min(rep.branch_chromatic, rep.branch_density);
    rep.s_le_10n = s <= 10 * n;
    rep.log_bound_6_over_s1 = 6.0 * rep.log_m / (s - 1.0);
    // 1 - x <= -log x on (0,1], so this holds for every valid p
    rep.one_minus_p3_bounded = rep.one_minus_p3 <= rep.log_bound_6_over_s1 + 1e-15;
    return rep;
}

LogValue blowup_bound(int h, int t, LogValue r_hg) {
    if (h < 3 || t < 1) throw DomainError("blowup_bound: need h >= 3, t >= 1");
    return LogValue::from_double(double(t)) *
           LogValue::from_log(h * std::log(2.0)) * r_hg.pow(h - 1.0);
}

LogValue replace_bound(int h, LogValue r_fg, LogValue r_hg) {
    if (h < 3) throw DomainError("replace_bound: need h >= 3");
    return r_fg * LogValue::from_log(h * std::log(2.0)) * r_hg.pow(h - 1.0);
}

uint64_t link_vs_link_bound(int s, int n) {
    if (s < 2 || n < 2) throw DomainError("link_vs_link_bound: need s, n >= 2");
    return binomial_exact(s + n - 2, s - 1) + 1;
}

LogValue blowup_link_bound(int s, int n, int m_blow) {
    if (s < 2 || n < 1 || m_blow < 1)
        throw DomainError("blowup_link_bound: need s >= 2, n >= 1, m_blow >= 1");
    LogValue binom_plus_one =
        LogValue::from_log(log_binomial(s + n - 2, s - 1)) + LogValue::one();
    return LogValue::from_double(double(m_blow)) *
           LogValue::from_log((n + 1) * std::log(2.0)) * binom_plus_one.pow(double(n));
}

LogValue indep_edge_bound(int h, int n, LogValue r_host) {
    if (h < 3 || n < 1) throw DomainError("indep_edge_bound: need h >= 3, n >= 1");
    return LogValue::from_double(3.0 * n) * r_host.pow(double(h));
}

BetaConstants e_recursion_beta() {
    BetaConstants c;
    c.alpha = std::sqrt(3.0) / 2.0 - 0.5;
    double a = c.alpha;
    c.beta = a * (1.0 - a) * (1.0 - a) / (2.0 * (1.0 - a * a * a));
    c.six_beta = 6.0 * c.beta;
    c.residual = std::fabs(c.beta - (c.beta * a * a * a + a * (1.0 - a) * (1.0 - a) / 2.0));
    return c;
}

RecursionTrend e_recursion_trend(int s) {
    if (s < 3 || s > 100000) throw DomainError("e_recursion_trend: s outside [3, 1e5]");
    double alpha = e_recursion_beta().alpha;
    std::vector<uint64_t> e(size_t(s) + 1, 0);
    for (int k = 3; k <= s; ++k) {
        int a = std::clamp(int(std::llround(alpha * k)), 1, k - 2);
        uint64_t b = uint64_t(k - a);
        e[k] = e[a] + uint64_t(a) * (b * (b - 1) / 2);
    }
    RecursionTrend t;
    t.s = s;
    t.e_value = e[s];
    t.ratio = double(e[s]) / (double(s) * (s - 1) * (s - 2) / 6.0);
    return t;
}

namespace {

// Incremental check: adding `triple` keeps every s-subset under t triples.
// Counts are tracked per s-subset bitmask.
class SubsetCounter {
public:
    SubsetCounter(int n, int s, int t) : n_(n), s_(s), t_(t) {
        if (s_ <= n_) {
            masks_ = enumerate_masks();
            counts_.assign(masks_.size(), 0);
        }
    }

    bool can_add(const Triple& tr) const {
        if (s_ > n_) return true;
        uint32_t tmask = bit(tr);
        for (size_t i = 0; i < masks_.size(); ++i)
            if ((masks_[i] & tmask) == tmask && counts_[i] + 1 >= t_) return false;
        return true;
    }

    void add(const Triple& tr) {
        if (s_ > n_) return;
        uint32_t tmask = bit(tr);
        for (size_t i = 0; i < masks_.size(); ++i)
            if ((masks_[i] & tmask) == tmask) ++counts_[i];
    }

    void remove(const Triple& tr) {
        if (s_ > n_) return;
        uint32_t tmask = bit(tr);
        for (size_t i = 0; i < masks_.size(); ++i)
            if ((masks_[i] & tmask) == tmask) --counts_[i];
    }

private:
    static uint32_t bit(const Triple& tr) {
        return (1u << tr[0]) | (1u << tr[1]) | (1u << tr[2]);
    }

    std::vector<uint32_t> enumerate_masks() const {
        std::vector<uint32_t> out;
        for (uint32_t mask = 0; mask < (1u << n_); ++mask)
            if (std::popcount(mask) == s_) out.push_back(mask);
        return out;
    }

    int n_, s_, t_;
    std::vector<uint32_t> masks_;
    std::vector<int> counts_;
};

} // namespace

F3Result f3_small(int N, int s, int t) {
    if (N < 1 || N > 6)
        throw SizeLimitExceeded("f3_small: exhaustive search capped at N = 6");
    if (s < 1 || t < 1) throw DomainError("f3_small: need s, t >= 1");

    std::vector<Triple> all;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            for (int c = b + 1; c < N; ++c) all.push_back({a, b, c});

    SubsetCounter counter(N, s, t);
    std::vector<Triple> chosen;
    F3Result out;
    out.value = N + 1;
    // Two vertices never span a triple, so the minimum can never drop below
    // this floor; reaching it ends the walk.
    const int floor_value = N >= 2 ? 2 : 1;

    std::function<void(size_t)> walk = [&](size_t idx) {
        if (out.value == floor_value) return;
        if (idx == all.size()) {
            ++out.graphs_checked;
            ThreeGraph h(N, chosen);
            int alpha = independence_number(h).value;
            if (alpha < out.value) {
                out.value = alpha;
                out.witness = h;
            }
            return;
        }
        // denser graphs first: they reach low independence numbers sooner
        if (counter.can_add(all[idx])) {
            counter.add(all[idx]);
            chosen.push_back(all[idx]);
            walk(idx + 1);
            chosen.pop_back();
            counter.remove(all[idx]);
        }
        walk(idx + 1);
    };
    walk(0);
    return out;
}

} // namespace rforge
