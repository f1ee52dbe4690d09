#include "balcov/chains.hpp"

#include <algorithm>
#include <numeric>

#include "balcov/core.hpp"
#include "balcov/steinitz.hpp"

namespace balcov {

std::string chain_algo_name(ChainAlgo algo) {
    switch (algo) {
        case ChainAlgo::greedy: return "greedy";
        case ChainAlgo::two: return "two";
        case ChainAlgo::steinitz: return "steinitz";
    }
    throw Error(ErrorKind::internal, "unknown chain algo");
}

ChainAlgo chain_algo_from_name(const std::string& name) {
    if (name == "greedy") return ChainAlgo::greedy;
    if (name == "two") return ChainAlgo::two;
    if (name == "steinitz") return ChainAlgo::steinitz;
    throw Error(ErrorKind::parameter, "unknown chain algorithm '" + name + "'");
}

DeletionState::DeletionState(const InstanceFamily& fam, bool audit)
    : n_(fam.n()), k_(fam.k()), audit_(audit) {
    denom_ = 1;
    for (int i = 0; i < k_; ++i) {
        for (const auto& [edge, weight] : fam.hyper(i).edges()) {
            denom_ = int_lcm(denom_, den(weight));
        }
    }
    denom_sq_ = denom_ * denom_;
    vertex_edges_.assign(n_ + 1, {});
    delta_units_.assign(k_, std::vector<Int>(n_ + 1, Int(0)));
    wstar_units_.assign(k_, Int(0));
    for (int i = 0; i < k_; ++i) {
        for (const auto& [edge, weight] : fam.hyper(i).edges()) {
            Int units = num(weight) * (denom_ / den(weight));
            int idx = static_cast<int>(edges_.size());
            edges_.push_back({i, edge, units, 0});
            wstar_units_[i] += units;
            for (int v : edge) {
                vertex_edges_[v].push_back(idx);
                delta_units_[i][v] += units;
            }
        }
    }
    in_set_.assign(n_ + 1, 1);
    in_set_[0] = 0;
    active_count_ = n_;
    phi_sq_units_ = 0;
    for (int i = 0; i + 1 < k_; ++i) {
        Int p = wstar_units_[i] - wstar_units_[k_ - 1];
        phi_sq_units_ += p * p;
    }
    if (audit_) audit_check();
}

std::vector<int> DeletionState::active() const {
    std::vector<int> out;
    out.reserve(active_count_);
    for (int j = 1; j <= n_; ++j) {
        if (in_set_[j]) out.push_back(j);
    }
    return out;
}

Rational DeletionState::w_star_total(int i) const {
    if (i < 0 || i >= k_) throw Error(ErrorKind::parameter, "hypergraph index out of range");
    return Rational(wstar_units_[i], denom_);
}

Rational DeletionState::delta_value(int i, int j) const {
    if (i < 0 || i >= k_) throw Error(ErrorKind::parameter, "hypergraph index out of range");
    if (j < 1 || j > n_ || !in_set_[j])
        throw Error(ErrorKind::precondition, "delta requires j in the active set");
    return Rational(delta_units_[i][j], denom_);
}

std::vector<Rational> DeletionState::phi() const {
    if (k_ < 2) throw Error(ErrorKind::dimension, "phi requires k >= 2");
    std::vector<Rational> out;
    out.reserve(k_ - 1);
    for (int i = 0; i + 1 < k_; ++i)
        out.emplace_back(wstar_units_[i] - wstar_units_[k_ - 1], denom_);
    return out;
}

Rational DeletionState::phi_norm_sq() const { return Rational(phi_sq_units_, denom_sq_); }

void DeletionState::x_units(int j, std::vector<Int>& out) const {
    out.assign(k_ - 1, Int(0));
    const Int& last = delta_units_[k_ - 1][j];
    for (int i = 0; i + 1 < k_; ++i) out[i] = delta_units_[i][j] - last;
}

std::vector<Rational> DeletionState::x_vector(int j) const {
    if (k_ < 2) throw Error(ErrorKind::dimension, "x vector requires k >= 2");
    if (j < 1 || j > n_ || !in_set_[j])
        throw Error(ErrorKind::precondition, "x vector requires j in the active set");
    std::vector<Int> xs;
    x_units(j, xs);
    std::vector<Rational> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.emplace_back(x, denom_);
    return out;
}

Rational DeletionState::phi_norm_sq_after_delete(int j) const {
    if (k_ < 2) throw Error(ErrorKind::dimension, "requires k >= 2");
    if (j < 1 || j > n_ || !in_set_[j])
        throw Error(ErrorKind::precondition, "candidate j must be in the active set");
    std::vector<Int> xs;
    x_units(j, xs);
    Int dot = 0, xsq = 0;
    for (int i = 0; i + 1 < k_; ++i) {
        Int p = wstar_units_[i] - wstar_units_[k_ - 1];
        dot += p * xs[i];
        xsq += xs[i] * xs[i];
    }
    return Rational(phi_sq_units_ - 2 * dot + xsq, denom_sq_);
}

Rational DeletionState::unbalance() const {
    if (k_ < 2) return 0;
    Int lo = wstar_units_[0], hi = wstar_units_[0];
    for (int i = 1; i < k_; ++i) {
        lo = std::min(lo, wstar_units_[i]);
        hi = std::max(hi, wstar_units_[i]);
    }
    return Rational(hi - lo, denom_);
}

void DeletionState::remove(int j) {
    if (j < 1 || j > n_ || !in_set_[j])
        throw Error(ErrorKind::precondition, "vertex already removed or out of range");
    if (k_ >= 2) {
        std::vector<Int> xs;
        x_units(j, xs);
        Int dot = 0, xsq = 0;
        for (int i = 0; i + 1 < k_; ++i) {
            Int p = wstar_units_[i] - wstar_units_[k_ - 1];
            dot += p * xs[i];
            xsq += xs[i] * xs[i];
        }
        phi_sq_units_ += xsq - 2 * dot;
    }
    for (int e : vertex_edges_[j]) {
        EdgeRec& rec = edges_[e];
        if (rec.missing == 0) {
            for (int v : rec.verts) {
                if (in_set_[v]) delta_units_[rec.hyper][v] -= rec.units;
            }
            wstar_units_[rec.hyper] -= rec.units;
        }
        rec.missing++;
    }
    in_set_[j] = 0;
    active_count_--;
    if (audit_) audit_check();
}

void DeletionState::audit_check() const {
    std::vector<std::vector<Int>> delta2(k_, std::vector<Int>(n_ + 1, Int(0)));
    std::vector<Int> wstar2(k_, Int(0));
    for (const auto& rec : edges_) {
        int missing = 0;
        for (int v : rec.verts) {
            if (!in_set_[v]) missing++;
        }
        if (missing != rec.missing)
            throw Error(ErrorKind::internal, "deletion state: stale missing counter");
        if (missing > 0) continue;
        wstar2[rec.hyper] += rec.units;
        for (int v : rec.verts) delta2[rec.hyper][v] += rec.units;
    }
    if (wstar2 != wstar_units_)
        throw Error(ErrorKind::internal, "deletion state: w* totals drifted");
    for (int i = 0; i < k_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (in_set_[j] && delta2[i][j] != delta_units_[i][j])
                throw Error(ErrorKind::internal, "deletion state: delta table drifted");
        }
    }
    Int phi2 = 0;
    for (int i = 0; i + 1 < k_; ++i) {
        Int p = wstar2[i] - wstar2[k_ - 1];
        phi2 += p * p;
    }
    if (phi2 != phi_sq_units_)
        throw Error(ErrorKind::internal, "deletion state: ||phi||^2 drifted");
}

Chain build_chain_greedy(const InstanceFamily& fam) {
    auto r_opt = fam.uniform_r();
    if (!r_opt) throw Error(ErrorKind::uniformity, "greedy chain requires a uniform family");
    int n = fam.n(), k = fam.k(), r = *r_opt;
    std::vector<int> order(n);
    std::vector<Rational> trace(n, Rational(0));
    if (k == 1) {
        std::iota(order.begin(), order.end(), 1);
        return Chain(std::move(order), std::move(trace));
    }
    Rational potential_cap = Rational(k - 1) * cover_slack(fam);
    DeletionState st(fam);
    while (st.active_count() > 0) {
        int s = st.active_count();
        trace[s - 1] = st.unbalance();
        auto candidates = st.active();
        int pick;
        if (s > 2 * r) {
            pick = candidates.front();
            Rational best = st.phi_norm_sq_after_delete(pick);
            for (size_t idx = 1; idx < candidates.size(); ++idx) {
                Rational after = st.phi_norm_sq_after_delete(candidates[idx]);
                if (after < best) {  // strict: ties keep the smallest vertex
                    best = after;
                    pick = candidates[idx];
                }
            }
        } else {
            pick = candidates.back();  // base case empties in increasing order
        }
        st.remove(pick);
        order[s - 1] = pick;
        if (s - 1 > 2 * r && st.phi_norm_sq() > potential_cap)
            throw Error(ErrorKind::internal, "greedy potential invariant violated");
    }
    return Chain(std::move(order), std::move(trace));
}

Chain build_chain_two(const InstanceFamily& fam) {
    if (fam.k() != 2) throw Error(ErrorKind::arity, "two-hypergraph rule requires k = 2");
    if (!fam.uniform_r())
        throw Error(ErrorKind::uniformity, "two-hypergraph rule requires a uniform family");
    int n = fam.n();
    Rational c = cover_slack(fam);
    std::vector<int> order(n);
    std::vector<Rational> trace(n, Rational(0));
    DeletionState st(fam);
    while (st.active_count() > 0) {
        int s = st.active_count();
        trace[s - 1] = st.unbalance();
        Rational d = st.w_star_total(0) - st.w_star_total(1);
        auto candidates = st.active();
        int pick = -1;
        if (d != 0) {
            for (int j : candidates) {
                Rational x = st.delta_value(0, j) - st.delta_value(1, j);
                if ((d > 0 && x > 0) || (d < 0 && x < 0)) {
                    pick = j;
                    break;
                }
            }
            if (pick < 0)
                throw Error(ErrorKind::internal, "no sign-matching vertex; identity violated");
        } else {
            for (int j : candidates) {
                if (st.delta_value(0, j) == st.delta_value(1, j)) {
                    pick = j;
                    break;
                }
            }
            if (pick < 0) pick = candidates.front();
        }
        st.remove(pick);
        order[s - 1] = pick;
        if (st.active_count() > 0 && rational_abs(st.w_star_total(0) - st.w_star_total(1)) > c)
            throw Error(ErrorKind::internal, "k=2 invariant |w_1* - w_2*| <= c violated");
    }
    return Chain(std::move(order), std::move(trace));
}

Chain build_chain_steinitz(const InstanceFamily& fam) {
    auto r_opt = fam.uniform_r();
    if (!r_opt || *r_opt != 1)
        throw Error(ErrorKind::uniformity, "vector-ordering chain requires a 1-uniform family");
    VectorFamily v = family_to_vectors(fam);
    Chain chain = chain_from_order(fam, steinitz_order(v));
    Rational cap = Rational(2 * (fam.k() - 1)) * cover_slack(fam);
    for (const auto& t : chain.trace()) {
        if (t > cap)
            throw Error(ErrorKind::internal, "ordering chain exceeded 2(k-1)c step bound");
    }
    return chain;
}

Chain build_chain(const InstanceFamily& fam, ChainAlgo algo) {
    switch (algo) {
        case ChainAlgo::greedy: return build_chain_greedy(fam);
        case ChainAlgo::two: return build_chain_two(fam);
        case ChainAlgo::steinitz: return build_chain_steinitz(fam);
    }
    throw Error(ErrorKind::internal, "unreachable chain algorithm");
}

Chain chain_from_order(const InstanceFamily& fam, std::vector<int> order) {
    int n = fam.n(), k = fam.k();
    if (static_cast<int>(order.size()) != n)
        throw Error(ErrorKind::validation, "order length differs from ground set size");
    Chain probe(order, {});  // validates the permutation

    struct Rec {
        int hyper;
        Rational weight;
        int remaining;
    };
    std::vector<Rec> recs;
    std::vector<std::vector<int>> vertex_edges(n + 1);
    for (int i = 0; i < k; ++i) {
        for (const auto& [edge, weight] : fam.hyper(i).edges()) {
            int idx = static_cast<int>(recs.size());
            recs.push_back({i, weight, static_cast<int>(edge.size())});
            for (int v : edge) vertex_edges[v].push_back(idx);
        }
    }
    std::vector<Rational> totals(k, Rational(0));
    std::vector<Rational> trace(n, Rational(0));
    for (int j = 1; j <= n; ++j) {
        int v = order[j - 1];
        for (int e : vertex_edges[v]) {
            if (--recs[e].remaining == 0) totals[recs[e].hyper] += recs[e].weight;
        }
        if (k >= 2) {
            Rational lo = totals[0], hi = totals[0];
            for (int i = 1; i < k; ++i) {
                lo = std::min(lo, totals[i]);
                hi = std::max(hi, totals[i]);
            }
            trace[j - 1] = hi - lo;
        }
    }
    return Chain(std::move(order), std::move(trace));
}

HalfCoverResult half_cover(const BlockedBipartiteGraph& g, const Chain& chain) {
    if (chain.n() != g.n())
        throw Error(ErrorKind::validation, "chain length differs from left set size");
    int n = g.n(), k = g.k(), m = g.m();

    std::vector<std::vector<int>> adj(n + 1);
    const auto& rvs = g.right_vertices();
    for (size_t idx = 0; idx < rvs.size(); ++idx) {
        for (int a : rvs[idx].neighbors) adj[a].push_back(static_cast<int>(idx));
    }
    // slack: largest left degree over m
    std::vector<std::vector<long long>> deg(n + 1, std::vector<long long>(k + 1, 0));
    for (const auto& rv : rvs) {
        for (int a : rv.neighbors) deg[a][rv.block]++;
    }
    long long max_deg = 0;
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= k; ++b) max_deg = std::max(max_deg, deg[a][b]);
    }

    HalfCoverResult result;
    result.slack = Rational(max_deg, m);
    result.margin_bound_sq = Rational(2 * (k - 1)) * result.slack;

    std::vector<char> covered(rvs.size(), 0);
    std::vector<long long> cov(k + 1, 0);
    std::vector<long long> prev(k + 1, 0);
    int stop = 0;
    for (int j = 1; j <= n && stop == 0; ++j) {
        prev = cov;
        int a = chain.order()[j - 1];
        for (int idx : adj[a]) {
            if (!covered[idx]) {
                covered[idx] = 1;
                cov[rvs[idx].block]++;
            }
        }
        for (int b = 1; b <= k; ++b) {
            if (2 * cov[b] > m) {
                stop = j;
                break;
            }
        }
    }
    if (stop == 0) throw Error(ErrorKind::internal, "full chain never exceeded half coverage");

    result.j = stop;
    result.S = stop == 1 ? std::vector<int>{} : chain.prefix(stop - 1);
    result.coverage.assign(prev.begin() + 1, prev.end());

    result.margins_hold = true;
    Rational half = Rational(m, 2);
    Rational cm = result.slack * m;
    Rational rhs_sq = result.margin_bound_sq * m * m;
    for (int b = 1; b <= k; ++b) {
        HalfCoverMargin margin;
        margin.residual = half - cm - Rational(prev[b]);
        margin.holds = margin.residual < 0 || margin.residual * margin.residual < rhs_sq;
        result.margins_hold = result.margins_hold && margin.holds;
        result.margins.push_back(std::move(margin));
    }
    return result;
}

Rational chain_bound_sq(const InstanceFamily& fam, ChainAlgo algo) {
    Rational c = cover_slack(fam);
    int k = fam.k();
    switch (algo) {
        case ChainAlgo::greedy: return Rational(2 * (k - 1)) * c;
        case ChainAlgo::two: return c * c;
        case ChainAlgo::steinitz: {
            Rational b = Rational(2 * (k - 1)) * c;
            return b * b;
        }
    }
    throw Error(ErrorKind::internal, "unknown chain algo");
}

std::vector<std::string> chain_violations(const InstanceFamily& fam, const Chain& chain,
                                          ChainAlgo algo) {
    std::vector<std::string> out;
    if (algo == ChainAlgo::two && fam.k() != 2) {
        out.push_back("algorithm 'two' requires k = 2");
        return out;
    }
    if (!fam.uniform_r()) {
        out.push_back("chain bounds require a uniform family");
        return out;
    }
    if (algo == ChainAlgo::steinitz && *fam.uniform_r() != 1) {
        out.push_back("algorithm 'steinitz' requires r = 1");
        return out;
    }
    Chain fresh = chain_from_order(fam, chain.order());
    if (!chain.trace().empty()) {
        for (int j = 1; j <= fam.n(); ++j) {
            if (chain.trace()[j - 1] != fresh.trace()[j - 1]) {
                out.push_back("recorded trace mismatch at step " + std::to_string(j) +
                              ": recorded " + format_rational(chain.trace()[j - 1]) +
                              ", recomputed " + format_rational(fresh.trace()[j - 1]));
            }
        }
    }
    Rational bound_sq = chain_bound_sq(fam, algo);
    Rational c = cover_slack(fam);
    for (int j = 1; j <= fam.n(); ++j) {
        const Rational& t = fresh.trace()[j - 1];
        switch (algo) {
            case ChainAlgo::greedy:
                if (t * t > bound_sq)
                    out.push_back("unbalance(S_" + std::to_string(j) +
                                  ")^2 <= 2(k-1)c violated: " + format_rational(t * t) + " > " +
                                  format_rational(bound_sq));
                break;
            case ChainAlgo::two:
                if (t > c)
                    out.push_back("unbalance(S_" + std::to_string(j) +
                                  ") <= c violated: " + format_rational(t) + " > " +
                                  format_rational(c));
                break;
            case ChainAlgo::steinitz: {
                Rational cap = Rational(2 * (fam.k() - 1)) * c;
                if (t > cap)
                    out.push_back("unbalance(S_" + std::to_string(j) +
                                  ") <= 2(k-1)c violated: " + format_rational(t) + " > " +
                                  format_rational(cap));
                break;
            }
        }
    }
    return out;
}

}  // namespace balcov
