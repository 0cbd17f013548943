#include "qsrg/classify.hpp"

#include "qsrg/analysis.hpp"
#include "qsrg/errors.hpp"
#include "qsrg/qnum.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

namespace qsrg {

namespace {

constexpr uint64_t kNodeBatch = 4096;

struct Universe {
    const FieldSpec* f;
    int v = 0;
    int k = 0;
    int n = 0;                                 // number of points
    std::vector<Subspace> spaces;              // all (k+1)-subspaces
    std::vector<Bitset> space_points;          // point set per space
    std::vector<std::vector<int32_t>> through; // per point: ids of spaces containing it
};

Universe build_universe(const FieldSpec& f, int v, int k) {
    if (k < 0 || k + 1 > v)
        throw Error(Errc::invalid_input, "need 0 <= k <= v-1");
    Universe u;
    u.f = &f;
    u.v = v;
    u.k = k;
    u.n = static_cast<int>(point_count(f, v));
    u.spaces = enumerate_subspaces(f, v, k + 1);
    u.space_points.reserve(u.spaces.size());
    u.through.assign(u.n, {});
    for (size_t id = 0; id < u.spaces.size(); ++id) {
        Bitset bits(u.n);
        for (int32_t p : subspace_points(f, u.spaces[id]))
            bits.set(p);
        u.space_points.push_back(std::move(bits));
        for (int32_t p = 0; p < u.n; ++p)
            if (u.space_points[id].test(p))
                u.through[p].push_back(static_cast<int32_t>(id));
    }
    return u;
}

using CandLists = std::vector<std::vector<int32_t>>;

struct Task {
    std::vector<int32_t> prefix; // assigned space ids for vertices 0..depth-1
    CandLists cands;             // candidate lists for the remaining vertices
};

// One worker's view of the shared search. Node accounting is batched; the
// budget may therefore overshoot by one batch per worker.
struct Engine {
    const Universe* u;
    bool srg_mode = false;
    int64_t lambda = 0;
    int64_t mu = 0;
    uint64_t budget = 0;
    std::atomic<uint64_t>* global_nodes = nullptr;
    std::atomic<bool>* aborted = nullptr;

    uint64_t local_nodes = 0;
    uint64_t local_prunes = 0;
    uint64_t unflushed = 0;
    uint64_t batch = kNodeBatch;
    std::vector<std::vector<int32_t>> found; // complete assignments
    std::vector<CandLists> stack;

    bool pair_ok(int i, int32_t si, int j, int32_t tj) const {
        const Bitset& s = u->space_points[si];
        const Bitset& t = u->space_points[tj];
        bool adj = s.test(j);
        if (t.test(i) != adj)
            return false;
        if (!srg_mode)
            return true;
        int common = s.count_and(t);
        return common == (adj ? lambda + 2 : mu);
    }

    bool over_budget() {
        ++local_nodes;
        if (++unflushed >= batch) {
            uint64_t total = global_nodes->fetch_add(unflushed) + unflushed;
            unflushed = 0;
            if (total > budget)
                aborted->store(true);
        }
        return aborted->load(std::memory_order_relaxed);
    }

    void flush() {
        global_nodes->fetch_add(unflushed);
        unflushed = 0;
    }

    void dfs(int depth, const CandLists& cands, std::vector<int32_t>& assign) {
        if (depth == u->n) {
            found.push_back(assign);
            return;
        }
        CandLists& next = stack[depth];
        for (int32_t sid : cands[depth]) {
            if (over_budget())
                return;
            assign[depth] = sid;
            bool dead = false;
            for (int j = depth + 1; j < u->n; ++j) {
                next[j].clear();
                for (int32_t t : cands[j])
                    if (pair_ok(depth, sid, j, t))
                        next[j].push_back(t);
                if (next[j].empty()) {
                    dead = true;
                    ++local_prunes;
                    break;
                }
            }
            if (!dead)
                dfs(depth + 1, next, assign);
        }
    }
};

// Consistent prefixes at the split depth, in deterministic DFS order. Prefix
// nodes count toward the same budget as subtree nodes.
void collect_tasks(const Universe& u, Engine& proto, int depth, int limit,
                   const CandLists& cands, std::vector<int32_t>& assign,
                   std::vector<Task>& out) {
    if (depth == limit || depth == u.n) {
        out.push_back(Task{assign, cands});
        return;
    }
    for (int32_t sid : cands[depth]) {
        if (proto.over_budget())
            return;
        assign.push_back(sid);
        CandLists next = cands;
        bool dead = false;
        for (int j = depth + 1; j < u.n; ++j) {
            std::vector<int32_t> filtered;
            for (int32_t t : next[j])
                if (proto.pair_ok(depth, sid, j, t))
                    filtered.push_back(t);
            next[j] = std::move(filtered);
            if (next[j].empty()) {
                dead = true;
                ++proto.local_prunes;
                break;
            }
        }
        if (!dead)
            collect_tasks(u, proto, depth + 1, limit, next, assign, out);
        assign.pop_back();
    }
}

QaryGraph graph_from_assignment(const Universe& u, const std::vector<int32_t>& assign) {
    std::set<Edge> edges;
    for (int i = 0; i < u.n; ++i) {
        const Bitset& nb = u.space_points[assign[i]];
        for (int j = i + 1; j < u.n; ++j) {
            if (!nb.test(j))
                continue;
            Subspace plane = span(*u.f, point_subspace(*u.f, u.v, i),
                                  point_subspace(*u.f, u.v, j));
            edges.insert(subspace_points(*u.f, plane));
        }
    }
    return QaryGraph{*u.f, u.v, {edges.begin(), edges.end()}};
}

bool params_match(const SrgParams& p, int64_t lambda, int64_t mu) {
    return (!p.lambda || *p.lambda == lambda) && (!p.mu || *p.mu == mu);
}

std::vector<QaryGraph> run_search(const FieldSpec& f, const SearchConfig& cfg, bool srg_mode,
                                  SearchStats* stats) {
    auto t0 = std::chrono::steady_clock::now();
    SearchStats local_stats;
    if (!stats)
        stats = &local_stats;
    *stats = SearchStats{};

    if (srg_mode && cfg.apply_prefilters) {
        if (!parameter_identity(cfg.v, cfg.k, *cfg.lambda, *cfg.mu, f.q()).holds)
            return {};
        if (!projective_count_decompose(*cfg.lambda, *cfg.mu, f.q()))
            return {};
    }

    Universe u = build_universe(f, cfg.v, cfg.k);
    CandLists root(u.n);
    for (int p = 0; p < u.n; ++p)
        root[p] = u.through[p];
    if (cfg.symmetry_fixing) {
        root[0] = {root[0][0]};
        stats->count_multiplier = gaussian(cfg.v - 1, cfg.k, f.q());
    }

    std::atomic<uint64_t> global_nodes{0};
    std::atomic<bool> aborted{false};

    Engine proto;
    proto.u = &u;
    proto.srg_mode = srg_mode;
    if (srg_mode) {
        proto.lambda = *cfg.lambda;
        proto.mu = *cfg.mu;
    }
    proto.budget = cfg.node_budget;
    proto.batch = std::min<uint64_t>(kNodeBatch, cfg.node_budget / 4 + 1);
    proto.global_nodes = &global_nodes;
    proto.aborted = &aborted;

    std::vector<Task> tasks;
    {
        std::vector<int32_t> assign;
        int limit = std::min(std::max(cfg.split_depth, 0), u.n);
        collect_tasks(u, proto, 0, limit, root, assign, tasks);
    }
    proto.flush();
    stats->prunes += proto.local_prunes;
    proto.local_nodes = 0;
    proto.local_prunes = 0;

    const int workers = std::max(1, cfg.workers);
    std::vector<Engine> engines(tasks.size(), proto);

    auto run_task = [&](size_t idx) {
        Engine& e = engines[idx];
        e.stack.assign(u.n + 1, CandLists(u.n));
        std::vector<int32_t> assign = tasks[idx].prefix;
        assign.resize(u.n);
        e.dfs(static_cast<int>(tasks[idx].prefix.size()), tasks[idx].cands, assign);
        e.flush();
        e.stack.clear();
        e.stack.shrink_to_fit();
    };

    if (workers == 1 || tasks.size() <= 1) {
        for (size_t i = 0; i < tasks.size() && !aborted.load(); ++i)
            run_task(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= tasks.size() || aborted.load())
                        return;
                    run_task(i);
                }
            });
        for (auto& th : pool)
            th.join();
    }

    stats->nodes = global_nodes.load();
    stats->complete = !aborted.load();
    std::vector<QaryGraph> graphs;
    for (const Engine& e : engines) {
        stats->prunes += e.local_prunes;
        for (const auto& assign : e.found) {
            QaryGraph g = graph_from_assignment(u, assign);
            // soundness: never trust search state
            validate_graph(g);
            auto k = is_regular(g);
            if (!k || *k != cfg.k)
                throw Error(Errc::invalid_input, "search emitted a non-regular graph");
            if (srg_mode) {
                auto params = srg_parameters(g);
                if (!params || !params_match(*params, *cfg.lambda, *cfg.mu))
                    throw Error(Errc::invalid_input, "search emitted a graph off target");
            }
            graphs.push_back(std::move(g));
        }
    }
    std::sort(graphs.begin(), graphs.end(),
              [](const QaryGraph& a, const QaryGraph& b) { return a.edges < b.edges; });
    stats->wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return graphs;
}

} // namespace

std::vector<QaryGraph> enumerate_regular(const FieldSpec& f, const SearchConfig& cfg,
                                         SearchStats* stats) {
    return run_search(f, cfg, false, stats);
}

std::vector<QaryGraph> enumerate_srg(const FieldSpec& f, const SearchConfig& cfg,
                                     SearchStats* stats) {
    if (!cfg.lambda || !cfg.mu)
        throw Error(Errc::invalid_input, "enumerate_srg needs lambda and mu targets");
    return run_search(f, cfg, true, stats);
}

Family classify_family(const QaryGraph& g) {
    const int n = static_cast<int>(g.vertex_count());
    // spread-union: the distinct neighborhoods partition the point set
    std::set<Subspace> distinct;
    for (int32_t x = 0; x < n; ++x)
        distinct.insert(neighborhood(g, x));
    Bitset covered(n);
    bool partition = true;
    int covered_total = 0;
    for (const Subspace& s : distinct) {
        auto pts = subspace_points(g.field, s);
        for (int32_t p : pts) {
            if (covered.test(p)) {
                partition = false;
                break;
            }
            covered.set(p);
        }
        covered_total += static_cast<int>(pts.size());
        if (!partition)
            break;
    }
    if (partition && covered_total == n)
        return Family::spread_union;
    try {
        recover_alternating_form(g);
        return Family::symplectic;
    } catch (const Error&) {
        return Family::other;
    }
}

std::vector<std::pair<int64_t, int64_t>> admissible_tuples(int v, int k, int64_t q) {
    std::vector<std::pair<int64_t, int64_t>> out;
    out.emplace_back(static_cast<int64_t>(bracket(k + 1, q)) - 2, 0);
    if (k == v - 2) {
        int64_t m = static_cast<int64_t>(bracket(k, q));
        if (m >= 2)
            out.emplace_back(m - 2, m);
    }
    if (v == 5 && k == 2)
        out.emplace_back(q - 1, 1);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ClassificationReport classify_report(const FieldSpec& f, int v, const SearchConfig& budgets) {
    ClassificationReport report{v, f.q(), {}};
    for (int k = 1; k < v; ++k) {
        for (auto [lambda, mu] : admissible_tuples(v, k, f.q())) {
            SearchConfig cfg = budgets;
            cfg.v = v;
            cfg.k = k;
            cfg.lambda = lambda;
            cfg.mu = mu;
            SearchStats stats;
            auto graphs = enumerate_srg(f, cfg, &stats);
            TupleReport t;
            t.k = k;
            t.lambda = lambda;
            t.mu = mu;
            t.count = graphs.size() * stats.count_multiplier;
            t.nodes = stats.nodes;
            t.complete = stats.complete;
            for (const QaryGraph& g : graphs) {
                switch (classify_family(g)) {
                case Family::spread_union: t.spread_union += stats.count_multiplier; break;
                case Family::symplectic: t.symplectic += stats.count_multiplier; break;
                case Family::other: t.other += stats.count_multiplier; break;
                }
            }
            report.tuples.push_back(t);
        }
    }
    return report;
}

} // namespace qsrg
