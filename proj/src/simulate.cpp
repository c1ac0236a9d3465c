#include "dos/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace dos {

double Rng::next_exponential() {
    double u;
    do {
        u = next_double();
    } while (u <= 0.0);
    return -std::log(u);
}

Estimate make_estimate(double sum, double sum_sq, long n) {
    if (n < 1) throw std::invalid_argument("make_estimate: needs trials >= 1");
    Estimate e;
    e.trials = n;
    e.mean = sum / n;
    if (n > 1) {
        double var = (sum_sq - sum * sum / n) / (n - 1);
        e.stderr_ = std::sqrt(std::max(var, 0.0) / n);
    }
    return e;
}

namespace {

struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

struct Workspace {
    std::vector<int> perm;
    std::vector<double> times;
    std::vector<int> fenwick;

    void reset(int n) {
        if (static_cast<int>(perm.size()) != n) {
            perm.resize(static_cast<std::size_t>(n));
            times.resize(static_cast<std::size_t>(n));
            fenwick.assign(static_cast<std::size_t>(n + 1), 0);
        } else {
            std::fill(fenwick.begin(), fenwick.end(), 0);
        }
        std::iota(perm.begin(), perm.end(), 1);
    }
};

Workspace& workspace() {
    thread_local Workspace ws;
    return ws;
}

void fenwick_add(std::vector<int>& f, int i) {
    for (; i < static_cast<int>(f.size()); i += i & -i) ++f[static_cast<std::size_t>(i)];
}

int fenwick_prefix(const std::vector<int>& f, int i) {
    int s = 0;
    for (; i > 0; i -= i & -i) s += f[static_cast<std::size_t>(i)];
    return s;
}

/// Outcome in rank space, value-free.
struct RankOutcome {
    int selected_rank = 0;  // 0 = none
    double stop_time = -1.0;
    int best_online_rank = 0;  // 0 = empty online set
};

RankOutcome simulate_threshold_ranks(int n, const ThresholdSchedule& schedule,
                                     const SamplingModel& model, Rng& rng) {
    Workspace& ws = workspace();
    ws.reset(n);
    rng.shuffle(ws.perm);

    // sorted uniform arrival times via exponential spacings
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        acc += rng.next_exponential();
        ws.times[static_cast<std::size_t>(i)] = acc;
    }
    acc += rng.next_exponential();
    for (int i = 0; i < n; ++i) ws.times[static_cast<std::size_t>(i)] /= acc;

    const double p = model.rate();
    const int h_view = static_cast<int>(
        std::upper_bound(ws.times.begin(), ws.times.end(), p) - ws.times.begin());
    const int h_true = (model.kind == SamplingModel::Kind::Dependent) ? model.h : h_view;

    RankOutcome out;
    for (int pos = h_true; pos < n; ++pos)
        out.best_online_rank = out.best_online_rank == 0
                                   ? ws.perm[static_cast<std::size_t>(pos)]
                                   : std::min(out.best_online_rank, ws.perm[static_cast<std::size_t>(pos)]);

    for (int pos = 0; pos < h_view && pos < n; ++pos)
        fenwick_add(ws.fenwick, ws.perm[static_cast<std::size_t>(pos)]);

    for (int pos = h_view; pos < n; ++pos) {
        const int r = ws.perm[static_cast<std::size_t>(pos)];
        const double tau = ws.times[static_cast<std::size_t>(pos)];
        const int ell = 1 + fenwick_prefix(ws.fenwick, r - 1);
        fenwick_add(ws.fenwick, r);
        if (tau >= schedule.time_for_rank(ell)) {
            if (pos < h_true) break;  // accepted a history item: void run
            out.selected_rank = r;
            out.stop_time = tau;
            break;
        }
    }
    return out;
}

TrialRecord to_record(const Instance& inst, const RankOutcome& o) {
    TrialRecord rec;
    rec.selected_rank = o.selected_rank;
    rec.selected_value = o.selected_rank > 0 ? inst.value(o.selected_rank) : inst.default_tail();
    rec.opt_value = o.best_online_rank > 0 ? inst.value(o.best_online_rank) : inst.default_tail();
    rec.stop_time = o.stop_time;
    return rec;
}

}  // namespace

TrialRecord run_threshold_alg(const Instance& instance, const ThresholdSchedule& schedule,
                              const SamplingModel& model, Rng& rng) {
    if (model.kind == SamplingModel::Kind::Dependent && model.n != instance.size())
        throw std::invalid_argument("run_threshold_alg: model size mismatch");
    if (schedule.p() > model.rate() + 1e-9)
        throw std::invalid_argument("run_threshold_alg: schedule rate exceeds model rate");
    return to_record(instance, simulate_threshold_ranks(instance.size(), schedule, model, rng));
}

PolicyMatrixRunner::PolicyMatrixRunner(const StoppingRuleMatrix& rule)
    : h_(rule.h()), n_(rule.n()) {
    rule.validate(1e-6);
    offset_.assign(static_cast<std::size_t>(n_ - h_), 0);
    std::size_t total = 0;
    for (int i = h_ + 1; i <= n_; ++i) {
        offset_[static_cast<std::size_t>(i - h_ - 1)] = total;
        total += static_cast<std::size_t>(i);
    }
    cond_.assign(total, 0.0);
    for (int i = h_ + 1; i <= n_; ++i)
        for (int ell = 1; ell <= i; ++ell)
            cond_[offset_[static_cast<std::size_t>(i - h_ - 1)] + static_cast<std::size_t>(ell - 1)] =
                rule.conditional_stop_prob(i, ell);
}

TrialRecord PolicyMatrixRunner::run(const Instance& instance, Rng& rng) const {
    if (instance.size() != n_)
        throw std::invalid_argument("PolicyMatrixRunner: instance size mismatch");
    Workspace& ws = workspace();
    ws.reset(n_);
    rng.shuffle(ws.perm);

    RankOutcome out;
    for (int pos = h_; pos < n_; ++pos)
        out.best_online_rank = out.best_online_rank == 0
                                   ? ws.perm[static_cast<std::size_t>(pos)]
                                   : std::min(out.best_online_rank, ws.perm[static_cast<std::size_t>(pos)]);
    for (int pos = 0; pos < h_; ++pos) fenwick_add(ws.fenwick, ws.perm[static_cast<std::size_t>(pos)]);

    for (int pos = h_; pos < n_; ++pos) {
        const int i = pos + 1;
        const int r = ws.perm[static_cast<std::size_t>(pos)];
        const int ell = 1 + fenwick_prefix(ws.fenwick, r - 1);
        fenwick_add(ws.fenwick, r);
        const double q =
            cond_[offset_[static_cast<std::size_t>(i - h_ - 1)] + static_cast<std::size_t>(ell - 1)];
        if (q > 0.0 && rng.next_double() < q) {
            out.selected_rank = r;
            out.stop_time = static_cast<double>(i) / n_;
            break;
        }
    }
    return to_record(instance, out);
}

TrialRecord run_policy_matrix(const Instance& instance, const StoppingRuleMatrix& rule, Rng& rng) {
    return PolicyMatrixRunner(rule).run(instance, rng);
}

namespace {

/// Runs `body(trial, rng)` for trial = 0..trials-1 over a fixed 64-chunk grid
/// so aggregation order is independent of the thread count.
template <typename Body>
void parallel_trials(long trials, std::uint64_t seed, int threads, const Body& body) {
    const int chunks = 64;
    const long per = (trials + chunks - 1) / chunks;
    std::vector<std::thread> pool;
    std::atomic<int> next_chunk{0};
    auto worker = [&]() {
        for (;;) {
            int c = next_chunk.fetch_add(1);
            if (c >= chunks) return;
            long lo = static_cast<long>(c) * per;
            long hi = std::min(trials, lo + per);
            for (long t = lo; t < hi; ++t) {
                Rng rng(seed, static_cast<std::uint64_t>(t));
                body(c, t, rng);
            }
        }
    };
    int nt = std::max(1, threads);
    for (int i = 0; i < nt - 1; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

int default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hc == 0 ? 1u : hc, 16u));
}

}  // namespace

RatioEstimate estimate_ratio(const Instance& instance, const TrialFn& algorithm, long trials,
                             std::uint64_t seed) {
    if (trials < 2) throw std::invalid_argument("estimate_ratio: trials >= 2");
    const int chunks = 64;
    std::vector<Kahan> alg_sum(chunks), alg_sq(chunks), opt_sum(chunks), opt_sq(chunks);
    parallel_trials(trials, seed, default_threads(), [&](int c, long, Rng& rng) {
        TrialRecord rec = algorithm(instance, rng);
        alg_sum[static_cast<std::size_t>(c)].add(rec.selected_value);
        alg_sq[static_cast<std::size_t>(c)].add(rec.selected_value * rec.selected_value);
        opt_sum[static_cast<std::size_t>(c)].add(rec.opt_value);
        opt_sq[static_cast<std::size_t>(c)].add(rec.opt_value * rec.opt_value);
    });
    Kahan as, aq, os, oq;
    for (int c = 0; c < chunks; ++c) {
        as.add(alg_sum[static_cast<std::size_t>(c)].sum);
        aq.add(alg_sq[static_cast<std::size_t>(c)].sum);
        os.add(opt_sum[static_cast<std::size_t>(c)].sum);
        oq.add(opt_sq[static_cast<std::size_t>(c)].sum);
    }
    RatioEstimate out;
    out.alg = make_estimate(as.sum, aq.sum, trials);
    out.opt = make_estimate(os.sum, oq.sum, trials);
    if (out.opt.mean == 0.0) throw std::domain_error("DegenerateOpt: benchmark mean is zero");
    out.ratio = out.alg.mean / out.opt.mean;
    return out;
}

std::vector<RatioEstimate> worst_k_sweep(const ThresholdSchedule& schedule,
                                         const SamplingModel& model, int n, int k_cap,
                                         long trials, std::uint64_t seed) {
    if (k_cap < 1 || trials < 2) throw std::invalid_argument("worst_k_sweep: bad arguments");
    const int chunks = 64;
    std::vector<std::vector<long>> alg_hits(chunks, std::vector<long>(static_cast<std::size_t>(k_cap), 0));
    std::vector<std::vector<long>> opt_hits(chunks, std::vector<long>(static_cast<std::size_t>(k_cap), 0));
    parallel_trials(trials, seed, default_threads(), [&](int c, long, Rng& rng) {
        RankOutcome o = simulate_threshold_ranks(n, schedule, model, rng);
        if (o.selected_rank > 0 && o.selected_rank <= k_cap)
            for (int k = o.selected_rank; k <= k_cap; ++k)
                ++alg_hits[static_cast<std::size_t>(c)][static_cast<std::size_t>(k - 1)];
        if (o.best_online_rank > 0 && o.best_online_rank <= k_cap)
            for (int k = o.best_online_rank; k <= k_cap; ++k)
                ++opt_hits[static_cast<std::size_t>(c)][static_cast<std::size_t>(k - 1)];
    });
    std::vector<RatioEstimate> out(static_cast<std::size_t>(k_cap));
    for (int k = 0; k < k_cap; ++k) {
        long a = 0, o = 0;
        for (int c = 0; c < chunks; ++c) {
            a += alg_hits[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
            o += opt_hits[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
        }
        RatioEstimate& r = out[static_cast<std::size_t>(k)];
        r.alg = make_estimate(static_cast<double>(a), static_cast<double>(a), trials);
        r.opt = make_estimate(static_cast<double>(o), static_cast<double>(o), trials);
        if (r.opt.mean == 0.0) throw std::domain_error("DegenerateOpt: benchmark mean is zero");
        r.ratio = r.alg.mean / r.opt.mean;
    }
    return out;
}

std::vector<Estimate> empirical_stop_distribution(const Instance& instance,
                                                  const ThresholdSchedule& schedule,
                                                  const SamplingModel& model, long trials,
                                                  std::uint64_t seed) {
    if (trials < 10000) throw std::invalid_argument("empirical_stop_distribution: trials >= 1e4");
    const int n = instance.size();
    const int chunks = 64;
    std::vector<std::vector<long>> hits(chunks, std::vector<long>(static_cast<std::size_t>(n + 1), 0));
    parallel_trials(trials, seed, default_threads(), [&](int c, long, Rng& rng) {
        RankOutcome o = simulate_threshold_ranks(n, schedule, model, rng);
        ++hits[static_cast<std::size_t>(c)][static_cast<std::size_t>(o.selected_rank)];  // 0 = none
    });
    std::vector<Estimate> out(static_cast<std::size_t>(n + 1));
    for (int j = 1; j <= n + 1; ++j) {
        long cnt = 0;
        int bucket = (j <= n) ? j : 0;
        for (int c = 0; c < chunks; ++c) cnt += hits[static_cast<std::size_t>(c)][static_cast<std::size_t>(bucket)];
        out[static_cast<std::size_t>(j - 1)] = make_estimate(static_cast<double>(cnt), static_cast<double>(cnt), trials);
    }
    return out;
}

}  // namespace dos
