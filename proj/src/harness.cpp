#include "mvie/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace mvie {

Summary summarize(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("summary of an empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t k = values.size();
    Summary s;
    s.best = values.front();
    s.worst = values.back();
    s.median = k % 2 == 1 ? values[k / 2] : 0.5 * (values[k / 2 - 1] + values[k / 2]);
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(k);
    if (k > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.std = std::sqrt(ss / static_cast<double>(k - 1));
        s.std_defined = true;
    }
    return s;
}

std::vector<RunResult> run_batch(const std::vector<RunConfig>& configs, unsigned threads) {
    for (const auto& c : configs) validate(c);
    std::vector<RunResult> results(configs.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, configs.size())));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
            try {
                results[i] = run(configs[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

namespace {

std::vector<RunConfig> seeded(const RunConfig& base, std::size_t runs, std::uint64_t seed0) {
    std::vector<RunConfig> out(runs, base);
    for (std::size_t i = 0; i < runs; ++i) out[i].seed = seed0 + i;
    return out;
}

// CEC convention: runs at a checkpoint are ordered by feasibility rules on
// (error, mean violation).
bool checkpoint_before(const CheckpointRecord& a, const CheckpointRecord& b) {
    return deb_better({a.error, a.mean_violation}, {b.error, b.mean_violation});
}

std::vector<CheckpointSummary> error_table(const std::vector<RunResult>& results) {
    std::map<std::uint64_t, std::vector<CheckpointRecord>> by_nfes;
    for (const auto& r : results)
        for (const auto& c : r.checkpoints) by_nfes[c.nfes].push_back(c);
    std::vector<CheckpointSummary> out;
    for (auto& [nfes, records] : by_nfes) {
        std::stable_sort(records.begin(), records.end(), checkpoint_before);
        CheckpointSummary cs;
        cs.nfes = nfes;
        cs.runs = records.size();
        std::vector<double> errors;
        for (const auto& c : records) errors.push_back(c.error);
        cs.error = summarize(errors);
        // best/median/worst follow the feasibility ordering, not the raw error
        cs.error.best = records.front().error;
        cs.error.worst = records.back().error;
        const CheckpointRecord& median = records[(records.size() - 1) / 2];
        cs.error.median = median.error;
        cs.median_violated_counts = median.violated_counts;
        cs.median_mean_violation = median.mean_violation;
        out.push_back(cs);
    }
    return out;
}

}  // namespace

ExperimentReport aggregate(const RunConfig& base, std::uint64_t seed0, std::vector<RunResult> results) {
    if (results.empty()) throw std::invalid_argument("experiment needs at least one run");
    ExperimentReport rep;
    rep.problem = base.problem;
    rep.mode = base.mode;
    rep.runs = results.size();
    rep.seed0 = seed0;
    rep.config = base;
    rep.config.seed = seed0;

    std::vector<double> nfes;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].success) nfes.push_back(static_cast<double>(*results[i].nfes_to_success));
        if (deb_better(results[i].best, results[best_idx].best)) best_idx = i;
    }
    rep.success_rate = static_cast<double>(nfes.size()) / static_cast<double>(results.size());
    if (!nfes.empty()) rep.nfes_stats = summarize(nfes);
    rep.best = results[best_idx].best;
    rep.best_x = results[best_idx].best_x;
    rep.error_table = error_table(results);
    rep.per_run = std::move(results);
    return rep;
}

ExperimentReport run_experiment(const RunConfig& base, std::size_t runs, std::uint64_t seed0, unsigned threads) {
    if (runs == 0) throw std::invalid_argument("runs must be at least 1");
    return aggregate(base, seed0, run_batch(seeded(base, runs, seed0), threads));
}

double charged_median_nfes(const ExperimentReport& report) {
    if (report.nfes_stats) return report.nfes_stats->median;
    return report.per_run.empty() ? 0.0 : static_cast<double>(report.per_run.front().max_nfes);
}

AblationReport ablation_report(const std::vector<std::string>& problems, std::size_t runs, std::uint64_t seed0,
                               const RunConfig& base, unsigned threads) {
    if (runs == 0) throw std::invalid_argument("runs must be at least 1");
    const std::array<Mode, 4> modes{Mode::Full, Mode::LocalOnly, Mode::GlobalOnly, Mode::RandomScheduler};

    // One batch for everything so the worker pool stays busy.
    std::vector<RunConfig> configs;
    std::vector<RunConfig> bases;
    for (Mode mode : modes) {
        for (const auto& p : problems) {
            RunConfig c = base;
            c.problem = p;
            c.mode = mode;
            bases.push_back(c);
            for (auto& s : seeded(c, runs, seed0)) configs.push_back(std::move(s));
        }
    }
    std::vector<RunResult> all = run_batch(configs, threads);

    AblationReport rep;
    rep.problems = problems;
    rep.runs = runs;
    rep.seed0 = seed0;
    std::size_t cursor = 0;
    for (std::size_t mi = 0; mi < modes.size(); ++mi) {
        AblationRow row;
        row.mode = modes[mi];
        for (std::size_t pi = 0; pi < problems.size(); ++pi) {
            std::vector<RunResult> slice(std::make_move_iterator(all.begin() + cursor),
                                         std::make_move_iterator(all.begin() + cursor + runs));
            cursor += runs;
            for (const auto& r : slice)
                row.total_nfes += static_cast<double>(r.success ? *r.nfes_to_success : r.max_nfes);
            row.per_problem.push_back(aggregate(bases[mi * problems.size() + pi], seed0, std::move(slice)));
            row.mean_success_rate += row.per_problem.back().success_rate;
        }
        if (!problems.empty()) row.mean_success_rate /= static_cast<double>(problems.size());
        rep.rows.push_back(std::move(row));
    }
    for (auto& row : rep.rows) {
        double sum = 0.0;
        for (std::size_t pi = 0; pi < problems.size(); ++pi)
            sum += charged_median_nfes(row.per_problem[pi]) / charged_median_nfes(rep.rows[0].per_problem[pi]);
        row.scaled_nfes = problems.empty() ? 0.0 : sum / static_cast<double>(problems.size());
    }
    return rep;
}

std::vector<SweepSetting> expand_grid(const SweepGrid& grid, const RunConfig& base) {
    auto axis = [](const auto& values, auto fallback) {
        using T = decltype(fallback);
        return values.empty() ? std::vector<T>{fallback} : std::vector<T>(values.begin(), values.end());
    };
    const auto ca = axis(grid.c_alpha, base.scheduler.c_alpha);
    const auto br = axis(grid.beta_R, base.scheduler.beta_R);
    const auto ll = axis(grid.L, base.scheduler.L);
    const auto ff = axis(grid.F, base.de_params.F);
    const auto cr = axis(grid.CR, base.de_params.CR);
    const auto ps = axis(grid.pop_size, base.pop_size);
    std::vector<SweepSetting> out;
    for (double a : ca)
        for (double b : br)
            for (double l : ll)
                for (double f : ff)
                    for (double c : cr)
                        for (std::size_t p : ps) out.push_back({a, b, l, f, c, p});
    return out;
}

std::vector<double> average_ranks(const std::vector<double>& values, bool descending) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return descending ? values[a] > values[b] : values[a] < values[b];
    });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

const ReferenceTable& default_reference_table() {
    static const ReferenceTable table{
        {"g01", 20304}, {"g02", 61072}, {"g04", 3945},  {"g06", 1901},  {"g07", 7281},
        {"g08", 482},   {"g09", 3436},  {"g10", 14734}, {"g12", 3809},  {"g16", 3128},
        {"g18", 7272},  {"g19", 25914}, {"g24", 718},
    };
    return table;
}

SweepReport parameter_sweep(const SweepGrid& grid, const std::vector<std::string>& problems, std::size_t runs,
                            std::size_t repetitions, const ReferenceTable& reference, const RunConfig& base,
                            std::uint64_t seed0, unsigned threads) {
    const std::vector<SweepSetting> settings = expand_grid(grid, base);
    if (settings.empty() || problems.empty()) throw std::invalid_argument("empty parameter grid");
    if (runs == 0 || repetitions == 0) throw std::invalid_argument("runs and repetitions must be positive");

    SweepReport rep;
    rep.problems = problems;
    rep.runs = runs;
    rep.repetitions = repetitions;
    for (const auto& p : problems)
        if (!reference.count(p)) rep.warnings.push_back(p + ": no reference NFES, excluded from the NFES factor");

    std::vector<RunConfig> configs;
    for (std::size_t r = 0; r < repetitions; ++r) {
        for (const auto& s : settings) {
            for (const auto& p : problems) {
                RunConfig c = base;
                c.problem = p;
                c.scheduler = {s.c_alpha, s.beta_R, s.L};
                c.de_params = {s.F, s.CR};
                c.pop_size = s.pop_size;
                for (auto& sc : seeded(c, runs, seed0 + r * runs)) configs.push_back(std::move(sc));
            }
        }
    }
    std::vector<RunResult> all = run_batch(configs, threads);

    rep.rows.resize(settings.size());
    for (std::size_t i = 0; i < settings.size(); ++i) rep.rows[i].setting = settings[i];
    std::size_t cursor = 0;
    for (std::size_t r = 0; r < repetitions; ++r) {
        std::vector<double> sr(settings.size()), factor(settings.size());
        for (std::size_t i = 0; i < settings.size(); ++i) {
            double sr_sum = 0.0, factor_sum = 0.0;
            std::size_t factor_count = 0;
            for (const auto& p : problems) {
                std::vector<RunResult> slice(all.begin() + cursor, all.begin() + cursor + runs);
                cursor += runs;
                RunConfig c = base;
                c.problem = p;
                const ExperimentReport e = aggregate(c, seed0 + r * runs, std::move(slice));
                sr_sum += e.success_rate;
                if (auto it = reference.find(p); it != reference.end()) {
                    factor_sum += charged_median_nfes(e) / it->second;
                    ++factor_count;
                }
            }
            sr[i] = sr_sum / static_cast<double>(problems.size());
            factor[i] = factor_count ? factor_sum / static_cast<double>(factor_count) : 0.0;
            rep.rows[i].mean_success_rate += sr[i] / static_cast<double>(repetitions);
            rep.rows[i].mean_nfes_factor += factor[i] / static_cast<double>(repetitions);
        }
        const auto sr_rank = average_ranks(sr, true);
        const auto factor_rank = average_ranks(factor, false);
        for (std::size_t i = 0; i < settings.size(); ++i) rep.rows[i].rank_sums.push_back(sr_rank[i] + factor_rank[i]);
    }
    for (auto& row : rep.rows) {
        Summary s = summarize(row.rank_sums);
        row.rank_sum = s.mean;
        row.rank_sum_std = s.std;
    }
    std::stable_sort(rep.rows.begin(), rep.rows.end(),
                     [](const SweepRow& a, const SweepRow& b) { return a.rank_sum < b.rank_sum; });
    return rep;
}

}  // namespace mvie
