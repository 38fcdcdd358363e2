#include "fslab/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

#include "fslab/bounds.hpp"
#include "fslab/errors.hpp"
#include "fslab/extremal.hpp"

namespace fslab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kGoldenStop = 1e-10;
constexpr double kWeightFloor = 1e-9;
constexpr std::size_t kEliteSize = 16;
constexpr double kAttainedRelTol = 1e-6;

struct Candidate {
    MeasurePair measures;
    double value = -1.0;
};

// Strict total order: larger value first, ties broken by the atom data.
bool better(const Candidate& x, const Candidate& y) {
    if (x.value != y.value)
        return x.value > y.value;
    if (x.measures.p != y.measures.p)
        return x.measures.p < y.measures.p;
    return x.measures.q < y.measures.q;
}

class Objective {
public:
    Objective(const ClassParams& params, cplx mu) : params_(params), mu_(mu) {}

    double operator()(const HerglotzMeasure& p, const HerglotzMeasure& q) const {
        return std::abs(fs_functional(member_from_pq(params_, p, q, 3), mu_));
    }

private:
    ClassParams params_;
    cplx mu_;
};

unsigned worker_count(unsigned requested, std::size_t jobs) {
    unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Runs body(i) for i in [0, count) on contiguous blocks. Each index writes
// only its own slot, so the outcome does not depend on the worker count.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
    const unsigned workers = worker_count(threads, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t block = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = w * block;
        const std::size_t end = std::min(count, begin + block);
        if (begin >= end)
            break;
        pool.emplace_back([&body, begin, end] {
            for (std::size_t i = begin; i < end; ++i)
                body(i);
        });
    }
    for (auto& t : pool)
        t.join();
}

// Golden-section search for a maximum of f on [lo, hi].
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, std::uint64_t& evals) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    evals += 2;
    while (hi - lo > kGoldenStop) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
        ++evals;
    }
    return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

HerglotzMeasure with_angle(const HerglotzMeasure& m, std::size_t j, double angle) {
    std::vector<Atom> atoms(m.atoms().begin(), m.atoms().end());
    atoms[j].angle = angle;
    const std::size_t count = atoms.size();
    return HerglotzMeasure(std::move(atoms), count);
}

// Sets atom j's weight to w and rescales the others to keep the total at 1.
HerglotzMeasure with_weight(const HerglotzMeasure& m, std::size_t j, double w) {
    std::vector<Atom> atoms(m.atoms().begin(), m.atoms().end());
    const double rest_old = 1.0 - atoms[j].weight;
    const double scale = (1.0 - w) / rest_old;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        atoms[i].weight = i == j ? w : atoms[i].weight * scale;
    double total = 0.0;
    for (const auto& a : atoms)
        total += a.weight;
    for (auto& a : atoms)
        a.weight /= total;
    const std::size_t count = atoms.size();
    return HerglotzMeasure(std::move(atoms), count);
}

// One pass of coordinate-wise golden-section moves over every angle and
// weight of both measures. Only strict improvements are kept.
void refine_pass(Candidate& cand, const Objective& objective, unsigned pass, std::uint64_t& evals) {
    const double angle_half_width = kPi / std::pow(2.0, pass);
    const double weight_half_width = 0.5 / std::pow(2.0, pass);

    auto try_move = [&](bool on_p, auto&& make) {
        auto eval_at = [&cand, &objective, make, on_p](double x) {
            const HerglotzMeasure moved = make(x);
            return on_p ? objective(moved, cand.measures.q) : objective(cand.measures.p, moved);
        };
        return eval_at;
    };

    for (int side = 0; side < 2; ++side) {
        const bool on_p = side == 0;
        const std::size_t atoms = on_p ? cand.measures.p.size() : cand.measures.q.size();
        for (std::size_t j = 0; j < atoms; ++j) {
            {
                const HerglotzMeasure& m = on_p ? cand.measures.p : cand.measures.q;
                const double theta = m.atoms()[j].angle;
                auto f = try_move(on_p, [&m, j](double x) { return with_angle(m, j, x); });
                const auto [x, fx] = golden_max(f, theta - angle_half_width, theta + angle_half_width, evals);
                if (fx > cand.value) {
                    HerglotzMeasure moved = with_angle(m, j, x);
                    (on_p ? cand.measures.p : cand.measures.q) = std::move(moved);
                    cand.value = fx;
                }
            }
            if (atoms > 1) {
                const HerglotzMeasure& m = on_p ? cand.measures.p : cand.measures.q;
                const double w = m.atoms()[j].weight;
                const double lo = std::max(kWeightFloor, w - weight_half_width);
                const double hi = std::min(1.0 - kWeightFloor, w + weight_half_width);
                if (hi <= lo)
                    continue;
                auto f = try_move(on_p, [&m, j](double x) { return with_weight(m, j, x); });
                const auto [x, fx] = golden_max(f, lo, hi, evals);
                if (fx > cand.value) {
                    HerglotzMeasure moved = with_weight(m, j, x);
                    (on_p ? cand.measures.p : cand.measures.q) = std::move(moved);
                    cand.value = fx;
                }
            }
        }
    }
}

} // namespace

double violation_tolerance(double bound) {
    return 1e-9 * std::max(1.0, bound);
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 finalizer over the combined key
    std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

HerglotzMeasure sample_measure(std::mt19937_64& rng, std::size_t max_atoms) {
    if (max_atoms == 0)
        throw DomainError("max_atoms must be positive");
    std::uniform_int_distribution<std::size_t> count_dist(1, max_atoms);
    std::exponential_distribution<double> weight_dist(1.0);
    std::uniform_real_distribution<double> angle_dist(0.0, kTwoPi);

    const std::size_t count = count_dist(rng);
    std::vector<Atom> atoms(count);
    double total = 0.0;
    for (auto& atom : atoms) {
        do {
            atom.weight = weight_dist(rng);
        } while (atom.weight <= 0.0);
        atom.angle = angle_dist(rng);
        total += atom.weight;
    }
    for (auto& atom : atoms)
        atom.weight /= total;
    return HerglotzMeasure(std::move(atoms), max_atoms);
}

std::vector<MeasurePair> seed_configurations(const ClassParams& params, cplx mu) {
    std::vector<ExtremalConfig> configs;
    const bool real_mu = mu.imag() == 0.0;
    for (int case_id = 1; case_id <= 4; ++case_id) {
        if (case_id == 2) {
            if (!real_mu)
                continue;
            try {
                configs.push_back(extremal_config(params, mu.real(), 2));
            } catch (const CaseRangeError&) {
            } catch (const DomainError&) {
            }
            continue;
        }
        configs.push_back(extremal_config(params, mu.real(), case_id));
    }
    std::vector<MeasurePair> seeds;
    for (const auto& cfg : configs) {
        for (int quarter = 0; quarter < 4; ++quarter) {
            const double theta = quarter * kPi / 2.0;
            seeds.push_back({cfg.p_measure.rotated(theta), cfg.q_measure.rotated(theta)});
        }
    }
    return seeds;
}

SearchResult maximize_fs(const ClassParams& params, cplx mu, const SearchBudget& budget) {
    if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag()))
        throw DomainError("mu must be finite");
    if (budget.n_samples == 0)
        throw DomainError("n_samples must be at least 1");
    if (budget.max_atoms == 0)
        throw DomainError("max_atoms must be positive");

    const bool real_mu = mu.imag() == 0.0;
    const double bound = real_mu ? bound_real(params, mu.real()).value : bound_complex(params, mu);
    const Objective objective(params, mu);

    std::vector<Candidate> pool;
    for (auto& s : seed_configurations(params, mu))
        pool.push_back({std::move(s), -1.0});
    const std::size_t n_seeds = pool.size();
    pool.resize(n_seeds + budget.n_samples,
                Candidate{{HerglotzMeasure::point(0.0), HerglotzMeasure::point(0.0)}, -1.0});

    parallel_for(pool.size(), budget.threads, [&](std::size_t i) {
        if (i >= n_seeds) {
            std::mt19937_64 rng(stream_seed(budget.seed, i - n_seeds));
            HerglotzMeasure p = sample_measure(rng, budget.max_atoms);
            HerglotzMeasure q = sample_measure(rng, budget.max_atoms);
            pool[i].measures = {std::move(p), std::move(q)};
        }
        pool[i].value = objective(pool[i].measures.p, pool[i].measures.q);
    });
    std::uint64_t evaluations = pool.size();

    // Elite: the best seeds and the best random draws, refined separately so
    // that rotated copies of one witness cannot crowd out the samples.
    auto take_best = [&](std::size_t begin, std::size_t end, std::size_t count, std::vector<Candidate>& out) {
        count = std::min(count, end - begin);
        auto first = pool.begin() + static_cast<std::ptrdiff_t>(begin);
        std::partial_sort(first, first + static_cast<std::ptrdiff_t>(count),
                          pool.begin() + static_cast<std::ptrdiff_t>(end), better);
        out.insert(out.end(), first, first + static_cast<std::ptrdiff_t>(count));
    };
    std::vector<Candidate> elite;
    take_best(0, n_seeds, kEliteSize / 2, elite);
    take_best(n_seeds, pool.size(), kEliteSize - elite.size(), elite);
    std::sort(elite.begin(), elite.end(), better);

    SearchResult result;
    result.pass_best.push_back(elite.front().value);

    std::vector<std::uint64_t> refine_evals(elite.size(), 0);
    for (unsigned pass = 0; pass < budget.n_refine; ++pass) {
        parallel_for(elite.size(), budget.threads, [&](std::size_t i) {
            refine_pass(elite[i], objective, pass, refine_evals[i]);
        });
        const auto best = std::min_element(elite.begin(), elite.end(), better);
        result.pass_best.push_back(std::max(result.pass_best.back(), best->value));
    }
    for (auto e : refine_evals)
        evaluations += e;

    const Candidate& winner = *std::min_element(elite.begin(), elite.end(), better);
    result.best_member = member_from_pq(params, winner.measures.p, winner.measures.q, kDefaultOrder);
    result.best_value = winner.value;
    result.bound = bound;
    result.margin = bound - winner.value;
    result.evaluations = evaluations;
    return result;
}

VerifyReport check_inequality(const ClassParams& params, cplx mu, const SearchBudget& budget) {
    SearchResult sr = maximize_fs(params, mu, budget);
    VerifyReport report;
    report.mu = mu;
    report.bound = sr.bound;
    report.best_value = sr.best_value;
    report.margin = sr.margin;
    report.attained = sr.margin <= kAttainedRelTol * sr.bound;
    report.evaluations = sr.evaluations;
    report.best_member = std::move(sr.best_member);
    return report;
}

bool is_violation(const VerifyReport& report) {
    return report.best_value > report.bound + violation_tolerance(report.bound);
}

VerifyReport verify_inequality(const ClassParams& params, cplx mu, const SearchBudget& budget) {
    VerifyReport report = check_inequality(params, mu, budget);
    if (is_violation(report)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "sampled member exceeds bound: |phi| = " << report.best_value << " > " << report.bound;
        throw ViolationError(msg.str(), report.bound, report.best_value);
    }
    return report;
}

} // namespace fslab
