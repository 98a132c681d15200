#pragma once

#include "mpls/parallel.hpp"
#include "mpls/verify.hpp"

#include <cmath>
#include <exception>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace mpls::verify::detail {

struct Outcome {
    bool ok = true;
    double error = 0.0;
    std::string message;
};

inline Outcome pass(double error = 0.0) { return {true, error, {}}; }
inline Outcome fail(std::string message, double error = 0.0) { return {false, error, std::move(message)}; }

inline double rel_error(cd got, cd want) {
    double scale = std::max(1.0, std::abs(want));
    return std::abs(got - want) / scale;
}

inline std::string fmt(cd z) {
    std::ostringstream os;
    os.precision(12);
    os << "(" << z.real() << "," << z.imag() << ")";
    return os.str();
}

inline Outcome expect_close(cd got, cd want, double tol, const std::string& what) {
    double e = rel_error(got, want);
    if (!(e <= tol)) return fail(what + ": got " + fmt(got) + " want " + fmt(want), e);
    return pass(e);
}

inline Outcome expect_eq(long got, long want, const std::string& what) {
    if (got != want) return fail(what + ": got " + std::to_string(got) + " want " + std::to_string(want));
    return pass();
}

// Several sub-assertions of one trial folded into one outcome.
struct OutcomeSet {
    Outcome out;
    void add(const Outcome& o) {
        out.error = std::max(out.error, o.error);
        if (!o.ok && out.ok) {
            out.ok = false;
            out.message = o.message;
        }
    }
};

std::uint64_t name_salt(const std::string& name);

// Accumulates exhaustive (non-random) cases.
class Accumulator {
public:
    Accumulator(std::string name, double tol = 0.0) { check_.name = std::move(name); check_.tolerance = tol; }
    void add(const Outcome& o);
    void expect(bool ok, const std::string& what) { add(ok ? pass() : fail(what)); }
    // Runs f and records a thrown exception as a failed case.
    template <class F>
    void guard(const std::string& what, F&& f) {
        try {
            add(f());
        } catch (const std::exception& e) {
            add(fail(what + ": " + e.what()));
        }
    }
    Check done() const { return check_; }

private:
    Check check_;
};

// Runs `trials` independent trials f(index, rng) in parallel. Trial t draws from a generator seeded by
// mix_seed(seed ^ salt(name), t), so the outcome does not depend on the worker count.
template <class F>
Check run_trials(const std::string& name, long trials, std::uint64_t seed, double tol, F&& f) {
    std::vector<Outcome> out(static_cast<std::size_t>(trials));
    const std::uint64_t base = seed ^ name_salt(name);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (long t = 0; t < trials; ++t) {
        std::mt19937_64 rng(mix_seed(base, static_cast<std::uint64_t>(t)));
        try {
            out[static_cast<std::size_t>(t)] = f(t, rng);
        } catch (const std::exception& e) {
            out[static_cast<std::size_t>(t)] = fail(std::string("exception: ") + e.what());
        }
    }
    Accumulator acc(name, tol);
    for (long t = 0; t < trials; ++t) {
        Outcome o = out[static_cast<std::size_t>(t)];
        if (!o.ok) o.message = "trial " + std::to_string(t) + ": " + o.message;
        acc.add(o);
    }
    return acc.done();
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}
inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}
inline cd unit_circle(std::mt19937_64& rng) { return std::polar(1.0, uniform(rng, -M_PI, M_PI)); }

std::vector<Place> places_or(const Options& o, const std::vector<Place>& defaults);
std::vector<int> ranks_or(const Options& o, const std::vector<int>& defaults);
long trials_or(const Options& o, long fallback);

std::vector<Check> suite_hilbert(const Options& o);
std::vector<Check> suite_weil(const Options& o);
std::vector<Check> suite_cocycle(const Options& o);
std::vector<Check> suite_calibration(const Options& o);
std::vector<Check> suite_splitting(const Options& o);
std::vector<Check> suite_so2(const Options& o);
std::vector<Check> suite_localcoef(const Options& o);
std::vector<Check> suite_mellin(const Options& o);
std::vector<Check> suite_symbolic(const Options& o);
std::vector<Check> suite_reducibility(const Options& o);
std::vector<Check> suite_archimedean(const Options& o);

}  // namespace mpls::verify::detail
